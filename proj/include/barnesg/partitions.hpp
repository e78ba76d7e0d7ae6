#ifndef BARNESG_PARTITIONS_HPP
#define BARNESG_PARTITIONS_HPP

#include <barnesg/rational.hpp>

#include <functional>
#include <vector>

namespace barnesg {

/*
 * One multiplicity vector (k_1, ..., k_n) satisfying
 * (1+ell) k_1 + (2+ell) k_2 + ... + (n+ell) k_n = n, together with the
 * symmetric weight 1 / (k_1! k_2! ... k_n!) shared by the coefficient sums
 * built on these partitions.
 */
struct PartitionTerm {
    std::vector<unsigned long> multiplicities;
    BigRational weight;
};

/*
 * Streams every solution of sum_i (i+ell) k_i = n exactly once, in
 * descending lexicographic order of (k_1, ..., k_n). For n = 3, ell = 0 the
 * order is (3,0,0), (1,1,0), (0,0,1).
 */
void enumerate_partitions(unsigned long n, unsigned long ell,
                          const std::function<void(const PartitionTerm&)>& visit);

/// Convenience collector for tests and small n.
std::vector<PartitionTerm> enumerate_partitions(unsigned long n, unsigned long ell);

} // namespace barnesg

#endif

#include <barnesg/partitions.hpp>

namespace barnesg {

namespace {

void recurse(unsigned long n, unsigned long ell, unsigned long part, unsigned long remaining,
             PartitionTerm& term, const std::function<void(const PartitionTerm&)>& visit) {
    if (remaining == 0) {
        // all later multiplicities stay zero
        visit(term);
        return;
    }
    if (part > n || part + ell > remaining)
        return;
    const unsigned long weight_per = part + ell;
    const unsigned long kmax = remaining / weight_per;
    for (unsigned long k = kmax + 1; k-- > 0;) {
        term.multiplicities[part - 1] = k;
        const BigRational saved = term.weight;
        if (k > 0)
            term.weight /= BigRational(factorial(k));
        recurse(n, ell, part + 1, remaining - k * weight_per, term, visit);
        term.weight = saved;
    }
    term.multiplicities[part - 1] = 0;
}

} // namespace

void enumerate_partitions(unsigned long n, unsigned long ell,
                          const std::function<void(const PartitionTerm&)>& visit) {
    if (n == 0)
        throw std::invalid_argument("enumerate_partitions: n must be positive");
    PartitionTerm term;
    term.multiplicities.assign(n, 0);
    term.weight = BigRational(1);
    recurse(n, ell, 1, n, term, visit);
}

std::vector<PartitionTerm> enumerate_partitions(unsigned long n, unsigned long ell) {
    std::vector<PartitionTerm> out;
    enumerate_partitions(n, ell, [&](const PartitionTerm& t) { out.push_back(t); });
    return out;
}

} // namespace barnesg

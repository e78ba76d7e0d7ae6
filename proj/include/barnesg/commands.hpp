#ifndef BARNESG_COMMANDS_HPP
#define BARNESG_COMMANDS_HPP

#include <barnesg/output.hpp>
#include <barnesg/rational.hpp>

#include <stdexcept>
#include <string>

namespace barnesg {

/// Raised when a command needs more working precision than requested.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoeffRequest {
    std::string family; // c | bn | bl | al | btk | gamma
    unsigned long n = 0;
    BigRational r{1};
    unsigned long ell = 0;
    BigRational theta{1};
    BigRational kappa{0};
};

OutputRecord cmd_coeff(const CoeffRequest& req, unsigned long precision, unsigned long digits);

OutputRecord cmd_table1(unsigned long precision, unsigned long digits, bool use_cache = false);

OutputRecord cmd_table2(unsigned long precision, unsigned long digits, bool use_cache = false);

OutputRecord cmd_eval_g(const std::string& z, unsigned long precision, unsigned long digits,
                        bool with_oracle, unsigned long oracle_terms);

OutputRecord cmd_convergence(unsigned long n_min, unsigned long n_max, const BigRational& r,
                             unsigned long precision, unsigned long digits);

OutputRecord cmd_bounds_check(unsigned long n_max, unsigned long precision, unsigned long digits);

} // namespace barnesg

#endif

#ifndef TURAN_PARAMS_HPP
#define TURAN_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace turan {

/// Parameter or argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inputs that are individually valid but do not belong together
/// (e.g. a zero set computed for different parameters).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A numerical routine failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters (lambda, n) of the normalized ultraspherical polynomial
/// p_n = P_n^(lambda) / P_n^(lambda)(1). lambda = 0 is the Chebyshev limit.
class UltraParams {
public:
    UltraParams(double lambda, int n) : lambda_(lambda), n_(n)
    {
        if (!(lambda > -0.5)) {
            throw DomainError("lambda > -1/2 is required (got " + std::to_string(lambda) + ")");
        }
        if (n < 1) {
            throw DomainError("degree n >= 1 is required (got " + std::to_string(n) + ")");
        }
    }

    double lambda() const noexcept { return lambda_; }
    int n() const noexcept { return n_; }

    // n(n + 2 lambda), the eigenvalue in the differential equation.
    double eigen() const noexcept { return n_ * (n_ + 2.0 * lambda_); }

    friend bool operator==(const UltraParams&, const UltraParams&) = default;

private:
    double lambda_;
    int n_;
};

} // namespace turan

#endif

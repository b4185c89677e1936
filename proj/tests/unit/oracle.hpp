#ifndef TURAN_TEST_ORACLE_HPP
#define TURAN_TEST_ORACLE_HPP

// Exact univariate reference polynomials, built from the explicit sum
//   C_n^l(x) = sum_k (-1)^k (l)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}
// rather than from the recurrence used by the library.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>;  // coefficient of x^i at index i

inline Q rising(const Q& a, int k)
{
    Q r = 1;
    for (int i = 0; i < k; ++i) {
        r *= a + i;
    }
    return r;
}

inline Q factorial(int k)
{
    return rising(Q(1), k);
}

inline Q eval(const Poly& p, const Q& x)
{
    Q r = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * x + p[i];
    }
    return r;
}

inline Poly derivative(const Poly& p)
{
    if (p.size() <= 1) {
        return {Q(0)};
    }
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) {
        d[i - 1] = p[i] * static_cast<long>(i);
    }
    return d;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

inline Poly sub(Poly a, const Poly& b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), Q(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    return a;
}

/// Unnormalized C_n^l for rational l != 0.
inline Poly gegenbauer_unnormalized(int n, const Q& l)
{
    Poly c(n + 1, Q(0));
    for (int k = 0; 2 * k <= n; ++k) {
        Q term = rising(l, n - k) / (factorial(k) * factorial(n - 2 * k));
        mpz_class two_pow = 1;
        two_pow <<= static_cast<unsigned>(n - 2 * k);
        term *= Q(two_pow);
        c[n - 2 * k] = (k % 2 ? -term : term);
    }
    return c;
}

/// p_n = C_n^l / C_n^l(1), so p_n(1) = 1.
inline Poly gegenbauer(int n, const Q& l)
{
    if (n == 0) {
        return {Q(1)};
    }
    Poly c = gegenbauer_unnormalized(n, l);
    const Q at_one = eval(c, Q(1));
    for (auto& v : c) {
        v /= at_one;
    }
    return c;
}

inline Poly turan_determinant(int n, const Q& l)
{
    const Poly p = gegenbauer(n, l);
    return sub(mul(p, p), mul(gegenbauer(n - 1, l), gegenbauer(n + 1, l)));
}

/// phi = delta / (1 - x^2) and its first two derivatives by the quotient rule.
struct PhiValues {
    Q phi, dphi, d2phi;
};

inline PhiValues phi_values(int n, const Q& l, const Q& x)
{
    const Poly N = turan_determinant(n, l);
    const Poly N1 = derivative(N);
    const Poly N2 = derivative(N1);
    const Q nv = eval(N, x), n1 = eval(N1, x), n2 = eval(N2, x);
    const Q D = 1 - x * x, D1 = -2 * x, D2 = -2;
    PhiValues r;
    r.phi = nv / D;
    const Q top = n1 * D - nv * D1;
    r.dphi = top / (D * D);
    r.d2phi = ((n2 * D - nv * D2) * D - 2 * D1 * top) / (D * D * D);
    return r;
}

} // namespace oracle

#endif

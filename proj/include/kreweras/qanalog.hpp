#pragma once

#include <stdexcept>
#include <vector>

#include "kreweras/numtheory.hpp"
#include "kreweras/polynomial.hpp"

namespace kreweras {

// [m]_q = 1 + q + ... + q^(m-1)
inline IntPolynomial q_integer(int m) {
    if (m < 0) throw std::domain_error("q_integer: m must be >= 0");
    return IntPolynomial(std::vector<BigInt>(static_cast<size_t>(m), 1));
}

inline IntPolynomial q_factorial(int m) {
    if (m < 0) throw std::domain_error("q_factorial: m must be >= 0");
    IntPolynomial f = IntPolynomial::constant(1);
    for (int k = 1; k <= m; ++k) f = f * q_integer(k);
    return f;
}

// Gaussian binomial via the Pascal-type recurrence
// [a,b] = [a-1,b-1] + q^b [a-1,b], kept in integer polynomials throughout.
inline IntPolynomial q_binomial(int a, int b) {
    if (b < 0 || b > a) throw std::domain_error("q_binomial: need 0 <= b <= a");
    std::vector<IntPolynomial> row(static_cast<size_t>(b) + 1);
    row[0] = IntPolynomial::constant(1);
    for (int i = 1; i <= a; ++i)
        for (int j = std::min(i, b); j >= 1; --j)
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)].shifted(j);
    return row[static_cast<size_t>(b)];
}

// q-Catalan number [2n,n]_q / [n+1]_q; the division is exact.
inline IntPolynomial q_catalan(int n) {
    if (n < 0) throw std::domain_error("q_catalan: n must be >= 0");
    if (n == 0) return IntPolynomial::constant(1);
    return divide_exact(q_binomial(2 * n, n), q_integer(n + 1));
}

// Residue vector of p modulo q^m - 1: a[l] collects the coefficients with
// exponent congruent to l.
inline std::vector<BigInt> mod_cyclic(const IntPolynomial& p, int m) {
    if (m < 1) throw std::domain_error("mod_cyclic: m must be >= 1");
    std::vector<BigInt> folded(static_cast<size_t>(m));
    const auto& coeffs = p.coefficients();
    for (size_t e = 0; e < coeffs.size(); ++e) folded[e % static_cast<size_t>(m)] += coeffs[e];
    return folded;
}

// d-th cyclotomic polynomial: q^d - 1 divided by the product of the
// cyclotomic polynomials of the proper divisors of d.
inline IntPolynomial cyclotomic(int d) {
    if (d < 1) throw std::domain_error("cyclotomic: d must be >= 1");
    IntPolynomial numerator = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
    IntPolynomial denominator = IntPolynomial::constant(1);
    for (long long e : divisors(d))
        if (e < d) denominator = denominator * cyclotomic(static_cast<int>(e));
    return divide_exact(numerator, denominator);
}

}  // namespace kreweras

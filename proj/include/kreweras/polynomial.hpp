#pragma once

#include <limits>
#include <vector>

#include "kreweras/bigint.hpp"
#include "kreweras/errors.hpp"

namespace kreweras {

// Dense polynomial in one variable q over the exact integers.  Canonical:
// no trailing zero coefficient; the zero polynomial has an empty vector and
// degree kMinusInfinity.
class IntPolynomial {
public:
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    // c * q^k
    static IntPolynomial monomial(BigInt c, int k) {
        std::vector<BigInt> v(static_cast<size_t>(k) + 1);
        v.back() = std::move(c);
        return IntPolynomial(std::move(v));
    }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& coefficient(int k) const {
        static const BigInt zero = 0;
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(k)];
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(v));
    }

    // q^k * p
    IntPolynomial shifted(int k) const {
        if (is_zero()) return {};
        std::vector<BigInt> v(coeffs_.size() + static_cast<size_t>(k));
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<size_t>(k)] = coeffs_[i];
        return IntPolynomial(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

// Long division over the integers.  Every partial quotient coefficient
// must be integral and the remainder must vanish; anything else means the
// caller's arithmetic identity is broken.
inline IntPolynomial divide_exact(const IntPolynomial& numerator, const IntPolynomial& divisor) {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (numerator.is_zero()) return {};
    if (numerator.degree() < divisor.degree())
        throw internal_inconsistency_error("divide_exact: degree of numerator below divisor");
    std::vector<BigInt> rem = numerator.coefficients();
    const auto& div = divisor.coefficients();
    const BigInt& lead = div.back();
    std::vector<BigInt> quot(rem.size() - div.size() + 1);
    for (size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + div.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw internal_inconsistency_error("divide_exact: non-integral quotient coefficient");
        quot[k] = top / lead;
        for (size_t j = 0; j < div.size(); ++j) rem[k + j] -= quot[k] * div[j];
    }
    for (const BigInt& c : rem)
        if (c != 0) throw internal_inconsistency_error("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

inline bool divides(const IntPolynomial& divisor, const IntPolynomial& value) {
    if (value.is_zero()) return true;
    if (divisor.is_zero() || value.degree() < divisor.degree()) return false;
    std::vector<BigInt> rem = value.coefficients();
    const auto& div = divisor.coefficients();
    const BigInt& lead = div.back();
    for (size_t k = rem.size() - div.size() + 1; k-- > 0;) {
        BigInt& top = rem[k + div.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return false;
        BigInt q = top / lead;
        for (size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
    }
    for (const BigInt& c : rem)
        if (c != 0) return false;
    return true;
}

}  // namespace kreweras

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kreweras/bigint.hpp"

namespace kreweras {

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binom(n-k+i, i) after each step
    }
    return r;
}

inline BigInt catalan(long long n) {
    if (n < 0) throw std::domain_error("catalan: n must be >= 0");
    return binomial(2 * n, n) / (n + 1);
}

inline std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long long euler_phi(long long m) {
    if (m < 1) throw std::domain_error("euler_phi: m must be >= 1");
    long long result = m;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline int moebius(long long m) {
    if (m < 1) throw std::domain_error("moebius: m must be >= 1");
    int sign = 1;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;  // squared factor
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

inline int chi_odd(long long m) { return (m % 2 != 0) ? 1 : 0; }

}  // namespace kreweras

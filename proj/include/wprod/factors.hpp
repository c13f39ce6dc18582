#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>

#include "wprod/errors.hpp"

namespace wprod {

using cx = std::complex<double>;

/// Integer power by binary exponentiation; negative exponents via reciprocal.
inline cx pow_int(cx base, std::int64_t e) {
    if (e == 0) return cx(1.0, 0.0);
    bool const neg = e < 0;
    std::uint64_t n = neg ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    cx acc(1.0, 0.0);
    cx b = base;
    while (n) {
        if (n & 1) acc *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return neg ? cx(1.0, 0.0) / acc : acc;
}

/// Partial sum z + z^2/2 + ... + z^m/m, accumulated in ascending j.
inline cx log_factor_tail_sum(std::int64_t m, cx z) {
    cx sum(0.0, 0.0);
    cx p(1.0, 0.0);
    for (std::int64_t j = 1; j <= m; ++j) {
        p *= z;
        sum += p / static_cast<double>(j);
    }
    return sum;
}

/// Weierstrass factor E_0(z) = 1 - z, E_m(z) = (1 - z) exp(z + z^2/2 + ... + z^m/m).
/// Entire, with a simple zero at z = 1 and |E_m(z) - 1| <= |z|^{m+1} on |z| <= 1.
inline cx weierstrass_factor(std::int64_t m, cx z) {
    cx const head = cx(1.0, 0.0) - z;
    if (m == 0) return head;
    return head * std::exp(log_factor_tail_sum(m, z));
}

/// log(1-z) (principal) + z + z^2/2 + ... + z^m/m. Exponentiates back to
/// E_m(z) exactly; coincides with the principal logarithm of E_m(z) whenever
/// |E_m(z) - 1| <= e^{-2}, which holds for |z| <= 1/e.
inline cx log_weierstrass_factor(std::int64_t m, cx z) {
    if (z == cx(1.0, 0.0)) throw degenerate_input("log E_m undefined at z = 1");
    return std::log(cx(1.0, 0.0) - z) + log_factor_tail_sum(m, z);
}

/// m_k for multiplicity n at puncture k: k plus the smallest nonnegative
/// integer >= ln|n|. For n = 0 the factor is absent from every product and k
/// is returned as a total-function convention.
inline std::int64_t m_exponent(std::int64_t k, std::int64_t nu_k) {
    if (k < 1) throw error("puncture index must be a positive integer");
    if (nu_k == 0) return k;
    double const a = std::abs(static_cast<double>(nu_k));
    auto const c = static_cast<std::int64_t>(std::ceil(std::log(a)));
    return k + std::max<std::int64_t>(0, c);
}

/// Exact logarithmic derivative of E_m^n(z/k):  (z/k)^m * n / (z - k).
inline cx log_derivative_term(std::int64_t m, std::int64_t n, std::int64_t k, cx z) {
    cx const kk(static_cast<double>(k), 0.0);
    if (z == kk) throw pole_at_evaluation_point("logarithmic derivative has a pole at z = k");
    if (n == 0) return cx(0.0, 0.0);
    return pow_int(z / kk, m) * static_cast<double>(n) / (z - kk);
}

} // namespace wprod

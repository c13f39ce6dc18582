#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "wprod/certificates.hpp"
#include "wprod/divisor.hpp"
#include "wprod/errors.hpp"
#include "wprod/factors.hpp"
#include "wprod/region.hpp"

namespace wprod {

/// Closed form of (3/2) * sum_{k >= k0} e^{-(k+1)}. Bounds the log of the
/// tail product sum_{k >= k0} |nu(k) log E_{m_k}(z/k)| for every integer
/// sequence nu and every z with k0 >= e|z|.
inline double tail_bound(std::int64_t k0) {
    if (k0 < 1) throw error("tail bound requires k0 >= 1");
    return 1.5 * std::exp(-static_cast<double>(k0 + 1)) / (1.0 - std::exp(-1.0));
}

struct section_evaluation {
    certified_value value;
    std::int64_t head_cutoff = 1;
    double tail_log_bound = 0.0;
};

/// E_m(w)^n with the power applied by repeated multiplication for |n| <= 8
/// and through exp(n log E_m(w)) otherwise; the log form is stable because
/// it is only reached with |log E_m(w)| finite, and any 2*pi*i branch offset
/// cancels for integer n.
inline cx factor_power(std::int64_t m, std::int64_t n, cx w) {
    if (n == 0) return cx(1.0, 0.0);
    cx const f = weierstrass_factor(m, w);
    if (std::abs(n) <= 8) return pow_int(f, n);
    if (f == cx(0.0, 0.0)) return cx(0.0, 0.0); // w == 1, caller excluded n < 0
    return std::exp(static_cast<double>(n) * log_weierstrass_factor(m, w));
}

namespace detail {

inline void check_tail_head(std::int64_t head, cx z) {
    if (head < 1) throw invalid_head("truncation head must be >= 1");
    if (static_cast<double>(head) < std::numbers::e * std::abs(z))
        throw invalid_head("truncation head below e|z|; tail certificate invalid");
}

template <class Nu>
cx truncated_product(Nu const& nu, cx z, std::int64_t head) {
    cx v(1.0, 0.0);
    for (std::int64_t k = 1; k <= head; ++k) {
        std::int64_t const n = nu.at(k);
        if (n == 0) continue;
        if (z == cx(static_cast<double>(k), 0.0)) {
            if (n < 0) throw pole_at_evaluation_point("prescribed pole at z = k");
            v = cx(0.0, 0.0);
            continue;
        }
        v *= factor_power(m_exponent(k, n), n, z / static_cast<double>(k));
    }
    return v;
}

} // namespace detail

/// Value of f_nu(z) = prod_k E_{m_k}^{nu(k)}(z/k), truncated at `head`
/// (factors accumulate in ascending k). head <= 0 selects the full support,
/// making the result exact up to rounding; a head below the support leaves a
/// certified truncation tail and requires head >= e|z|.
inline section_evaluation evaluate(divisor const& nu, cx z, std::int64_t head = 0) {
    if (head <= 0) head = std::max<std::int64_t>(1, nu.max_index());
    bool const truncated = nu.max_index() > head;
    if (truncated) detail::check_tail_head(head, z);

    cx v(1.0, 0.0);
    for (auto const& [k, n] : nu) {
        if (k > head) break;
        if (z == cx(static_cast<double>(k), 0.0)) {
            if (n < 0) throw pole_at_evaluation_point("prescribed pole at z = k");
            v = cx(0.0, 0.0);
            continue;
        }
        v *= factor_power(m_exponent(k, n), n, z / static_cast<double>(k));
    }

    double const tail = truncated ? tail_bound(head + 1) : 0.0;
    double const err = truncated ? std::abs(v) * std::expm1(tail) : 0.0;
    return {{v, err}, head, tail};
}

/// Procedural divisors always carry a truncation certificate, so the head
/// must satisfy head >= e|z|; head <= 0 selects declared_head.
inline section_evaluation evaluate(procedural_divisor const& nu, cx z, std::int64_t head = 0) {
    if (head <= 0) head = nu.declared_head;
    detail::check_tail_head(head, z);
    cx const v = detail::truncated_product(nu, z, head);
    double const tail = tail_bound(head + 1);
    return {{v, std::abs(v) * std::expm1(tail)}, head, tail};
}

/// A logarithm of f_nu(z): sum of nu(k) log E_{m_k}(z/k) over the support.
/// Exact up to an integer multiple of 2*pi*i; stays representable where the
/// product itself would overflow. Throws degenerate_input at support points.
inline cx section_log(divisor const& nu, cx z) {
    cx s(0.0, 0.0);
    for (auto const& [k, n] : nu)
        s += static_cast<double>(n) * log_weierstrass_factor(m_exponent(k, n), z / static_cast<double>(k));
    return s;
}

/// Exact logarithmic derivative f_nu'/f_nu(z) = sum (z/k)^{m_k} nu(k)/(z-k).
inline cx log_derivative(divisor const& nu, cx z) {
    cx s(0.0, 0.0);
    for (auto const& [k, n] : nu) s += log_derivative_term(m_exponent(k, n), n, k, z);
    return s;
}

/// Certificate that any mu agreeing with nu at all punctures k < k0 has
/// ||f_mu - f_nu|| < epsilon on the region.
struct continuity_modulus {
    std::int64_t k0 = 1;
    double c = 1.0;           // bound on all partial products of f_nu over the region
    double epsilon = 0.0;
    compact_region region;
};

namespace detail {

// Largest |partial product| of f_nu seen over the sample set, maximised over
// every prefix length (the empty prefix contributes 1).
inline double prefix_grid_max(divisor const& nu, std::vector<cx> const& pts) {
    double best = 1.0;
    for (cx z : pts) {
        cx running(1.0, 0.0);
        for (auto const& [k, n] : nu) {
            if (z == cx(static_cast<double>(k), 0.0)) {
                if (n < 0) throw pole_at_evaluation_point("partial product has a pole on the sample set");
                running = cx(0.0, 0.0);
            } else {
                running *= factor_power(m_exponent(k, n), n, z / static_cast<double>(k));
            }
            best = std::max(best, std::abs(running));
        }
    }
    return best;
}

// Sup bound via cover-grid sampling plus a Cauchy derivative estimate: grid
// gaps are at most 1.5h, and |P'| <= sup_{r-enlargement} |P| / r with the
// enlarged sup itself grid-estimated with one refinement round.
inline double partial_product_bound(divisor const& nu, compact_region const& K, double h, double pole_clearance) {
    double const r = std::min(2.0 * h, 0.4 * pole_clearance);
    double const m1 = prefix_grid_max(nu, K.cover_grid(h));
    compact_region const enlarged = K.enlarged(r);
    double const ma = prefix_grid_max(nu, enlarged.cover_grid(h));
    double const mb = prefix_grid_max(nu, enlarged.cover_grid(h / 2.0));
    double const mhat = 1.25 * std::max(ma, mb) + 2.0 * std::abs(mb - ma);
    return (m1 + 1.5 * h * (mhat / r)) * 1.02;
}

} // namespace detail

/// Finds (k0, c) with k0 >= e * max_modulus(K), k0 beyond the support of nu,
/// c a grid-certified bound on every partial product of f_nu over K, and
/// 2c(exp(tail_bound(k0)) - 1) <= eps. Any mu matching nu below k0 then
/// stays within eps of f_nu in sup norm on K.
inline continuity_modulus compute_continuity_modulus(divisor const& nu, compact_region const& K, double eps) {
    if (!(eps > 0.0)) throw error("continuity modulus requires eps > 0");

    double pole_clearance = std::numeric_limits<double>::infinity();
    for (auto const& [k, n] : nu)
        if (n < 0) pole_clearance = std::min(pole_clearance, K.distance_to(cx(static_cast<double>(k), 0.0)));
    if (pole_clearance == 0.0)
        throw pole_at_evaluation_point("divisor prescribes a pole inside the region; no partial-product bound exists");

    double const h = 0.15;
    double const c = detail::partial_product_bound(nu, K, h, pole_clearance);

    auto k0 = static_cast<std::int64_t>(std::ceil(std::numbers::e * K.max_modulus()));
    k0 = std::max<std::int64_t>({k0, nu.max_index() + 1, 1});
    while (2.0 * c * std::expm1(tail_bound(k0)) > eps) ++k0;

    return {k0, c, eps, K};
}

struct map_sample {
    cx z;
    cx value;
};

/// f_nu on the uniform lattice of the given step over K; lattice points that
/// coincide with prescribed poles are absent from the result.
inline std::vector<map_sample> section_value_map(divisor const& nu, compact_region const& K, double grid_step) {
    std::vector<map_sample> out;
    for (cx z : K.lattice(grid_step)) {
        try {
            out.push_back({z, evaluate(nu, z).value.value});
        } catch (pole_at_evaluation_point const&) {
            // absent
        }
    }
    return out;
}

} // namespace wprod

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "wprod/errors.hpp"

namespace wprod {

using cx = std::complex<double>;

struct disk {
    cx center;
    double radius = 0.0;
};

struct rect {
    cx lo, hi; // lo.real() <= hi.real(), lo.imag() <= hi.imag()
};

using region_piece = std::variant<disk, rect>;

/// A finite union of closed disks and axis-aligned closed rectangles.
/// Nonempty and bounded by construction; max_modulus and distances to points
/// are computed in closed form from the pieces.
class compact_region {
public:
    explicit compact_region(std::vector<region_piece> pieces) : pieces_(std::move(pieces)) {
        if (pieces_.empty()) throw degenerate_region("compact region has no pieces");
        for (auto const& p : pieces_) {
            if (auto const* d = std::get_if<disk>(&p)) {
                if (!(d->radius > 0.0)) throw degenerate_region("disk radius must be positive");
            } else {
                auto const& r = std::get<rect>(p);
                if (!(r.lo.real() <= r.hi.real() && r.lo.imag() <= r.hi.imag()))
                    throw degenerate_region("rectangle corners out of order");
            }
        }
    }

    std::vector<region_piece> const& pieces() const { return pieces_; }

    /// sup{|z| : z in K}. Disk: |center| + radius; rectangle: farthest corner.
    double max_modulus() const {
        double m = 0.0;
        for (auto const& p : pieces_) {
            if (auto const* d = std::get_if<disk>(&p)) {
                m = std::max(m, std::abs(d->center) + d->radius);
            } else {
                auto const& r = std::get<rect>(p);
                for (cx corner : {r.lo, r.hi, cx{r.lo.real(), r.hi.imag()}, cx{r.hi.real(), r.lo.imag()}})
                    m = std::max(m, std::abs(corner));
            }
        }
        return m;
    }

    /// Euclidean distance from z to the region (0 when contained).
    double distance_to(cx z) const {
        double d = std::numeric_limits<double>::infinity();
        for (auto const& p : pieces_) d = std::min(d, piece_distance(p, z));
        return d;
    }

    bool contains(cx z) const { return distance_to(z) == 0.0; }

    /// inf over punctures k = 1, 2, ... of dist(K, k). May be 0; consumers
    /// needing K inside the punctured plane must check it is positive.
    double puncture_clearance() const {
        double best = std::numeric_limits<double>::infinity();
        double const mm = max_modulus();
        for (std::int64_t k = 1;; ++k) {
            best = std::min(best, distance_to(cx(static_cast<double>(k), 0.0)));
            if (best == 0.0) return 0.0;
            // beyond the region every further puncture is at least k - max_modulus away
            if (static_cast<double>(k) - mm >= best) break;
        }
        return best;
    }

    /// Superset of the Euclidean t-enlargement (rectangles grow per axis).
    compact_region enlarged(double t) const {
        std::vector<region_piece> out;
        out.reserve(pieces_.size());
        for (auto const& p : pieces_) {
            if (auto const* d = std::get_if<disk>(&p)) {
                out.push_back(disk{d->center, d->radius + t});
            } else {
                auto const& r = std::get<rect>(p);
                out.push_back(rect{r.lo - cx(t, t), r.hi + cx(t, t)});
            }
        }
        return compact_region(std::move(out));
    }

    /// Sample set inside K such that every point of K is within 1.5*h of a
    /// sample: per-piece lattices of spacing <= h including piece corners,
    /// plus circle boundaries at arc step h. Deterministic order.
    std::vector<cx> cover_grid(double h) const {
        std::vector<cx> pts;
        for (auto const& p : pieces_) {
            if (auto const* d = std::get_if<disk>(&p)) {
                append_lattice(pts, d->center - cx(d->radius, d->radius),
                               d->center + cx(d->radius, d->radius), h,
                               [&](cx z) { return std::abs(z - d->center) <= d->radius; });
                auto const n = std::max<std::int64_t>(8, llceil(2.0 * pi() * d->radius / h));
                for (std::int64_t j = 0; j < n; ++j) {
                    double th = 2.0 * pi() * static_cast<double>(j) / static_cast<double>(n);
                    pts.push_back(d->center + d->radius * cx(std::cos(th), std::sin(th)));
                }
            } else {
                auto const& r = std::get<rect>(p);
                append_lattice(pts, r.lo, r.hi, h, [](cx) { return true; });
            }
        }
        return pts;
    }

    /// Uniform lattice of spacing grid_step covering K, restricted to K.
    std::vector<cx> lattice(double grid_step) const {
        if (!(grid_step > 0.0)) throw error("grid step must be positive");
        auto [lo, hi] = bounding_box();
        std::vector<cx> pts;
        append_lattice(pts, lo, hi, grid_step, [&](cx z) { return contains(z); });
        return pts;
    }

    std::pair<cx, cx> bounding_box() const {
        double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
        double ylo = xlo, yhi = -xlo;
        for (auto const& p : pieces_) {
            cx lo, hi;
            if (auto const* d = std::get_if<disk>(&p)) {
                lo = d->center - cx(d->radius, d->radius);
                hi = d->center + cx(d->radius, d->radius);
            } else {
                lo = std::get<rect>(p).lo;
                hi = std::get<rect>(p).hi;
            }
            xlo = std::min(xlo, lo.real());
            ylo = std::min(ylo, lo.imag());
            xhi = std::max(xhi, hi.real());
            yhi = std::max(yhi, hi.imag());
        }
        return {cx(xlo, ylo), cx(xhi, yhi)};
    }

private:
    static double pi() { return 3.14159265358979323846; }

    static std::int64_t llceil(double x) { return static_cast<std::int64_t>(std::ceil(x)); }

    static double piece_distance(region_piece const& p, cx z) {
        if (auto const* d = std::get_if<disk>(&p))
            return std::max(0.0, std::abs(z - d->center) - d->radius);
        auto const& r = std::get<rect>(p);
        double dx = std::max({0.0, r.lo.real() - z.real(), z.real() - r.hi.real()});
        double dy = std::max({0.0, r.lo.imag() - z.imag(), z.imag() - r.hi.imag()});
        return std::hypot(dx, dy);
    }

    template <class Keep>
    static void append_lattice(std::vector<cx>& pts, cx lo, cx hi, double h, Keep keep) {
        auto const nx = std::max<std::int64_t>(1, llceil((hi.real() - lo.real()) / h));
        auto const ny = std::max<std::int64_t>(1, llceil((hi.imag() - lo.imag()) / h));
        double const dx = (hi.real() - lo.real()) / static_cast<double>(nx);
        double const dy = (hi.imag() - lo.imag()) / static_cast<double>(ny);
        for (std::int64_t j = 0; j <= ny; ++j)
            for (std::int64_t i = 0; i <= nx; ++i) {
                cx z(lo.real() + dx * static_cast<double>(i), lo.imag() + dy * static_cast<double>(j));
                if (keep(z)) pts.push_back(z);
            }
    }

    std::vector<region_piece> pieces_;
};

} // namespace wprod

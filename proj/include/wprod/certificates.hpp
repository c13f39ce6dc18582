#pragma once

#include <complex>
#include <cstdint>

namespace wprod {

/// A complex number together with an absolute error bound: the true quantity
/// lies within abs_error of value.
struct certified_value {
    std::complex<double> value;
    double abs_error = 0.0;
};

struct contour_spec {
    std::complex<double> center;
    double radius = 0.0;
    std::int64_t samples = 0;
};

/// Integer winding number plus the distance of the raw phase integral from it.
/// Accepted only when the residual is below 0.25.
struct winding_certificate {
    std::int64_t winding = 0;
    double residual = 0.0;
    contour_spec contour;

    bool valid() const { return residual < 0.25; }
};

} // namespace wprod

#pragma once

#include <stdexcept>
#include <string>

namespace wprod {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z landed exactly on a zero of the factor (z = 1 for E_m, z = k for E_m(./k)).
struct degenerate_input : error {
    using error::error;
};

// Evaluation point coincides with a prescribed pole.
struct pole_at_evaluation_point : error {
    using error::error;
};

// Truncation head too small for the tail certificate (head < e|z|).
struct invalid_head : error {
    using error::error;
};

struct degenerate_region : error {
    using error::error;
};

// A contour sample has |f| below tolerance; winding undefined.
struct contour_through_zero : error {
    using error::error;
};

// Per-step argument jump too large; caller must increase samples.
struct aliased_contour : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace wprod

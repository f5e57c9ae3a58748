#pragma once

#include <utility>

#include "hexdrop/geometry.hpp"
#include "hexdrop/random_stream.hpp"

namespace hexdrop {

/// A variate on the open unit interval; construction throws DomainError otherwise.
class UnitSample {
public:
    explicit UnitSample(double u);
    double value() const noexcept { return u_; }

private:
    double u_;
};

/// Open support (lo, hi) of the x marginal.
std::pair<double, double> x_support(const CellShape& shape) noexcept;

/// Inverse of the x marginal CDF, piecewise closed form per shape.
/// Hexagon splits at u = 1/6, 5/6; rhombus at 1/4, 3/4; triangle at 1/2.
/// A u that sits exactly on a split uses the lower branch.
double inv_cdf_x(const CellShape& shape, UnitSample u);

/// Marginal CDF of x; 0 below the support, 1 above.
double cdf_x(const CellShape& shape, double x);

/// Marginal density of x; 0 outside the support.
double pdf_x(const CellShape& shape, double x);

/// Marginal CDF of y; 0 below the support, 1 above.
double cdf_y(const CellShape& shape, double y);

/// 1 / area inside the closed region, 0 elsewhere.
double joint_pdf(const CellShape& shape, Point p);

struct YBounds {
    double lo;
    double hi;
};

/// Support of Y given X = x0; Y | X = x0 is uniform on (lo, hi).
/// Throws DomainError unless x0 is inside the open x support.
YBounds cond_y_bounds(const CellShape& shape, double x0);

/// Uniform point in the canonical shape: x from the inverse marginal CDF,
/// then y uniform on the conditional support. Consumes exactly two variates.
template <UnitSource S>
Point sample_point(const CellShape& shape, S& rng) {
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double x = inv_cdf_x(shape, UnitSample{u1});
    const YBounds b = cond_y_bounds(shape, x);
    return {x, b.lo + u2 * (b.hi - b.lo)};
}

/// Uniform point by rejection from the bounding box. Independent of the
/// inverse-transform path; used as a reference sampler.
template <UnitSource S>
Point sample_point_rejection(const CellShape& shape, S& rng) {
    const Box box = shape.bounding_box();
    for (;;) {
        const double u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        const Point p{box.x_min + u1 * (box.x_max - box.x_min), box.y_min + u2 * (box.y_max - box.y_min)};
        if (contains(shape, p, 0.0)) return p;
    }
}

}  // namespace hexdrop

#include "hexdrop/samplers.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hexdrop/errors.hpp"

namespace hexdrop {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

}  // namespace

UnitSample::UnitSample(double u) : u_(u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError("unit sample must lie in the open interval (0, 1), got " + std::to_string(u));
    }
}

std::pair<double, double> x_support(const CellShape& shape) noexcept {
    const double L = shape.side();
    switch (shape.kind()) {
        case ShapeKind::Hexagon: return {-L, L};
        case ShapeKind::Rhombus: return {-0.5 * L, L};
        case ShapeKind::Triangle: return {0.0, L};
    }
    return {0.0, 0.0};
}

double inv_cdf_x(const CellShape& shape, UnitSample sample) {
    const double L = shape.side();
    const double u = sample.value();
    switch (shape.kind()) {
        case ShapeKind::Hexagon:
            if (u <= 1.0 / 6.0) return L * (std::sqrt(1.5 * u) - 1.0);
            if (u <= 5.0 / 6.0) return 0.75 * L * (2.0 * u - 1.0);
            return L * (1.0 - std::sqrt(1.5 * (1.0 - u)));
        case ShapeKind::Rhombus:
            if (u <= 0.25) return 0.5 * L * (2.0 * std::sqrt(u) - 1.0);
            if (u <= 0.75) return L * (u - 0.25);
            return L * (1.0 - std::sqrt(1.0 - u));
        case ShapeKind::Triangle:
            if (u <= 0.5) return L * std::sqrt(0.5 * u);
            return L * (1.0 - std::sqrt(0.5 * (1.0 - u)));
    }
    return 0.0;
}

double cdf_x(const CellShape& shape, double x) {
    const auto [lo, hi] = x_support(shape);
    if (x <= lo) return 0.0;
    if (x >= hi) return 1.0;
    const double t = x / shape.side();
    switch (shape.kind()) {
        case ShapeKind::Hexagon:
            if (t <= -0.5) return (2.0 / 3.0) * (1.0 + t) * (1.0 + t);
            if (t <= 0.5) return 0.5 + (2.0 / 3.0) * t;
            return 1.0 - (2.0 / 3.0) * (1.0 - t) * (1.0 - t);
        case ShapeKind::Rhombus:
            if (t <= 0.0) return (t + 0.5) * (t + 0.5);
            if (t <= 0.5) return t + 0.25;
            return 1.0 - (1.0 - t) * (1.0 - t);
        case ShapeKind::Triangle:
            if (t <= 0.5) return 2.0 * t * t;
            return 1.0 - 2.0 * (1.0 - t) * (1.0 - t);
    }
    return 0.0;
}

double pdf_x(const CellShape& shape, double x) {
    const auto [lo, hi] = x_support(shape);
    if (x < lo || x > hi) return 0.0;
    const double L = shape.side();
    switch (shape.kind()) {
        case ShapeKind::Hexagon:
            if (std::abs(x) <= 0.5 * L) return 2.0 / (3.0 * L);
            return 4.0 / (3.0 * L * L) * (L - std::abs(x));
        case ShapeKind::Rhombus:
            if (x <= 0.0) return (2.0 * x + L) / (L * L);
            if (x <= 0.5 * L) return 1.0 / L;
            return 2.0 * (L - x) / (L * L);
        case ShapeKind::Triangle:
            if (x <= 0.5 * L) return 4.0 * x / (L * L);
            return 4.0 * (L - x) / (L * L);
    }
    return 0.0;
}

double cdf_y(const CellShape& shape, double y) {
    const Box box = shape.bounding_box();
    if (y <= box.y_min) return 0.0;
    if (y >= box.y_max) return 1.0;
    const double L = shape.side();
    const double area = shape.area();
    switch (shape.kind()) {
        case ShapeKind::Hexagon: {
            // Horizontal chord at height y has length 2(L - |y|/sqrt(3)).
            const auto lower = [&](double v) {
                const double s = v - box.y_min;
                return (L * s + s * s / kSqrt3) / area;
            };
            return y <= 0.0 ? lower(y) : 1.0 - lower(-y);
        }
        case ShapeKind::Rhombus:
            // Every horizontal chord has length L.
            return y / box.y_max;
        case ShapeKind::Triangle:
            return (L * y - y * y / kSqrt3) / area;
    }
    return 0.0;
}

double joint_pdf(const CellShape& shape, Point p) {
    return contains(shape, p, 0.0) ? 1.0 / shape.area() : 0.0;
}

YBounds cond_y_bounds(const CellShape& shape, double x0) {
    const auto [lo, hi] = x_support(shape);
    if (!(x0 > lo && x0 < hi)) {
        throw DomainError("x0 = " + std::to_string(x0) + " is outside the open x support of the " +
                          to_string(shape.kind()));
    }
    const double L = shape.side();
    switch (shape.kind()) {
        case ShapeKind::Hexagon: {
            double half;
            if (x0 <= -0.5 * L) {
                half = kSqrt3 * (x0 + L);
            } else if (x0 <= 0.5 * L) {
                half = 0.5 * kSqrt3 * L;
            } else {
                half = kSqrt3 * (L - x0);
            }
            return {-half, half};
        }
        case ShapeKind::Rhombus:
            if (x0 <= 0.0) return {-kSqrt3 * x0, 0.5 * kSqrt3 * L};
            if (x0 <= 0.5 * L) return {0.0, 0.5 * kSqrt3 * L};
            return {0.0, kSqrt3 * (L - x0)};
        case ShapeKind::Triangle:
            if (x0 <= 0.5 * L) return {0.0, kSqrt3 * x0};
            return {0.0, kSqrt3 * (L - x0)};
    }
    return {0.0, 0.0};
}

}  // namespace hexdrop

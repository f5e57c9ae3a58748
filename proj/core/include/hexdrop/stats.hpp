#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hexdrop/geometry.hpp"

namespace hexdrop {

/// Significance level used by every goodness-of-fit test here.
inline constexpr double kAlpha = 0.001;

/// Outcome of one goodness-of-fit test. pass == (statistic <= threshold).
struct GofReport {
    std::string test;
    double statistic = 0.0;
    double threshold = 0.0;
    std::size_t dof = 0;  // chi-square only
    std::size_t n = 0;    // sample size (first sample for two-sample tests)
    std::size_t m = 0;    // second sample size, two-sample tests only
    bool pass = false;
};

struct Triangle {
    Point a, b, c;

    double area() const noexcept;
    bool contains(Point p, double tol) const noexcept;
};

/// Equal-area triangular bins covering the canonical shape.
/// depth 1: hexagon 6, rhombus 2, triangle 1 (equilateral triangles of side L).
/// depth 2: each of those split into 4 by its edge midpoints.
std::vector<Triangle> equal_area_partition(const CellShape& shape, int depth);

/// p-quantile of the chi-square distribution with `dof` degrees of freedom.
double chi_square_quantile(double p, double dof);

/// Asymptotic Kolmogorov-Smirnov coefficient c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_coefficient(double alpha);

/// Pearson chi-square against equal expected counts over the depth-`depth`
/// partition; threshold is the (1 - kAlpha) quantile at bins - 1 dof.
/// Requires N >= 10 * bins (DomainError). Points within 1e-9 L of the shape
/// are binned; anything farther out raises BinningError.
GofReport chi_square_uniformity(std::span<const Point> points, const CellShape& shape, int depth);

/// One-sample KS of the x coordinates against cdf_x. Requires N >= 100.
GofReport ks_marginal_x(std::span<const Point> points, const CellShape& shape);

/// One-sample KS of the y coordinates against cdf_y. Requires N >= 100.
GofReport ks_marginal_y(std::span<const Point> points, const CellShape& shape);

/// Two-sample KS. Requires both sizes >= 100.
GofReport ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace hexdrop

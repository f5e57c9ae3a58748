#include "hexdrop/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>

#include "hexdrop/errors.hpp"
#include "hexdrop/samplers.hpp"

namespace hexdrop {

namespace {

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

std::vector<Triangle> coarse_bins(const CellShape& shape) {
    const auto v = shape.vertices();
    const Point o{0.0, 0.0};
    switch (shape.kind()) {
        case ShapeKind::Hexagon: {
            std::vector<Triangle> out;
            for (std::size_t i = 0; i < v.size(); ++i) out.push_back({o, v[i], v[(i + 1) % v.size()]});
            return out;
        }
        case ShapeKind::Rhombus:
            // v = (0,0), (L,0), (L/2,h), (-L/2,h): split along the short diagonal.
            return {{v[0], v[1], v[2]}, {v[0], v[2], v[3]}};
        case ShapeKind::Triangle:
            return {{v[0], v[1], v[2]}};
    }
    return {};
}

GofReport ks_one_sample(std::string name, std::vector<double> xs, const std::function<double(double)>& cdf) {
    const std::size_t n = xs.size();
    if (n < 100) throw DomainError(name + " needs at least 100 samples");
    std::sort(xs.begin(), xs.end());
    const double dn = static_cast<double>(n);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, static_cast<double>(i + 1) / dn - f, f - static_cast<double>(i) / dn});
    }
    GofReport r;
    r.test = std::move(name);
    r.statistic = d;
    r.threshold = ks_coefficient(kAlpha) / std::sqrt(dn);
    r.n = n;
    r.pass = r.statistic <= r.threshold;
    return r;
}

}  // namespace

double Triangle::area() const noexcept { return 0.5 * std::abs(cross(b - a, c - a)); }

bool Triangle::contains(Point p, double tol) const noexcept {
    const double orient = cross(b - a, c - a) >= 0.0 ? 1.0 : -1.0;
    const Point verts[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        const Point e = verts[(i + 1) % 3] - verts[i];
        if (orient * cross(e, p - verts[i]) < -tol * norm(e)) return false;
    }
    return true;
}

std::vector<Triangle> equal_area_partition(const CellShape& shape, int depth) {
    if (depth != 1 && depth != 2) throw DomainError("partition depth must be 1 or 2");
    auto bins = coarse_bins(shape);
    if (depth == 1) return bins;
    std::vector<Triangle> fine;
    fine.reserve(4 * bins.size());
    for (const auto& t : bins) {
        const Point ab = midpoint(t.a, t.b);
        const Point bc = midpoint(t.b, t.c);
        const Point ca = midpoint(t.c, t.a);
        fine.push_back({t.a, ab, ca});
        fine.push_back({ab, t.b, bc});
        fine.push_back({ca, bc, t.c});
        fine.push_back({ab, bc, ca});
    }
    return fine;
}

double chi_square_quantile(double p, double dof) {
    if (!(p > 0.0 && p < 1.0) || !(dof > 0.0)) throw DomainError("chi_square_quantile: bad arguments");
    return boost::math::quantile(boost::math::chi_squared_distribution<double>(dof), p);
}

double ks_coefficient(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("ks_coefficient: alpha must lie in (0, 1)");
    return std::sqrt(-0.5 * std::log(0.5 * alpha));
}

GofReport chi_square_uniformity(std::span<const Point> points, const CellShape& shape, int depth) {
    const auto bins = equal_area_partition(shape, depth);
    const std::size_t k = bins.size();
    const std::size_t n = points.size();
    if (n == 0 || n < 10 * k) {
        throw DomainError(fmt::format("chi-square needs at least {} points for {} bins, got {}", 10 * k, k, n));
    }
    const double tol = 1e-9 * shape.side();
    std::vector<std::size_t> observed(k, 0);
    for (const Point& p : points) {
        std::size_t bin = k;
        for (std::size_t j = 0; j < k; ++j) {
            if (bins[j].contains(p, 0.0)) {
                bin = j;
                break;
            }
        }
        if (bin == k) {
            for (std::size_t j = 0; j < k; ++j) {
                if (bins[j].contains(p, tol)) {
                    bin = j;
                    break;
                }
            }
        }
        if (bin == k) {
            throw BinningError(fmt::format("point ({}, {}) lies outside the {}", p.x, p.y, to_string(shape.kind())));
        }
        ++observed[bin];
    }
    const double expected = static_cast<double>(n) / static_cast<double>(k);
    double stat = 0.0;
    for (auto o : observed) {
        const double d = static_cast<double>(o) - expected;
        stat += d * d / expected;
    }
    GofReport r;
    r.test = fmt::format("chi2_uniformity[{},depth={}]", to_string(shape.kind()), depth);
    r.statistic = stat;
    r.dof = k - 1;
    r.threshold = chi_square_quantile(1.0 - kAlpha, static_cast<double>(r.dof));
    r.n = n;
    r.pass = r.statistic <= r.threshold;
    return r;
}

GofReport ks_marginal_x(std::span<const Point> points, const CellShape& shape) {
    std::vector<double> xs;
    xs.reserve(points.size());
    for (const Point& p : points) xs.push_back(p.x);
    return ks_one_sample(fmt::format("ks_marginal_x[{}]", to_string(shape.kind())), std::move(xs),
                         [&](double x) { return cdf_x(shape, x); });
}

GofReport ks_marginal_y(std::span<const Point> points, const CellShape& shape) {
    std::vector<double> ys;
    ys.reserve(points.size());
    for (const Point& p : points) ys.push_back(p.y);
    return ks_one_sample(fmt::format("ks_marginal_y[{}]", to_string(shape.kind())), std::move(ys),
                         [&](double y) { return cdf_y(shape, y); });
}

GofReport ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 100 || b.size() < 100) throw DomainError("two-sample KS needs at least 100 samples per side");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double n = static_cast<double>(sa.size());
    const double m = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        // Step past every copy of the smaller value on both sides before comparing.
        const double v = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == v) ++i;
        while (j < sb.size() && sb[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    GofReport r;
    r.test = "ks_two_sample";
    r.statistic = d;
    r.threshold = ks_coefficient(kAlpha) * std::sqrt((n + m) / (n * m));
    r.n = sa.size();
    r.m = sb.size();
    r.pass = r.statistic <= r.threshold;
    return r;
}

}  // namespace hexdrop

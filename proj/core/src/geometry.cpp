#include "hexdrop/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "hexdrop/errors.hpp"

namespace hexdrop {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

}  // namespace

double norm(Point p) { return std::hypot(p.x, p.y); }

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

const char* to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Hexagon: return "hexagon";
        case ShapeKind::Rhombus: return "rhombus";
        case ShapeKind::Triangle: return "triangle";
    }
    return "unknown";
}

CellShape::CellShape(ShapeKind kind, double side) : kind_(kind), side_(side) {
    if (!(side > 0.0) || !std::isfinite(side)) {
        throw DomainError("cell side length must be positive and finite, got " + std::to_string(side));
    }
}

double CellShape::area() const noexcept {
    const double hex = 1.5 * kSqrt3 * side_ * side_;
    switch (kind_) {
        case ShapeKind::Hexagon: return hex;
        case ShapeKind::Rhombus: return hex / 3.0;
        case ShapeKind::Triangle: return hex / 6.0;
    }
    return 0.0;
}

Box CellShape::bounding_box() const noexcept {
    const double L = side_;
    const double h = 0.5 * kSqrt3 * L;
    switch (kind_) {
        case ShapeKind::Hexagon: return {-L, L, -h, h};
        case ShapeKind::Rhombus: return {-0.5 * L, L, 0.0, h};
        case ShapeKind::Triangle: return {0.0, L, 0.0, h};
    }
    return {0.0, 0.0, 0.0, 0.0};
}

std::vector<Point> CellShape::vertices() const {
    const double L = side_;
    const double h = 0.5 * kSqrt3 * L;
    switch (kind_) {
        case ShapeKind::Hexagon:
            return {{L, 0.0}, {0.5 * L, h}, {-0.5 * L, h}, {-L, 0.0}, {-0.5 * L, -h}, {0.5 * L, -h}};
        case ShapeKind::Rhombus:
            return {{0.0, 0.0}, {L, 0.0}, {0.5 * L, h}, {-0.5 * L, h}};
        case ShapeKind::Triangle:
            return {{0.0, 0.0}, {L, 0.0}, {0.5 * L, h}};
    }
    return {};
}

bool contains(const CellShape& shape, Point p, double tol) {
    if (!is_finite(p)) return false;
    const auto verts = shape.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Point a = verts[i];
        const Point edge = verts[(i + 1) % verts.size()] - a;
        // Signed distance to the edge line times |edge|; interior is on the left.
        if (cross(edge, p - a) < -tol * norm(edge)) return false;
    }
    return true;
}

Point rotate(Point p, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {p.x * c - p.y * s, p.x * s + p.y * c};
}

bool on_lattice(LatticeIndex idx) noexcept {
    return ((idx.m - idx.n) % 2) == 0;
}

Point cell_center(LatticeIndex idx, double L0) {
    if (!(L0 > 0.0) || !std::isfinite(L0)) {
        throw DomainError("reference cell size L0 must be positive and finite");
    }
    if (!on_lattice(idx)) {
        throw ParityError("lattice index (m=" + std::to_string(idx.m) + ", n=" + std::to_string(idx.n) +
                          ") is off the hex lattice: m and n must have equal parity");
    }
    return {1.5 * L0 * idx.m, 0.5 * kSqrt3 * L0 * idx.n};
}

int ring_of(LatticeIndex idx) {
    if (!on_lattice(idx)) {
        throw ParityError("ring_of: index is off the hex lattice");
    }
    // Neighbors are (0, +-2) and (+-1, +-1): a diagonal step moves one column
    // and one row, a vertical step moves two rows.
    const int dm = std::abs(idx.m);
    const int dn = std::abs(idx.n);
    return dn <= dm ? dm : dm + (dn - dm) / 2;
}

std::vector<LatticeIndex> ring_indices(int radius) {
    if (radius < 0) throw DomainError("ring radius must be nonnegative");
    std::vector<LatticeIndex> out;
    out.reserve(radius == 0 ? 1 : 6 * static_cast<std::size_t>(radius));
    for (int m = -radius; m <= radius; ++m) {
        for (int n = -2 * radius; n <= 2 * radius; ++n) {
            const LatticeIndex idx{m, n};
            if (on_lattice(idx) && ring_of(idx) == radius) out.push_back(idx);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hexdrop

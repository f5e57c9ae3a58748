#pragma once

#include <array>
#include <compare>
#include <vector>

namespace hexdrop {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr bool operator==(Point, Point) = default;
};

double norm(Point p);
bool is_finite(Point p);

enum class ShapeKind { Hexagon, Rhombus, Triangle };

const char* to_string(ShapeKind kind);

/// Axis-aligned box [x_min, x_max] x [y_min, y_max].
struct Box {
    double x_min, x_max, y_min, y_max;
};

/// One of the three cell geometries in its canonical frame.
///
/// Hexagon: centered at the origin with vertices at (+-L, 0) and
/// (+-L/2, +-sqrt(3)L/2), so top and bottom edges are flat.
/// Rhombus: the 120 degree sector with vertices (0,0), (L,0), (L/2, sqrt(3)L/2),
/// (-L/2, sqrt(3)L/2).
/// Triangle: the 60 degree sector with vertices (0,0), (L,0), (L/2, sqrt(3)L/2).
///
/// Every other sector is a rotation of these about the origin.
class CellShape {
public:
    /// Throws DomainError unless side > 0 and finite.
    CellShape(ShapeKind kind, double side);

    static CellShape hexagon(double side) { return {ShapeKind::Hexagon, side}; }
    static CellShape rhombus(double side) { return {ShapeKind::Rhombus, side}; }
    static CellShape triangle(double side) { return {ShapeKind::Triangle, side}; }

    ShapeKind kind() const noexcept { return kind_; }
    double side() const noexcept { return side_; }

    double area() const noexcept;
    Box bounding_box() const noexcept;

    /// Vertices in counterclockwise order.
    std::vector<Point> vertices() const;

    friend bool operator==(const CellShape&, const CellShape&) = default;

private:
    ShapeKind kind_;
    double side_;
};

/// Closed membership: true iff p is inside the canonical region or within
/// tol (perpendicular distance) of it.
bool contains(const CellShape& shape, Point p, double tol = 0.0);

/// Counterclockwise rotation about the origin by phi radians.
Point rotate(Point p, double phi);

/// Cell position on the hex lattice. Valid indices have n and m of equal parity.
struct LatticeIndex {
    int m = 0;
    int n = 0;

    friend auto operator<=>(const LatticeIndex&, const LatticeIndex&) = default;
};

bool on_lattice(LatticeIndex idx) noexcept;

/// Center (3*L0/2 * m, sqrt(3)*L0/2 * n). Throws ParityError off-lattice,
/// DomainError if L0 is not positive.
Point cell_center(LatticeIndex idx, double L0);

/// Number of adjacency steps from the origin cell. Requires on_lattice(idx).
int ring_of(LatticeIndex idx);

/// All indices exactly `radius` steps from the origin, sorted by (m, n).
std::vector<LatticeIndex> ring_indices(int radius);

}  // namespace hexdrop

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "hexdrop/network.hpp"
#include "hexdrop/stats.hpp"

namespace hexdrop {

enum class PointFormat { Csv, Json };

/// Throws DomainError for anything other than "csv" or "json".
PointFormat parse_point_format(std::string_view name);

/// CSV: header `cell_m,cell_n,sector_id,x,y`, one row per point in the given
/// order, coordinates with 9 significant digits, '\n' line ends.
/// JSON: array of objects with the same five numeric fields, coordinates in
/// shortest round-trip form.
/// Throws IoError if the sink fails.
void write_points(std::span<const LabeledPoint> points, PointFormat format, std::ostream& sink);

/// SVG 1.1 scatter plot: one hexagon outline per cell, sector boundaries for
/// sectored cells and one circle per point. Mathematical +y points up.
void render_svg(const NetworkConfig& cfg, std::span<const LabeledPoint> points, std::ostream& sink);

/// JSON array of report objects.
std::string reports_to_json(std::span<const GofReport> reports);

/// Single human-readable line, e.g. "PASS ks_marginal_x[hexagon] D=... <= ...".
std::string format_report(const GofReport& report);

}  // namespace hexdrop

#include "hexdrop/output.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "hexdrop/errors.hpp"

namespace hexdrop {

namespace {

void check(std::ostream& sink) {
    if (!sink) throw IoError("write to output sink failed");
}

constexpr std::string_view kSectorColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#17becf"};

}  // namespace

PointFormat parse_point_format(std::string_view name) {
    if (name == "csv") return PointFormat::Csv;
    if (name == "json") return PointFormat::Json;
    throw DomainError(fmt::format("unknown point format '{}' (expected csv or json)", name));
}

void write_points(std::span<const LabeledPoint> points, PointFormat format, std::ostream& sink) {
    if (format == PointFormat::Csv) {
        fmt::memory_buffer buf;
        fmt::format_to(std::back_inserter(buf), "cell_m,cell_n,sector_id,x,y\n");
        for (const auto& lp : points) {
            fmt::format_to(std::back_inserter(buf), "{},{},{},{:#.9g},{:#.9g}\n", lp.m, lp.n, lp.sector_id, lp.p.x,
                           lp.p.y);
        }
        sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& lp : points) {
            arr.push_back({{"cell_m", lp.m}, {"cell_n", lp.n}, {"sector_id", lp.sector_id}, {"x", lp.p.x},
                           {"y", lp.p.y}});
        }
        sink << arr.dump() << '\n';
    }
    sink.flush();
    check(sink);
}

void render_svg(const NetworkConfig& cfg, std::span<const LabeledPoint> points, std::ostream& sink) {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    const auto grow = [&](Point p) {
        x_min = std::min(x_min, p.x);
        x_max = std::max(x_max, p.x);
        y_min = std::min(y_min, p.y);
        y_max = std::max(y_max, p.y);
    };

    struct Outline {
        Point center;
        std::vector<Point> verts;
        int sectors;
    };
    std::vector<Outline> outlines;
    outlines.reserve(cfg.cells.size());
    for (const auto& cell : cfg.cells) {
        const Point c = cell_center(cell.idx, cfg.L0);
        auto verts = CellShape::hexagon(cell.side).vertices();
        for (auto& v : verts) {
            v = v + c;
            grow(v);
        }
        outlines.push_back({c, std::move(verts), cell.sectors});
    }
    for (const auto& lp : points) grow(lp.p);
    if (!std::isfinite(x_min)) {
        x_min = y_min = -1.0;
        x_max = y_max = 1.0;
    }

    const double span = std::max({x_max - x_min, y_max - y_min, 1e-12});
    const double pad = 0.05 * span;
    const double vb_x = x_min - pad;
    const double vb_y = -(y_max + pad);  // the content group mirrors y
    const double vb_w = (x_max - x_min) + 2.0 * pad;
    const double vb_h = (y_max - y_min) + 2.0 * pad;
    const double stroke = 0.002 * span;
    const double radius = 0.0025 * span;

    fmt::memory_buffer buf;
    auto out = std::back_inserter(buf);
    fmt::format_to(out, "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    fmt::format_to(out,
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" "
                   "width=\"800\" height=\"{}\">\n",
                   vb_x, vb_y, vb_w, vb_h, std::lround(800.0 * vb_h / vb_w));
    fmt::format_to(out, "<g id=\"content\" transform=\"scale(1,-1)\">\n");

    fmt::format_to(out, "<g id=\"cells\" fill=\"none\" stroke=\"#444444\" stroke-width=\"{}\">\n", stroke);
    for (const auto& o : outlines) {
        fmt::format_to(out, "<path class=\"cell\" d=\"M{},{}", o.verts[0].x, o.verts[0].y);
        for (std::size_t i = 1; i < o.verts.size(); ++i) fmt::format_to(out, " L{},{}", o.verts[i].x, o.verts[i].y);
        fmt::format_to(out, " Z\"/>\n");
        if (o.sectors > 1) {
            // Sector boundaries run from the center to every (6 / sectors)-th vertex.
            const std::size_t step = 6 / static_cast<std::size_t>(o.sectors);
            for (std::size_t i = 0; i < o.verts.size(); i += step) {
                fmt::format_to(out, "<line class=\"sector-boundary\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                               o.center.x, o.center.y, o.verts[i].x, o.verts[i].y);
            }
        }
    }
    fmt::format_to(out, "</g>\n");

    fmt::format_to(out, "<g id=\"nodes\" stroke=\"none\">\n");
    for (const auto& lp : points) {
        const auto color = kSectorColors[static_cast<std::size_t>(std::max(lp.sector_id - 1, 0)) % 6];
        fmt::format_to(out, "<circle class=\"node\" cx=\"{:.9g}\" cy=\"{:.9g}\" r=\"{:.3g}\" fill=\"{}\"/>\n", lp.p.x,
                       lp.p.y, radius, color);
    }
    fmt::format_to(out, "</g>\n</g>\n</svg>\n");

    sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    sink.flush();
    check(sink);
}

std::string reports_to_json(std::span<const GofReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j = {{"test", r.test},         {"statistic", r.statistic}, {"threshold", r.threshold},
                            {"n", r.n},               {"pass", r.pass}};
        if (r.dof > 0) j["dof"] = r.dof;
        if (r.m > 0) j["m"] = r.m;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string format_report(const GofReport& r) {
    std::string sizes = r.m > 0 ? fmt::format("n={} m={}", r.n, r.m) : fmt::format("n={}", r.n);
    if (r.dof > 0) sizes += fmt::format(" dof={}", r.dof);
    return fmt::format("{} {} stat={:.6g} threshold={:.6g} {}", r.pass ? "PASS" : "FAIL", r.test, r.statistic,
                       r.threshold, sizes);
}

}  // namespace hexdrop

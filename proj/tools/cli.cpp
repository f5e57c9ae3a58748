#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hexdrop/config.hpp"
#include "hexdrop/errors.hpp"
#include "hexdrop/network.hpp"
#include "hexdrop/output.hpp"
#include "hexdrop/samplers.hpp"
#include "hexdrop/stats.hpp"

namespace hexdrop::cli {

namespace {

struct GenOptions {
    std::string config;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    std::string svg;
    unsigned threads = 1;
};

struct ValidateOptions {
    ShapeKind shape = ShapeKind::Hexagon;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    int depth = 2;
    bool json = false;
};

struct CentersOptions {
    int rings = 0;
    double L0 = 1.0;
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body, std::ostream& stdout_sink) {
    if (path == "-") {
        body(stdout_sink);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file " + path);
    body(file);
}

int run_gen(const GenOptions& opt, std::ostream& out) {
    const NetworkConfig cfg = load_config(opt.config);
    const PointFormat format = parse_point_format(opt.format);
    const auto points = generate_network(cfg, opt.seed, opt.threads);
    write_file(opt.out, [&](std::ostream& s) { write_points(points, format, s); }, out);
    if (!opt.svg.empty()) {
        write_file(opt.svg, [&](std::ostream& s) { render_svg(cfg, points, s); }, out);
    }
    return kExitOk;
}

int run_validate(const ValidateOptions& opt, std::ostream& out) {
    const CellShape shape(opt.shape, 1.0);

    RandomStream direct_stream(opt.seed);
    RandomStream reference_stream(RandomStream::derive_seed(opt.seed, -1, -1));
    std::vector<Point> direct;
    std::vector<Point> reference;
    direct.reserve(opt.n);
    reference.reserve(opt.n);
    for (std::size_t i = 0; i < opt.n; ++i) direct.push_back(sample_point(shape, direct_stream));
    for (std::size_t i = 0; i < opt.n; ++i) reference.push_back(sample_point_rejection(shape, reference_stream));

    std::vector<double> dx, dy, rx, ry;
    for (const Point& p : direct) {
        dx.push_back(p.x);
        dy.push_back(p.y);
    }
    for (const Point& p : reference) {
        rx.push_back(p.x);
        ry.push_back(p.y);
    }

    std::vector<GofReport> reports;
    reports.push_back(chi_square_uniformity(direct, shape, opt.depth));
    reports.push_back(ks_marginal_x(direct, shape));
    reports.push_back(ks_marginal_y(direct, shape));
    reports.push_back(ks_two_sample(dx, rx));
    reports.back().test = "ks_two_sample_x[inverse_vs_rejection]";
    reports.push_back(ks_two_sample(dy, ry));
    reports.back().test = "ks_two_sample_y[inverse_vs_rejection]";

    if (opt.json) {
        out << reports_to_json(reports) << '\n';
    } else {
        for (const auto& r : reports) out << format_report(r) << '\n';
    }
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const GofReport& r) { return r.pass; });
    return all_pass ? kExitOk : kExitValidationFailed;
}

int run_centers(const CentersOptions& opt, std::ostream& out) {
    for (int r = 0; r <= opt.rings; ++r) {
        for (const auto idx : ring_indices(r)) {
            const Point c = cell_center(idx, opt.L0);
            fmt::print(out, "{} {} {} {:.9g} {:.9g}\n", r, idx.m, idx.n, c.x, c.y);
        }
    }
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uniform random node placement over hexagonal cellular networks", "hexdrop"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate node positions for a network config");
    gen_cmd->add_option("--config", gen.config, "Network config file")->required();
    gen_cmd->add_option("--seed", gen.seed, "Master seed")->required();
    gen_cmd->add_option("--out", gen.out, "Point output file ('-' for stdout)")->required();
    gen_cmd->add_option("--format", gen.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    gen_cmd->add_option("--svg", gen.svg, "Also render an SVG plot to this file");
    gen_cmd->add_option("--threads", gen.threads, "Worker threads (0 = all cores); output is identical for any value");

    ValidateOptions val;
    const std::map<std::string, ShapeKind> shapes{
        {"hexagon", ShapeKind::Hexagon}, {"rhombus", ShapeKind::Rhombus}, {"triangle", ShapeKind::Triangle}};
    auto* val_cmd = app.add_subcommand("validate", "Run the goodness-of-fit battery on one shape");
    val_cmd->add_option("--shape", val.shape, "hexagon, rhombus or triangle")
        ->required()
        ->transform(CLI::CheckedTransformer(shapes, CLI::ignore_case));
    val_cmd->add_option("--n", val.n, "Samples per sampler")->required();
    val_cmd->add_option("--seed", val.seed, "Seed")->required();
    val_cmd->add_option("--depth", val.depth, "Partition depth for chi-square")->check(CLI::IsMember({1, 2}));
    val_cmd->add_flag("--json", val.json, "Print reports as JSON");

    CentersOptions cen;
    auto* cen_cmd = app.add_subcommand("centers", "Print lattice centers ring by ring: ring m n x y");
    cen_cmd->add_option("--rings", cen.rings, "Outermost ring")->required()->check(CLI::NonNegativeNumber);
    cen_cmd->add_option("--L0", cen.L0, "Reference cell size")->required()->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen, out);
        if (val_cmd->parsed()) return run_validate(val, out);
        if (cen_cmd->parsed()) return run_centers(cen, out);
    } catch (const ParityError& e) {
        fmt::print(err, "ParityError: {}\n", e.what());
        return kExitUsage;
    } catch (const ConfigError& e) {
        fmt::print(err, "ConfigError: {}\n", e.what());
        return kExitUsage;
    } catch (const ParseError& e) {
        fmt::print(err, "ParseError: {}\n", e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const IoError& e) {
        fmt::print(err, "IoError: {}\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hexdrop::cli

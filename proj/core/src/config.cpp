#include "hexdrop/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "hexdrop/errors.hpp"

namespace hexdrop {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
    T value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError(line, fmt::format("invalid value '{}' for key '{}'", text, key));
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) throw ParseError(line, fmt::format("non-finite value for key '{}'", key));
    }
    return value;
}

using KeyValues = std::map<std::string_view, std::string_view>;

KeyValues parse_pairs(const std::vector<std::string_view>& tokens, std::size_t line,
                      const std::set<std::string_view>& allowed) {
    KeyValues kv;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto tok = tokens[i];
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError(line, fmt::format("expected key=value, got '{}'", tok));
        }
        const auto key = tok.substr(0, eq);
        if (!allowed.contains(key)) throw ParseError(line, fmt::format("unknown key '{}'", key));
        if (!kv.emplace(key, tok.substr(eq + 1)).second) {
            throw ParseError(line, fmt::format("key '{}' given twice", key));
        }
    }
    return kv;
}

std::string_view require(const KeyValues& kv, std::string_view key, std::size_t line) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(line, fmt::format("missing required key '{}'", key));
    return it->second;
}

std::vector<std::uint64_t> parse_node_list(std::string_view text, std::size_t line) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_number<std::uint64_t>(item, line, "nodes"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

NetworkConfig parse_config(std::string_view text) {
    NetworkConfig cfg;
    bool have_lattice = false;
    std::set<LatticeIndex> seen;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto tokens = split_ws(trim(raw));
        if (tokens.empty()) continue;

        if (tokens[0] == "lattice") {
            if (have_lattice) throw ParseError(line_no, "duplicate 'lattice' line");
            if (!cfg.cells.empty()) throw ParseError(line_no, "'lattice' must precede all 'cell' lines");
            const auto kv = parse_pairs(tokens, line_no, {"L0"});
            cfg.L0 = parse_number<double>(require(kv, "L0", line_no), line_no, "L0");
            if (!(cfg.L0 > 0.0)) throw ConfigError(fmt::format("line {}: L0 must be positive", line_no));
            have_lattice = true;
        } else if (tokens[0] == "cell") {
            if (!have_lattice) throw ParseError(line_no, "'cell' before the 'lattice' line");
            const auto kv = parse_pairs(tokens, line_no, {"m", "n", "L", "sectors", "nodes"});
            CellSpec cell;
            cell.idx.m = parse_number<int>(require(kv, "m", line_no), line_no, "m");
            cell.idx.n = parse_number<int>(require(kv, "n", line_no), line_no, "n");
            cell.sectors = parse_number<int>(require(kv, "sectors", line_no), line_no, "sectors");
            cell.nodes_per_sector = parse_node_list(require(kv, "nodes", line_no), line_no);
            const auto L = kv.find("L");
            cell.side = L == kv.end() ? cfg.L0 : parse_number<double>(L->second, line_no, "L");

            try {
                validate_cell(cell, cfg.L0);
            } catch (const ParityError& e) {
                throw ParityError(fmt::format("line {}: {}", line_no, e.what()));
            } catch (const ConfigError& e) {
                throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
            }
            if (!seen.insert(cell.idx).second) {
                throw ConfigError(fmt::format("line {}: duplicate cell (m={}, n={})", line_no, cell.idx.m, cell.idx.n));
            }
            cfg.cells.push_back(std::move(cell));
        } else {
            throw ParseError(line_no, fmt::format("unknown directive '{}'", tokens[0]));
        }
    }
    if (!have_lattice) throw ParseError(line_no, "missing 'lattice' line");
    return cfg;
}

NetworkConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading config file " + path.string());
    return parse_config(buf.str());
}

std::string serialize_config(const NetworkConfig& cfg) {
    std::string out = fmt::format("lattice L0={}\n", cfg.L0);
    for (const auto& c : cfg.cells) {
        out += fmt::format("cell m={} n={} L={} sectors={} nodes={}\n", c.idx.m, c.idx.n, c.side, c.sectors,
                           fmt::join(c.nodes_per_sector, ","));
    }
    return out;
}

}  // namespace hexdrop

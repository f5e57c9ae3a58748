#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hexdrop/network.hpp"

namespace hexdrop {

// Network description format, one directive per line:
//
//   # comment (also allowed after a directive)
//   lattice L0=1.0
//   cell m=0 n=0 sectors=3 nodes=120,110,100
//   cell m=1 n=1 L=0.8 sectors=1 nodes=40
//
// `lattice` appears exactly once, before any `cell`. Cell keys m, n, sectors
// and nodes are required; L defaults to L0. Sector 1 is the unrotated base
// sector and ids increase counterclockwise. Unknown or repeated keys are
// errors.

/// Throws ParseError (with line number) on malformed text and ConfigError
/// (ParityError for off-lattice cells) on semantic violations.
NetworkConfig parse_config(std::string_view text);

/// Reads and parses a file. Throws IoError if it cannot be read.
NetworkConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(serialize_config(cfg)) == cfg.
std::string serialize_config(const NetworkConfig& cfg);

}  // namespace hexdrop

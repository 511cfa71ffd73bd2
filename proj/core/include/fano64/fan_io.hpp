#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fano64/toric.hpp"

namespace fano64::toric {

/// Parses a fan document: {"rays": [[x,y,z], ...], "cones": [[i,j,k], ...]}
/// with 0-based ray indices. Only integer literals are accepted. Throws
/// ParseError on malformed input.
Fan parse_fan(std::string_view text);

/// Reads and parses a fan file. Throws ParseError (also for unreadable files).
Fan load_fan(const std::filesystem::path& path);

/// Serializes a fan in the same format parse_fan() reads.
std::string fan_to_json(const Fan& fan);

}  // namespace fano64::toric

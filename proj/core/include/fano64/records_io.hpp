#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fano64/elimination.hpp"

namespace fano64::io {

/// JSON encoding of case records. Rationals are written as "p/q" strings so
/// that no precision is lost. Parsing throws ParseError.
std::string records_to_json(const std::vector<elim::CaseRecord>& records, int indent = 2);
/// Accepts either a bare array or a reproduction document with a "records" key.
std::vector<elim::CaseRecord> records_from_json(std::string_view text);

/// Full reproduction report: records, classification, chains, mismatches.
std::string reproduction_to_json(const elim::Reproduction& rep, int indent = 2);

}  // namespace fano64::io

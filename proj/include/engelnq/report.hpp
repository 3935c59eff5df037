#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace engelnq {

using Json = nlohmann::ordered_json;

/// FNV-1a hash of the canonicalized input, hex-rendered; recorded in every
/// report so runs can be matched to their inputs.
std::string input_hash(const std::string &text);

/// Report skeleton: tool block, subcommand, input echo/hash. Results are
/// attached under "result"; timing is kept in its own subtree so reports are
/// byte-identical across runs once it is stripped.
Json make_report(const std::string &subcommand, const std::string &input_desc,
                 const std::string &input_text);

void attach_timing(Json &report, double wall_seconds);

/// Indented key/value rendering for terminals.
std::string render_human(const Json &report);

} // namespace engelnq

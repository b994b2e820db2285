#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fdiv/bounds.hpp"
#include "fdiv/distributions.hpp"
#include "fdiv/extremal.hpp"

namespace fdivergence {

enum class Units { nats, bits };

Units parse_units(const std::string& text);
std::string to_string(Units units);

/// Divides by ln 2 when converting a log-unit quantity to bits.
double convert(double nats, int log_power, Units units);
ExtReal convert(ExtReal nats, int log_power, Units units);

/// {"atoms": [{"label": str, "p": number}, ...]}
DiscreteDist parse_distribution_json(const std::string& text, Ingest mode = Ingest::strict);
/// Header `label,p`, one atom per line.
DiscreteDist parse_distribution_csv(const std::string& text, Ingest mode = Ingest::strict);
/// Dispatches on content: JSON when the first non-blank character is '{'.
DiscreteDist load_distribution(const std::string& path, Ingest mode = Ingest::strict);

/// Infinite values are written as the strings "inf" / "-inf".
nlohmann::json ext_to_json(ExtReal x);
ExtReal ext_from_json(const nlohmann::json& j);

/// Fields: bound_id, lhs, rhs, slack, holds, preconditions_met, skipped,
/// paper_anchor, units.
nlohmann::json to_json(const BoundReport& report, Units units = Units::nats);
/// Inverse of to_json for reports written in nats.
BoundReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchResult& result);
SearchResult search_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<ProbeEntry>& probe, int log_power_f, int log_power_g,
                       Units units);

struct ChannelSpec {
  std::string function = "square";
  Channel channel;
};

/// {"function": "square", "channel": {"<label>": [{"z": number, "p": number}, ...]}}
ChannelSpec parse_channel_json(const std::string& text);
ChannelSpec load_channel(const std::string& path);

}  // namespace fdivergence

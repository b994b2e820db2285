#include "fdiv/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace fdivergence {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw ValidationError("trailing characters in number '" + t + "'");
    return v;
  } catch (const std::invalid_argument&) {
    throw ValidationError("not a number: '" + t + "'");
  } catch (const std::out_of_range&) {
    throw ValidationError("number out of range: '" + t + "'");
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Units parse_units(const std::string& text) {
  if (text == "nats") return Units::nats;
  if (text == "bits") return Units::bits;
  throw ValidationError("units must be 'nats' or 'bits'");
}

std::string to_string(Units units) { return units == Units::nats ? "nats" : "bits"; }

double convert(double nats, int log_power, Units units) {
  if (units == Units::nats || log_power == 0) return nats;
  return nats / std::pow(std::numbers::ln2, log_power);
}

ExtReal convert(ExtReal nats, int log_power, Units units) {
  if (!nats.is_finite()) return nats;
  return convert(nats.value(), log_power, units);
}

DiscreteDist parse_distribution_json(const std::string& text, Ingest mode) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw ValidationError("distribution JSON needs an \"atoms\" array");
  }
  std::vector<Atom> atoms;
  for (const json& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("label") || !a.contains("p") || !a["label"].is_string() ||
        !a["p"].is_number()) {
      throw ValidationError("each atom needs a string \"label\" and a numeric \"p\"");
    }
    atoms.push_back({a["label"].get<std::string>(), a["p"].get<double>()});
  }
  return DiscreteDist(std::move(atoms), mode);
}

DiscreteDist parse_distribution_csv(const std::string& text, Ingest mode) {
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::vector<Atom> atoms;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      std::string compact;
      for (char c : line) {
        if (c != ' ' && c != '\t') compact += c;
      }
      if (compact != "label,p") throw ValidationError("CSV header must be 'label,p'");
      header_seen = true;
      continue;
    }
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) throw ValidationError("CSV row without a comma: '" + line + "'");
    atoms.push_back({trim(line.substr(0, comma)), parse_real(line.substr(comma + 1))});
  }
  if (!header_seen) throw ValidationError("empty CSV distribution");
  return DiscreteDist(std::move(atoms), mode);
}

DiscreteDist load_distribution(const std::string& path, Ingest mode) {
  const std::string text = read_file(path);
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_distribution_json(text, mode);
  return parse_distribution_csv(text, mode);
}

json ext_to_json(ExtReal x) {
  if (x.is_finite()) return x.value();
  return to_string(x);
}

ExtReal ext_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_ext_real(j.get<std::string>());
  throw ValidationError("expected a number or \"inf\"");
}

json to_json(const BoundReport& r, Units units) {
  return json{{"bound_id", r.bound_id},
              {"lhs", ext_to_json(convert(r.lhs, r.log_power, units))},
              {"rhs", ext_to_json(convert(r.rhs, r.log_power, units))},
              {"slack", ext_to_json(convert(r.slack, r.log_power, units))},
              {"holds", r.holds},
              {"preconditions_met", r.preconditions_met},
              {"skipped", r.skipped},
              {"paper_anchor", r.paper_anchor},
              {"units", r.log_power == 0 ? std::string("none") : to_string(units)}};
}

BoundReport report_from_json(const json& j) {
  try {
    BoundReport r;
    r.bound_id = j.at("bound_id").get<std::string>();
    r.lhs = ext_from_json(j.at("lhs"));
    r.rhs = ext_from_json(j.at("rhs"));
    r.slack = ext_from_json(j.at("slack"));
    r.holds = j.at("holds").get<bool>();
    r.preconditions_met = j.at("preconditions_met").get<bool>();
    r.skipped = j.at("skipped").get<bool>();
    r.paper_anchor = j.at("paper_anchor").get<std::string>();
    const std::string units = j.at("units").get<std::string>();
    if (units == "bits") throw ValidationError("only reports written in nats can be re-read");
    r.log_power = units == "none" ? 0 : 1;
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed bound report: ") + e.what());
  }
}

json to_json(const SearchResult& s) {
  json j{{"objective_id", s.objective_id},
         {"sense", to_string(s.sense)},
         {"alphabet_size", s.alphabet_size},
         {"restarts", s.restarts},
         {"seed", s.seed},
         {"best_value", s.best_value},
         {"witness", {{"p", s.witness_p}, {"q", s.witness_q}}},
         {"claimed_constant", ext_to_json(s.claimed_constant)},
         {"sound", s.sound}};
  j["attainment_ratio"] = s.attainment_ratio ? json(*s.attainment_ratio) : json(nullptr);
  return j;
}

SearchResult search_result_from_json(const json& j) {
  try {
    SearchResult s;
    s.objective_id = j.at("objective_id").get<std::string>();
    s.sense = j.at("sense").get<std::string>() == "infimum" ? Sense::infimum : Sense::supremum;
    s.alphabet_size = j.at("alphabet_size").get<std::size_t>();
    s.restarts = j.at("restarts").get<std::size_t>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.best_value = j.at("best_value").get<double>();
    s.witness_p = j.at("witness").at("p").get<std::vector<double>>();
    s.witness_q = j.at("witness").at("q").get<std::vector<double>>();
    s.claimed_constant = ext_from_json(j.at("claimed_constant"));
    if (!j.at("attainment_ratio").is_null()) s.attainment_ratio = j["attainment_ratio"].get<double>();
    s.sound = j.value("sound", true);
    return s;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed search result: ") + e.what());
  }
}

json to_json(const std::vector<ProbeEntry>& probe, int log_power_f, int log_power_g, Units units) {
  json rows = json::array();
  for (const ProbeEntry& e : probe) {
    json row{{"eps", e.eps},
             {"df", ext_to_json(convert(e.df, log_power_f, units))},
             {"dg", ext_to_json(convert(e.dg, log_power_g, units))}};
    if (e.ratio) {
      row["ratio"] = convert(*e.ratio, log_power_f - log_power_g, units);
      row["skipped"] = false;
    } else {
      row["ratio"] = nullptr;
      row["skipped"] = true;
    }
    rows.push_back(row);
  }
  return rows;
}

ChannelSpec parse_channel_json(const std::string& text) {
  const json j = parse_json(text);
  ChannelSpec spec;
  try {
    if (j.contains("function")) spec.function = j["function"].get<std::string>();
    for (const auto& [label, outputs] : j.at("channel").items()) {
      auto& law = spec.channel[label];
      for (const json& o : outputs) law.emplace_back(o.at("z").get<double>(), o.at("p").get<double>());
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed channel: ") + e.what());
  }
  return spec;
}

ChannelSpec load_channel(const std::string& path) { return parse_channel_json(read_file(path)); }

}  // namespace fdivergence

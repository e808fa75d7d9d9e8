#include "cpda/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace cpda {

namespace {

using Json = nlohmann::json;

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& error) {
    fail(ErrorCode::ParseError, "invalid JSON", error.what());
  }
}

int as_count(const Json& j, const char* field) {
  require(j.contains(field) && j[field].is_number_integer(),
          ErrorCode::ParseError, "missing or non-integer field", field);
  return j[field].get<int>();
}

Json rows_to_json(const PdaArray& array) {
  Json rows = Json::array();
  for (int row = 0; row < array.num_rows(); ++row) {
    Json line = Json::array();
    for (int col = 0; col < array.num_cols(); ++col) {
      Entry e = array.at(row, col);
      if (e == kStar)
        line.push_back("*");
      else
        line.push_back(e);
    }
    rows.push_back(std::move(line));
  }
  return rows;
}

Json labels_to_json(const std::vector<UserLabel>& labels) {
  Json out = Json::array();
  for (const auto& label : labels) out.push_back(label.elems);
  return out;
}

std::vector<UserLabel> labels_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "labels must be an array");
  std::vector<UserLabel> labels;
  labels.reserve(j.size());
  for (const auto& item : j) {
    require(item.is_array(), ErrorCode::ParseError,
            "each label must be an array of integers");
    std::vector<int> elems;
    for (const auto& e : item) {
      require(e.is_number_integer(), ErrorCode::ParseError,
              "label elements must be integers");
      elems.push_back(e.get<int>());
    }
    labels.push_back(UserLabel(std::move(elems)));
  }
  return labels;
}

Json cpda_to_json_object(const CpdaScheme& scheme) {
  Json j;
  j["f"] = scheme.array.num_rows();
  j["k"] = scheme.array.num_cols();
  j["s"] = scheme.array.symbol_count();
  j["rows"] = rows_to_json(scheme.array);
  j["labels"] = labels_to_json(scheme.labels);
  j["relay_of_symbol"] = scheme.relay_of_symbol;
  return j;
}

LoadedArray loaded_from_json(const Json& j) {
  require(j.is_object(), ErrorCode::ParseError, "expected a JSON object");
  int f = as_count(j, "f");
  int k = as_count(j, "k");
  int s = as_count(j, "s");
  require(j.contains("rows") && j["rows"].is_array(), ErrorCode::ParseError,
          "missing rows array");
  const Json& rows = j["rows"];
  require(static_cast<int>(rows.size()) == f, ErrorCode::ParseError,
          "row count does not match f");

  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(f) * static_cast<std::size_t>(k));
  for (const auto& line : rows) {
    require(line.is_array() && static_cast<int>(line.size()) == k,
            ErrorCode::ParseError, "row width does not match k");
    for (const auto& cell : line) {
      if (cell.is_string()) {
        require(cell.get<std::string>() == "*", ErrorCode::ParseError,
                "the only string entry allowed is \"*\"");
        cells.push_back(kStar);
      } else {
        require(cell.is_number_integer(), ErrorCode::ParseError,
                "entries must be \"*\" or integers");
        Entry e = cell.get<Entry>();
        require(e >= 1, ErrorCode::ParseError,
                "ordinary symbols are positive");
        cells.push_back(e);
      }
    }
  }

  LoadedArray loaded{PdaArray(f, k, s, std::move(cells)), std::nullopt,
                     std::nullopt};
  if (j.contains("labels")) loaded.labels = labels_from_json(j["labels"]);
  if (j.contains("relay_of_symbol")) {
    const Json& relays = j["relay_of_symbol"];
    require(relays.is_array(), ErrorCode::ParseError,
            "relay_of_symbol must be an array");
    std::vector<int> map;
    for (const auto& e : relays) {
      require(e.is_number_integer(), ErrorCode::ParseError,
              "relay ids must be integers");
      map.push_back(e.get<int>());
    }
    loaded.relay_of_symbol = std::move(map);
  }
  return loaded;
}

CpdaScheme scheme_from_loaded(LoadedArray loaded) {
  require(loaded.labels.has_value(), ErrorCode::LabelMismatch,
          "a C-PDA file requires the labels field");
  CpdaScheme scheme;
  scheme.array = std::move(loaded.array);
  scheme.labels = std::move(*loaded.labels);
  require(!scheme.labels.empty() && !scheme.labels.front().elems.empty(),
          ErrorCode::LabelMismatch, "labels must be nonempty subsets");
  scheme.r = scheme.labels.front().size();
  scheme.h = 0;
  for (const auto& label : scheme.labels)
    scheme.h = std::max(scheme.h, label.elems.back());
  scheme.relay_of_symbol =
      loaded.relay_of_symbol.has_value()
          ? std::move(*loaded.relay_of_symbol)
          : derive_relay_map(scheme.array, scheme.labels);
  return scheme;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace

std::string pda_to_json(const PdaArray& array) {
  Json j;
  j["f"] = array.num_rows();
  j["k"] = array.num_cols();
  j["s"] = array.symbol_count();
  j["rows"] = rows_to_json(array);
  return dump(j);
}

std::string cpda_to_json(const CpdaScheme& scheme) {
  return dump(cpda_to_json_object(scheme));
}

LoadedArray parse_pda_json(const std::string& text) {
  return loaded_from_json(parse_text(text));
}

CpdaScheme parse_cpda_json(const std::string& text) {
  return scheme_from_loaded(loaded_from_json(parse_text(text)));
}

std::string partition_to_json(const ParallelClassPartition& partition) {
  Json j = Json::array();
  for (const auto& cls : partition.classes()) j.push_back(labels_to_json(cls));
  return dump(j);
}

ParallelClassPartition parse_partition_json(const std::string& text) {
  Json j = parse_text(text);
  require(j.is_array() && !j.empty(), ErrorCode::ParseError,
          "partition must be a nonempty array of classes");
  std::vector<std::vector<UserLabel>> classes;
  classes.reserve(j.size());
  for (const auto& cls : j) classes.push_back(labels_from_json(cls));
  require(!classes.front().empty(), ErrorCode::ParseError,
          "classes must be nonempty");
  int r = classes.front().front().size();
  int h = 0;
  for (const auto& label : classes.front()) h += label.size();
  return ParallelClassPartition(h, r, std::move(classes));
}

std::string balanced_to_json(const BalancedScheme& scheme) {
  require(!scheme.replicas.empty(), ErrorCode::ShapeMismatch,
          "balanced scheme has no replicas");
  Json j;
  j["base_f"] = scheme.replicas.front().array.num_rows();
  j["subpacketization"] = scheme.subpacketization;
  Json replicas = Json::array();
  for (const auto& replica : scheme.replicas)
    replicas.push_back(cpda_to_json_object(replica));
  j["replicas"] = std::move(replicas);
  return dump(j);
}

BalancedScheme parse_balanced_json(const std::string& text) {
  Json j = parse_text(text);
  require(j.is_object() && j.contains("replicas") &&
              j["replicas"].is_array() && !j["replicas"].empty(),
          ErrorCode::ParseError, "missing replicas array");
  BalancedScheme scheme;
  for (const auto& item : j["replicas"])
    scheme.replicas.push_back(scheme_from_loaded(loaded_from_json(item)));
  require(j.contains("subpacketization") &&
              j["subpacketization"].is_number_integer(),
          ErrorCode::ParseError, "missing subpacketization");
  scheme.subpacketization = j["subpacketization"].get<std::int64_t>();
  int base_f = as_count(j, "base_f");
  require(base_f == scheme.replicas.front().array.num_rows(),
          ErrorCode::ParseError, "base_f does not match the replicas");
  // Replicas may label different shifts of one user set; align h across
  // them so relay indexing is consistent.
  int h = 0;
  for (const auto& replica : scheme.replicas) h = std::max(h, replica.h);
  for (auto& replica : scheme.replicas) replica.h = h;
  return scheme;
}

std::string report_to_json(const RoundReport& report) {
  Json j;
  j["F"] = report.f_effective;
  j["M_over_N"] = {{"num", int_to_i64(rat_num(report.memory_ratio))},
                   {"den", int_to_i64(rat_den(report.memory_ratio))}};
  j["all_decoded"] = report.all_decoded;
  j["max_rate"] = {{"num", int_to_i64(rat_num(report.max_relay_rate))},
                   {"den", int_to_i64(rat_den(report.max_relay_rate))}};
  j["per_relay_bits"] = report.per_relay_bits;
  return dump(j);
}

}  // namespace cpda

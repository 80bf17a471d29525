#include "sgrp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sgrp {

using nlohmann::json;

LoadedSemigroup semigroup_from_json(json const& j) {
  if (!j.is_object()) {
    throw Error("semigroup JSON must be an object");
  }
  if (!j.contains("order") || !j.contains("table")) {
    throw Error("semigroup JSON needs \"order\" and \"table\"");
  }
  int order = 0;
  try {
    order = j.at("order").get<int>();
  } catch (json::exception const&) {
    throw Error("\"order\" must be an integer");
  }
  std::vector<std::vector<int>> table;
  try {
    table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (json::exception const&) {
    throw Error("\"table\" must be an array of integer arrays");
  }
  if (static_cast<int>(table.size()) != order) {
    throw Error("\"table\" row count does not match \"order\"");
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    try {
      names = j.at("names").get<std::vector<std::string>>();
    } catch (json::exception const&) {
      throw Error("\"names\" must be an array of strings");
    }
  }
  std::optional<int> adjoined;
  if (j.contains("adjoined_identity")) {
    try {
      adjoined = j.at("adjoined_identity").get<int>();
    } catch (json::exception const&) {
      throw Error("\"adjoined_identity\" must be an integer");
    }
  }
  LoadedSemigroup out;
  out.semigroup =
      share(FiniteSemigroup::from_table(table, std::move(names), adjoined));
  if (j.contains("generators")) {
    if (!j.at("generators").is_object()) {
      throw Error("\"generators\" must be an object of letter -> index");
    }
    out.gens = GeneratingMap{};
    for (auto const& [key, value] : j.at("generators").items()) {
      if (!value.is_number_integer()) {
        throw Error("generator image for \"" + key + "\" must be an integer");
      }
      out.gens->letters.push_back(key);
      out.gens->images.push_back(value.get<int>());
    }
    validate_generating(*out.semigroup, *out.gens);
  }
  return out;
}

LoadedSemigroup semigroup_from_file(std::string const& path) {
  auto text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return semigroup_from_json(j);
}

nlohmann::json semigroup_to_json(FiniteSemigroup const& s,
                                 GeneratingMap const* gens) {
  json j;
  j["order"] = s.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(s.order()));
  for (int x = 0; x < s.order(); ++x) {
    table[static_cast<std::size_t>(x)].resize(static_cast<std::size_t>(s.order()));
    for (int y = 0; y < s.order(); ++y) {
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          s.at(x, y);
    }
  }
  j["table"] = table;
  if (!s.names().empty()) {
    j["names"] = s.names();
  }
  if (s.adjoined_identity()) {
    j["adjoined_identity"] = *s.adjoined_identity();
  }
  if (gens != nullptr) {
    json g = json::object();
    for (int a = 0; a < gens->size(); ++a) {
      g[gens->letters[static_cast<std::size_t>(a)]] = gens->image(a);
    }
    j["generators"] = g;
  }
  return j;
}

nlohmann::json expansion_sidecar_json(KrExpansion const& exp) {
  json j;
  j["projection"] = exp.projection.map();
  json letter_map = json::object();
  for (std::size_t a = 0; a < exp.base_gens.letters.size(); ++a) {
    letter_map[exp.base_gens.letters[a]] = exp.letter_classes[a];
  }
  j["letter_map"] = letter_map;
  json reps = json::array();
  for (auto const& rep : exp.representatives) {
    json word = json::array();
    for (int letter : rep) {
      word.push_back(exp.base_gens.letters[static_cast<std::size_t>(letter)]);
    }
    reps.push_back(word);
  }
  j["representatives"] = reps;
  return j;
}

std::string content_hash(std::string const& data) {
  return "fnv1a64:" + to_hex(fnv1a64(data));
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out << data;
}

}  // namespace sgrp

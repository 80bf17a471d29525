#include <chrono>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgrp/analysis.hpp"
#include "sgrp/cayley.hpp"
#include "sgrp/freeprod.hpp"
#include "sgrp/green.hpp"
#include "sgrp/identities.hpp"
#include "sgrp/json_io.hpp"
#include "sgrp/kr.hpp"
#include "sgrp/semigroup.hpp"

namespace {

using nlohmann::json;
using namespace sgrp;

struct Input {
  std::string path;
  std::string hash;
  LoadedSemigroup loaded;
};

Input load_input(std::string const& path) {
  auto text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return {path, content_hash(text), semigroup_from_json(j)};
}

json input_json(Input const& in) {
  return {{"path", in.path}, {"content_hash", in.hash}};
}

/// Parses "a=0,b=1" into a generating map over s.
GeneratingMap parse_gens_flag(FiniteSemigroup const& s,
                              std::string const& flag) {
  GeneratingMap gens;
  std::size_t pos = 0;
  while (pos <= flag.size()) {
    auto comma = flag.find(',', pos);
    auto end = comma == std::string::npos ? flag.size() : comma;
    auto item = flag.substr(pos, end - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error("--gens items look like letter=index, got: " + item);
    }
    std::size_t used = 0;
    int image = 0;
    try {
      image = std::stoi(item.substr(eq + 1), &used);
    } catch (std::exception const&) {
      used = std::string::npos;
    }
    if (used != item.size() - eq - 1) {
      throw Error("--gens image must be an integer, got: " + item);
    }
    gens.letters.push_back(item.substr(0, eq));
    gens.images.push_back(image);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  validate_generating(s, gens);
  return gens;
}

/// Flag wins over the file's "generators"; the canonical one-letter-per-
/// element map is the fallback when allowed.
GeneratingMap resolve_gens(Input const& in, std::string const& flag,
                           bool fallback_identity) {
  if (!flag.empty()) return parse_gens_flag(*in.loaded.semigroup, flag);
  if (in.loaded.gens) return *in.loaded.gens;
  if (fallback_identity) return GeneratingMap::identity_of(*in.loaded.semigroup);
  throw Error(in.path +
              " has no \"generators\"; pass --gens letter=index,...");
}

std::string iso_utc_now() {
  auto t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Writes a report to stdout or --output, appending a meta block unless
/// --no-meta asked for byte-identical reruns.
struct Emit {
  std::string out_path;
  bool no_meta = false;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void operator()(json j) const {
    if (!no_meta) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      j["meta"] = {{"generated_at", iso_utc_now()}, {"elapsed_ms", ms}};
    }
    auto text = j.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
  }
};

json word_symbols(GeneratingMap const& gens, Word const& w) {
  json a = json::array();
  for (int letter : w) {
    a.push_back(gens.letters[static_cast<std::size_t>(letter)]);
  }
  return a;
}

json gens_json(GeneratingMap const& gens) {
  json g = json::object();
  for (int a = 0; a < gens.size(); ++a) {
    g[gens.letters[static_cast<std::size_t>(a)]] = gens.image(a);
  }
  return g;
}

int cmd_info(std::string const& file, Emit const& emit) {
  auto in = load_input(file);
  auto const& s = *in.loaded.semigroup;
  json j;
  j["command"] = "info";
  j["input"] = input_json(in);
  j["order"] = s.order();
  if (!s.names().empty()) j["names"] = s.names();
  j["idempotents"] = s.idempotents();
  if (auto e = s.identity_element()) j["identity_element"] = *e;
  if (auto a = s.adjoined_identity()) j["adjoined_identity"] = *a;
  if (in.loaded.gens) j["generators"] = gens_json(*in.loaded.gens);
  auto g = greens(s);
  j["green"] = {{"r_class_count", g.r_classes.size()},
                {"l_class_count", g.l_classes.size()},
                {"h_class_count", g.h_classes.size()},
                {"j_class_count", g.j_classes.size()},
                {"j_classes", g.j_classes},
                {"j_regular", g.j_regular}};
  j["minimal_ideal"] = minimal_ideal(s);
  j["completely_simple"] = is_completely_simple(s);
  emit(j);
  return 0;
}

int cmd_kr(std::string const& file, std::string const& gens_flag,
           std::string const& dot_path, int oracle_len, long long budget,
           Emit const& emit) {
  auto in = load_input(file);
  auto gens = resolve_gens(in, gens_flag, false);
  long long spent = 0;
  auto exp = kr_expand(in.loaded.semigroup, gens, budget, &spent);

  json j;
  j["command"] = "kr";
  j["input"] = input_json(in);
  j["base_order"] = in.loaded.semigroup->order();
  j["budget"] = budget;
  j["spent"] = spent;
  j["graph"] = {{"vertices", exp.graph->vertex_count()},
                {"edges", exp.graph->edges().size()},
                {"transition_edges", exp.graph->transition_count()}};
  j["expansion"] = semigroup_to_json(*exp.result, &exp.result_gens);
  j["sidecar"] = expansion_sidecar_json(exp);
  j["projection_onto"] = exp.projection.is_onto();
  j["v_morphism"] = {
      {"identities", json::array({"x y z = x z"})},
      {"holds",
       is_v_morphism(exp.projection, {Identity::parse("xyz = xz")}).holds}};

  int rc = 0;
  if (oracle_len > 0) {
    auto groups = oracle_classes(in.loaded.semigroup, gens, oracle_len);
    bool match = static_cast<int>(groups.size()) <= exp.result->order();
    for (std::size_t k = 0; match && k < groups.size(); ++k) {
      match = groups[k].front() ==
              exp.representatives[static_cast<std::size_t>(k)];
      for (auto const& w : groups[k]) {
        match = match && exp.eval(w) == static_cast<int>(k);
      }
    }
    j["oracle"] = {{"max_len", oracle_len},
                   {"classes", groups.size()},
                   {"expansion_order", exp.result->order()},
                   {"match", match}};
    if (!match) rc = 1;
  }
  if (!dot_path.empty()) {
    write_file(dot_path, exp.graph->to_dot());
    j["dot"] = dot_path;
  }
  emit(j);
  return rc;
}

int cmd_check(std::string const& property, std::vector<std::string> const& rest,
              std::string const& gens_flag, long long budget,
              Emit const& emit) {
  std::string equation;
  std::string file;
  if (property == "identity") {
    if (rest.size() != 2) {
      throw Error("usage: check identity \"<equation>\" <file>");
    }
    equation = rest[0];
    file = rest[1];
  } else {
    if (rest.size() != 1) {
      throw Error("usage: check " + property + " <file>");
    }
    file = rest[0];
  }

  auto in = load_input(file);
  auto const& s = *in.loaded.semigroup;
  json j;
  j["command"] = "check";
  j["property"] = property;
  j["input"] = input_json(in);

  int rc = 0;
  if (property == "equidiv") {
    auto rep = is_equidivisible(s);
    j["holds"] = rep.equidivisible;
    if (rep.has_witness) j["witness"] = rep.witness;
    rc = rep.equidivisible ? 0 : 1;
  } else if (property == "krcover") {
    GeneratingMap gens;
    GeneratingMap const* gens_ptr = nullptr;
    if (!gens_flag.empty()) {
      gens = parse_gens_flag(s, gens_flag);
      gens_ptr = &gens;
    } else if (in.loaded.gens) {
      gens = *in.loaded.gens;
      gens_ptr = &gens;
    }
    auto rep = is_kr_cover(in.loaded.semigroup, budget, gens_ptr);
    j["holds"] = rep.is_cover;
    j["steps"] = rep.steps;
    j["expansion_order"] = rep.expansion->result->order();
    if (rep.section) j["section"] = rep.section->map();
    rc = rep.is_cover ? 0 : 1;
  } else if (property == "lsc") {
    auto gens = resolve_gens(in, gens_flag, true);
    j["generators"] = gens_json(gens);
    auto rep = is_letter_super_cancellative(s, gens);
    j["holds"] = rep.holds;
    if (rep.violation) {
      auto const& v = *rep.violation;
      j["violation"] = {{"side", v.left_sided ? "left" : "right"},
                        {"a", v.a},
                        {"b", v.b},
                        {"u", v.u},
                        {"v", v.v}};
    }
    rc = rep.holds ? 0 : 1;
  } else {
    auto id = Identity::parse(equation);
    j["identity"] = id.str();
    auto rep = satisfies_identity(s, id);
    j["holds"] = rep.holds;
    if (!rep.holds) {
      json a = json::object();
      for (auto const& [var, value] : rep.assignment) {
        a[std::string(1, var)] = value;
      }
      j["assignment"] = a;
    }
    rc = rep.holds ? 0 : 1;
  }
  emit(j);
  return rc;
}

int cmd_tower(std::string const& file, std::string const& gens_flag,
              int levels, std::string const& absorb, int max_len,
              long long budget, Emit const& emit) {
  auto in = load_input(file);
  auto gens = resolve_gens(in, gens_flag, true);
  auto tower = kr_tower(in.loaded.semigroup, gens, levels, budget);

  json j;
  j["command"] = "tower";
  j["input"] = input_json(in);
  j["budget"] = budget;
  j["alphabet"] = gens.letters;
  j["requested_levels"] = tower.requested_levels;
  j["computed_levels"] = tower.computed_levels();
  j["budget_exhausted"] = tower.budget_exhausted;

  json level_list = json::array();
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    level_list.push_back(
        {{"level", i}, {"order", tower.levels[i].semigroup->order()}});
  }
  j["levels"] = level_list;

  // Each connecting map must be onto and send letter classes to letter
  // classes of the level below.
  bool coherent = true;
  json connecting = json::array();
  for (std::size_t i = 0; i + 1 < tower.levels.size(); ++i) {
    auto const& pi = tower.connecting[i];
    bool onto = pi.is_onto();
    bool letters_ok = true;
    auto const& hi = tower.levels[i + 1].gens;
    auto const& lo = tower.levels[i].gens;
    for (int a = 0; a < hi.size(); ++a) {
      letters_ok = letters_ok && pi(hi.image(a)) == lo.image(a);
    }
    coherent = coherent && onto && letters_ok;
    connecting.push_back({{"from", i + 1},
                          {"to", i},
                          {"onto", onto},
                          {"letters_coherent", letters_ok}});
  }
  j["connecting"] = connecting;
  j["coherent"] = coherent;

  bool absorption_ok = true;
  if (!absorb.empty()) {
    int letter = gens.letter_of(absorb);
    if (letter < 0) {
      throw Error("--absorb letter not in the alphabet: " + absorb);
    }
    auto rep = check_absorption(tower, letter, max_len);
    absorption_ok = rep.holds;
    json alevels = json::array();
    for (auto const& lv : rep.levels) {
      json e = {{"level", lv.level},
                {"order", lv.order},
                {"absorbs", lv.absorbs},
                {"in_minimal_ideal", lv.in_minimal_ideal}};
      if (lv.witness) e["witness"] = word_symbols(gens, *lv.witness);
      alevels.push_back(e);
    }
    j["absorption"] = {{"letter", absorb},
                       {"max_len", max_len},
                       {"holds", rep.holds},
                       {"levels", alevels}};
  }
  emit(j);
  if (tower.budget_exhausted) return 2;
  return coherent && absorption_ok ? 0 : 1;
}

int cmd_freeprod(std::vector<std::string> const& files, int cap,
                 std::vector<std::string> const& separate_forms,
                 Emit const& emit) {
  std::vector<Input> inputs;
  std::vector<SemigroupPtr> factors;
  json input_list = json::array();
  for (auto const& path : files) {
    inputs.push_back(load_input(path));
    factors.push_back(inputs.back().loaded.semigroup);
    input_list.push_back(input_json(inputs.back()));
  }

  json j;
  j["command"] = "freeprod";
  j["inputs"] = input_list;

  if (!separate_forms.empty()) {
    auto parse_form = [&](std::string const& text) {
      std::vector<std::pair<int, int>> blocks;
      try {
        blocks = json::parse(text).get<std::vector<std::pair<int, int>>>();
      } catch (json::exception const& e) {
        throw Error("forms are JSON arrays of [factor, element] pairs: " +
                    std::string(e.what()));
      }
      return normal_form(factors, blocks);
    };
    auto u = parse_form(separate_forms[0]);
    auto v = parse_form(separate_forms[1]);
    auto res = separate(factors, u, v);
    json sep;
    sep["u"] = u.blocks;
    sep["v"] = v.blocks;
    sep["u_string"] = form_to_string(factors, u);
    sep["v_string"] = form_to_string(factors, v);
    sep["verdict"] = res.equal ? "equal" : "separated";
    sep["cap"] = res.cap;
    if (!res.equal) {
      sep["order"] = res.product->result->order();
      sep["image_u"] = res.image_u;
      sep["image_v"] = res.image_v;
    }
    j["separate"] = sep;
    emit(j);
    return 0;
  }

  auto p = truncated_free_product(factors, cap);
  j["cap"] = cap;
  j["order"] = p.result->order();
  j["zero"] = p.zero;
  j["semigroup"] = semigroup_to_json(*p.result);
  json embeddings = json::array();
  for (auto const& e : p.embeddings) embeddings.push_back(e.map());
  j["embeddings"] = embeddings;
  emit(j);
  return 0;
}

int cmd_dot(std::string const& file, std::string const& gens_flag,
            bool reachable, std::string const& out_path) {
  auto in = load_input(file);
  auto gens = resolve_gens(in, gens_flag, true);
  auto graph = TwoSidedCayleyGraph::build(in.loaded.semigroup, gens);
  auto dot = graph.to_dot({reachable});
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    write_file(out_path, dot);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup expansions and decision procedures"};
  app.require_subcommand(1);

  std::string out_path;
  bool no_meta = false;
  long long budget = 1'000'000;
  std::string gens_flag;

  auto add_report_flags = [&](CLI::App* sub) {
    sub->add_option("-o,--output", out_path, "write the report here");
    sub->add_flag("--no-meta", no_meta,
                  "omit timestamps for byte-identical reruns");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "step budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--gens", gens_flag,
                    "generating map, e.g. a=0,b=1; overrides the file");
  };

  auto* info =
      app.add_subcommand("info", "order, idempotents, Green's classes, ideals");
  std::string info_file;
  info->add_option("file", info_file, "semigroup JSON")->required();
  add_report_flags(info);

  auto* kr = app.add_subcommand("kr", "expansion of a generating map");
  std::string kr_file, kr_dot;
  int kr_oracle = 0;
  kr->add_option("file", kr_file, "semigroup JSON")->required();
  kr->add_option("--dot", kr_dot, "also write the Cayley graph as DOT here");
  kr->add_option("--oracle", kr_oracle,
                 "cross-check classes of all words up to this length")
      ->check(CLI::PositiveNumber);
  add_gens(kr);
  add_budget(kr);
  add_report_flags(kr);

  auto* check = app.add_subcommand("check", "decide a property");
  std::string check_property;
  std::vector<std::string> check_rest;
  check->add_option("property", check_property,
                    "equidiv, krcover, lsc or identity")
      ->required()
      ->check(CLI::IsMember({"equidiv", "krcover", "lsc", "identity"}));
  check
      ->add_option("args", check_rest,
                   "for identity: the equation, then the file; otherwise the "
                   "file")
      ->expected(-1);
  add_gens(check);
  add_budget(check);
  add_report_flags(check);

  auto* tower = app.add_subcommand("tower", "iterated expansions");
  std::string tower_file, tower_absorb;
  int tower_levels = 2;
  int tower_len = 6;
  tower->add_option("file", tower_file, "semigroup JSON")->required();
  tower->add_option("-n,--levels", tower_levels, "expansion levels")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  tower->add_option("--absorb", tower_absorb,
                    "check that this letter's omega power absorbs words");
  tower->add_option("-L,--max-len", tower_len, "word length bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_gens(tower);
  add_budget(tower);
  add_report_flags(tower);

  auto* freeprod =
      app.add_subcommand("freeprod", "truncated free product of factors");
  std::vector<std::string> fp_files, fp_separate;
  int fp_cap = 4;
  freeprod->add_option("files", fp_files, "factor semigroup JSON files")
      ->required();
  freeprod->add_option("--cap", fp_cap, "block length cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  // allow_extra_args(false) stops CLI11 from splitting the [..] JSON forms.
  freeprod
      ->add_option("--separate", fp_separate,
                   "two forms as JSON [[factor,element],...]; decide equality")
      ->expected(2)
      ->allow_extra_args(false);
  add_report_flags(freeprod);

  auto* dot = app.add_subcommand("dot", "two-sided Cayley graph as DOT");
  std::string dot_file;
  bool dot_reachable = false;
  dot->add_option("file", dot_file, "semigroup JSON")->required();
  dot->add_flag("--reachable", dot_reachable,
                "keep only vertices on canonical paths");
  dot->add_option("-o,--output", out_path, "write the DOT here");
  add_gens(dot);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 3;
  }

  Emit emit{out_path, no_meta, std::chrono::steady_clock::now()};
  try {
    if (*info) return cmd_info(info_file, emit);
    if (*kr) return cmd_kr(kr_file, gens_flag, kr_dot, kr_oracle, budget, emit);
    if (*check) {
      return cmd_check(check_property, check_rest, gens_flag, budget, emit);
    }
    if (*tower) {
      return cmd_tower(tower_file, gens_flag, tower_levels, tower_absorb,
                       tower_len, budget, emit);
    }
    if (*freeprod) return cmd_freeprod(fp_files, fp_cap, fp_separate, emit);
    if (*dot) return cmd_dot(dot_file, gens_flag, dot_reachable, out_path);
  } catch (BudgetError const& e) {
    json j;
    j["error"] = std::string("budget exhausted: ") + e.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

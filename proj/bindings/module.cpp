#include <memory>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgrp/analysis.hpp"
#include "sgrp/cayley.hpp"
#include "sgrp/construct.hpp"
#include "sgrp/freeprod.hpp"
#include "sgrp/green.hpp"
#include "sgrp/identities.hpp"
#include "sgrp/json_io.hpp"
#include "sgrp/kr.hpp"
#include "sgrp/semigroup.hpp"

namespace py = pybind11;
using namespace sgrp;

namespace {

/// pybind11 holders are non-const; the library hands out
/// shared_ptr<FiniteSemigroup const>, which is safe to unconst because the
/// public surface is read-only.
std::shared_ptr<FiniteSemigroup> unconst(SemigroupPtr const& p) {
  return std::const_pointer_cast<FiniteSemigroup>(p);
}

std::vector<SemigroupPtr> as_const_ptrs(
    std::vector<std::shared_ptr<FiniteSemigroup>> const& factors) {
  return {factors.begin(), factors.end()};
}

}  // namespace

PYBIND11_MODULE(_sgrp, m) {
  m.doc() = "finite semigroup expansions and decision procedures";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<BudgetError>(m, "BudgetError", error);

  m.attr("IDENTITY") = py::int_(FiniteSemigroup::kIdentity);
  m.attr("DEFAULT_BUDGET") = py::int_(kDefaultBudget);

  py::class_<FiniteSemigroup, std::shared_ptr<FiniteSemigroup>>(
      m, "FiniteSemigroup")
      .def(py::init([](std::vector<std::vector<int>> const& table,
                       std::vector<std::string> names,
                       std::optional<int> adjoined) {
             return FiniteSemigroup::from_table(table, std::move(names),
                                                adjoined);
           }),
           py::arg("table"), py::arg("names") = std::vector<std::string>{},
           py::arg("adjoined") = std::nullopt)
      .def_property_readonly("order", &FiniteSemigroup::order)
      .def("at", &FiniteSemigroup::at)
      .def("mul", &FiniteSemigroup::mul)
      .def("power", &FiniteSemigroup::power)
      .def("index_period", &FiniteSemigroup::index_period)
      .def("omega_power", &FiniteSemigroup::omega_power, py::arg("s"),
           py::arg("shift") = 0)
      .def("omega_exponent", &FiniteSemigroup::omega_exponent)
      .def("is_idempotent", &FiniteSemigroup::is_idempotent)
      .def("idempotents", &FiniteSemigroup::idempotents)
      .def("identity_element", &FiniteSemigroup::identity_element)
      .def("adjoined_identity", &FiniteSemigroup::adjoined_identity)
      .def("name", &FiniteSemigroup::name)
      .def_property_readonly("names", &FiniteSemigroup::names)
      .def("__eq__",
           [](FiniteSemigroup const& a, FiniteSemigroup const& b) {
             return a == b;
           })
      .def("__repr__", [](FiniteSemigroup const& s) {
        return "<FiniteSemigroup of order " + std::to_string(s.order()) + ">";
      });

  py::class_<GeneratingMap>(m, "GeneratingMap")
      .def(py::init([](std::vector<std::string> letters,
                       std::vector<int> images) {
             return GeneratingMap{std::move(letters), std::move(images)};
           }),
           py::arg("letters"), py::arg("images"))
      .def_readonly("letters", &GeneratingMap::letters)
      .def_readonly("images", &GeneratingMap::images)
      .def("letter_of", &GeneratingMap::letter_of)
      .def_static("identity_of", &GeneratingMap::identity_of);

  m.def("adjoin_identity", &adjoin_identity);
  m.def("validate_generating", &validate_generating);
  m.def("eval_word", &eval_word);
  m.def("word_to_string", &word_to_string);
  m.def("words_up_to", &words_up_to, py::arg("alphabet_size"),
        py::arg("max_len"), py::arg("guard") = 20'000'000LL);

  py::class_<GreenData>(m, "GreenData")
      .def_readonly("r_of", &GreenData::r_of)
      .def_readonly("l_of", &GreenData::l_of)
      .def_readonly("j_of", &GreenData::j_of)
      .def_readonly("h_of", &GreenData::h_of)
      .def_readonly("r_classes", &GreenData::r_classes)
      .def_readonly("l_classes", &GreenData::l_classes)
      .def_readonly("j_classes", &GreenData::j_classes)
      .def_readonly("h_classes", &GreenData::h_classes)
      .def_readonly("j_regular", &GreenData::j_regular);
  m.def("greens", &greens);
  m.def("minimal_ideal", &minimal_ideal);
  m.def("is_completely_simple", &is_completely_simple);

  py::class_<Homomorphism>(m, "Homomorphism")
      .def(py::init([](std::shared_ptr<FiniteSemigroup> source,
                       std::shared_ptr<FiniteSemigroup> target,
                       std::vector<int> map) {
             return Homomorphism(std::move(source), std::move(target),
                                 std::move(map));
           }),
           py::arg("source"), py::arg("target"), py::arg("map"))
      .def_property_readonly(
          "source", [](Homomorphism const& h) { return unconst(h.source()); })
      .def_property_readonly(
          "target", [](Homomorphism const& h) { return unconst(h.target()); })
      .def_property_readonly("map", &Homomorphism::map)
      .def("__call__", &Homomorphism::operator())
      .def("is_onto", &Homomorphism::is_onto)
      .def("is_injective", &Homomorphism::is_injective)
      .def_static("compose", &Homomorphism::compose);

  m.def(
      "rees_matrix",
      [](std::shared_ptr<FiniteSemigroup> group,
         std::vector<std::vector<int>> const& sandwich) {
        return rees_matrix(*group, sandwich);
      },
      py::arg("group"), py::arg("sandwich"));

  py::class_<QuotientResult>(m, "QuotientResult")
      .def_property_readonly(
          "semigroup",
          [](QuotientResult const& q) { return unconst(q.semigroup); })
      .def_readonly("projection", &QuotientResult::projection);
  m.def(
      "quotient",
      [](std::shared_ptr<FiniteSemigroup> s,
         std::vector<std::vector<int>> const& partition) {
        return quotient(std::move(s), partition);
      },
      py::arg("s"), py::arg("partition"));
  m.def(
      "rees_quotient",
      [](std::shared_ptr<FiniteSemigroup> s, std::vector<int> const& ideal) {
        return rees_quotient(std::move(s), ideal);
      },
      py::arg("s"), py::arg("ideal"));
  m.def(
      "hom_from_generator_images",
      [](std::shared_ptr<FiniteSemigroup> source, GeneratingMap const& gens,
         std::shared_ptr<FiniteSemigroup> target,
         std::vector<int> const& letter_images) {
        return hom_from_generator_images(std::move(source), gens,
                                         std::move(target), letter_images);
      },
      py::arg("source"), py::arg("gens"), py::arg("target"),
      py::arg("letter_images"));

  py::class_<Identity>(m, "Identity")
      .def_static("parse", &Identity::parse)
      .def("__str__", &Identity::str)
      .def_readonly("variables", &Identity::variables);
  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("holds", &IdentityCheck::holds)
      .def_readonly("assignment", &IdentityCheck::assignment);
  m.def("satisfies_identity",
        [](std::shared_ptr<FiniteSemigroup> s, Identity const& id) {
          return satisfies_identity(*s, id);
        });
  m.def("satisfies_identity_on",
        [](std::shared_ptr<FiniteSemigroup> s, Identity const& id,
           std::vector<int> const& domain) {
          return satisfies_identity_on(*s, id, domain);
        });

  py::class_<TwoSidedCayleyGraph, std::shared_ptr<TwoSidedCayleyGraph>>(
      m, "TwoSidedCayleyGraph")
      .def_static("build",
                  [](std::shared_ptr<FiniteSemigroup> s, GeneratingMap gens) {
                    return TwoSidedCayleyGraph::build(std::move(s),
                                                      std::move(gens));
                  })
      .def_property_readonly("vertex_count",
                             &TwoSidedCayleyGraph::vertex_count)
      .def_property_readonly("transition_count",
                             &TwoSidedCayleyGraph::transition_count)
      .def("vertex_label", &TwoSidedCayleyGraph::vertex_label)
      .def("to_dot", [](TwoSidedCayleyGraph const& g, bool only_reachable) {
        return g.to_dot({only_reachable});
      }, py::arg("only_reachable") = false);

  py::class_<KrExpansion>(m, "KrExpansion")
      .def_property_readonly(
          "base", [](KrExpansion const& e) { return unconst(e.base); })
      .def_property_readonly(
          "result", [](KrExpansion const& e) { return unconst(e.result); })
      .def_readonly("base_gens", &KrExpansion::base_gens)
      .def_readonly("result_gens", &KrExpansion::result_gens)
      .def_readonly("letter_classes", &KrExpansion::letter_classes)
      .def_readonly("representatives", &KrExpansion::representatives)
      .def_readonly("projection", &KrExpansion::projection)
      .def("eval", &KrExpansion::eval);
  m.def(
      "kr_expand",
      [](std::shared_ptr<FiniteSemigroup> s, GeneratingMap gens,
         long long budget) {
        return kr_expand(std::move(s), std::move(gens), budget);
      },
      py::arg("s"), py::arg("gens"), py::arg("budget") = kDefaultBudget);
  m.def(
      "oracle_classes",
      [](std::shared_ptr<FiniteSemigroup> s, GeneratingMap const& gens,
         int max_len) { return oracle_classes(std::move(s), gens, max_len); },
      py::arg("s"), py::arg("gens"), py::arg("max_len"));
  m.def("induced_hom", &induced_hom);

  py::class_<KrTower::Level>(m, "KrTowerLevel")
      .def_property_readonly(
          "semigroup",
          [](KrTower::Level const& l) { return unconst(l.semigroup); })
      .def_readonly("gens", &KrTower::Level::gens);
  py::class_<KrTower>(m, "KrTower")
      .def_readonly("levels", &KrTower::levels)
      .def_readonly("connecting", &KrTower::connecting)
      .def_readonly("requested_levels", &KrTower::requested_levels)
      .def_readonly("budget_exhausted", &KrTower::budget_exhausted)
      .def("computed_levels", &KrTower::computed_levels)
      .def("connecting_map", &KrTower::connecting_map);
  m.def(
      "kr_tower",
      [](std::shared_ptr<FiniteSemigroup> s, GeneratingMap gens, int levels,
         long long budget) {
        return kr_tower(std::move(s), std::move(gens), levels, budget);
      },
      py::arg("s"), py::arg("gens"), py::arg("levels"),
      py::arg("budget") = kDefaultBudget);

  py::class_<EquidivReport>(m, "EquidivReport")
      .def_readonly("equidivisible", &EquidivReport::equidivisible)
      .def_readonly("has_witness", &EquidivReport::has_witness)
      .def_readonly("witness", &EquidivReport::witness);
  m.def("is_equidivisible", [](std::shared_ptr<FiniteSemigroup> s) {
    return is_equidivisible(*s);
  });

  py::class_<DistanceOneReport>(m, "DistanceOneReport")
      .def_readonly("holds", &DistanceOneReport::holds)
      .def_readonly("has_witness", &DistanceOneReport::has_witness)
      .def_readonly("witness", &DistanceOneReport::witness);
  m.def("check_distance_one_equidivisibility",
        &check_distance_one_equidivisibility);

  py::class_<LscViolation>(m, "LscViolation")
      .def_readonly("left_sided", &LscViolation::left_sided)
      .def_readonly("a", &LscViolation::a)
      .def_readonly("b", &LscViolation::b)
      .def_readonly("u", &LscViolation::u)
      .def_readonly("v", &LscViolation::v);
  py::class_<LscReport>(m, "LscReport")
      .def_readonly("holds", &LscReport::holds)
      .def_readonly("violation", &LscReport::violation);
  m.def("is_letter_super_cancellative",
        [](std::shared_ptr<FiniteSemigroup> s, GeneratingMap const& gens) {
          return is_letter_super_cancellative(*s, gens);
        });

  py::class_<KrCoverReport>(m, "KrCoverReport")
      .def_readonly("is_cover", &KrCoverReport::is_cover)
      .def_property_readonly("expansion",
                             [](KrCoverReport const& r) {
                               return std::const_pointer_cast<KrExpansion>(
                                   r.expansion);
                             })
      .def_readonly("section", &KrCoverReport::section)
      .def_readonly("steps", &KrCoverReport::steps);
  m.def(
      "is_kr_cover",
      [](std::shared_ptr<FiniteSemigroup> s, long long budget,
         std::optional<GeneratingMap> const& gens) {
        return is_kr_cover(std::move(s), budget, gens ? &*gens : nullptr);
      },
      py::arg("s"), py::arg("budget") = kDefaultBudget,
      py::arg("gens") = std::nullopt);
  m.def(
      "check_identity_adjunction_preserves_cover",
      [](std::shared_ptr<FiniteSemigroup> s, long long budget) {
        return check_identity_adjunction_preserves_cover(std::move(s), budget);
      },
      py::arg("s"), py::arg("budget") = kDefaultBudget);

  py::class_<CsRetraction>(m, "CsRetraction")
      .def_readonly("subsemigroup", &CsRetraction::subsemigroup)
      .def_readonly("lift", &CsRetraction::lift);
  m.def("cs_retraction", &cs_retraction);

  py::class_<VMorphismReport>(m, "VMorphismReport")
      .def_readonly("holds", &VMorphismReport::holds)
      .def_readonly("idempotent", &VMorphismReport::idempotent)
      .def_readonly("identity_index", &VMorphismReport::identity_index)
      .def_readonly("assignment", &VMorphismReport::assignment);
  m.def("is_v_morphism", &is_v_morphism);

  py::class_<AbsorptionLevel>(m, "AbsorptionLevel")
      .def_readonly("level", &AbsorptionLevel::level)
      .def_readonly("order", &AbsorptionLevel::order)
      .def_readonly("absorbs", &AbsorptionLevel::absorbs)
      .def_readonly("in_minimal_ideal", &AbsorptionLevel::in_minimal_ideal)
      .def_readonly("witness", &AbsorptionLevel::witness);
  py::class_<AbsorptionReport>(m, "AbsorptionReport")
      .def_readonly("holds", &AbsorptionReport::holds)
      .def_readonly("levels", &AbsorptionReport::levels);
  m.def("check_absorption", &check_absorption);

  py::class_<TowerLscLevel>(m, "TowerLscLevel")
      .def_readonly("level", &TowerLscLevel::level)
      .def_readonly("right_violations", &TowerLscLevel::right_violations)
      .def_readonly("left_violations", &TowerLscLevel::left_violations);
  m.def("check_tower_lsc", &check_tower_lsc);

  py::class_<AlternatingForm>(m, "AlternatingForm")
      .def(py::init([](std::vector<std::pair<int, int>> blocks) {
             return AlternatingForm{std::move(blocks)};
           }),
           py::arg("blocks"))
      .def_readonly("blocks", &AlternatingForm::blocks)
      .def("__eq__", [](AlternatingForm const& a,
                        AlternatingForm const& b) { return a == b; });
  py::class_<TruncatedFreeProduct>(m, "TruncatedFreeProduct")
      .def_property_readonly("factors",
                             [](TruncatedFreeProduct const& p) {
                               std::vector<std::shared_ptr<FiniteSemigroup>> v;
                               for (auto const& f : p.factors) {
                                 v.push_back(unconst(f));
                               }
                               return v;
                             })
      .def_readonly("cap", &TruncatedFreeProduct::cap)
      .def_property_readonly(
          "result",
          [](TruncatedFreeProduct const& p) { return unconst(p.result); })
      .def_readonly("forms", &TruncatedFreeProduct::forms)
      .def_readonly("zero", &TruncatedFreeProduct::zero)
      .def_readonly("embeddings", &TruncatedFreeProduct::embeddings)
      .def("index_of", &TruncatedFreeProduct::index_of);
  m.def("truncated_free_product",
        [](std::vector<std::shared_ptr<FiniteSemigroup>> const& factors,
           int cap) {
          return truncated_free_product(as_const_ptrs(factors), cap);
        });
  m.def("normal_form",
        [](std::vector<std::shared_ptr<FiniteSemigroup>> const& factors,
           std::vector<std::pair<int, int>> const& blocks) {
          return normal_form(as_const_ptrs(factors), blocks);
        });
  py::class_<SeparationResult>(m, "SeparationResult")
      .def_readonly("equal", &SeparationResult::equal)
      .def_readonly("cap", &SeparationResult::cap)
      .def_readonly("product", &SeparationResult::product)
      .def_readonly("image_u", &SeparationResult::image_u)
      .def_readonly("image_v", &SeparationResult::image_v);
  m.def("separate",
        [](std::vector<std::shared_ptr<FiniteSemigroup>> const& factors,
           AlternatingForm const& u, AlternatingForm const& v) {
          return separate(as_const_ptrs(factors), u, v);
        });
  m.def("form_to_string",
        [](std::vector<std::shared_ptr<FiniteSemigroup>> const& factors,
           AlternatingForm const& form) {
          return form_to_string(as_const_ptrs(factors), form);
        });

  m.def("semigroup_to_json",
        [](std::shared_ptr<FiniteSemigroup> s,
           std::optional<GeneratingMap> const& gens) {
          return semigroup_to_json(*s, gens ? &*gens : nullptr).dump(2);
        },
        py::arg("s"), py::arg("gens") = std::nullopt);
  m.def("semigroup_from_json", [](std::string const& text) {
    auto loaded = semigroup_from_json(nlohmann::json::parse(text));
    return py::make_tuple(unconst(loaded.semigroup), loaded.gens);
  });
  m.def("expansion_sidecar_json", [](KrExpansion const& exp) {
    return expansion_sidecar_json(exp).dump(2);
  });
  m.def("content_hash", &content_hash);
}

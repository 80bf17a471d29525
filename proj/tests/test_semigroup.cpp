#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "sgrp/construct.hpp"
#include "sgrp/green.hpp"
#include "sgrp/identities.hpp"
#include "sgrp/semigroup.hpp"

using namespace sgrp;

namespace {

// Reference Green's relations by principal ideals: x R y iff x S^I = y S^I,
// dually for L, and J via S^I x S^I.  Quadratic and independent of the
// SCC-based implementation.
std::set<int> right_ideal(FiniteSemigroup const& s, int x) {
  std::set<int> out{x};
  for (int g = 0; g < s.order(); ++g) out.insert(s.at(x, g));
  return out;
}

std::set<int> left_ideal(FiniteSemigroup const& s, int x) {
  std::set<int> out{x};
  for (int g = 0; g < s.order(); ++g) out.insert(s.at(g, x));
  return out;
}

std::set<int> two_sided_ideal(FiniteSemigroup const& s, int x) {
  std::set<int> out{x};
  for (int g = 0; g < s.order(); ++g) {
    out.insert(s.at(x, g));
    out.insert(s.at(g, x));
    for (int h = 0; h < s.order(); ++h) out.insert(s.at(g, s.at(x, h)));
  }
  return out;
}

}  // namespace

TEST_CASE("from_table validates shape, range and associativity") {
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 2}, {1, 0}}), Error);
  CHECK_THROWS_WITH_AS(FiniteSemigroup::from_table({{1, 0}, {0, 0}}),
                       doctest::Contains("associat"), Error);
  CHECK_NOTHROW(FiniteSemigroup::from_table({{0}}));
  CHECK_THROWS_AS(FiniteSemigroup::from_table({}), Error);
}

TEST_CASE("from_table adjoined flag requires a two-sided identity") {
  // In the two-element semilattice the top element a is an identity.
  auto s = FiniteSemigroup::from_table({{0, 1}, {1, 1}}, {"a", "b"}, 0);
  CHECK(s.adjoined_identity() == 0);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 1}, {1, 1}}, {}, 1), Error);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 1}, {1, 1}}, {}, 7), Error);
}

TEST_CASE("mul treats the virtual identity as neutral") {
  auto s = corpus::z2();
  int I = FiniteSemigroup::kIdentity;
  CHECK(s.mul(I, 1) == 1);
  CHECK(s.mul(1, I) == 1);
  CHECK(s.mul(I, I) == I);
  CHECK(s.mul(1, 1) == 0);
}

TEST_CASE("powers, index and period") {
  auto z3 = corpus::z3();
  CHECK(z3.power(1, 1) == 1);
  CHECK(z3.power(1, 3) == 0);
  CHECK(z3.power(1, 100) == 1);
  CHECK(z3.index_period(1) == std::pair<int, int>{1, 3});

  auto n2 = corpus::null2();
  CHECK(n2.index_period(0) == std::pair<int, int>{2, 1});

  auto m = corpus::mono22();
  CHECK(m.index_period(0) == std::pair<int, int>{2, 2});
  CHECK(m.power(0, 4) == m.power(0, 2));

  CHECK(z3.index_period(FiniteSemigroup::kIdentity) ==
        std::pair<int, int>{1, 1});
}

TEST_CASE("omega powers and the omega exponent") {
  auto z2 = corpus::z2();
  CHECK(z2.omega_power(1) == 0);      // g^w = e
  CHECK(z2.omega_power(1, 1) == 1);   // g^(w+1) = g
  CHECK(z2.omega_exponent() == 2);
  CHECK(corpus::z3().omega_exponent() == 3);
  CHECK(corpus::trivial().omega_exponent() == 1);

  auto m = corpus::mono22();
  CHECK(m.omega_power(0) == 1);       // x^w = x^2
  CHECK(m.omega_power(0, 1) == 2);    // x^(w+1) = x^3
  CHECK(m.omega_exponent() == 2);

  auto n2 = corpus::null2();
  CHECK(n2.omega_power(0) == 1);      // n^w = z
  CHECK(n2.omega_power(FiniteSemigroup::kIdentity) ==
        FiniteSemigroup::kIdentity);
}

TEST_CASE("idempotents and identity elements") {
  auto sl = corpus::semilattice2();
  CHECK(sl.idempotents() == std::vector<int>{0, 1});
  CHECK(sl.identity_element() == 0);

  auto band = corpus::band22();
  CHECK(band.idempotents().size() == 4);
  CHECK_FALSE(band.identity_element().has_value());

  CHECK(corpus::z2zero().identity_element() == 0);
  CHECK(corpus::null2().idempotents() == std::vector<int>{1});
}

TEST_CASE("adjoin_identity flags the new element and renames on clash") {
  auto s = corpus::semilattice2();
  auto si = adjoin_identity(s);
  CHECK(si.order() == 3);
  CHECK(si.adjoined_identity() == 2);
  CHECK(si.name(2) == "I");
  CHECK(si.identity_element() == 2);  // the new element is the unique identity
  for (int x = 0; x < 3; ++x) {
    CHECK(si.at(2, x) == x);
    CHECK(si.at(x, 2) == x);
  }
  // The original identity of the semilattice is no longer the global one.
  CHECK(si.at(0, 1) == 1);

  auto sii = adjoin_identity(si);
  CHECK(sii.order() == 4);
  CHECK(sii.name(3) == "I'");
}

TEST_CASE("eval_word and word rendering") {
  auto sl = share(corpus::semilattice2());
  auto g = corpus::gens({"a", "b"}, {0, 1});
  CHECK(eval_word(*sl, g, {0, 0}) == 0);
  CHECK(eval_word(*sl, g, {0, 1, 0}) == 1);
  CHECK(eval_word(*sl, g, {}) == FiniteSemigroup::kIdentity);
  CHECK(word_to_string(g, {0, 1, 0}) == "aba");

  auto many = corpus::gens({"g", "z"}, {1, 2});
  CHECK(word_to_string(many, {0, 1}) == "gz");
  auto wide = corpus::gens({"x2", "y"}, {0, 1});
  CHECK(word_to_string(wide, {0, 1}) == "x2.y");
}

TEST_CASE("words_up_to enumerates in military order") {
  auto ws = words_up_to(2, 3);
  CHECK(ws.size() == 2 + 4 + 8);
  CHECK(ws.front() == Word{0});
  CHECK(ws[1] == Word{1});
  CHECK(ws[2] == Word{0, 0});
  CHECK(ws.back() == Word{1, 1, 1});
  for (std::size_t i = 1; i < ws.size(); ++i) {
    bool ordered = ws[i - 1].size() < ws[i].size() ||
                   (ws[i - 1].size() == ws[i].size() && ws[i - 1] < ws[i]);
    CHECK(ordered);
  }
  CHECK(words_up_to(3, 0).empty());
  CHECK_THROWS_AS(words_up_to(10, 12), Error);
}

TEST_CASE("generated_closure and validate_generating") {
  auto z2 = corpus::z2();
  CHECK(generated_closure(z2, {1}) == std::vector<int>{0, 1});
  CHECK(generated_closure(z2, {0}) == std::vector<int>{0});

  auto bad = corpus::gens({"e"}, {0});
  CHECK_THROWS_AS(validate_generating(z2, bad), Error);
  auto good = corpus::gens({"g"}, {1});
  CHECK_NOTHROW(validate_generating(z2, good));

  auto dup = corpus::gens({"g", "g"}, {1, 0});
  CHECK_THROWS_AS(validate_generating(z2, dup), Error);

  // A flagged adjoined identity need not be generated.
  auto si = share(adjoin_identity(corpus::z2()));
  auto g = corpus::gens({"g"}, {1});
  CHECK_NOTHROW(validate_generating(*si, g));
}

TEST_CASE("identity generating map covers every element") {
  auto band = corpus::band22();
  auto id = GeneratingMap::identity_of(band);
  CHECK(id.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(id.image(i) == i);
    CHECK(id.letters[static_cast<std::size_t>(i)] == band.name(i));
  }
  CHECK(id.letter_of(band.name(2)) == 2);
  CHECK(id.letter_of("nope") == -1);
}

TEST_CASE("Green's relations agree with the principal-ideal definition") {
  for (auto const& inst : corpus::instances()) {
    CAPTURE(inst.name);
    auto const& s = *inst.s;
    auto g = greens(s);
    for (int x = 0; x < s.order(); ++x) {
      for (int y = 0; y < s.order(); ++y) {
        bool r = right_ideal(s, x) == right_ideal(s, y);
        bool l = left_ideal(s, x) == left_ideal(s, y);
        bool j = two_sided_ideal(s, x) == two_sided_ideal(s, y);
        CHECK(r == (g.r_of[x] == g.r_of[y]));
        CHECK(l == (g.l_of[x] == g.l_of[y]));
        CHECK(j == (g.j_of[x] == g.j_of[y]));
        CHECK((r && l) == (g.h_of[x] == g.h_of[y]));
      }
    }
  }
}

TEST_CASE("J-order matches ideal containment and classes are canonical") {
  for (auto const& inst : corpus::instances()) {
    CAPTURE(inst.name);
    auto const& s = *inst.s;
    auto g = greens(s);
    for (int c = 0; c < g.j_class_count(); ++c) {
      CHECK(g.j_leq[c][c]);
      // Classes are numbered by least element.
      if (c > 0) CHECK(g.j_classes[c - 1][0] < g.j_classes[c][0]);
      for (int d = 0; d < g.j_class_count(); ++d) {
        int x = g.j_classes[c][0];
        int y = g.j_classes[d][0];
        auto ideal = two_sided_ideal(s, y);
        CHECK(g.j_leq[c][d] == (ideal.count(x) > 0));
      }
    }
    for (int c = 0; c < g.j_class_count(); ++c) {
      bool has_idem = false;
      for (int x : g.j_classes[c])
        if (s.is_idempotent(x)) has_idem = true;
      CHECK(g.j_regular[c] == has_idem);
    }
  }
}

TEST_CASE("minimal ideal and complete simplicity") {
  CHECK(minimal_ideal(corpus::semilattice2()) == std::vector<int>{1});
  CHECK(minimal_ideal(corpus::z2zero()) == std::vector<int>{2});
  CHECK(minimal_ideal(corpus::chain3()) == std::vector<int>{2});
  CHECK(minimal_ideal(corpus::band22()) == std::vector<int>{0, 1, 2, 3});
  CHECK(minimal_ideal(corpus::z2()) == std::vector<int>{0, 1});

  CHECK(is_completely_simple(corpus::band22()));
  CHECK(is_completely_simple(corpus::z3()));
  CHECK(is_completely_simple(corpus::rightgroup4()));
  CHECK(is_completely_simple(corpus::rees8()));
  CHECK_FALSE(is_completely_simple(corpus::semilattice2()));
  CHECK_FALSE(is_completely_simple(corpus::null2()));
  CHECK_FALSE(is_completely_simple(corpus::z2zero()));
}

TEST_CASE("rees_matrix builds completely simple semigroups") {
  auto band = corpus::band22();
  CHECK(band.order() == 4);
  // (i, e, l)(j, f, m) = (i, e, m): row picks the left factor, column the
  // right one.
  CHECK(band.at(0, 3) == 1);
  CHECK(band.at(3, 0) == 2);
  CHECK(band.name(0) == "(0,e,0)");

  auto rg = corpus::rightgroup4();
  CHECK(rg.order() == 4);
  CHECK(is_completely_simple(rg));

  auto r8 = corpus::rees8();
  CHECK(r8.order() == 8);
  CHECK(is_completely_simple(r8));
  CHECK(greens(r8).j_class_count() == 1);

  CHECK_THROWS_AS(rees_matrix(corpus::semilattice2(), {{0}}), Error);
  CHECK_THROWS_AS(rees_matrix(corpus::z2(), {{0, 2}}), Error);
  CHECK_THROWS_AS(rees_matrix(corpus::z2(), {}), Error);
}

TEST_CASE("identity parsing and rendering") {
  auto id = Identity::parse("xyx = x");
  CHECK(id.variables == std::vector<char>{'x', 'y'});
  CHECK(id.str() == "x y x = x");

  auto om = Identity::parse("x^w y = x^w+1 y^2");
  CHECK(om.str() == "x^w y = x^w+1 y^2");
  CHECK(om.lhs.factors[0].has_omega);
  CHECK(om.rhs.factors[0].shift == 1);
  CHECK(om.rhs.factors[1].power == 2);

  CHECK_THROWS_AS(Identity::parse("w = x"), Error);
  CHECK_THROWS_AS(Identity::parse("x ="), Error);
  CHECK_THROWS_AS(Identity::parse("= x"), Error);
  CHECK_THROWS_AS(Identity::parse("x^0 = x"), Error);
  CHECK_THROWS_AS(Identity::parse("xy"), Error);
}

TEST_CASE("identity evaluation against a direct scan") {
  auto band = corpus::band22();
  CHECK(satisfies_identity(band, Identity::parse("xyx = x")).holds);
  CHECK_FALSE(satisfies_identity(corpus::z2(), Identity::parse("xyx = x")).holds);

  // Commutativity: semilattices satisfy xy = yx, bands do not.
  CHECK(satisfies_identity(corpus::chain3(), Identity::parse("xy = yx")).holds);
  CHECK_FALSE(
      satisfies_identity(corpus::band22(), Identity::parse("xy = yx")).holds);

  // Direct triple scan for xyz = xz mirrors satisfies_identity.
  auto id = Identity::parse("xyz = xz");
  for (auto const& inst : corpus::instances()) {
    CAPTURE(inst.name);
    auto const& s = *inst.s;
    bool direct = true;
    for (int x = 0; x < s.order() && direct; ++x)
      for (int y = 0; y < s.order() && direct; ++y)
        for (int z = 0; z < s.order() && direct; ++z)
          if (s.at(s.at(x, y), z) != s.at(x, z)) direct = false;
    CHECK(satisfies_identity(s, id).holds == direct);
  }

  // The violation reported is genuine and lexicographically first.
  auto bad = satisfies_identity(corpus::z2(), Identity::parse("x = y"));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.assignment.size() == 2);
  CHECK(bad.assignment[0] == std::pair<char, int>{'x', 0});
  CHECK(bad.assignment[1] == std::pair<char, int>{'y', 1});
}

TEST_CASE("omega terms evaluate through omega powers") {
  auto z3 = corpus::z3();
  OmegaWord w;
  w.factors.push_back({'x', true, 1, 1});  // x^(w+1)
  CHECK(eval_omega_word(z3, w, {'x'}, {1}) == 1);
  CHECK(eval_omega_word(z3, w, {'x'}, {0}) == 0);

  // x^w y^w = y^w x^w holds in any commutative semigroup.
  auto comm = Identity::parse("x^w y^w = y^w x^w");
  CHECK(satisfies_identity(corpus::chain3(), comm).holds);
  CHECK(satisfies_identity(corpus::z3(), comm).holds);
}

TEST_CASE("satisfies_identity_on restricts the domain") {
  auto z2z = corpus::z2zero();
  auto eq = Identity::parse("xy = yx");
  CHECK(satisfies_identity_on(z2z, eq, {0, 1}).holds);
  auto sub = satisfies_identity_on(corpus::band22(), eq, {0, 1});
  CHECK_FALSE(sub.holds);
}

TEST_CASE("quotient by a congruence") {
  auto z2z = share(corpus::z2zero());
  auto q = quotient(z2z, {{0, 1}, {2}});
  CHECK(q.semigroup->order() == 2);
  CHECK(q.projection.is_onto());
  CHECK(q.projection(0) == q.projection(1));
  CHECK(q.projection(2) == 1);
  // Class labels come from member names.
  CHECK(q.semigroup->name(0) == "[e]");

  auto z3 = share(corpus::z3());
  CHECK_THROWS_AS(quotient(z3, {{0, 1}, {2}}), Error);      // not a congruence
  CHECK_THROWS_AS(quotient(z3, {{0, 1}}), Error);           // not a partition
  CHECK_THROWS_AS(quotient(z3, {{0, 1}, {1, 2}}), Error);   // overlap
}

TEST_CASE("rees_quotient collapses an ideal to zero") {
  auto c3 = share(corpus::chain3());
  auto q = rees_quotient(c3, {1, 2});
  CHECK(q.semigroup->order() == 2);
  CHECK(q.semigroup->name(1) == "0");
  CHECK(q.projection(1) == q.projection(2));
  CHECK(q.semigroup->at(1, 1) == 1);

  CHECK_THROWS_AS(rees_quotient(share(corpus::z2()), {0}), Error);
  // The whole semigroup is an ideal; the quotient is trivial.
  auto whole = rees_quotient(c3, {0, 1, 2});
  CHECK(whole.semigroup->order() == 1);
}

TEST_CASE("hom_from_generator_images extends letter images when possible") {
  auto z2 = share(corpus::z2());
  auto sl = share(corpus::semilattice2());
  auto g = corpus::gens({"g"}, {1});

  auto idh = hom_from_generator_images(z2, g, z2, {1});
  CHECK(idh(0) == 0);
  CHECK(idh(1) == 1);

  auto triv = share(corpus::trivial());
  auto collapse = hom_from_generator_images(z2, g, triv, {0});
  CHECK(collapse.is_onto());

  // g has order 2 in Z/2 but its image would need order 3.
  auto z3 = share(corpus::z3());
  auto gz3 = corpus::gens({"g"}, {1});
  CHECK_THROWS_AS(hom_from_generator_images(z3, gz3, z2, {1}), Error);

  // Images must be consistent with products of generators.
  auto gsl = corpus::gens({"a", "b"}, {0, 1});
  auto ok = hom_from_generator_images(sl, gsl, triv, {0, 0});
  CHECK(ok.is_onto());
}

TEST_CASE("homomorphism construction validates multiplicativity") {
  auto z2 = share(corpus::z2());
  auto sl = share(corpus::semilattice2());
  CHECK_THROWS_AS(Homomorphism(z2, sl, {0, 1}), Error);
  CHECK_NOTHROW(Homomorphism(z2, sl, {0, 0}));
  CHECK_THROWS_AS(Homomorphism(z2, sl, {0}), Error);
  CHECK_THROWS_AS(Homomorphism(z2, sl, {0, 5}), Error);

  Homomorphism c(z2, sl, {0, 0});
  CHECK(c(FiniteSemigroup::kIdentity) == FiniteSemigroup::kIdentity);
  CHECK_FALSE(c.is_onto());
  CHECK_FALSE(c.is_injective());

  auto z2b = share(corpus::z2());
  Homomorphism id2(z2, z2b, {0, 1});
  auto comp = Homomorphism::compose(c, id2);
  CHECK(comp(1) == 0);
  CHECK_THROWS_AS(Homomorphism::compose(id2, c), Error);
}

#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "sgrp/freeprod.hpp"

using namespace sgrp;

namespace {

std::vector<SemigroupPtr> two_trivial() {
  return {share(corpus::trivial()),
          share(FiniteSemigroup::from_table({{0}}, {"f"}))};
}

}  // namespace

TEST_CASE("two trivial factors at cap three give the seven-element product") {
  auto factors = two_trivial();
  auto p = truncated_free_product(factors, 3);
  REQUIRE(p.result->order() == 7);
  CHECK(p.zero == 6);
  std::vector<std::string> names;
  for (int i = 0; i < 7; ++i) names.push_back(p.result->name(i));
  CHECK(names == std::vector<std::string>{
                     "(0:e)", "(1:f)", "(0:e)(1:f)", "(1:f)(0:e)",
                     "(0:e)(1:f)(0:e)", "(1:f)(0:e)(1:f)", "0"});

  AlternatingForm ef{{{0, 0}, {1, 0}}};
  AlternatingForm fe{{{1, 0}, {0, 0}}};
  AlternatingForm efe{{{0, 0}, {1, 0}, {0, 0}}};
  int ief = p.index_of(ef);
  int ife = p.index_of(fe);
  CHECK(p.result->at(ief, ife) == p.index_of(efe));  // boundary merge on f
  CHECK(p.result->at(ief, ief) == p.zero);           // four blocks exceed cap

  // The zero absorbs.
  for (int x = 0; x < 7; ++x) {
    CHECK(p.result->at(x, p.zero) == p.zero);
    CHECK(p.result->at(p.zero, x) == p.zero);
  }
}

TEST_CASE("nonzero elements count alternating index words") {
  auto factors = two_trivial();
  // Over two one-element factors there are exactly two alternating index
  // words per length, so cap c gives 2c nonzero elements.
  for (int cap = 1; cap <= 4; ++cap) {
    auto p = truncated_free_product(factors, cap);
    CHECK(p.result->order() == 2 * cap + 1);
  }
}

TEST_CASE("factor embeddings are injective homomorphisms") {
  auto z2 = share(corpus::z2());
  auto sl = share(corpus::semilattice2());
  auto p = truncated_free_product({z2, sl}, 3);
  REQUIRE(p.embeddings.size() == 2);
  for (auto const& emb : p.embeddings) {
    CHECK(emb.is_injective());
  }
  // Embedded elements multiply inside their own block.
  int g = p.embeddings[0](1);
  CHECK(p.result->at(g, g) == p.embeddings[0](0));
}

TEST_CASE("single factor keeps its copy with an unreachable zero") {
  auto z2 = share(corpus::z2());
  auto p = truncated_free_product({z2}, 4);
  CHECK(p.result->order() == 3);
  CHECK(p.embeddings[0].is_injective());
  int nz = p.result->order() - 1;
  for (int x = 0; x < nz; ++x) {
    for (int y = 0; y < nz; ++y) {
      CHECK(p.result->at(x, y) != p.zero);
    }
  }
}

TEST_CASE("normal_form merges runs inside one factor") {
  auto z2 = share(corpus::z2());
  auto t = share(corpus::trivial());
  std::vector<SemigroupPtr> factors{z2, t};

  auto f = normal_form(factors, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(f == AlternatingForm{{{0, 0}, {1, 0}}});  // g g e -> (1) e

  auto single = normal_form(factors, {{1, 0}, {1, 0}, {1, 0}});
  CHECK(single == AlternatingForm{{{1, 0}}});

  auto already = normal_form(factors, {{0, 1}, {1, 0}});
  CHECK(already == AlternatingForm{{{0, 1}, {1, 0}}});

  CHECK_THROWS_AS(normal_form(factors, {}), Error);
  CHECK_THROWS_AS(normal_form(factors, {{2, 0}}), Error);
  CHECK_THROWS_AS(normal_form(factors, {{0, 5}}), Error);
}

TEST_CASE("index_of validates the form against the truncation") {
  auto factors = two_trivial();
  auto p = truncated_free_product(factors, 2);
  CHECK_THROWS_AS(p.index_of(AlternatingForm{{{0, 0}, {1, 0}, {0, 0}}}),
                  Error);  // too long
  CHECK_THROWS_AS(p.index_of(AlternatingForm{{{0, 0}, {0, 0}}}),
                  Error);  // not alternating
  CHECK(p.index_of(AlternatingForm{{{0, 0}}}) == 0);
}

TEST_CASE("separation distinguishes distinct forms") {
  auto factors = two_trivial();
  AlternatingForm ef{{{0, 0}, {1, 0}}};
  AlternatingForm fe{{{1, 0}, {0, 0}}};

  auto r = separate(factors, ef, fe);
  CHECK_FALSE(r.equal);
  CHECK(r.cap == 3);
  REQUIRE(r.product.has_value());
  CHECK(r.product->result->order() == 7);
  CHECK(r.image_u == 2);
  CHECK(r.image_v == 3);
  CHECK(r.image_u != r.image_v);

  auto eq = separate(factors, ef, ef);
  CHECK(eq.equal);
  CHECK_FALSE(eq.product.has_value());
}

TEST_CASE("separation handles group entries: geg versus ge1") {
  auto z2 = share(corpus::z2());
  auto t = share(corpus::trivial());
  std::vector<SemigroupPtr> factors{z2, t};
  AlternatingForm geg{{{0, 1}, {1, 0}, {0, 1}}};
  AlternatingForm ge1{{{0, 1}, {1, 0}, {0, 0}}};
  auto r = separate(factors, geg, ge1);
  CHECK_FALSE(r.equal);
  CHECK(r.cap == 4);
  REQUIRE(r.product.has_value());
  CHECK(r.product->result->order() == 22);
  CHECK(r.image_u == 10);
  CHECK(r.image_v == 9);
}

TEST_CASE("separation never calls distinct forms equal") {
  auto factors = two_trivial();
  auto p = truncated_free_product(factors, 2);
  for (int i = 0; i < p.zero; ++i) {
    for (int j = 0; j < p.zero; ++j) {
      auto r = separate(factors, p.forms[i], p.forms[j]);
      CHECK(r.equal == (i == j));
      if (!r.equal) CHECK(r.image_u != r.image_v);
    }
  }
}

TEST_CASE("mixed factors produce the expected truncation size") {
  auto z2 = share(corpus::z2());
  auto t = share(corpus::trivial());
  // Lengths 1..3 of alternating forms over sizes 2 and 1:
  // 3 + 4 + 6 nonzero forms, plus the zero.
  auto p = truncated_free_product({z2, t}, 3);
  CHECK(p.result->order() == 14);
}

TEST_CASE("the construction refuses oversized products") {
  auto big = share(corpus::z3zero());
  CHECK_THROWS_AS(truncated_free_product({big, big}, 12), Error);
  CHECK_THROWS_AS(truncated_free_product({}, 3), Error);
  CHECK_THROWS_AS(truncated_free_product({big}, 0), Error);
}

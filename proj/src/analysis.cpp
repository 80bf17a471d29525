#include "sgrp/analysis.hpp"

#include <algorithm>
#include <functional>

#include "sgrp/construct.hpp"

namespace sgrp {

namespace {

// Pairs (x, y) grouped by product x*y, each bucket in lexicographic order.
std::vector<std::vector<std::pair<int, int>>> product_buckets(
    FiniteSemigroup const& s) {
  std::vector<std::vector<std::pair<int, int>>> buckets(
      static_cast<std::size_t>(s.order()));
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      buckets[static_cast<std::size_t>(s.at(x, y))].emplace_back(x, y);
    }
  }
  return buckets;
}

}  // namespace

EquidivReport is_equidivisible(FiniteSemigroup const& s) {
  auto buckets = product_buckets(s);
  int const n = s.order();
  EquidivReport report;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (auto [x, y] : buckets[static_cast<std::size_t>(s.at(u, v))]) {
        bool ok = false;
        for (int t = FiniteSemigroup::kIdentity; t < n && !ok; ++t) {
          ok = (s.mul(u, t) == x && s.mul(t, y) == v) ||
               (s.mul(x, t) == u && s.mul(t, v) == y);
        }
        if (!ok) {
          report.equidivisible = false;
          report.has_witness = true;
          report.witness = {u, v, x, y};
          return report;
        }
      }
    }
  }
  return report;
}

DistanceOneReport check_distance_one_equidivisibility(KrExpansion const& exp) {
  auto const& r = *exp.result;
  auto const& base = *exp.base;
  auto const& pi = exp.projection;
  auto buckets = product_buckets(r);
  DistanceOneReport report;
  for (int u = 0; u < r.order(); ++u) {
    for (int v = 0; v < r.order(); ++v) {
      for (auto [x, y] : buckets[static_cast<std::size_t>(r.at(u, v))]) {
        bool ok = false;
        for (int t = FiniteSemigroup::kIdentity; t < base.order() && !ok; ++t) {
          ok = (base.mul(pi(u), t) == pi(x) && base.mul(t, pi(y)) == pi(v)) ||
               (base.mul(pi(x), t) == pi(u) && base.mul(t, pi(v)) == pi(y));
        }
        if (!ok) {
          report.holds = false;
          report.has_witness = true;
          report.witness = {u, v, x, y};
          return report;
        }
      }
    }
  }
  return report;
}

LscReport is_letter_super_cancellative(FiniteSemigroup const& s,
                                       GeneratingMap const& gens) {
  validate_generating(s, gens);
  std::vector<int> images = gens.images;
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  LscReport report;
  for (int a : images) {
    for (int b : images) {
      for (int u = FiniteSemigroup::kIdentity; u < s.order(); ++u) {
        for (int v = FiniteSemigroup::kIdentity; v < s.order(); ++v) {
          bool trivial_pair = a == b && u == v;
          if (trivial_pair) continue;
          if (s.mul(u, a) == s.mul(v, b)) {
            report.holds = false;
            report.violation = LscViolation{false, a, b, u, v};
            return report;
          }
          if (s.mul(a, u) == s.mul(b, v)) {
            report.holds = false;
            report.violation = LscViolation{true, a, b, u, v};
            return report;
          }
        }
      }
    }
  }
  return report;
}

KrCoverReport is_kr_cover(SemigroupPtr s, long long budget,
                          GeneratingMap const* gens) {
  GeneratingMap psi = gens != nullptr ? *gens : GeneratingMap::identity_of(*s);
  Budget steps(budget);
  long long expansion_steps = 0;
  KrCoverReport report;
  report.expansion = std::make_shared<KrExpansion const>(
      kr_expand(s, psi, budget, &expansion_steps));
  steps.charge(expansion_steps, "expansion");
  auto const& exp = *report.expansion;
  int const n = s->order();
  int const m = exp.result->order();

  std::vector<std::vector<int>> fiber(static_cast<std::size_t>(n));
  for (int c = 0; c < m; ++c) {
    fiber[static_cast<std::size_t>(exp.projection(c))].push_back(c);
  }

  // Assignment order: J-maximal classes first (their images constrain the
  // rest fastest), idempotents first inside each class.
  auto green = greens(*s);
  std::vector<int> above(static_cast<std::size_t>(green.j_class_count()), 0);
  for (int c = 0; c < green.j_class_count(); ++c) {
    for (int d = 0; d < green.j_class_count(); ++d) {
      if (green.j_leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]) {
        ++above[static_cast<std::size_t>(c)];
      }
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) order[static_cast<std::size_t>(x)] = x;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int cx = green.j_of[static_cast<std::size_t>(x)];
    int cy = green.j_of[static_cast<std::size_t>(y)];
    if (cx != cy) {
      int ax = above[static_cast<std::size_t>(cx)];
      int ay = above[static_cast<std::size_t>(cy)];
      if (ax != ay) return ax < ay;
      return cx < cy;
    }
    bool ex = s->is_idempotent(x);
    bool ey = s->is_idempotent(y);
    if (ex != ey) return ex;
    return x < y;
  });

  std::vector<int> theta(static_cast<std::size_t>(n), -1);
  std::vector<int> forced(static_cast<std::size_t>(n), -1);
  std::vector<int> assigned;

  // Depth-first search with equation propagation: assigning theta(x) forces
  // theta(p*q) = theta(p)theta(q) for every assigned pair involving x.
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    int x = order[depth];
    std::vector<int> candidates;
    if (forced[static_cast<std::size_t>(x)] != -1) {
      candidates.push_back(forced[static_cast<std::size_t>(x)]);
    } else {
      candidates = fiber[static_cast<std::size_t>(x)];
    }
    for (int cand : candidates) {
      steps.charge(1, "section search");
      theta[static_cast<std::size_t>(x)] = cand;
      assigned.push_back(x);
      std::vector<int> trail;
      bool ok = true;
      for (int y : assigned) {
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          int z = s->at(p, q);
          int val = exp.result->at(theta[static_cast<std::size_t>(p)],
                                   theta[static_cast<std::size_t>(q)]);
          if (theta[static_cast<std::size_t>(z)] != -1) {
            if (theta[static_cast<std::size_t>(z)] != val) {
              ok = false;
            }
          } else if (forced[static_cast<std::size_t>(z)] != -1) {
            if (forced[static_cast<std::size_t>(z)] != val) {
              ok = false;
            }
          } else {
            forced[static_cast<std::size_t>(z)] = val;
            trail.push_back(z);
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (ok && search(depth + 1)) return true;
      for (int z : trail) forced[static_cast<std::size_t>(z)] = -1;
      assigned.pop_back();
      theta[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };

  bool found = search(0);
  report.steps = steps.spent();
  report.is_cover = found;
  if (found) {
    Homomorphism section(s, exp.result, theta);
    // The defining property of the section, rechecked.
    for (int x = 0; x < n; ++x) {
      if (exp.projection(section(x)) != x) {
        throw Error("internal error: section does not split the projection");
      }
    }
    report.section = std::move(section);
  }
  return report;
}

CsRetraction cs_retraction(Homomorphism const& pi, std::vector<int> const& k) {
  auto const& s = *pi.source();
  auto const& t = *pi.target();
  if (!pi.is_onto()) {
    throw Error("retraction requires an onto morphism");
  }
  // Aperiodic fibers over idempotents.
  for (int e : t.idempotents()) {
    for (int x = 0; x < s.order(); ++x) {
      if (pi(x) != e) continue;
      if (s.omega_power(x) != s.omega_power(x, 1)) {
        throw Error("fiber over idempotent " + std::to_string(e) +
                    " is not aperiodic at element " + std::to_string(x));
      }
    }
  }
  std::vector<int> kset = k;
  std::sort(kset.begin(), kset.end());
  kset.erase(std::unique(kset.begin(), kset.end()), kset.end());
  if (kset.empty()) {
    throw Error("K must be nonempty");
  }
  auto green_t = greens(t);
  {
    auto const& jclass =
        green_t.j_classes[static_cast<std::size_t>(
            green_t.j_of[static_cast<std::size_t>(kset[0])])];
    if (jclass != kset) {
      throw Error("K is not a J-class of the target");
    }
  }
  std::vector<bool> in_k(static_cast<std::size_t>(t.order()), false);
  for (int x : kset) in_k[static_cast<std::size_t>(x)] = true;
  for (int x : kset) {
    for (int y : kset) {
      if (!in_k[static_cast<std::size_t>(t.at(x, y))]) {
        throw Error("K is not a subsemigroup");
      }
    }
  }

  // The lift class: a regular J-class of the source mapping onto K whose
  // elements are divisible by everything in the preimage of K.
  auto green_s = greens(s);
  std::vector<int> preimage;
  for (int x = 0; x < s.order(); ++x) {
    if (in_k[static_cast<std::size_t>(pi(x))]) preimage.push_back(x);
  }
  int lift_class = -1;
  for (int c = 0; c < green_s.j_class_count(); ++c) {
    if (!green_s.j_regular[static_cast<std::size_t>(c)]) continue;
    auto const& members = green_s.j_classes[static_cast<std::size_t>(c)];
    std::vector<int> image;
    for (int x : members) image.push_back(pi(x));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != kset) continue;
    bool below_all = true;
    for (int x : preimage) {
      if (!green_s.j_leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(
              green_s.j_of[static_cast<std::size_t>(x)])]) {
        below_all = false;
        break;
      }
    }
    if (below_all) {
      lift_class = c;
      break;
    }
  }
  if (lift_class == -1) {
    throw Error("no suitable lift class found");
  }
  auto const& j = green_s.j_classes[static_cast<std::size_t>(lift_class)];
  std::vector<bool> in_j(static_cast<std::size_t>(s.order()), false);
  for (int x : j) in_j[static_cast<std::size_t>(x)] = true;

  // Base idempotent of K and its R- and L-related idempotents.
  int e = -1;
  for (int x : kset) {
    if (t.is_idempotent(x)) {
      e = x;
      break;
    }
  }
  if (e == -1) {
    throw Error("K contains no idempotent");
  }
  std::vector<int> xs, ys;
  for (int f : t.idempotents()) {
    if (green_t.r_of[static_cast<std::size_t>(f)] ==
        green_t.r_of[static_cast<std::size_t>(e)]) {
      xs.push_back(f);
    }
    if (green_t.l_of[static_cast<std::size_t>(f)] ==
        green_t.l_of[static_cast<std::size_t>(e)]) {
      ys.push_back(f);
    }
  }

  auto pick_gamma = [&](int f, int gamma_e, bool right_of_e) -> int {
    // Look for an idempotent in J over f absorbed by gamma_e on the given
    // side; fall back to the omega power of the twisted product.
    for (int g : j) {
      if (!s.is_idempotent(g) || pi(g) != f) continue;
      if (right_of_e && s.at(gamma_e, g) == g) return g;
      if (!right_of_e && s.at(g, gamma_e) == g) return g;
    }
    for (int h : j) {
      if (!s.is_idempotent(h) || pi(h) != f) continue;
      int prod = right_of_e ? s.at(gamma_e, h) : s.at(h, gamma_e);
      int g = s.omega_power(prod);
      if (in_j[static_cast<std::size_t>(g)] && pi(g) == f &&
          (right_of_e ? s.at(gamma_e, g) == g : s.at(g, gamma_e) == g)) {
        return g;
      }
    }
    throw Error("no compatible idempotent lift for " + std::to_string(f));
  };

  int gamma_e = -1;
  for (int g : j) {
    if (s.is_idempotent(g) && pi(g) == e) {
      gamma_e = g;
      break;
    }
  }
  if (gamma_e == -1) {
    throw Error("no idempotent lift for the base idempotent");
  }
  std::vector<int> gammas{gamma_e};
  for (int f : xs) {
    if (f != e) gammas.push_back(pick_gamma(f, gamma_e, true));
  }
  for (int f : ys) {
    if (f != e) gammas.push_back(pick_gamma(f, gamma_e, false));
  }

  // Subsemigroup generated by the H-classes of the chosen idempotents.
  std::vector<int> seed;
  for (int g : gammas) {
    for (int x : green_s.h_classes[static_cast<std::size_t>(
             green_s.h_of[static_cast<std::size_t>(g)])]) {
      seed.push_back(x);
    }
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  auto sub = generated_closure(s, seed);

  // pi restricted to the result must be a bijection onto K.
  CsRetraction out;
  out.subsemigroup = sub;
  out.lift.assign(kset.size(), -1);
  std::vector<int> hits(static_cast<std::size_t>(t.order()), 0);
  for (int x : sub) {
    ++hits[static_cast<std::size_t>(pi(x))];
  }
  for (std::size_t i = 0; i < kset.size(); ++i) {
    if (hits[static_cast<std::size_t>(kset[i])] != 1) {
      throw Error("lift is not a bijection onto K over element " +
                  std::to_string(kset[i]));
    }
  }
  if (sub.size() != kset.size()) {
    throw Error("lift contains elements outside the preimage of K");
  }
  for (int x : sub) {
    auto it = std::lower_bound(kset.begin(), kset.end(), pi(x));
    out.lift[static_cast<std::size_t>(it - kset.begin())] = x;
  }
  return out;
}

VMorphismReport is_v_morphism(Homomorphism const& pi,
                              std::vector<Identity> const& identities) {
  VMorphismReport report;
  for (int e : pi.target()->idempotents()) {
    std::vector<int> fiber;
    for (int x = 0; x < pi.source()->order(); ++x) {
      if (pi(x) == e) fiber.push_back(x);
    }
    for (std::size_t i = 0; i < identities.size(); ++i) {
      auto check = satisfies_identity_on(*pi.source(), identities[i], fiber);
      if (!check.holds) {
        report.holds = false;
        report.idempotent = e;
        report.identity_index = i;
        report.assignment = std::move(check.assignment);
        return report;
      }
    }
  }
  return report;
}

AbsorptionReport check_absorption(KrTower const& tower, int letter,
                                  int max_len) {
  AbsorptionReport report;
  for (std::size_t lvl = 0; lvl < tower.levels.size(); ++lvl) {
    auto const& level = tower.levels[lvl];
    auto const& sg = *level.semigroup;
    if (letter < 0 || letter >= level.gens.size()) {
      throw Error("absorbing letter out of range");
    }
    AbsorptionLevel entry;
    entry.level = static_cast<int>(lvl);
    entry.order = sg.order();
    int z = sg.omega_power(level.gens.image(letter));
    auto ideal = minimal_ideal(sg);
    entry.in_minimal_ideal = std::binary_search(ideal.begin(), ideal.end(), z);
    // The empty word holds trivially since z is idempotent.
    auto words = words_up_to(level.gens.size(), max_len);
    for (auto const& w : words) {
      int img = eval_word(sg, level.gens, w);
      if (sg.mul(sg.mul(z, img), z) != z) {
        entry.absorbs = false;
        entry.witness = w;
        break;
      }
    }
    report.holds = report.holds && entry.absorbs && entry.in_minimal_ideal;
    report.levels.push_back(std::move(entry));
  }
  return report;
}

std::vector<TowerLscLevel> check_tower_lsc(KrTower const& tower, int max_len) {
  std::vector<TowerLscLevel> out;
  for (std::size_t lvl = 0; lvl < tower.levels.size(); ++lvl) {
    auto const& level = tower.levels[lvl];
    auto const& sg = *level.semigroup;
    int const alphabet = level.gens.size();
    // Items are pairs (word u, letter a); the empty word stands for I.
    std::vector<Word> words{Word{}};
    for (auto& w : words_up_to(alphabet, max_len)) {
      words.push_back(std::move(w));
    }
    std::vector<int> image;
    image.reserve(words.size());
    for (auto const& w : words) {
      image.push_back(eval_word(sg, level.gens, w));
    }
    struct Item {
      int word_index;
      int letter;
      int right;  // [u a]
      int left;   // [a u]
    };
    std::vector<Item> items;
    items.reserve(words.size() * static_cast<std::size_t>(alphabet));
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      for (int a = 0; a < alphabet; ++a) {
        int ia = level.gens.image(a);
        items.push_back({static_cast<int>(wi), a,
                         sg.mul(image[wi], ia), sg.mul(ia, image[wi])});
      }
    }
    TowerLscLevel entry;
    entry.level = static_cast<int>(lvl);
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t jj = i + 1; jj < items.size(); ++jj) {
        auto const& p = items[i];
        auto const& q = items[jj];
        bool same_data =
            p.letter == q.letter &&
            image[static_cast<std::size_t>(p.word_index)] ==
                image[static_cast<std::size_t>(q.word_index)];
        if (same_data) continue;
        if (p.right == q.right) ++entry.right_violations;
        if (p.left == q.left) ++entry.left_violations;
      }
    }
    out.push_back(entry);
  }
  return out;
}

KrCoverReport check_identity_adjunction_preserves_cover(SemigroupPtr s,
                                                        long long budget) {
  auto base = is_kr_cover(s, budget);
  if (!base.is_cover) {
    throw Error("precondition failed: the semigroup is not a cover");
  }
  return is_kr_cover(share(adjoin_identity(*s)), budget);
}

}  // namespace sgrp

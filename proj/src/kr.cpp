#include "sgrp/kr.hpp"

#include <algorithm>
#include <unordered_map>

namespace sgrp {

namespace {

struct SignatureHash {
  std::size_t operator()(KrSignature const& s) const {
    return static_cast<std::size_t>(s.tset.hash() ^
                                    (static_cast<std::uint64_t>(s.image + 1) *
                                     0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace

KrSignature signature(TwoSidedCayleyGraph const& graph, Word const& u) {
  KrSignature sig;
  sig.tset = graph.transition_set(u);
  sig.image = eval_word(*graph.semigroup(), graph.gens(), u);
  return sig;
}

int KrExpansion::eval(Word const& w) const {
  int acc = FiniteSemigroup::kIdentity;
  for (int letter : w) {
    acc = result->mul(acc, letter_classes[static_cast<std::size_t>(letter)]);
  }
  return acc;
}

KrExpansion kr_expand(SemigroupPtr s, GeneratingMap gens, long long budget,
                      long long* spent) {
  Budget steps(budget);
  int const alphabet = static_cast<int>(gens.letters.size());
  // Graph construction cost is |A| * (order+1)^2 edges.
  steps.charge(static_cast<long long>(alphabet) * (s->order() + 1) *
                   (s->order() + 1),
               "Cayley graph construction");
  KrExpansion exp;
  exp.base = s;
  exp.base_gens = gens;
  exp.graph = std::make_shared<TwoSidedCayleyGraph const>(
      TwoSidedCayleyGraph::build(s, gens));
  auto const& graph = *exp.graph;

  // Breadth-first closure of the letter classes under right concatenation.
  // Since the word relation is a congruence, the class of wa depends only on
  // the class of w, so one transition table delta suffices.
  std::unordered_map<KrSignature, int, SignatureHash> classes;
  std::vector<Word> reps;
  std::vector<KrSignature> sigs;
  std::vector<std::vector<int>> delta;   // class x letter -> class
  std::vector<std::pair<int, int>> parent;  // discovery: (parent class, letter)
  std::vector<int> letter_classes(static_cast<std::size_t>(alphabet), -1);

  auto discover = [&](Word const& w, KrSignature sig) {
    int id = static_cast<int>(reps.size());
    classes.emplace(sig, id);
    reps.push_back(w);
    sigs.push_back(std::move(sig));
    delta.emplace_back(static_cast<std::size_t>(alphabet), -1);
    return id;
  };

  for (int a = 0; a < alphabet; ++a) {
    steps.charge(1, "signature evaluation");
    Word w{a};
    auto sig = signature(graph, w);
    auto it = classes.find(sig);
    int id;
    if (it == classes.end()) {
      id = discover(w, std::move(sig));
      parent.emplace_back(-1, a);
    } else {
      id = it->second;
    }
    letter_classes[static_cast<std::size_t>(a)] = id;
  }
  for (int c = 0; c < static_cast<int>(reps.size()); ++c) {
    for (int a = 0; a < alphabet; ++a) {
      steps.charge(static_cast<long long>(reps[static_cast<std::size_t>(c)]
                                              .size()) +
                       1,
                   "signature evaluation");
      Word w = reps[static_cast<std::size_t>(c)];
      w.push_back(a);
      auto sig = signature(graph, w);
      auto it = classes.find(sig);
      int id;
      if (it == classes.end()) {
        id = discover(w, std::move(sig));
        parent.emplace_back(c, a);
      } else {
        id = it->second;
      }
      delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] = id;
    }
  }

  int const m = static_cast<int>(reps.size());
  steps.charge(static_cast<long long>(m) * m, "multiplication table");
  // table[c][d] = class of rep(c) rep(d), filled along the discovery tree:
  // rep(d) = rep(parent(d)) letter(d), so row entries extend by one delta.
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      auto [p, a] = parent[static_cast<std::size_t>(d)];
      int base = p == -1 ? c : table[static_cast<std::size_t>(c) * m + p];
      table[static_cast<std::size_t>(c) * m + d] =
          delta[static_cast<std::size_t>(base)][static_cast<std::size_t>(a)];
    }
  }

  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    names[static_cast<std::size_t>(c)] =
        "[" + word_to_string(gens, reps[static_cast<std::size_t>(c)]) + "]";
  }
  std::vector<int> gen_classes = letter_classes;
  std::sort(gen_classes.begin(), gen_classes.end());
  gen_classes.erase(std::unique(gen_classes.begin(), gen_classes.end()),
                    gen_classes.end());
  exp.result = share(FiniteSemigroup::from_table_with_generators(
      m, std::move(table), std::move(names), gen_classes));
  exp.letter_classes = std::move(letter_classes);
  exp.representatives = std::move(reps);
  exp.result_gens.letters = gens.letters;
  exp.result_gens.images = exp.letter_classes;

  std::vector<int> proj(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    proj[static_cast<std::size_t>(c)] = sigs[static_cast<std::size_t>(c)].image;
  }
  exp.projection = Homomorphism(exp.result, exp.base, std::move(proj));
  if (!exp.projection.is_onto()) {
    throw Error("internal error: expansion projection is not onto");
  }
  if (spent != nullptr) {
    *spent = steps.spent();
  }
  return exp;
}

std::vector<std::vector<Word>> oracle_classes(SemigroupPtr s,
                                              GeneratingMap const& gens,
                                              int max_len) {
  auto graph = TwoSidedCayleyGraph::build(s, gens);
  auto words = words_up_to(gens.size(), max_len);
  std::unordered_map<KrSignature, std::size_t, SignatureHash> seen;
  std::vector<std::vector<Word>> groups;
  for (auto& w : words) {
    auto sig = signature(graph, w);
    auto it = seen.find(sig);
    if (it == seen.end()) {
      seen.emplace(std::move(sig), groups.size());
      groups.push_back({std::move(w)});
    } else {
      groups[it->second].push_back(std::move(w));
    }
  }
  // words_up_to enumerates in military order, so groups are already ordered
  // by first member and group members are sorted.
  return groups;
}

Homomorphism induced_hom(KrExpansion const& source, KrExpansion const& target,
                         Homomorphism const& lambda,
                         std::vector<Word> const& alpha) {
  if (!(*lambda.source() == *source.base) ||
      !(*lambda.target() == *target.base)) {
    throw Error("lambda endpoints do not match the expansions");
  }
  if (alpha.size() != source.base_gens.letters.size()) {
    throw Error("alpha must map every source letter");
  }
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    if (alpha[a].empty()) {
      throw Error("alpha images must be nonempty words");
    }
    int lhs = lambda(source.base_gens.images[a]);
    int rhs = eval_word(*target.base, target.base_gens, alpha[a]);
    if (lhs != rhs) {
      throw Error("hypothesis fails: lambda(phi(" +
                  source.base_gens.letters[a] + ")) != psi(alpha(" +
                  source.base_gens.letters[a] + "))");
    }
  }
  // Image of a source class: apply alpha to its representative letter by
  // letter and evaluate in the target expansion.
  std::vector<int> map;
  map.reserve(source.representatives.size());
  for (auto const& rep : source.representatives) {
    Word image_word;
    for (int letter : rep) {
      auto const& block = alpha[static_cast<std::size_t>(letter)];
      image_word.insert(image_word.end(), block.begin(), block.end());
    }
    map.push_back(target.eval(image_word));
  }
  Homomorphism out(source.result, target.result, std::move(map));
  // Both commuting squares, checked pointwise.
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    if (out(source.letter_classes[a]) != target.eval(alpha[a])) {
      throw Error("internal error: letter square does not commute");
    }
  }
  for (int c = 0; c < source.result->order(); ++c) {
    if (target.projection(out(c)) != lambda(source.projection(c))) {
      throw Error("internal error: projection square does not commute");
    }
  }
  return out;
}

Homomorphism KrTower::connecting_map(int m, int n) const {
  if (m < n || n < 0 || m > computed_levels()) {
    throw Error("invalid tower level pair");
  }
  if (m == n) {
    std::vector<int> id(static_cast<std::size_t>(
        levels[static_cast<std::size_t>(m)].semigroup->order()));
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    return Homomorphism(levels[static_cast<std::size_t>(m)].semigroup,
                        levels[static_cast<std::size_t>(m)].semigroup, id);
  }
  Homomorphism acc = connecting[static_cast<std::size_t>(n)];
  for (int i = n + 1; i < m; ++i) {
    acc = Homomorphism::compose(acc, connecting[static_cast<std::size_t>(i)]);
  }
  return acc;
}

KrTower kr_tower(SemigroupPtr s, GeneratingMap gens, int levels,
                 long long budget) {
  if (levels < 0) {
    throw Error("tower level count must be >= 0");
  }
  KrTower tower;
  tower.requested_levels = levels;
  tower.levels.push_back({std::move(s), std::move(gens)});
  long long remaining = budget;
  for (int i = 0; i < levels; ++i) {
    auto const& top = tower.levels.back();
    try {
      long long used = 0;
      auto exp = kr_expand(top.semigroup, top.gens, remaining, &used);
      remaining -= used;
      tower.connecting.push_back(exp.projection);
      tower.levels.push_back({exp.result, exp.result_gens});
    } catch (BudgetError const&) {
      tower.budget_exhausted = true;
      break;
    }
  }
  return tower;
}

}  // namespace sgrp

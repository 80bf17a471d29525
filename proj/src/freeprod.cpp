#include "sgrp/freeprod.hpp"

#include <algorithm>
#include <map>

namespace sgrp {

namespace {

constexpr long long kOrderGuard = 100000;

void validate_form(std::vector<SemigroupPtr> const& factors,
                   AlternatingForm const& form) {
  if (form.blocks.empty()) {
    throw Error("alternating form must be nonempty");
  }
  for (std::size_t i = 0; i < form.blocks.size(); ++i) {
    auto [f, x] = form.blocks[i];
    if (f < 0 || f >= static_cast<int>(factors.size())) {
      throw Error("factor index out of range: " + std::to_string(f));
    }
    if (x < 0 || x >= factors[static_cast<std::size_t>(f)]->order()) {
      throw Error("element out of range in factor " + std::to_string(f));
    }
    if (i > 0 && form.blocks[i - 1].first == f) {
      throw Error("adjacent blocks share a factor");
    }
  }
}

}  // namespace

bool AlternatingForm::operator<(AlternatingForm const& o) const {
  if (blocks.size() != o.blocks.size()) {
    return blocks.size() < o.blocks.size();
  }
  return blocks < o.blocks;
}

AlternatingForm normal_form(std::vector<SemigroupPtr> const& factors,
                            std::vector<std::pair<int, int>> const& blocks) {
  if (blocks.empty()) {
    throw Error("alternating form must be nonempty");
  }
  AlternatingForm out;
  for (auto [f, x] : blocks) {
    if (f < 0 || f >= static_cast<int>(factors.size())) {
      throw Error("factor index out of range: " + std::to_string(f));
    }
    if (x < 0 || x >= factors[static_cast<std::size_t>(f)]->order()) {
      throw Error("element out of range in factor " + std::to_string(f));
    }
    if (!out.blocks.empty() && out.blocks.back().first == f) {
      out.blocks.back().second =
          factors[static_cast<std::size_t>(f)]->at(out.blocks.back().second, x);
    } else {
      out.blocks.emplace_back(f, x);
    }
  }
  return out;
}

TruncatedFreeProduct truncated_free_product(std::vector<SemigroupPtr> factors,
                                            int cap) {
  if (factors.empty()) {
    throw Error("free product needs at least one factor");
  }
  if (cap < 1) {
    throw Error("block length cap must be >= 1");
  }
  // Count alternating forms by dynamic programming over the last factor.
  std::vector<long long> ending(factors.size());
  long long total = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    ending[f] = factors[f]->order();
    total += ending[f];
  }
  for (int len = 2; len <= cap; ++len) {
    std::vector<long long> next(factors.size(), 0);
    long long sum_all = 0;
    for (long long c : ending) sum_all += c;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      next[f] = (sum_all - ending[f]) * factors[f]->order();
      total += next[f];
      if (total > kOrderGuard) {
        throw Error("truncated product would exceed " +
                    std::to_string(kOrderGuard) + " elements");
      }
    }
    ending = std::move(next);
  }
  if (total + 1 > kOrderGuard) {
    throw Error("truncated product would exceed " +
                std::to_string(kOrderGuard) + " elements");
  }

  TruncatedFreeProduct prod;
  prod.factors = std::move(factors);
  prod.cap = cap;

  // Enumerate forms in military order: length, then blocks lexicographically.
  std::vector<AlternatingForm> forms;
  std::vector<std::size_t> layer_begin{0};
  for (std::size_t f = 0; f < prod.factors.size(); ++f) {
    for (int x = 0; x < prod.factors[f]->order(); ++x) {
      forms.push_back({{{static_cast<int>(f), x}}});
    }
  }
  for (int len = 2; len <= cap; ++len) {
    std::size_t begin = layer_begin.back();
    std::size_t end = forms.size();
    layer_begin.push_back(end);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t f = 0; f < prod.factors.size(); ++f) {
        if (forms[i].blocks.back().first == static_cast<int>(f)) continue;
        for (int x = 0; x < prod.factors[f]->order(); ++x) {
          AlternatingForm extended = forms[i];
          extended.blocks.emplace_back(static_cast<int>(f), x);
          forms.push_back(std::move(extended));
        }
      }
    }
  }
  // Extending lexicographically sorted layers by ascending (factor, element)
  // keeps every layer lexicographically sorted, so the enumeration is in
  // military order as a whole.

  int const order = static_cast<int>(forms.size()) + 1;
  prod.zero = order - 1;
  std::map<AlternatingForm, int> index;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    index.emplace(forms[i], static_cast<int>(i));
  }

  std::vector<int> table(static_cast<std::size_t>(order) * order,
                         prod.zero);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      std::vector<std::pair<int, int>> concat = forms[i].blocks;
      concat.insert(concat.end(), forms[j].blocks.begin(),
                    forms[j].blocks.end());
      auto merged = normal_form(prod.factors, concat);
      int value = prod.zero;
      if (static_cast<int>(merged.blocks.size()) <= cap) {
        value = index.at(merged);
      }
      table[i * static_cast<std::size_t>(order) + j] = value;
    }
  }

  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    names[i] = form_to_string(prod.factors, forms[i]);
  }
  names[static_cast<std::size_t>(prod.zero)] = "0";

  // Single-block forms plus the zero generate everything.
  std::vector<int> gens;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].blocks.size() == 1) gens.push_back(static_cast<int>(i));
  }
  gens.push_back(prod.zero);
  prod.result = share(FiniteSemigroup::from_table_with_generators(
      order, std::move(table), std::move(names), gens));
  prod.forms = std::move(forms);

  for (std::size_t f = 0; f < prod.factors.size(); ++f) {
    std::vector<int> map;
    for (int x = 0; x < prod.factors[f]->order(); ++x) {
      map.push_back(index.at({{{static_cast<int>(f), x}}}));
    }
    prod.embeddings.emplace_back(prod.factors[f], prod.result, std::move(map));
    if (!prod.embeddings.back().is_injective()) {
      throw Error("internal error: embedding is not injective");
    }
  }
  return prod;
}

int TruncatedFreeProduct::index_of(AlternatingForm const& form) const {
  validate_form(factors, form);
  if (static_cast<int>(form.blocks.size()) > cap) {
    throw Error("form exceeds the block length cap");
  }
  auto it = std::find(forms.begin(), forms.end(), form);
  if (it == forms.end()) {
    throw Error("internal error: form not enumerated");
  }
  return static_cast<int>(it - forms.begin());
}

SeparationResult separate(std::vector<SemigroupPtr> const& factors,
                          AlternatingForm const& u, AlternatingForm const& v) {
  validate_form(factors, u);
  validate_form(factors, v);
  SeparationResult out;
  if (u == v) {
    out.equal = true;
    return out;
  }
  out.cap = static_cast<int>(std::max(u.blocks.size(), v.blocks.size())) + 1;
  out.product = truncated_free_product(factors, out.cap);
  out.image_u = out.product->index_of(u);
  out.image_v = out.product->index_of(v);
  if (out.image_u == out.image_v) {
    throw Error("internal error: distinct forms collapsed");
  }
  return out;
}

std::string form_to_string(std::vector<SemigroupPtr> const& factors,
                           AlternatingForm const& form) {
  std::string out;
  for (auto [f, x] : form.blocks) {
    out += "(" + std::to_string(f) + ":" +
           factors[static_cast<std::size_t>(f)]->name(x) + ")";
  }
  return out;
}

}  // namespace sgrp

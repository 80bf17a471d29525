#include "sgrp/homomorphism.hpp"

#include <algorithm>

namespace sgrp {

Homomorphism::Homomorphism(SemigroupPtr source, SemigroupPtr target,
                           std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) {
    throw Error("homomorphism endpoints must be non-null");
  }
  if (static_cast<int>(map_.size()) != source_->order()) {
    throw Error("homomorphism map size does not match source order");
  }
  for (int v : map_) {
    if (v < 0 || v >= target_->order()) {
      throw Error("homomorphism value out of range: " + std::to_string(v));
    }
  }
  int n = source_->order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int lhs = map_[static_cast<std::size_t>(source_->at(x, y))];
      int rhs = target_->at(map_[static_cast<std::size_t>(x)],
                            map_[static_cast<std::size_t>(y)]);
      if (lhs != rhs) {
        throw Error("map is not multiplicative at x=" + std::to_string(x) +
                    ", y=" + std::to_string(y) + ": map(x*y)=" +
                    std::to_string(lhs) + " but map(x)*map(y)=" +
                    std::to_string(rhs));
      }
    }
  }
}

bool Homomorphism::is_onto() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_->order()), false);
  for (int v : map_) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool Homomorphism::is_injective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_->order()), false);
  for (int v : map_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Homomorphism Homomorphism::compose(Homomorphism const& h, Homomorphism const& g) {
  if (!(*g.target() == *h.source())) {
    throw Error("composition endpoints do not match");
  }
  std::vector<int> m;
  m.reserve(g.map().size());
  for (int v : g.map()) {
    m.push_back(h.map()[static_cast<std::size_t>(v)]);
  }
  return Homomorphism(g.source(), h.target(), std::move(m));
}

}  // namespace sgrp

#include "sgrp/identities.hpp"

#include <algorithm>
#include <cctype>

namespace sgrp {

namespace {

struct Parser {
  std::string const& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  long long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw Error("identity parse error: expected integer at position " +
                  std::to_string(pos));
    }
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  OmegaWord parse_word() {
    OmegaWord w;
    while (true) {
      char c = peek();
      if (!std::isalpha(static_cast<unsigned char>(c)) || c == 'w') {
        // 'w' is reserved for omega exponents and cannot be a variable.
        if (c == 'w') {
          throw Error("identity parse error: 'w' is reserved for omega");
        }
        break;
      }
      ++pos;
      OmegaFactor f;
      f.var = c;
      if (peek() == '^') {
        ++pos;
        if (peek() == 'w') {
          ++pos;
          f.has_omega = true;
          skip_ws();
          if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            f.shift = parse_int();
          }
        } else {
          f.power = parse_int();
          if (f.power < 1) {
            throw Error("identity parse error: plain powers must be >= 1");
          }
        }
      }
      w.factors.push_back(f);
    }
    if (w.factors.empty()) {
      throw Error("identity parse error: empty term at position " +
                  std::to_string(pos));
    }
    return w;
  }
};

}  // namespace

std::string OmegaWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += ' ';
    auto const& f = factors[i];
    out += f.var;
    if (f.has_omega) {
      out += "^w";
      if (f.shift > 0) out += "+" + std::to_string(f.shift);
      if (f.shift < 0) out += std::to_string(f.shift);
    } else if (f.power != 1) {
      out += "^" + std::to_string(f.power);
    }
  }
  return out;
}

Identity Identity::parse(std::string const& text) {
  Parser p{text};
  Identity id;
  id.lhs = p.parse_word();
  if (p.peek() != '=') {
    throw Error("identity parse error: expected '=' at position " +
                std::to_string(p.pos));
  }
  ++p.pos;
  id.rhs = p.parse_word();
  if (!p.at_end()) {
    throw Error("identity parse error: trailing input at position " +
                std::to_string(p.pos));
  }
  for (auto const* side : {&id.lhs, &id.rhs}) {
    for (auto const& f : side->factors) {
      if (std::find(id.variables.begin(), id.variables.end(), f.var) ==
          id.variables.end()) {
        id.variables.push_back(f.var);
      }
    }
  }
  return id;
}

std::string Identity::str() const { return lhs.str() + " = " + rhs.str(); }

int eval_omega_word(FiniteSemigroup const& s, OmegaWord const& w,
                    std::vector<char> const& variables,
                    std::vector<int> const& values) {
  int acc = FiniteSemigroup::kIdentity;
  for (auto const& f : w.factors) {
    auto it = std::find(variables.begin(), variables.end(), f.var);
    if (it == variables.end()) {
      throw Error(std::string("unbound identity variable: ") + f.var);
    }
    int v = values[static_cast<std::size_t>(it - variables.begin())];
    int factor;
    if (f.has_omega) {
      factor = s.omega_power(v, f.shift);
    } else if (v == FiniteSemigroup::kIdentity) {
      factor = v;
    } else {
      factor = s.power(v, f.power);
    }
    acc = s.mul(acc, factor);
  }
  return acc;
}

IdentityCheck satisfies_identity_on(FiniteSemigroup const& s,
                                    Identity const& id,
                                    std::vector<int> const& domain) {
  std::size_t const k = id.variables.size();
  IdentityCheck out;
  if (domain.empty()) return out;
  std::vector<std::size_t> idx(k, 0);
  std::vector<int> values(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) values[i] = domain[idx[i]];
    if (eval_omega_word(s, id.lhs, id.variables, values) !=
        eval_omega_word(s, id.rhs, id.variables, values)) {
      out.holds = false;
      for (std::size_t i = 0; i < k; ++i) {
        out.assignment.emplace_back(id.variables[i], values[i]);
      }
      return out;
    }
    // Advance the odometer, last variable fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < domain.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

IdentityCheck satisfies_identity(FiniteSemigroup const& s, Identity const& id) {
  std::vector<int> domain(static_cast<std::size_t>(s.order()));
  for (int i = 0; i < s.order(); ++i) domain[static_cast<std::size_t>(i)] = i;
  return satisfies_identity_on(s, id, domain);
}

}  // namespace sgrp

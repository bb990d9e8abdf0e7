#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairspec/error.hpp"

namespace pairspec {

/// Subset of a hyperstructure carrier (at most 64 elements) as a bitmask.
using Subset = std::uint64_t;

inline Subset singleton(Elem x) { return Subset{1} << x; }

inline std::vector<Elem> subset_members(Subset s) {
  std::vector<Elem> out;
  while (s != 0) {
    out.push_back(static_cast<Elem>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

inline Subset to_subset(const std::vector<Elem>& members) {
  Subset s = 0;
  for (Elem m : members) s |= singleton(m);
  return s;
}

struct RawHyper {
  std::vector<std::string> names;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::vector<Elem>> mul;
  std::vector<std::vector<std::vector<Elem>>> hyperadd;
  std::optional<std::vector<Elem>> hypernegation;
};

/// A finite hypersemiring: a multiplicative monoid with absorbing zero and a
/// commutative, set-associative hyperaddition with 0 + a = {a}.
class HyperStructure {
 public:
  static constexpr std::size_t max_size = 64;

  std::size_t size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem x) const { return names_[x]; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Subset sum(Elem a, Elem b) const { return add_[a * n_ + b]; }
  const std::optional<std::vector<Elem>>& hypernegation() const { return neg_; }
  bool is_hyperfield() const { return hyperfield_; }
  Subset all() const { return n_ == 64 ? ~Subset{0} : (Subset{1} << n_) - 1; }

  /// Set-extended hyperaddition.
  Subset sum(Subset s1, Subset s2) const {
    Subset out = 0;
    for (Elem a : subset_members(s1)) {
      for (Elem b : subset_members(s2)) out |= sum(a, b);
    }
    return out;
  }

  /// Elementwise product of subsets.
  Subset product(Subset s1, Subset s2) const {
    Subset out = 0;
    for (Elem a : subset_members(s1)) {
      for (Elem b : subset_members(s2)) out |= singleton(mul(a, b));
    }
    return out;
  }

  std::string subset_label(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (Elem m : subset_members(s)) {
      if (!first) out += ",";
      out += names_[m];
      first = false;
    }
    return out + "}";
  }

  /// e = 1 + (-1), when a hypernegation is available.
  std::optional<Subset> e() const {
    if (!neg_) return std::nullopt;
    return sum(one_, (*neg_)[one_]);
  }

  RawHyper raw() const {
    RawHyper r;
    r.names = names_;
    r.zero = zero_;
    r.one = one_;
    r.mul.assign(n_, std::vector<Elem>(n_));
    r.hyperadd.assign(n_, std::vector<std::vector<Elem>>(n_));
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        r.mul[a][b] = mul(a, b);
        r.hyperadd[a][b] = subset_members(sum(a, b));
      }
    }
    r.hypernegation = neg_;
    return r;
  }

  friend HyperStructure validate_hyperstructure(const RawHyper& raw);

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> mul_;
  std::vector<Subset> add_;
  std::optional<std::vector<Elem>> neg_;
  bool hyperfield_ = false;
};

/// Elements x with 0 in a + x, for each a.
inline std::vector<std::vector<Elem>> hypernegatives(const HyperStructure& h) {
  std::vector<std::vector<Elem>> out(h.size());
  for (Elem a = 0; a < h.size(); ++a) {
    for (Elem x = 0; x < h.size(); ++x) {
      if (h.sum(a, x) & singleton(h.zero())) out[a].push_back(x);
    }
  }
  return out;
}

/// The hypernegation map if every element has exactly one hypernegative.
inline std::optional<std::vector<Elem>> unique_hypernegation(const HyperStructure& h) {
  std::vector<Elem> perm;
  for (const auto& cands : hypernegatives(h)) {
    if (cands.size() != 1) return std::nullopt;
    perm.push_back(cands.front());
  }
  return perm;
}

inline HyperStructure validate_hyperstructure(const RawHyper& raw) {
  const std::size_t n = raw.names.size();
  if (n == 0) throw Error(ErrorCode::BadTable, "empty carrier");
  if (n > HyperStructure::max_size) {
    throw Error(ErrorCode::CarrierTooLarge, "hyperstructures are limited to 64 elements");
  }
  if (raw.zero >= n || raw.one >= n) throw Error(ErrorCode::BadTable, "zero/one out of range");
  if (raw.mul.size() != n || raw.hyperadd.size() != n) {
    throw Error(ErrorCode::BadTable, "table size does not match element count");
  }
  HyperStructure h;
  h.n_ = n;
  h.names_ = raw.names;
  h.zero_ = raw.zero;
  h.one_ = raw.one;
  for (Elem a = 0; a < n; ++a) {
    if (raw.mul[a].size() != n || raw.hyperadd[a].size() != n) {
      throw Error(ErrorCode::BadTable, "table row has wrong length", {a});
    }
    for (Elem b = 0; b < n; ++b) {
      if (raw.mul[a][b] >= n) throw Error(ErrorCode::BadTable, "mul entry out of range", {a, b});
      h.mul_.push_back(raw.mul[a][b]);
      Subset s = 0;
      for (Elem m : raw.hyperadd[a][b]) {
        if (m >= n) throw Error(ErrorCode::BadTable, "hyperadd entry out of range", {a, b});
        s |= singleton(m);
      }
      if (s == 0) throw Error(ErrorCode::HyperAddEmpty, h.name(a) + " + " + h.name(b), {a, b});
      h.add_.push_back(s);
    }
  }

  const auto N = static_cast<Elem>(n);
  for (Elem a = 0; a < N; ++a) {
    if (h.sum(h.zero_, a) != singleton(a)) {
      throw Error(ErrorCode::ZeroLaw, "0 + " + h.name(a) + " != {" + h.name(a) + "}", {a});
    }
    for (Elem b = 0; b < N; ++b) {
      if (h.sum(a, b) != h.sum(b, a)) {
        throw Error(ErrorCode::HyperAddNotCommutative, h.name(a) + " + " + h.name(b), {a, b});
      }
    }
  }
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b) {
      for (Elem c = 0; c < N; ++c) {
        if (h.sum(h.sum(a, b), singleton(c)) != h.sum(singleton(a), h.sum(b, c))) {
          throw Error(ErrorCode::HyperAddNotAssociative,
                      "(" + h.name(a) + " + " + h.name(b) + ") + " + h.name(c), {a, b, c});
        }
      }
    }
  }
  for (Elem a = 0; a < N; ++a) {
    if (h.mul(h.one_, a) != a || h.mul(a, h.one_) != a) {
      throw Error(ErrorCode::MulNotMonoid, "1 is not a unit at " + h.name(a), {a});
    }
    if (h.mul(h.zero_, a) != h.zero_ || h.mul(a, h.zero_) != h.zero_) {
      throw Error(ErrorCode::MulNotMonoid, "0 is not absorbing at " + h.name(a), {a});
    }
    for (Elem b = 0; b < N; ++b) {
      for (Elem c = 0; c < N; ++c) {
        if (h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c))) {
          throw Error(ErrorCode::MulNotMonoid, "multiplication not associative", {a, b, c});
        }
        if (h.product(singleton(a), h.sum(b, c)) != h.sum(singleton(h.mul(a, b)),
                                                           singleton(h.mul(a, c)))) {
          throw Error(ErrorCode::HyperActionNotDistributive,
                      h.name(a) + "(" + h.name(b) + " + " + h.name(c) + ")", {a, b, c});
        }
      }
    }
  }

  if (raw.hypernegation) {
    const auto& neg = *raw.hypernegation;
    if (neg.size() != n) throw Error(ErrorCode::BadTable, "hypernegation has wrong length");
    const auto cands = hypernegatives(h);
    for (Elem a = 0; a < N; ++a) {
      if (neg[a] >= n) throw Error(ErrorCode::BadTable, "hypernegation out of range", {a});
      if (!(h.sum(a, neg[a]) & singleton(h.zero_))) {
        throw Error(ErrorCode::NegationNotUnique,
                    "0 not in " + h.name(a) + " + " + h.name(neg[a]), {a, neg[a]});
      }
      if (cands[a].size() != 1) {
        throw Error(ErrorCode::NegationNotUnique,
                    h.name(a) + " has " + std::to_string(cands[a].size()) + " hypernegatives",
                    cands[a]);
      }
      if (neg[neg[a]] != a) {
        throw Error(ErrorCode::NegationNotUnique, "-(-" + h.name(a) + ") != " + h.name(a), {a});
      }
    }
    h.neg_ = neg;
  } else {
    h.neg_ = unique_hypernegation(h);
  }

  bool group = h.neg_.has_value() && n > 1;
  for (Elem a = 0; a < N && group; ++a) {
    if (a == h.zero_) continue;
    bool has_inverse = false;
    for (Elem b = 0; b < N; ++b) {
      if (b == h.zero_) continue;
      if (h.mul(a, b) == h.zero_) group = false;
      if (h.mul(a, b) == h.one_) has_inverse = true;
    }
    group = group && has_inverse;
  }
  h.hyperfield_ = group;
  return h;
}

}  // namespace pairspec

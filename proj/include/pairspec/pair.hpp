#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairspec/structure.hpp"

namespace pairspec {

/// The 1-dagger data of a pair with Property N. `one_dagger` is the designated
/// candidate; every valid candidate is kept in `all_daggers`.
struct PropertyNWitness {
  Elem one_dagger = 0;
  Elem e = 0;
  std::vector<Elem> all_daggers;
};

/// An involutive permutation of the carrier, already checked against the
/// negation-map axioms (see negation.hpp).
struct NegationMap {
  std::vector<Elem> perm;
  Elem operator()(Elem b) const { return perm[b]; }
};

/// Provenance of a pair built as (a sub-pair of) the power set of a finite
/// hyperstructure: the subset each element stands for, plus the landmarks of
/// the base hyperstructure.
struct SubsetOrigin {
  std::size_t base_size = 0;
  Elem base_zero = 0;
  Elem base_one = 0;
  std::optional<Elem> base_neg_one;
  bool base_nonzero_group = false;
  std::vector<std::vector<Elem>> subsets;
};

class Pair {
 public:
  const FiniteStructure& structure() const { return structure_; }
  const ElementSet& tangible() const { return tangible_; }
  const ElementSet& a_zero() const { return a_zero_; }
  const std::optional<PropertyNWitness>& property_n() const { return property_n_; }
  const std::optional<NegationMap>& negation() const { return negation_; }
  const std::optional<SubsetOrigin>& origin() const { return origin_; }
  const std::string& name() const { return name_; }

  /// Whether the T-action distributes over addition. The finite supertropical
  /// and truncated examples violate it, so it is recorded rather than required.
  bool t_distributive() const { return t_distributive_; }

  std::size_t size() const { return structure_.size(); }
  Elem zero() const { return structure_.zero(); }
  Elem one() const { return structure_.one(); }
  Elem add(Elem a, Elem b) const { return structure_.add(a, b); }
  Elem mul(Elem a, Elem b) const { return structure_.mul(a, b); }
  const std::string& label(Elem x) const { return structure_.name(x); }

  bool is_tangible(Elem x) const { return tangible_.contains(x); }
  bool in_a0(Elem x) const { return a_zero_.contains(x); }

  const PropertyNWitness& witness() const {
    if (!property_n_) throw Error(ErrorCode::NoPropertyN, "pair '" + name_ + "' lacks Property N");
    return *property_n_;
  }
  Elem e() const { return witness().e; }
  /// b-dagger = 1-dagger * b
  Elem dagger(Elem b) const { return mul(witness().one_dagger, b); }
  /// b-circ = b + b-dagger
  Elem circ(Elem b) const { return add(b, dagger(b)); }

  Pair with_name(std::string name) const {
    Pair p = *this;
    p.name_ = std::move(name);
    return p;
  }
  Pair with_origin(SubsetOrigin origin) const {
    Pair p = *this;
    p.origin_ = std::move(origin);
    return p;
  }

  friend Pair validate_pair(FiniteStructure, const ElementSet&, const ElementSet&, std::string);
  friend Pair attach_negation(const Pair&, NegationMap);
  friend Pair make_unchecked_pair(FiniteStructure, ElementSet, ElementSet, std::string);

 private:
  FiniteStructure structure_;
  ElementSet tangible_;
  ElementSet a_zero_;
  std::optional<PropertyNWitness> property_n_;
  std::optional<NegationMap> negation_;
  std::optional<SubsetOrigin> origin_;
  std::string name_;
  bool t_distributive_ = false;
};

/// Scans every tangible a as a 1-dagger candidate:
///   (i)   e = 1 + a lies in A0,
///   (ii)  1 + a' in A0 forces 1 + a' = e, for tangible a',
///   (iii) b + a*b lies in A0 for every b.
/// When the pair carries a negation map and (-)1 is a candidate, it is the
/// designated 1-dagger; otherwise the smallest index is.
inline std::optional<PropertyNWitness> find_property_n(const Pair& pair) {
  const Elem one = pair.one();
  const auto n = static_cast<Elem>(pair.size());
  std::optional<Elem> unique_e;
  std::vector<Elem> candidates;
  for (Elem d : pair.tangible()) {
    const Elem e = pair.add(one, d);
    if (!pair.in_a0(e)) continue;
    bool ok = true;
    for (Elem a : pair.tangible()) {
      const Elem s = pair.add(one, a);
      if (pair.in_a0(s) && s != e) {
        ok = false;
        break;
      }
    }
    for (Elem b = 0; b < n && ok; ++b) {
      if (!pair.in_a0(pair.add(b, pair.mul(d, b)))) ok = false;
    }
    if (!ok) continue;
    if (unique_e && *unique_e != e) {
      throw Error(ErrorCode::NonUniqueE, "1-dagger candidates give different e", {*unique_e, e});
    }
    unique_e = e;
    candidates.push_back(d);
  }
  if (candidates.empty()) return std::nullopt;
  PropertyNWitness w;
  w.all_daggers = candidates;
  w.e = *unique_e;
  w.one_dagger = candidates.front();
  if (pair.negation()) {
    const Elem neg_one = (*pair.negation())(one);
    if (std::find(candidates.begin(), candidates.end(), neg_one) != candidates.end()) {
      w.one_dagger = neg_one;
    }
  }
  return w;
}

/// Checks that T is a multiplicatively closed central submonoid containing 1
/// (1 the multiplicative unit) and that A0 is a T-submodule containing 0.
inline Pair validate_pair(FiniteStructure s, const ElementSet& tangible, const ElementSet& a_zero,
                          std::string name = {}) {
  const auto n = static_cast<Elem>(s.size());
  if (tangible.universe() != n || a_zero.universe() != n) {
    throw Error(ErrorCode::BadTable, "tangible/A0 sets sized for a different carrier");
  }
  const Elem zero = s.zero();
  const Elem one = s.one();
  if (!tangible.contains(one)) throw Error(ErrorCode::TNotClosed, "1 is not tangible", {one});
  if (!a_zero.contains(zero)) throw Error(ErrorCode::A0NotSubmodule, "0 is not in A0", {zero});
  for (Elem b = 0; b < n; ++b) {
    if (s.mul(one, b) != b || s.mul(b, one) != b) {
      throw Error(ErrorCode::OneNotUnit, "1 * " + s.name(b), {one, b});
    }
  }
  for (Elem a : tangible) {
    for (Elem a2 : tangible) {
      const Elem p = s.mul(a, a2);
      if (!tangible.contains(p) && p != zero) {
        throw Error(ErrorCode::TNotClosed, s.name(a) + " * " + s.name(a2) + " not tangible",
                    {a, a2});
      }
    }
  }
  bool t_dist = true;
  for (Elem a : tangible) {
    for (Elem b = 0; b < n; ++b) {
      if (s.mul(a, b) != s.mul(b, a)) {
        throw Error(ErrorCode::TNotCentral, s.name(a) + " does not commute with " + s.name(b),
                    {a, b});
      }
      for (Elem c = 0; c < n; ++c) {
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)) ||
            s.mul(s.mul(b, a), c) != s.mul(b, s.mul(a, c)) ||
            s.mul(s.mul(b, c), a) != s.mul(b, s.mul(c, a))) {
          throw Error(ErrorCode::TNotCentral,
                      s.name(a) + " does not associate with " + s.name(b) + ", " + s.name(c),
                      {a, b, c});
        }
        if (t_dist && s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) t_dist = false;
      }
    }
  }
  for (Elem x : a_zero) {
    for (Elem y : a_zero) {
      if (!a_zero.contains(s.add(x, y))) {
        throw Error(ErrorCode::A0NotSubmodule, s.name(x) + " + " + s.name(y) + " leaves A0",
                    {x, y});
      }
    }
    for (Elem a : tangible) {
      if (!a_zero.contains(s.mul(a, x))) {
        throw Error(ErrorCode::A0NotSubmodule, s.name(a) + " * " + s.name(x) + " leaves A0",
                    {a, x});
      }
    }
  }
  Pair p;
  p.structure_ = std::move(s);
  p.tangible_ = tangible;
  p.a_zero_ = a_zero;
  p.name_ = std::move(name);
  p.t_distributive_ = t_dist;
  p.property_n_ = find_property_n(p);
  return p;
}

/// Builds a pair without the centrality and submodule checks; used for
/// auxiliary algebras such as Ae whose unit need not be 1.
inline Pair make_unchecked_pair(FiniteStructure s, ElementSet tangible, ElementSet a_zero,
                                std::string name) {
  Pair p;
  p.structure_ = std::move(s);
  p.tangible_ = std::move(tangible);
  p.a_zero_ = std::move(a_zero);
  p.name_ = std::move(name);
  bool t_dist = true;
  const auto n = static_cast<Elem>(p.size());
  for (Elem a : p.tangible_) {
    for (Elem b = 0; b < n && t_dist; ++b) {
      for (Elem c = 0; c < n && t_dist; ++c) {
        t_dist = p.mul(a, p.add(b, c)) == p.add(p.mul(a, b), p.mul(a, c));
      }
    }
  }
  p.t_distributive_ = t_dist;
  return p;
}

inline Pair validate_pair(const RawStructure& raw, std::span<const Elem> tangible,
                          std::span<const Elem> a_zero, std::string name = {}) {
  FiniteStructure s = validate_structure(raw);
  const std::size_t n = s.size();
  return validate_pair(std::move(s), ElementSet(n, tangible), ElementSet(n, a_zero),
                       std::move(name));
}

}  // namespace pairspec

#pragma once

#include <vector>

#include "pairspec/pair.hpp"

namespace pairspec {

/// Checks that `perm` is a negation map on the pair: an additive,
/// T-compatible involution preserving T and A0 with b + (-)b in A0.
inline NegationMap validate_negation_map(const Pair& pair, std::vector<Elem> perm) {
  const auto n = static_cast<Elem>(pair.size());
  if (perm.size() != n) throw Error(ErrorCode::NotAPermutation, "wrong length");
  std::vector<bool> hit(n, false);
  for (Elem x : perm) {
    if (x >= n || hit[x]) throw Error(ErrorCode::NotAPermutation, "not a bijection", {x});
    hit[x] = true;
  }
  for (Elem b = 0; b < n; ++b) {
    if (perm[perm[b]] != b) {
      throw Error(ErrorCode::NotOrderTwo, "(-)(-)" + pair.label(b) + " != " + pair.label(b), {b});
    }
  }
  if (perm[pair.zero()] != pair.zero()) {
    throw Error(ErrorCode::NotAdditive, "(-)0 != 0", {pair.zero()});
  }
  for (Elem b1 = 0; b1 < n; ++b1) {
    for (Elem b2 = 0; b2 < n; ++b2) {
      if (perm[pair.add(b1, b2)] != pair.add(perm[b1], perm[b2])) {
        throw Error(ErrorCode::NotAdditive, pair.label(b1) + " + " + pair.label(b2), {b1, b2});
      }
    }
  }
  for (Elem a : pair.tangible()) {
    if (!pair.is_tangible(perm[a])) {
      throw Error(ErrorCode::TNotPreserved, "(-)" + pair.label(a) + " not tangible", {a});
    }
  }
  for (Elem x : pair.a_zero()) {
    if (!pair.in_a0(perm[x])) {
      throw Error(ErrorCode::A0NotPreserved, "(-)" + pair.label(x) + " not in A0", {x});
    }
  }
  for (Elem b = 0; b < n; ++b) {
    if (!pair.in_a0(pair.add(b, perm[b]))) {
      throw Error(ErrorCode::QuasiNegationFails, pair.label(b) + " + (-)" + pair.label(b), {b});
    }
  }
  for (Elem a : pair.tangible()) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = pair.mul(a, b);
      if (perm[ab] != pair.mul(perm[a], b) || perm[ab] != pair.mul(a, perm[b])) {
        throw Error(ErrorCode::NotTCompatible, "(-)(" + pair.label(a) + pair.label(b) + ")",
                    {a, b});
      }
    }
  }
  return NegationMap{std::move(perm)};
}

/// Returns a copy of the pair carrying the (already validated) negation map;
/// the Property N witness is re-designated so that 1-dagger = (-)1 when possible.
inline Pair attach_negation(const Pair& pair, NegationMap neg) {
  Pair p = pair;
  p.negation_ = std::move(neg);
  p.property_n_ = find_property_n(p);
  return p;
}

inline Pair with_negation(const Pair& pair, std::vector<Elem> perm) {
  return attach_negation(pair, validate_negation_map(pair, std::move(perm)));
}

}  // namespace pairspec

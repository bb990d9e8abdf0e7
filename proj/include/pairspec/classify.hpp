#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pairspec/pair.hpp"

namespace pairspec {

enum class PairKind { First, Second, NeitherWitnessed };

inline std::string_view to_string(PairKind k) {
  switch (k) {
    case PairKind::First: return "first";
    case PairKind::Second: return "second";
    case PairKind::NeitherWitnessed: return "neither-witnessed";
  }
  return "?";
}

struct ETypeValue {
  std::size_t k = 0;
  std::size_t k_prime = 0;
  friend bool operator==(const ETypeValue&, const ETypeValue&) = default;
};

struct Characteristic {
  std::size_t p = 0;
  std::size_t k = 0;
  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

/// Everything classify_pair computes. The e-dependent fields are empty when
/// the pair has no Property N witness.
struct PairClassification {
  PairKind kind = PairKind::NeitherWitnessed;
  bool proper = false;
  bool shallow = false;
  bool cancellative = false;
  bool metatangible = false;
  bool a0_bipotent = false;
  bool admissible = false;
  bool t_distributive = false;
  bool semiring = false;
  bool property_n = false;
  std::optional<Characteristic> characteristic;
  std::size_t a0_characteristic = 0;
  std::optional<bool> e_distributive;
  std::optional<bool> e_central;
  std::optional<bool> e_idempotent;
  std::optional<bool> e_final;
  std::optional<ETypeValue> e_type;
  /// Smallest k >= 1 with 1 + ke = ke, if any.
  std::optional<std::size_t> positive_e_type;
};

/// The sequence x, 2x, 3x, ... is eventually periodic; `terms[i]` holds
/// (i+1)x up to the first repetition.
struct SumOrbit {
  std::vector<Elem> terms;
  std::size_t cycle_start = 0;  // 0-based index into terms
  std::size_t period = 1;

  Elem at(std::size_t k) const {  // k >= 1
    std::size_t idx = k - 1;
    if (idx >= terms.size()) idx = cycle_start + (idx - cycle_start) % period;
    return terms[idx];
  }
};

inline SumOrbit sum_orbit(const FiniteStructure& s, Elem x) {
  SumOrbit o;
  std::vector<std::ptrdiff_t> seen(s.size(), -1);
  Elem cur = x;
  while (seen[cur] < 0) {
    seen[cur] = static_cast<std::ptrdiff_t>(o.terms.size());
    o.terms.push_back(cur);
    cur = s.add(cur, x);
  }
  o.cycle_start = static_cast<std::size_t>(seen[cur]);
  o.period = o.terms.size() - o.cycle_start;
  return o;
}

inline PairKind pair_kind(const Pair& p) {
  if (p.tangible().empty()) return PairKind::NeitherWitnessed;
  for (Elem a : p.tangible()) {
    if (!p.in_a0(p.add(a, a))) return PairKind::Second;
  }
  return PairKind::First;
}

inline bool is_proper(const Pair& p) {
  for (Elem a : p.tangible()) {
    if (a != p.zero() && p.in_a0(a)) return false;
  }
  return true;
}

inline bool is_shallow(const Pair& p) {
  for (Elem b = 0; b < p.size(); ++b) {
    if (!p.is_tangible(b) && !p.in_a0(b)) return false;
  }
  return true;
}

inline bool is_cancellative(const Pair& p) {
  const auto n = static_cast<Elem>(p.size());
  for (Elem a : p.tangible()) {
    for (Elem b = 0; b < n; ++b) {
      if (p.in_a0(p.mul(a, b)) && !p.in_a0(b)) return false;
      for (Elem b2 = b + 1; b2 < n; ++b2) {
        if (p.mul(a, b) == p.mul(a, b2)) return false;
      }
    }
  }
  return true;
}

inline bool is_metatangible(const Pair& p) {
  for (Elem a1 : p.tangible()) {
    for (Elem a2 : p.tangible()) {
      const Elem s = p.add(a1, a2);
      if (!p.is_tangible(s) && !p.in_a0(s)) return false;
    }
  }
  return true;
}

inline bool is_a0_bipotent(const Pair& p) {
  if (!is_metatangible(p)) return false;
  for (Elem a1 : p.tangible()) {
    for (Elem a2 : p.tangible()) {
      const Elem s = p.add(a1, a2);
      if (s != a1 && s != a2 && !p.in_a0(s)) return false;
    }
  }
  return true;
}

/// Height over the additive span of T and 0; empty outside the span.
inline std::vector<std::optional<std::size_t>> heights(const Pair& p) {
  const auto n = static_cast<Elem>(p.size());
  std::vector<std::optional<std::size_t>> h(n);
  h[p.zero()] = 0;
  for (Elem a : p.tangible()) {
    if (a != p.zero()) h[a] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      if (!h[x]) continue;
      for (Elem y = x; y < n; ++y) {
        if (!h[y]) continue;
        const Elem s = p.add(x, y);
        const std::size_t cand = *h[x] + *h[y];
        if (!h[s] || cand < *h[s]) {
          h[s] = cand;
          changed = true;
        }
      }
    }
  }
  return h;
}

inline std::optional<std::size_t> height(const Pair& p, Elem b) { return heights(p)[b]; }

inline Characteristic characteristic(const FiniteStructure& s) {
  const SumOrbit o = sum_orbit(s, s.one());
  // (p+k)1 = k1 exactly when k reaches the cycle and the period divides p.
  return Characteristic{o.period, o.cycle_start + 1};
}

inline std::size_t a0_characteristic(const Pair& p) {
  const auto n = static_cast<Elem>(p.size());
  std::vector<Elem> state(n);
  for (Elem b = 0; b < n; ++b) state[b] = b;
  std::set<std::vector<Elem>> seen;
  for (std::size_t k = 1;; ++k) {
    bool inside = true;
    for (Elem b = 0; b < n && inside; ++b) inside = p.in_a0(state[b]);
    if (inside) return k;
    if (!seen.insert(state).second) return 0;
    for (Elem b = 0; b < n; ++b) state[b] = p.add(state[b], b);
  }
}

/// b + k b-circ = (1 + ke) b for all b and all k >= 1. The pair of sums
/// (k b-circ, k e) is eventually periodic, so each b is checked until that
/// state repeats.
inline bool is_e_distributive(const Pair& p) {
  const auto n = static_cast<Elem>(p.size());
  const Elem e = p.e();
  for (Elem b = 0; b < n; ++b) {
    const Elem bc = p.circ(b);
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    Elem kb = bc;
    Elem ke = e;
    while (!seen[static_cast<std::size_t>(kb) * n + ke]) {
      seen[static_cast<std::size_t>(kb) * n + ke] = true;
      if (p.add(b, kb) != p.mul(p.add(p.one(), ke), b)) return false;
      kb = p.add(kb, bc);
      ke = p.add(ke, e);
    }
  }
  return true;
}

/// Smallest k <= |A|, then smallest k' <= k, with b + k b-circ = k' b-circ for all b.
inline std::optional<ETypeValue> e_type(const Pair& p) {
  const auto n = static_cast<Elem>(p.size());
  std::vector<SumOrbit> orbits;
  orbits.reserve(n);
  for (Elem b = 0; b < n; ++b) orbits.push_back(sum_orbit(p.structure(), p.circ(b)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t kp = 1; kp <= k; ++kp) {
      bool ok = true;
      for (Elem b = 0; b < n && ok; ++b) {
        ok = p.add(b, orbits[b].at(k)) == orbits[b].at(kp);
      }
      if (ok) return ETypeValue{k, kp};
    }
  }
  return std::nullopt;
}

/// Smallest k >= 1 with 1 + ke = ke; exact because ke is eventually periodic.
inline std::optional<std::size_t> positive_e_type(const Pair& p) {
  const SumOrbit o = sum_orbit(p.structure(), p.e());
  for (std::size_t k = 1; k <= o.terms.size(); ++k) {
    const Elem ke = o.at(k);
    if (p.add(p.one(), ke) == ke) return k;
  }
  return std::nullopt;
}

inline bool is_e_idempotent(const Pair& p) { return p.add(p.e(), p.e()) == p.e(); }

inline bool is_e_central(const Pair& p) {
  return is_e_distributive(p) && distributive_center(p.structure()).contains(p.e());
}

inline PairClassification classify_pair(const Pair& p) {
  PairClassification c;
  c.kind = pair_kind(p);
  c.proper = is_proper(p);
  c.shallow = is_shallow(p);
  c.cancellative = is_cancellative(p);
  c.metatangible = is_metatangible(p);
  c.a0_bipotent = is_a0_bipotent(p);
  c.t_distributive = p.t_distributive();
  c.semiring = p.structure().flags().semiring();
  const auto h = heights(p);
  c.admissible = std::all_of(h.begin(), h.end(), [](const auto& v) { return v.has_value(); });
  c.characteristic = characteristic(p.structure());
  c.a0_characteristic = a0_characteristic(p);
  c.property_n = p.property_n().has_value();
  if (c.property_n) {
    c.e_distributive = is_e_distributive(p);
    c.e_central = *c.e_distributive && distributive_center(p.structure()).contains(p.e());
    c.e_idempotent = is_e_idempotent(p);
    c.e_type = e_type(p);
    c.e_final = c.e_type && c.e_type->k == 1 && c.e_type->k_prime == 1;
    c.positive_e_type = positive_e_type(p);
  }
  return c;
}

}  // namespace pairspec

#pragma once

#include <utility>

#include "pairspec/pair.hpp"

namespace pairspec {

/// An element (b1, b2) of the doubled carrier A x A.
struct Couple {
  Elem first = 0;
  Elem second = 0;
  friend bool operator==(const Couple&, const Couple&) = default;
  friend auto operator<=>(const Couple&, const Couple&) = default;
};

/// (b1 b1' + b2 b2', b1 b2' + b2 b1')
inline Couple twist(const FiniteStructure& s, Couple b, Couple c) {
  return Couple{s.add(s.mul(b.first, c.first), s.mul(b.second, c.second)),
                s.add(s.mul(b.first, c.second), s.mul(b.second, c.first))};
}

inline Couple twist(const Pair& p, Couple b, Couple c) { return twist(p.structure(), b, c); }

inline Couple twist_square(const Pair& p, Couple b) { return twist(p, b, b); }

inline Couple couple_add(const Pair& p, Couple b, Couple c) {
  return Couple{p.add(b.first, c.first), p.add(b.second, c.second)};
}

/// Dense index of a couple in A x A.
inline std::size_t couple_index(std::size_t n, Couple b) { return b.first * n + b.second; }

inline Couple couple_at(std::size_t n, std::size_t idx) {
  return Couple{static_cast<Elem>(idx / n), static_cast<Elem>(idx % n)};
}

}  // namespace pairspec

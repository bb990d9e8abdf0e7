#pragma once

// Brute-force reference implementations. They read only the raw tables of a
// pair and never call the library's congruence or spectrum code.

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "pairspec/pairspec.hpp"

namespace oracle {

using pairspec::Elem;
using Rel = std::set<std::pair<Elem, Elem>>;

struct Tables {
  std::size_t n = 0;
  std::vector<std::vector<Elem>> add, mul;
  std::vector<Elem> tangible, a0;
  Elem zero = 0, one = 0;

  explicit Tables(const pairspec::Pair& p) {
    const auto raw = p.structure().raw();
    n = raw.names.size();
    add = raw.add;
    mul = raw.mul;
    zero = raw.zero;
    one = raw.one;
    tangible = p.tangible().members();
    a0 = p.a_zero().members();
  }
  bool in_a0(Elem x) const { return std::find(a0.begin(), a0.end(), x) != a0.end(); }
};

/// Every set partition of {0..n-1} as a restricted growth string.
inline std::vector<std::vector<Elem>> all_partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> a(n, 0);
  std::vector<Elem> mx(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    const Elem limit = i == 0 ? 0 : mx[i - 1] + 1;
    for (Elem v = 0; v <= limit; ++v) {
      a[i] = v;
      mx[i] = i == 0 ? v : std::max(mx[i - 1], v);
      self(self, i + 1);
    }
  };
  if (n > 0) rec(rec, 0);
  return out;
}

inline Rel relation_of(const std::vector<Elem>& labels) {
  Rel r;
  for (Elem x = 0; x < labels.size(); ++x) {
    for (Elem y = 0; y < labels.size(); ++y) {
      if (labels[x] == labels[y]) r.insert({x, y});
    }
  }
  return r;
}

/// Literal subalgebra test on the set of ordered pairs, plus the T-action.
inline bool is_congruence(const Tables& t, const Rel& r) {
  for (const auto& [x, y] : r) {
    for (const auto& [u, v] : r) {
      if (!r.count({t.add[x][u], t.add[y][v]})) return false;
      if (!r.count({t.mul[x][u], t.mul[y][v]})) return false;
    }
    for (Elem a : t.tangible) {
      if (!r.count({t.mul[a][x], t.mul[a][y]}) || !r.count({t.mul[x][a], t.mul[y][a]})) return false;
    }
  }
  return true;
}

inline std::vector<Rel> all_congruences(const Tables& t) {
  std::vector<Rel> out;
  for (const auto& labels : all_partitions(t.n)) {
    Rel r = relation_of(labels);
    if (is_congruence(t, r)) out.push_back(std::move(r));
  }
  return out;
}

/// Canonical label vector of an equivalence relation: block ids by least member.
inline std::vector<Elem> labels_of(std::size_t n, const Rel& r) {
  std::vector<Elem> lab(n, static_cast<Elem>(n));
  Elem next = 0;
  for (Elem x = 0; x < n; ++x) {
    if (lab[x] != n) continue;
    for (Elem y = x; y < n; ++y) {
      if (r.count({x, y})) lab[y] = next;
    }
    ++next;
  }
  return lab;
}

inline bool subset(const Rel& a, const Rel& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Least congruence containing the generators: intersection of all that do.
inline Rel generated(const std::vector<Rel>& all, const std::vector<std::pair<Elem, Elem>>& gens) {
  std::optional<Rel> acc;
  for (const Rel& r : all) {
    if (!std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return r.count(g) > 0; })) continue;
    if (!acc) {
      acc = r;
    } else {
      Rel m;
      std::set_intersection(acc->begin(), acc->end(), r.begin(), r.end(), std::inserter(m, m.end()));
      acc = std::move(m);
    }
  }
  return *acc;
}

inline std::pair<Elem, Elem> twist(const Tables& t, std::pair<Elem, Elem> b, std::pair<Elem, Elem> c) {
  return {t.add[t.mul[b.first][c.first]][t.mul[b.second][c.second]],
          t.add[t.mul[b.first][c.second]][t.mul[b.second][c.first]]};
}

inline Rel twist_product(const Tables& t, const Rel& a, const Rel& b) {
  Rel out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(twist(t, x, y));
  }
  return out;
}

struct Flags {
  bool prime = false, semiprime = false, irreducible = false, radical = false, strongly_prime = false;
};

/// Definitions applied literally over the full list of congruences.
inline Flags flags(const Tables& t, const std::vector<Rel>& all, const Rel& phi) {
  Flags f;
  std::vector<const Rel*> above;
  for (const Rel& r : all) {
    if (subset(phi, r)) above.push_back(&r);
  }
  f.prime = f.semiprime = f.irreducible = true;
  for (const Rel* a : above) {
    if (subset(twist_product(t, *a, *a), phi) && *a != phi) f.semiprime = false;
    for (const Rel* b : above) {
      if (subset(twist_product(t, *a, *b), phi) && *a != phi && *b != phi) f.prime = false;
      Rel m;
      std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::inserter(m, m.end()));
      if (m == phi && *a != phi && *b != phi) f.irreducible = false;
    }
  }
  f.radical = f.strongly_prime = true;
  for (Elem x = 0; x < t.n; ++x) {
    for (Elem y = 0; y < t.n; ++y) {
      if (phi.count(twist(t, {x, y}, {x, y})) && !phi.count({x, y})) f.radical = false;
      for (Elem u = 0; u < t.n; ++u) {
        for (Elem v = 0; v < t.n; ++v) {
          if (phi.count(twist(t, {x, y}, {u, v})) && !phi.count({x, y}) && !phi.count({u, v})) {
            f.strongly_prime = false;
          }
        }
      }
    }
  }
  return f;
}

/// Axioms a pair file must satisfy: commutative associative addition with
/// neutral zero, absorbing zero, unit one, T closed and central, A0 a
/// T-submodule containing zero.
inline bool pair_axioms_hold(const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul,
                             Elem zero, Elem one, const std::vector<Elem>& tangible, const std::vector<Elem>& a0) {
  const std::size_t n = add.size();
  auto in = [](const std::vector<Elem>& s, Elem x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  for (Elem x = 0; x < n; ++x) {
    if (add[zero][x] != x || mul[zero][x] != zero || mul[x][zero] != zero) return false;
    if (mul[one][x] != x || mul[x][one] != x) return false;
    for (Elem y = 0; y < n; ++y) {
      if (add[x][y] != add[y][x]) return false;
      for (Elem z = 0; z < n; ++z) {
        if (add[add[x][y]][z] != add[x][add[y][z]]) return false;
      }
    }
  }
  if (!in(tangible, one) || !in(a0, zero)) return false;
  for (Elem a : tangible) {
    for (Elem b : tangible) {
      if (!in(tangible, mul[a][b]) && mul[a][b] != zero) return false;
    }
    for (Elem x = 0; x < n; ++x) {
      if (mul[a][x] != mul[x][a]) return false;
      for (Elem y = 0; y < n; ++y) {
        if (mul[mul[a][x]][y] != mul[a][mul[x][y]]) return false;
        if (mul[mul[x][a]][y] != mul[x][mul[a][y]]) return false;
        if (mul[mul[x][y]][a] != mul[x][mul[y][a]]) return false;
      }
    }
    for (Elem z : a0) {
      if (!in(a0, mul[a][z])) return false;
    }
  }
  for (Elem z : a0) {
    for (Elem w : a0) {
      if (!in(a0, add[z][w])) return false;
    }
  }
  return true;
}

}  // namespace oracle

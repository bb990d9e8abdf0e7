#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pairspec/congruence.hpp"
#include "pairspec/hyper.hpp"
#include "pairspec/negation.hpp"

namespace pairspec {

/// A finite monoid given by its table; used for the tangible part of the
/// supertropical and minimal bipotent pairs and for function pairs.
struct FiniteMonoid {
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> table;
  Elem unit = 0;

  std::size_t size() const { return names.size(); }
  Elem op(Elem a, Elem b) const { return table[a][b]; }
};

inline void validate_monoid(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  if (n == 0 || m.unit >= n || m.table.size() != n) {
    throw Error(ErrorCode::BadParameter, "malformed monoid");
  }
  for (Elem a = 0; a < n; ++a) {
    if (m.table[a].size() != n) throw Error(ErrorCode::BadParameter, "monoid row length", {a});
    for (Elem b = 0; b < n; ++b) {
      if (m.table[a][b] >= n) throw Error(ErrorCode::BadParameter, "monoid entry out of range", {a, b});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (m.op(m.unit, a) != a || m.op(a, m.unit) != a) {
      throw Error(ErrorCode::BadParameter, "monoid unit fails at " + m.names[a], {a});
    }
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
          throw Error(ErrorCode::BadParameter, "monoid not associative", {a, b, c});
        }
      }
    }
  }
}

/// C_n = {1, g, ..., g^(n-1)}.
inline FiniteMonoid cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "cyclic group of order 0");
  FiniteMonoid m;
  for (std::size_t i = 0; i < n; ++i) {
    m.names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
  }
  m.table.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) m.table[a][b] = static_cast<Elem>((a + b) % n);
  }
  return m;
}

/// {0, 1, ..., n-1} under addition capped at n-1.
inline FiniteMonoid saturating_monoid(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "saturating monoid of order 0");
  FiniteMonoid m;
  for (std::size_t i = 0; i < n; ++i) m.names.push_back(std::to_string(i));
  m.table.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) m.table[a][b] = static_cast<Elem>(std::min<std::size_t>(a + b, n - 1));
  }
  return m;
}

/// The pair {0, 1, e}: 1 + 1 = e, e additively absorbing, A0 = {0, e}.
inline Pair super_boolean() {
  RawStructure r;
  r.names = {"0", "1", "e"};
  r.zero = 0;
  r.one = 1;
  r.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  r.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  const std::vector<Elem> t{1}, a0{0, 2};
  return validate_pair(r, t, a0, "super_boolean");
}

/// A finite monoid G with absorbing zero, totally ordered by `rank`
/// (larger rank is larger; zero must be the minimum).
struct OrderedMonoid {
  FiniteMonoid monoid;
  Elem zero = 0;
  std::vector<int> rank;
};

/// Supertropical pair on T disjoint-union G: addition takes the side of larger
/// nu-value and the ghost nu(b) on ties. Carrier order is 0, T, then G \ {0};
/// ghost labels that clash with tangible labels get a trailing prime.
inline Pair supertropical(const FiniteMonoid& t, const OrderedMonoid& g, const std::vector<Elem>& nu,
                          std::string name = "supertropical") {
  validate_monoid(t);
  validate_monoid(g.monoid);
  const std::size_t nt = t.size();
  const std::size_t ng = g.monoid.size();
  if (g.zero >= ng || g.rank.size() != ng) throw Error(ErrorCode::BadParameter, "bad ordered monoid");
  for (Elem x = 0; x < ng; ++x) {
    if (g.monoid.op(g.zero, x) != g.zero || g.monoid.op(x, g.zero) != g.zero) {
      throw Error(ErrorCode::BadParameter, "zero of G is not absorbing", {x});
    }
    if (x != g.zero && g.rank[x] <= g.rank[g.zero]) {
      throw Error(ErrorCode::OrderNotTotal, "zero of G is not the minimum", {x});
    }
    for (Elem y = x + 1; y < ng; ++y) {
      if (g.rank[x] == g.rank[y]) throw Error(ErrorCode::OrderNotTotal, "ranks tie", {x, y});
    }
  }
  if (nu.size() != nt) throw Error(ErrorCode::NuNotHomomorphism, "nu has wrong length");
  for (Elem a = 0; a < nt; ++a) {
    if (nu[a] >= ng || nu[a] == g.zero) {
      throw Error(ErrorCode::NuNotHomomorphism, "nu(" + t.names[a] + ") is not a nonzero element of G", {a});
    }
  }
  if (nu[t.unit] != g.monoid.unit) throw Error(ErrorCode::NuNotHomomorphism, "nu(1) != 1", {t.unit});
  for (Elem a = 0; a < nt; ++a) {
    for (Elem b = 0; b < nt; ++b) {
      if (nu[t.op(a, b)] != g.monoid.op(nu[a], nu[b])) {
        throw Error(ErrorCode::NuNotHomomorphism, "nu(ab) != nu(a)nu(b)", {a, b});
      }
    }
  }

  // carrier indices
  std::vector<Elem> ghost_index(ng);
  const Elem zero = 0;
  std::vector<std::string> names{g.monoid.names[g.zero]};
  for (Elem a = 0; a < nt; ++a) names.push_back(t.names[a]);
  Elem next = static_cast<Elem>(1 + nt);
  ghost_index[g.zero] = zero;
  for (Elem x = 0; x < ng; ++x) {
    if (x == g.zero) continue;
    ghost_index[x] = next++;
    std::string label = g.monoid.names[x];
    while (std::find(names.begin(), names.end(), label) != names.end()) label += "'";
    names.push_back(label);
  }
  const std::size_t n = names.size();
  std::vector<Elem> to_g(n);      // nu extended to the carrier
  std::vector<bool> tangible(n, false);
  std::vector<Elem> t_of(n, 0);   // tangible carrier index -> T element
  to_g[zero] = g.zero;
  for (Elem a = 0; a < nt; ++a) {
    to_g[1 + a] = nu[a];
    tangible[1 + a] = true;
    t_of[1 + a] = a;
  }
  for (Elem x = 0; x < ng; ++x) to_g[ghost_index[x]] = x;

  RawStructure r;
  r.names = names;
  r.zero = zero;
  r.one = 1 + t.unit;
  r.add.assign(n, std::vector<Elem>(n));
  r.mul.assign(n, std::vector<Elem>(n));
  for (Elem b1 = 0; b1 < n; ++b1) {
    for (Elem b2 = 0; b2 < n; ++b2) {
      const int r1 = g.rank[to_g[b1]];
      const int r2 = g.rank[to_g[b2]];
      r.add[b1][b2] = r1 > r2 ? b1 : r1 < r2 ? b2 : ghost_index[to_g[b1]];
      if (tangible[b1] && tangible[b2]) {
        r.mul[b1][b2] = 1 + t.op(t_of[b1], t_of[b2]);
      } else {
        r.mul[b1][b2] = ghost_index[g.monoid.op(to_g[b1], to_g[b2])];
      }
    }
  }
  std::vector<Elem> tset, a0;
  for (Elem a = 0; a < nt; ++a) tset.push_back(1 + a);
  for (Elem x = 0; x < ng; ++x) a0.push_back(ghost_index[x]);
  return validate_pair(r, tset, a0, std::move(name));
}

/// G = T with an adjoined zero, nu = id; `rank` orders T.
inline Pair standard_supertropical(const FiniteMonoid& t, const std::vector<int>& rank,
                                   std::string name = "supertropical") {
  if (rank.size() != t.size()) throw Error(ErrorCode::BadParameter, "rank has wrong length");
  OrderedMonoid g;
  const std::size_t nt = t.size();
  g.monoid.names = t.names;
  g.monoid.names.push_back("0");
  g.monoid.unit = t.unit;
  g.zero = static_cast<Elem>(nt);
  g.monoid.table.assign(nt + 1, std::vector<Elem>(nt + 1, g.zero));
  for (Elem a = 0; a < nt; ++a) {
    for (Elem b = 0; b < nt; ++b) g.monoid.table[a][b] = t.op(a, b);
  }
  g.rank = rank;
  g.rank.push_back(*std::min_element(rank.begin(), rank.end()) - 1);
  std::vector<Elem> nu(nt);
  for (Elem a = 0; a < nt; ++a) nu[a] = a;
  return supertropical(t, g, nu, std::move(name));
}

/// G = {0, e} and nu constant onto e.
inline Pair constant_supertropical(const FiniteMonoid& t, std::string name = "supertropical_constant") {
  OrderedMonoid g;
  g.monoid.names = {"0", "e"};
  g.monoid.table = {{0, 0}, {0, 1}};
  g.monoid.unit = 1;
  g.zero = 0;
  g.rank = {0, 1};
  return supertropical(t, g, std::vector<Elem>(t.size(), 1), std::move(name));
}

/// m-truncation of the standard supertropical pair over the positive integers
/// under multiplication: T_m = {1..m}, products above m saturate to m (or to
/// its ghost m').
inline Pair truncated_supertropical(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::BadBound, "truncation bound must be positive");
  // 0, tangibles 1..m at indices 1..m, ghosts 1'..m' at indices m+1..2m
  const std::size_t n = 2 * m + 1;
  auto tang = [](std::size_t v) { return static_cast<Elem>(v); };
  auto ghost = [m](std::size_t v) { return static_cast<Elem>(m + v); };
  auto value = [m](Elem x) -> std::size_t { return x == 0 ? 0 : x <= m ? x : x - m; };
  auto is_ghost = [m](Elem x) { return x > m; };
  RawStructure r;
  r.names.push_back("0");
  for (std::size_t v = 1; v <= m; ++v) r.names.push_back(std::to_string(v));
  for (std::size_t v = 1; v <= m; ++v) r.names.push_back(std::to_string(v) + "'");
  r.zero = 0;
  r.one = tang(1);
  r.add.assign(n, std::vector<Elem>(n));
  r.mul.assign(n, std::vector<Elem>(n));
  for (Elem b1 = 0; b1 < n; ++b1) {
    for (Elem b2 = 0; b2 < n; ++b2) {
      const std::size_t v1 = value(b1), v2 = value(b2);
      r.add[b1][b2] = v1 > v2 ? b1 : v1 < v2 ? b2 : (v1 == 0 ? Elem{0} : ghost(v1));
      if (v1 == 0 || v2 == 0) {
        r.mul[b1][b2] = 0;
      } else {
        const std::size_t v = std::min(v1 * v2, m);
        r.mul[b1][b2] = (is_ghost(b1) || is_ghost(b2)) ? ghost(v) : tang(v);
      }
    }
  }
  std::vector<Elem> t, a0{0};
  for (std::size_t v = 1; v <= m; ++v) {
    t.push_back(tang(v));
    a0.push_back(ghost(v));
  }
  return validate_pair(r, t, a0, "truncated_" + std::to_string(m));
}

enum class BipotentKind { First, Second };

/// T with 0 and an absorbing infinity; distinct summands give infinity, and
/// a + a is infinity (first kind) or a (second kind). A0 = {0, inf}.
inline Pair minimal_bipotent(const FiniteMonoid& t, BipotentKind kind, std::string name = {}) {
  validate_monoid(t);
  const std::size_t nt = t.size();
  const std::size_t n = nt + 2;
  const Elem inf = static_cast<Elem>(nt + 1);
  RawStructure r;
  r.names.push_back("0");
  for (const auto& s : t.names) r.names.push_back(s);
  r.names.push_back("inf");
  r.zero = 0;
  r.one = 1 + t.unit;
  r.add.assign(n, std::vector<Elem>(n, inf));
  r.mul.assign(n, std::vector<Elem>(n, inf));
  for (Elem x = 0; x < n; ++x) {
    r.add[0][x] = r.add[x][0] = x;
    r.mul[0][x] = r.mul[x][0] = 0;
  }
  for (Elem a = 0; a < nt; ++a) {
    if (kind == BipotentKind::Second) r.add[1 + a][1 + a] = 1 + a;
    for (Elem b = 0; b < nt; ++b) r.mul[1 + a][1 + b] = 1 + t.op(a, b);
  }
  std::vector<Elem> tset, a0{0, inf};
  for (Elem a = 0; a < nt; ++a) tset.push_back(1 + a);
  if (name.empty()) name = kind == BipotentKind::First ? "minimal_bipotent_first" : "minimal_bipotent_second";
  return validate_pair(r, tset, a0, std::move(name));
}

/// (A x A, Diag) with the twist product and the switch negation.
struct DoubledPair {
  Pair pair;
  bool validated = false;           // passed validate_pair
  bool twist_associative = false;   // exhaustive over all triples
  std::optional<std::array<Elem, 3>> associativity_witness;
};

inline DoubledPair double_pair(const Pair& base) {
  const auto n = static_cast<Elem>(base.size());
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  RawStructure r;
  for (std::size_t i = 0; i < nn; ++i) {
    const Couple c = couple_at(n, i);
    r.names.push_back("(" + base.label(c.first) + "," + base.label(c.second) + ")");
  }
  r.zero = static_cast<Elem>(couple_index(n, {base.zero(), base.zero()}));
  r.one = static_cast<Elem>(couple_index(n, {base.one(), base.zero()}));
  r.add.assign(nn, std::vector<Elem>(nn));
  r.mul.assign(nn, std::vector<Elem>(nn));
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      const Couple b = couple_at(n, i), c = couple_at(n, j);
      r.add[i][j] = static_cast<Elem>(couple_index(n, couple_add(base, b, c)));
      r.mul[i][j] = static_cast<Elem>(couple_index(n, twist(base, b, c)));
    }
  }
  std::vector<Elem> t, a0, sw(nn);
  for (Elem a : base.tangible()) {
    t.push_back(static_cast<Elem>(couple_index(n, {a, base.zero()})));
    t.push_back(static_cast<Elem>(couple_index(n, {base.zero(), a})));
  }
  for (Elem z = 0; z < n; ++z) a0.push_back(static_cast<Elem>(couple_index(n, {z, z})));
  for (std::size_t i = 0; i < nn; ++i) {
    const Couple c = couple_at(n, i);
    sw[i] = static_cast<Elem>(couple_index(n, {c.second, c.first}));
  }
  std::string name = "double(" + base.name() + ")";
  FiniteStructure s = validate_structure(r);
  DoubledPair d;
  d.twist_associative = s.flags().mul_associative;
  if (!d.twist_associative) {
    for (Elem a = 0; a < nn && !d.associativity_witness; ++a) {
      for (Elem b = 0; b < nn && !d.associativity_witness; ++b) {
        for (Elem c = 0; c < nn; ++c) {
          if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
            d.associativity_witness = std::array<Elem, 3>{a, b, c};
            break;
          }
        }
      }
    }
  }
  try {
    Pair p = validate_pair(s, ElementSet(nn, t), ElementSet(nn, a0), name);
    d.pair = with_negation(p, sw);
    d.validated = true;
  } catch (const Error&) {
    d.pair = make_unchecked_pair(std::move(s), ElementSet(nn, t), ElementSet(nn, a0), name);
  }
  return d;
}

/// (A, A0)/Phi. Singleton blocks keep their label; larger blocks are
/// labelled <a|b|...>.
inline Pair quotient_pair(const Pair& p, const Congruence& phi) {
  if (auto v = congruence_violation(p, phi)) {
    throw Error(ErrorCode::NotACongruence, "partition is not a congruence", {v->x, v->y, v->c});
  }
  const auto blocks = phi.blocks();
  const std::size_t m = blocks.size();
  RawStructure r;
  for (const auto& blk : blocks) {
    if (blk.size() == 1) {
      r.names.push_back(p.label(blk.front()));
    } else {
      std::string s = "<";
      for (std::size_t i = 0; i < blk.size(); ++i) s += (i ? "|" : "") + p.label(blk[i]);
      r.names.push_back(s + ">");
    }
  }
  r.zero = phi.block_of(p.zero());
  r.one = phi.block_of(p.one());
  r.add.assign(m, std::vector<Elem>(m));
  r.mul.assign(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      r.add[i][j] = phi.block_of(p.add(blocks[i].front(), blocks[j].front()));
      r.mul[i][j] = phi.block_of(p.mul(blocks[i].front(), blocks[j].front()));
    }
  }
  std::set<Elem> t, a0;
  for (Elem a : p.tangible()) t.insert(phi.block_of(a));
  for (Elem x : p.a_zero()) a0.insert(phi.block_of(x));
  const std::vector<Elem> tv(t.begin(), t.end()), av(a0.begin(), a0.end());
  Pair q = validate_pair(r, tv, av, p.name() + "/~");
  if (p.negation()) {
    std::vector<Elem> perm(m);
    bool respects = true;
    for (Elem i = 0; i < m && respects; ++i) {
      perm[i] = phi.block_of((*p.negation())(blocks[i].front()));
      for (Elem x : blocks[i]) respects = respects && phi.block_of((*p.negation())(x)) == perm[i];
    }
    if (respects) {
      try {
        q = with_negation(q, perm);
      } catch (const Error&) {
      }
    }
  }
  return q;
}

inline std::size_t default_carrier_cap() { return 4096; }

namespace detail {

/// Pair whose elements are the given nonempty subsets of H (closed under the
/// extended hyperaddition and elementwise product).
inline Pair subset_pair(const HyperStructure& h, std::vector<Subset> elems, Subset s0,
                        std::string name) {
  std::sort(elems.begin(), elems.end());
  std::map<Subset, Elem> index;
  for (Elem i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const std::size_t n = elems.size();
  auto at = [&](Subset s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorCode::BadParameter, "subset family is not closed");
    return it->second;
  };
  RawStructure r;
  for (Subset s : elems) r.names.push_back(h.subset_label(s));
  r.zero = at(singleton(h.zero()));
  r.one = at(singleton(h.one()));
  r.add.assign(n, std::vector<Elem>(n));
  r.mul.assign(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      r.add[i][j] = at(h.sum(elems[i], elems[j]));
      r.mul[i][j] = at(h.product(elems[i], elems[j]));
    }
  }
  std::vector<Elem> t, a0;
  for (Elem x = 0; x < h.size(); ++x) {
    if (x != h.zero() && index.contains(singleton(x))) t.push_back(index[singleton(x)]);
  }
  if (h.one() == h.zero()) t.push_back(r.one);
  for (Elem i = 0; i < n; ++i) {
    if (elems[i] & s0) a0.push_back(i);
  }
  Pair p = validate_pair(r, t, a0, std::move(name));

  SubsetOrigin origin;
  origin.base_size = h.size();
  origin.base_zero = h.zero();
  origin.base_one = h.one();
  if (h.hypernegation()) origin.base_neg_one = (*h.hypernegation())[h.one()];
  bool group = h.size() > 1;
  for (Elem a = 0; a < h.size() && group; ++a) {
    if (a == h.zero()) continue;
    bool inv = false;
    for (Elem b = 0; b < h.size(); ++b) {
      if (b == h.zero()) continue;
      if (h.mul(a, b) == h.zero()) group = false;
      if (h.mul(a, b) == h.one() && h.mul(b, a) == h.one()) inv = true;
    }
    group = group && inv;
  }
  origin.base_nonzero_group = group;
  for (Subset s : elems) origin.subsets.push_back(subset_members(s));

  if (h.hypernegation()) {
    const auto& neg = *h.hypernegation();
    std::vector<Elem> perm(n);
    bool closed = true;
    for (Elem i = 0; i < n && closed; ++i) {
      Subset img = 0;
      for (Elem x : subset_members(elems[i])) img |= singleton(neg[x]);
      auto it = index.find(img);
      if (it == index.end()) closed = false; else perm[i] = it->second;
    }
    if (closed) {
      try {
        p = with_negation(p, perm);
      } catch (const Error&) {
      }
    }
  }
  return p.with_origin(std::move(origin));
}

inline void check_s0(const HyperStructure& h, Subset s0) {
  if (!(s0 & singleton(h.zero())) || (s0 & ~h.all())) {
    throw Error(ErrorCode::S0NotValid, "S0 must be a subset of H containing 0");
  }
  for (Elem x : subset_members(s0)) {
    for (Elem y : subset_members(s0)) {
      if ((h.sum(x, y) & ~s0) != 0) throw Error(ErrorCode::S0NotValid, "S0 not closed under +", {x, y});
    }
    for (Elem a = 0; a < h.size(); ++a) {
      if (!(singleton(h.mul(a, x)) & s0)) throw Error(ErrorCode::S0NotValid, "S0 not closed under the action", {a, x});
    }
  }
}

}  // namespace detail

/// All nonempty subsets of H, ordered by bitmask, with A0 the subsets
/// meeting S0 (default {0}) and T the nonzero singletons.
inline Pair power_set_pair(const HyperStructure& h, std::optional<Subset> s0 = std::nullopt,
                           std::size_t cap = default_carrier_cap(), std::string name = {}) {
  const Subset z = s0.value_or(singleton(h.zero()));
  detail::check_s0(h, z);
  if (h.size() >= 63 || (Subset{1} << h.size()) - 1 > cap) {
    throw Error(ErrorCode::CarrierTooLarge, "power set exceeds carrier cap " + std::to_string(cap));
  }
  std::vector<Subset> elems;
  for (Subset s = 1; s <= h.all(); ++s) elems.push_back(s);
  return detail::subset_pair(h, std::move(elems), z, name.empty() ? "power_set" : std::move(name));
}

/// Sub-pair of the power-set pair generated by the singletons.
inline Pair hyperpair_generated(const HyperStructure& h, std::size_t cap = default_carrier_cap(),
                                std::string name = {}) {
  std::set<Subset> found;
  std::vector<Subset> order;
  for (Elem x = 0; x < h.size(); ++x) {
    found.insert(singleton(x));
    order.push_back(singleton(x));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Subset s : {h.sum(order[i], order[j]), h.product(order[i], order[j]),
                       h.product(order[j], order[i])}) {
        if (found.insert(s).second) {
          if (found.size() > cap) {
            throw Error(ErrorCode::CarrierTooLarge, "hyperpair exceeds carrier cap " + std::to_string(cap));
          }
          order.push_back(s);
        }
      }
    }
  }
  return detail::subset_pair(h, std::vector<Subset>(found.begin(), found.end()),
                             singleton(h.zero()), name.empty() ? "hyperpair" : std::move(name));
}

/// Residue hypersemiring A/G of a pair by a multiplicative subgroup G of T.
/// Cosets are ordered by least member; a singleton coset keeps its label.
inline HyperStructure residue_hyperstructure(const Pair& p, const std::vector<Elem>& g) {
  const auto n = static_cast<Elem>(p.size());
  ElementSet gs(n, g);
  if (!gs.contains(p.one())) throw Error(ErrorCode::NotAGroup, "G must contain 1");
  for (Elem x : gs) {
    if (!p.is_tangible(x)) throw Error(ErrorCode::NotAGroup, "G must lie in T", {x});
    bool inv = false;
    for (Elem y : gs) {
      if (!gs.contains(p.mul(x, y))) throw Error(ErrorCode::NotAGroup, "G not closed", {x, y});
      if (p.mul(x, y) == p.one()) inv = true;
    }
    if (!inv) throw Error(ErrorCode::NotAGroup, p.label(x) + " has no inverse in G", {x});
  }
  // coset of b: {bx : x in G}
  std::vector<std::vector<Elem>> coset(n);
  for (Elem b = 0; b < n; ++b) {
    std::set<Elem> s;
    for (Elem x : gs) s.insert(p.mul(b, x));
    coset[b].assign(s.begin(), s.end());
  }
  std::vector<Elem> class_of(n, static_cast<Elem>(-1));
  std::vector<std::vector<Elem>> classes;
  for (Elem b = 0; b < n; ++b) {
    if (class_of[b] != static_cast<Elem>(-1)) continue;
    if (coset[b].front() != b) {
      throw Error(ErrorCode::NotNormal, "cosets do not partition the carrier", {b});
    }
    for (Elem x : coset[b]) {
      if (class_of[x] != static_cast<Elem>(-1)) throw Error(ErrorCode::NotNormal, "cosets overlap", {b, x});
      class_of[x] = static_cast<Elem>(classes.size());
    }
    classes.push_back(coset[b]);
  }
  for (Elem b = 0; b < n; ++b) {
    if (coset[b] != classes[class_of[b]]) throw Error(ErrorCode::NotNormal, "bG is not a class", {b});
  }
  const std::size_t m = classes.size();
  RawHyper r;
  for (const auto& cls : classes) {
    if (cls.size() == 1) {
      r.names.push_back(p.label(cls.front()));
    } else {
      std::string s = "{";
      for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + p.label(cls[i]);
      r.names.push_back(s + "}");
    }
  }
  r.zero = class_of[p.zero()];
  r.one = class_of[p.one()];
  r.mul.assign(m, std::vector<Elem>(m));
  r.hyperadd.assign(m, std::vector<std::vector<Elem>>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      std::set<Elem> prods, sums;
      for (Elem x : classes[i]) {
        for (Elem y : classes[j]) {
          prods.insert(class_of[p.mul(x, y)]);
          sums.insert(class_of[p.add(x, y)]);
        }
      }
      if (prods.size() != 1) throw Error(ErrorCode::NotNormal, "coset product is not a coset", {i, j});
      r.mul[i][j] = *prods.begin();
      r.hyperadd[i][j].assign(sums.begin(), sums.end());
    }
  }
  return validate_hyperstructure(r);
}

/// F_p as a pair: T = F_p^x, A0 = {0}.
inline Pair prime_field(std::size_t prime) {
  if (prime < 2) throw Error(ErrorCode::BadParameter, "p must be at least 2");
  for (std::size_t d = 2; d * d <= prime; ++d) {
    if (prime % d == 0) throw Error(ErrorCode::BadParameter, "p must be prime");
  }
  RawStructure r;
  for (std::size_t i = 0; i < prime; ++i) r.names.push_back(std::to_string(i));
  r.zero = 0;
  r.one = 1;
  r.add.assign(prime, std::vector<Elem>(prime));
  r.mul.assign(prime, std::vector<Elem>(prime));
  for (Elem a = 0; a < prime; ++a) {
    for (Elem b = 0; b < prime; ++b) {
      r.add[a][b] = static_cast<Elem>((a + b) % prime);
      r.mul[a][b] = static_cast<Elem>((a * b) % prime);
    }
  }
  std::vector<Elem> t, a0{0};
  for (Elem a = 1; a < prime; ++a) t.push_back(a);
  return validate_pair(r, t, a0, "F" + std::to_string(prime));
}

/// {0, 1} with 1 + 1 = {0, 1}.
inline HyperStructure krasner() {
  RawHyper r;
  r.names = {"0", "1"};
  r.zero = 0;
  r.one = 1;
  r.mul = {{0, 0}, {0, 1}};
  r.hyperadd = {{{0}, {1}}, {{1}, {0, 1}}};
  return validate_hyperstructure(r);
}

/// {0, 1, -1} with 1 + 1 = {1}, 1 + (-1) = {0, 1, -1}.
inline HyperStructure signs() {
  RawHyper r;
  r.names = {"0", "1", "-1"};
  r.zero = 0;
  r.one = 1;
  r.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  r.hyperadd = {{{0}, {1}, {2}}, {{1}, {1}, {0, 1, 2}}, {{2}, {0, 1, 2}, {2}}};
  return validate_hyperstructure(r);
}

/// K = C_n with zero, x + x = K \ {x}, x + y = {x, y} for distinct nonzero x, y.
inline HyperStructure group_hyperfield(std::size_t order) {
  const FiniteMonoid c = cyclic_group(order);
  const std::size_t n = order + 1;
  RawHyper r;
  r.names.push_back("0");
  for (const auto& s : c.names) r.names.push_back(s);
  r.zero = 0;
  r.one = 1;
  r.mul.assign(n, std::vector<Elem>(n, 0));
  r.hyperadd.assign(n, std::vector<std::vector<Elem>>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a != 0 && b != 0) r.mul[a][b] = 1 + c.op(a - 1, b - 1);
      auto& cell = r.hyperadd[a][b];
      if (a == 0) {
        cell = {b};
      } else if (b == 0) {
        cell = {a};
      } else if (a == b) {
        for (Elem x = 0; x < n; ++x) {
          if (x != a) cell.push_back(x);
        }
      } else {
        cell = {std::min(a, b), std::max(a, b)};
      }
    }
  }
  return validate_hyperstructure(r);
}

/// Functions S -> A with pointwise addition and convolution
/// (f*g)(s) = sum over s's'' = s of f(s')g(s''). Element index is the
/// base-|A| number with f(s_0) most significant.
inline Pair function_pair(const Pair& base, const FiniteMonoid& s, std::size_t cap = default_carrier_cap(),
                          std::string name = {}) {
  validate_monoid(s);
  const std::size_t n = base.size();
  const std::size_t k = s.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / n + 1) throw Error(ErrorCode::CarrierTooLarge, "function pair exceeds carrier cap");
    total *= n;
  }
  if (total > cap) throw Error(ErrorCode::CarrierTooLarge, "function pair exceeds carrier cap " + std::to_string(cap));
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> f(k);
    for (std::size_t i = k; i-- > 0;) {
      f[i] = static_cast<Elem>(idx % n);
      idx /= n;
    }
    return f;
  };
  auto encode = [&](const std::vector<Elem>& f) {
    std::size_t idx = 0;
    for (Elem v : f) idx = idx * n + v;
    return static_cast<Elem>(idx);
  };
  std::vector<std::vector<Elem>> fs(total);
  for (std::size_t i = 0; i < total; ++i) fs[i] = decode(i);
  RawStructure r;
  for (const auto& f : fs) {
    std::string lbl = "[";
    for (std::size_t i = 0; i < k; ++i) lbl += (i ? "," : "") + base.label(f[i]);
    r.names.push_back(lbl + "]");
  }
  std::vector<Elem> zero_f(k, base.zero());
  std::vector<Elem> one_f(k, base.zero());
  one_f[s.unit] = base.one();
  r.zero = encode(zero_f);
  r.one = encode(one_f);
  r.add.assign(total, std::vector<Elem>(total));
  r.mul.assign(total, std::vector<Elem>(total));
  std::vector<Elem> h(k);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      for (std::size_t t = 0; t < k; ++t) h[t] = base.add(fs[i][t], fs[j][t]);
      r.add[i][j] = encode(h);
      std::fill(h.begin(), h.end(), base.zero());
      for (Elem s1 = 0; s1 < k; ++s1) {
        for (Elem s2 = 0; s2 < k; ++s2) {
          const Elem t = s.op(s1, s2);
          h[t] = base.add(h[t], base.mul(fs[i][s1], fs[j][s2]));
        }
      }
      r.mul[i][j] = encode(h);
    }
  }
  std::vector<Elem> t, a0;
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t support = 0;
    bool tangible_values = true, in_a0 = true;
    for (Elem v : fs[i]) {
      if (v != base.zero()) {
        ++support;
        tangible_values = tangible_values && base.is_tangible(v);
      }
      in_a0 = in_a0 && base.in_a0(v);
    }
    if (support == 1 && tangible_values) t.push_back(static_cast<Elem>(i));
    if (in_a0) a0.push_back(static_cast<Elem>(i));
  }
  if (name.empty()) name = "functions(" + base.name() + ")";
  return validate_pair(r, t, a0, std::move(name));
}

}  // namespace pairspec

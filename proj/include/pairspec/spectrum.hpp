#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "pairspec/constructions.hpp"

namespace pairspec {

/// Subset of A x A as a dense mask indexed by couple_index.
using CoupleSet = std::vector<bool>;

inline std::vector<Couple> couples_of(const Congruence& phi) {
  std::vector<Couple> out;
  const auto blocks = phi.blocks();
  for (const auto& blk : blocks) {
    for (Elem x : blk) {
      for (Elem y : blk) out.push_back({x, y});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline CoupleSet to_couple_set(const Congruence& phi) {
  const std::size_t n = phi.size();
  CoupleSet s(n * n, false);
  for (const Couple& c : couples_of(phi)) s[couple_index(n, c)] = true;
  return s;
}

inline CoupleSet twist_set_product(const Pair& p, const Congruence& phi1, const Congruence& phi2) {
  const std::size_t n = p.size();
  CoupleSet out(n * n, false);
  const auto c1 = couples_of(phi1);
  const auto c2 = couples_of(phi2);
  for (const Couple& b : c1) {
    for (const Couple& b2 : c2) out[couple_index(n, twist(p, b, b2))] = true;
  }
  return out;
}

/// First b in phi1, b' in phi2 with b * b' outside phi, if any.
inline std::optional<std::pair<Couple, Couple>> twist_product_escape(const Pair& p,
                                                                     const Congruence& phi1,
                                                                     const Congruence& phi2,
                                                                     const Congruence& phi) {
  const auto c1 = couples_of(phi1);
  const auto c2 = couples_of(phi2);
  for (const Couple& b : c1) {
    for (const Couple& b2 : c2) {
      if (!phi.contains(twist(p, b, b2))) return std::make_pair(b, b2);
    }
  }
  return std::nullopt;
}

inline bool twist_product_within(const Pair& p, const Congruence& phi1, const Congruence& phi2,
                                 const Congruence& phi) {
  return !twist_product_escape(p, phi1, phi2, phi).has_value();
}

/// The sets S_1 = Phi, S_{i+1} = {b : b*b in S_i} and their union.
struct SqrtResult {
  CoupleSet members;
  std::vector<std::optional<std::size_t>> depth;  // least i with b in S_i
  std::size_t iterations = 1;                      // index of the last new S_i
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool compatible = false;

  bool is_congruence() const { return reflexive && symmetric && transitive && compatible; }
  bool contains(std::size_t n, Couple c) const { return members[couple_index(n, c)]; }
};

inline SqrtResult sqrt_phi(const Pair& p, const Congruence& phi) {
  const auto n = static_cast<Elem>(p.size());
  const std::size_t N = static_cast<std::size_t>(n) * n;
  SqrtResult r;
  r.members = to_couple_set(phi);
  r.depth.assign(N, std::nullopt);
  for (std::size_t i = 0; i < N; ++i) {
    if (r.members[i]) r.depth[i] = 1;
  }
  for (std::size_t level = 2;; ++level) {
    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < N; ++i) {
      if (r.members[i]) continue;
      const Couple b = couple_at(n, i);
      if (r.members[couple_index(n, twist_square(p, b))]) added.push_back(i);
    }
    if (added.empty()) break;
    for (std::size_t i : added) {
      r.members[i] = true;
      r.depth[i] = level;
    }
    r.iterations = level;
  }
  auto in = [&](Elem x, Elem y) { return r.members[static_cast<std::size_t>(x) * n + y]; };
  r.reflexive = r.symmetric = r.transitive = r.compatible = true;
  for (Elem x = 0; x < n; ++x) {
    r.reflexive = r.reflexive && in(x, x);
    for (Elem y = 0; y < n; ++y) {
      if (!in(x, y)) continue;
      if (!in(y, x)) r.symmetric = false;
      for (Elem z = 0; z < n; ++z) {
        if (in(y, z) && !in(x, z)) r.transitive = false;
        if (!in(p.add(x, z), p.add(y, z)) || !in(p.mul(z, x), p.mul(z, y)) ||
            !in(p.mul(x, z), p.mul(y, z))) {
          r.compatible = false;
        }
      }
    }
  }
  return r;
}

/// Least k >= 1 with (1 + ke, ke) in phi; exact since ke is eventually periodic.
inline std::optional<std::size_t> congruence_e_type(const Pair& p, const Congruence& phi) {
  if (!p.property_n()) return std::nullopt;
  const SumOrbit o = sum_orbit(p.structure(), p.e());
  for (std::size_t k = 1; k <= o.terms.size(); ++k) {
    const Elem ke = o.at(k);
    if (phi.related(p.add(p.one(), ke), ke)) return k;
  }
  return std::nullopt;
}

struct ImproperElement {
  Elem a = 0;
  Elem b = 0;
  bool very_improper = false;
  friend bool operator==(const ImproperElement&, const ImproperElement&) = default;
};

inline bool is_improper(const Pair& p, Couple c) {
  return p.is_tangible(c.first) && p.in_a0(c.second);
}

inline bool is_very_improper(const Pair& p, Couple c) {
  return is_improper(p, c) && p.add(c.first, c.second) == c.first;
}

inline std::vector<ImproperElement> improper_scan(const Pair& p, const Congruence& phi) {
  std::vector<ImproperElement> out;
  for (Elem a : p.tangible()) {
    for (Elem b : p.a_zero()) {
      if (phi.related(a, b)) out.push_back({a, b, p.add(a, b) == a});
    }
  }
  return out;
}

struct CongruenceClassification {
  bool radical = false;
  bool strongly_prime = false;
  std::optional<bool> prime;        // empty without a lattice
  std::optional<bool> semiprime;
  std::optional<bool> irreducible;
  bool t_cancellative = false;
  bool proper = false;
  bool weakly_proper = false;
  std::optional<bool> contains_1e;  // empty without Property N
  std::optional<std::size_t> e_type;
};

inline bool is_radical(const Pair& p, const Congruence& phi) {
  const auto n = static_cast<Elem>(p.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!phi.related(x, y) && phi.contains(twist_square(p, {x, y}))) return false;
    }
  }
  return true;
}

inline bool is_strongly_prime(const Pair& p, const Congruence& phi) {
  const auto n = static_cast<Elem>(p.size());
  const std::size_t N = static_cast<std::size_t>(n) * n;
  std::vector<Couple> outside;
  for (std::size_t i = 0; i < N; ++i) {
    const Couple b = couple_at(n, i);
    if (!phi.contains(b)) outside.push_back(b);
  }
  for (const Couple& b : outside) {
    for (const Couple& b2 : outside) {
      if (phi.contains(twist(p, b, b2))) return false;
    }
  }
  return true;
}

inline bool is_t_cancellative(const Pair& p, const Congruence& phi) {
  const auto n = static_cast<Elem>(p.size());
  for (Elem a : p.tangible()) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!phi.related(x, y) && phi.related(p.mul(a, x), p.mul(a, y))) return false;
      }
    }
  }
  return true;
}

/// Elementwise flags only.
inline CongruenceClassification classify_congruence(const Pair& p, const Congruence& phi) {
  CongruenceClassification c;
  c.radical = is_radical(p, phi);
  c.strongly_prime = is_strongly_prime(p, phi);
  c.t_cancellative = is_t_cancellative(p, phi);
  const auto imp = improper_scan(p, phi);
  c.proper = imp.empty();
  c.weakly_proper = std::none_of(imp.begin(), imp.end(), [](const auto& i) { return i.very_improper; });
  if (p.property_n()) {
    c.contains_1e = phi.related(p.one(), p.e());
    c.e_type = congruence_e_type(p, phi);
  }
  return c;
}

/// All flags. Prime, semiprime and irreducible only need the upper covers:
/// the twist product of sets is monotone, and two distinct covers meet in phi.
inline CongruenceClassification classify_congruence(const CongruenceLattice& lat, std::size_t i) {
  const Pair& p = lat.pair();
  const Congruence& phi = lat.at(i);
  CongruenceClassification c = classify_congruence(p, phi);
  const auto& covers = lat.covers(i);
  c.irreducible = covers.size() <= 1;
  bool semiprime = true;
  bool prime = true;
  for (std::size_t a = 0; a < covers.size(); ++a) {
    for (std::size_t b = a; b < covers.size(); ++b) {
      if (twist_product_within(p, lat.at(covers[a]), lat.at(covers[b]), phi)) {
        prime = false;
        if (a == b) semiprime = false;
      }
    }
  }
  c.prime = prime;
  c.semiprime = semiprime;
  return c;
}

/// Decides whether two finite posets (given by <= matrices) are
/// order-isomorphic, returning a witness map P -> Q.
inline std::optional<std::vector<std::size_t>> find_order_isomorphism(
    const std::vector<std::vector<bool>>& lp, const std::vector<std::vector<bool>>& lq) {
  const std::size_t n = lp.size();
  if (lq.size() != n) return std::nullopt;
  auto signature = [n](const std::vector<std::vector<bool>>& l, std::size_t x) {
    std::size_t up = 0, down = 0;
    for (std::size_t y = 0; y < n; ++y) {
      up += l[x][y];
      down += l[y][x];
    }
    return std::make_pair(up, down);
  };
  std::vector<std::pair<std::size_t, std::size_t>> sp(n), sq(n);
  for (std::size_t x = 0; x < n; ++x) {
    sp[x] = signature(lp, x);
    sq[x] = signature(lq, x);
  }
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || sp[x] != sq[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        ok = lp[x][z] == lq[y][map[z]] && lp[z][x] == lq[map[z]][y];
      }
      if (!ok) continue;
      used[y] = true;
      map[x] = y;
      if (go(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

inline std::vector<std::vector<bool>> order_matrix(const CongruenceLattice& lat,
                                                   const std::vector<std::size_t>& subset) {
  std::vector<std::vector<bool>> m(subset.size(), std::vector<bool>(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) m[a][b] = lat.leq(subset[a], subset[b]);
  }
  return m;
}

/// The subalgebra Ae with unit e, and the map a -> ae into it.
struct AePair {
  Pair pair;
  std::vector<Elem> members;  // carrier indices of Ae in A, increasing
  std::vector<Elem> project;  // a -> index of ae in Ae
};

/// Empty when Ae is not closed under the operations.
inline std::optional<AePair> ae_pair(const Pair& p) {
  const auto n = static_cast<Elem>(p.size());
  const Elem e = p.e();
  std::vector<bool> in(n, false);
  for (Elem a = 0; a < n; ++a) in[p.mul(a, e)] = true;
  AePair r;
  std::vector<Elem> local(n, static_cast<Elem>(-1));
  for (Elem x = 0; x < n; ++x) {
    if (in[x]) {
      local[x] = static_cast<Elem>(r.members.size());
      r.members.push_back(x);
    }
  }
  const std::size_t m = r.members.size();
  RawStructure raw;
  for (Elem x : r.members) raw.names.push_back(p.label(x));
  raw.zero = local[p.mul(p.zero(), e)];
  raw.one = local[e];
  raw.add.assign(m, std::vector<Elem>(m));
  raw.mul.assign(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      const Elem s = p.add(r.members[i], r.members[j]);
      const Elem t = p.mul(r.members[i], r.members[j]);
      if (!in[s] || !in[t]) return std::nullopt;
      raw.add[i][j] = local[s];
      raw.mul[i][j] = local[t];
    }
  }
  FiniteStructure s;
  try {
    s = validate_structure(raw);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<Elem> t, a0;
  for (Elem a : p.tangible()) t.push_back(local[p.mul(a, e)]);
  for (Elem x : p.a_zero()) {
    if (in[x]) a0.push_back(local[x]);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  r.pair = make_unchecked_pair(std::move(s), ElementSet(m, t), ElementSet(m, a0), p.name() + "*e");
  r.project.resize(n);
  for (Elem a = 0; a < n; ++a) r.project[a] = local[p.mul(a, e)];
  return r;
}

/// Phi e: the congruence of Ae generated by {(b1 e, b2 e) : (b1, b2) in Phi}.
inline Congruence image_in_ae(const AePair& ae, const Congruence& phi) {
  std::vector<Couple> gens;
  const auto reps = phi.representatives();
  for (Elem x = 0; x < phi.size(); ++x) {
    const Elem r = reps[phi.block_of(x)];
    if (r != x) gens.push_back({ae.project[r], ae.project[x]});
  }
  return generated_congruence(ae.pair, gens);
}

/// Preimage of a congruence of A/Phi under the quotient map.
inline Congruence pullback(const Congruence& quotient_map, const Congruence& psi) {
  std::vector<Elem> labels(quotient_map.size());
  for (Elem x = 0; x < labels.size(); ++x) labels[x] = psi.block_of(quotient_map.block_of(x));
  return Congruence::from_labels(labels);
}

/// Outcome of comparing two spectra.
struct IsomorphismVerdict {
  bool applicable = false;
  bool canonical_map = false;  // the natural map is an order-isomorphism
  bool abstract = false;       // some order-isomorphism exists
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::string note;

  bool holds() const { return canonical_map || abstract; }
};

struct SpectrumReport {
  std::size_t lattice_size = 0;
  std::vector<CongruenceClassification> classes;
  std::vector<std::size_t> hspec;
  std::vector<std::size_t> spec_e;
  std::vector<std::size_t> strongly_prime;
  std::vector<std::size_t> radical;
  std::vector<std::size_t> maximal_proper;
  std::vector<std::size_t> maximal_weakly_proper;
  /// rd(i): every radical congruence contains (1, e), for positive e-type.
  std::optional<bool> radical_contains_1e;
  IsomorphismVerdict ae_spectrum;        // hSpec(A) vs hSpec(Ae)
  IsomorphismVerdict diag_e_spectrum;    // Spec_e(A) vs hSpec(A/Diag_e)
};

inline std::vector<CongruenceClassification> classify_all(const CongruenceLattice& lat) {
  std::vector<CongruenceClassification> out;
  out.reserve(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) out.push_back(classify_congruence(lat, i));
  return out;
}

inline std::vector<std::size_t> maximal_among(const CongruenceLattice& lat,
                                              const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (std::size_t a : subset) {
    bool maximal = true;
    for (std::size_t b : subset) {
      if (a != b && lat.leq(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

inline std::vector<std::size_t> prime_indices(const std::vector<CongruenceClassification>& cls) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].prime.value_or(false)) out.push_back(i);
  }
  return out;
}

/// hSpec(A) against hSpec(Ae) through Phi -> Phi e.
inline IsomorphismVerdict compare_with_ae(const CongruenceLattice& lat,
                                          const std::vector<std::size_t>& hspec,
                                          std::size_t cap = default_congruence_cap()) {
  IsomorphismVerdict v;
  const Pair& p = lat.pair();
  const auto ae = ae_pair(p);
  if (!ae) {
    v.note = "Ae is not closed under the operations";
    return v;
  }
  v.applicable = true;
  const CongruenceLattice lae = enumerate_congruences(ae->pair, cap);
  const auto hspec_ae = prime_indices(classify_all(lae));
  v.left_size = hspec.size();
  v.right_size = hspec_ae.size();
  std::vector<std::size_t> image;
  bool ok = hspec.size() == hspec_ae.size();
  for (std::size_t i : hspec) {
    const auto idx = lae.index_of(image_in_ae(*ae, lat.at(i)));
    if (!idx || std::find(hspec_ae.begin(), hspec_ae.end(), *idx) == hspec_ae.end()) {
      ok = false;
      break;
    }
    image.push_back(*idx);
  }
  if (ok) {
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  for (std::size_t a = 0; a < image.size() && ok; ++a) {
    for (std::size_t b = 0; b < image.size() && ok; ++b) {
      ok = lat.leq(hspec[a], hspec[b]) == lae.leq(image[a], image[b]);
    }
  }
  v.canonical_map = ok;
  v.abstract = find_order_isomorphism(order_matrix(lat, hspec), order_matrix(lae, hspec_ae)).has_value();
  return v;
}

/// Spec_e(A) against hSpec(A/Diag_e) through pullback along the quotient map.
inline IsomorphismVerdict compare_with_diag_e(const CongruenceLattice& lat,
                                              const std::vector<std::size_t>& spec_e,
                                              std::size_t cap = default_congruence_cap()) {
  IsomorphismVerdict v;
  const Pair& p = lat.pair();
  v.applicable = true;
  const Congruence de = diag_e(p);
  const Pair q = quotient_pair(p, de);
  const CongruenceLattice lq = enumerate_congruences(q, cap);
  const auto hspec_q = prime_indices(classify_all(lq));
  v.left_size = spec_e.size();
  v.right_size = hspec_q.size();
  std::vector<std::size_t> pulled;
  bool ok = true;
  for (std::size_t j : hspec_q) {
    const auto idx = lat.index_of(pullback(de, lq.at(j)));
    if (!idx) {
      ok = false;
      break;
    }
    pulled.push_back(*idx);
  }
  if (ok) {
    auto a = pulled;
    auto b = spec_e;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ok = a == b;
  }
  v.canonical_map = ok;
  v.abstract = find_order_isomorphism(order_matrix(lat, spec_e), order_matrix(lq, hspec_q)).has_value();
  return v;
}

inline SpectrumReport spectrum_report(const CongruenceLattice& lat,
                                      std::size_t cap = default_congruence_cap()) {
  SpectrumReport r;
  const Pair& p = lat.pair();
  r.lattice_size = lat.size();
  r.classes = classify_all(lat);
  std::vector<std::size_t> proper, weakly;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& c = r.classes[i];
    if (c.prime.value_or(false)) {
      r.hspec.push_back(i);
      if (c.e_type) r.spec_e.push_back(i);
    }
    if (c.strongly_prime) r.strongly_prime.push_back(i);
    if (c.radical) r.radical.push_back(i);
    if (c.proper) proper.push_back(i);
    if (c.weakly_proper) weakly.push_back(i);
  }
  r.maximal_proper = maximal_among(lat, proper);
  r.maximal_weakly_proper = maximal_among(lat, weakly);

  if (!p.property_n()) {
    r.ae_spectrum.note = r.diag_e_spectrum.note = "no Property N";
    return r;
  }
  const bool positive = positive_e_type(p).has_value();
  const bool central = is_e_central(p);
  if (positive) {
    r.radical_contains_1e = std::all_of(r.radical.begin(), r.radical.end(), [&](std::size_t i) {
      return *r.classes[i].contains_1e;
    });
  }
  if (positive && central) {
    r.ae_spectrum = compare_with_ae(lat, r.hspec, cap);
  } else {
    r.ae_spectrum.note = "requires e-central and positive e-type";
  }
  if (central) {
    r.diag_e_spectrum = compare_with_diag_e(lat, r.spec_e, cap);
  } else {
    r.diag_e_spectrum.note = "requires e-central";
  }
  return r;
}

inline SpectrumReport spectrum_report(const Pair& p, std::size_t cap = default_congruence_cap()) {
  return spectrum_report(enumerate_congruences(p, cap), cap);
}

struct DisjointResult {
  bool hypothesis_held = false;
  std::optional<std::pair<Couple, Couple>> hypothesis_witness;  // s1, s2 whose principal congruences fail
  std::vector<std::size_t> maximal;                               // all maximal members disjoint from S
  std::optional<std::size_t> chosen;
  bool prime = false;
};

/// Maximal congruences disjoint from S. The multiplicativity hypothesis is
/// monotone, so it is enough to test the principal congruences of S.
inline DisjointResult maximal_disjoint_congruence(const CongruenceLattice& lat,
                                                  const std::vector<Couple>& s,
                                                  bool require_hypothesis = true) {
  const Pair& p = lat.pair();
  for (const Couple& c : s) {
    if (c.first == c.second) {
      throw Error(ErrorCode::NoDisjointCongruence, "S meets the diagonal", {c.first, c.second});
    }
  }
  DisjointResult r;
  r.hypothesis_held = true;
  std::vector<Congruence> principals;
  for (const Couple& c : s) principals.push_back(generated_congruence(p, {c}));
  for (std::size_t a = 0; a < s.size() && r.hypothesis_held; ++a) {
    for (std::size_t b = 0; b < s.size() && r.hypothesis_held; ++b) {
      const CoupleSet prod = twist_set_product(p, principals[a], principals[b]);
      const bool meets = std::any_of(s.begin(), s.end(), [&](const Couple& c) {
        return prod[couple_index(p.size(), c)];
      });
      if (!meets) {
        r.hypothesis_held = false;
        r.hypothesis_witness = std::make_pair(s[a], s[b]);
      }
    }
  }
  if (!r.hypothesis_held && require_hypothesis) {
    const auto& w = *r.hypothesis_witness;
    throw Error(ErrorCode::HypothesisFails, "S is not closed under twist products of congruences",
                {w.first.first, w.first.second, w.second.first, w.second.second});
  }
  std::vector<std::size_t> disjoint;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (std::none_of(s.begin(), s.end(), [&](const Couple& c) { return lat.at(i).contains(c); })) {
      disjoint.push_back(i);
    }
  }
  r.maximal = maximal_among(lat, disjoint);
  if (!r.maximal.empty()) {
    r.chosen = r.maximal.front();
    r.prime = *classify_congruence(lat, *r.chosen).prime;
  }
  return r;
}

struct ProperReport {
  std::vector<std::size_t> maximal_proper;
  std::vector<std::size_t> maximal_weakly_proper;
  /// Per maximal weakly proper congruence: no twist product of two lattice
  /// congruences that each contain a very improper element lies inside it.
  std::vector<bool> weakly_prime_proper;
};

inline ProperReport maximal_proper_congruences(const CongruenceLattice& lat) {
  const Pair& p = lat.pair();
  ProperReport r;
  std::vector<std::size_t> proper, weakly;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto imp = improper_scan(p, lat.at(i));
    if (imp.empty()) proper.push_back(i);
    if (std::none_of(imp.begin(), imp.end(), [](const auto& x) { return x.very_improper; })) {
      weakly.push_back(i);
    }
  }
  r.maximal_proper = maximal_among(lat, proper);
  r.maximal_weakly_proper = maximal_among(lat, weakly);
  // minimal congruences containing a very improper element are principal
  std::vector<Congruence> gens;
  for (Elem a : p.tangible()) {
    for (Elem b : p.a_zero()) {
      if (p.add(a, b) == a) gens.push_back(generated_congruence(p, {Couple{a, b}}));
    }
  }
  for (std::size_t i : r.maximal_weakly_proper) {
    bool ok = true;
    for (std::size_t a = 0; a < gens.size() && ok; ++a) {
      for (std::size_t b = 0; b < gens.size() && ok; ++b) {
        ok = !twist_product_within(p, gens[a], gens[b], lat.at(i));
      }
    }
    r.weakly_prime_proper.push_back(ok);
  }
  return r;
}

/// (1 + k'e, k'e) squared, written as (1 + k''e, k''e) when possible.
inline std::optional<std::size_t> prs2_square_index(const Pair& p, std::size_t k_prime) {
  const SumOrbit o = sum_orbit(p.structure(), p.e());
  const Elem ke = o.at(k_prime);
  const Couple sq = twist_square(p, {p.add(p.one(), ke), ke});
  for (std::size_t k = 1; k <= o.terms.size() + k_prime * k_prime * 2 + 2 * k_prime; ++k) {
    const Elem kke = o.at(k);
    if (sq.first == p.add(p.one(), kke) && sq.second == kke) return k;
  }
  return std::nullopt;
}

/// Prime, semiprime and irreducible read directly off the definitions,
/// quantifying over every lattice member above phi.
struct LiteralFlags {
  bool prime = true;
  bool semiprime = true;
  bool irreducible = true;
};

inline LiteralFlags literal_flags(const CongruenceLattice& lat, std::size_t i) {
  LiteralFlags f;
  const Pair& p = lat.pair();
  const Congruence& phi = lat.at(i);
  std::vector<std::size_t> above;
  for (std::size_t j = 0; j < lat.size(); ++j) {
    if (j != i && lat.leq(i, j)) above.push_back(j);
  }
  for (std::size_t a = 0; a < above.size(); ++a) {
    for (std::size_t b = a; b < above.size(); ++b) {
      const Congruence& p1 = lat.at(above[a]);
      const Congruence& p2 = lat.at(above[b]);
      if (f.irreducible && a != b && meet(p1, p2) == phi) f.irreducible = false;
      if ((f.prime || (a == b && f.semiprime)) && twist_product_within(p, p1, p2, phi)) {
        f.prime = false;
        if (a == b) f.semiprime = false;
      }
    }
  }
  return f;
}

}  // namespace pairspec

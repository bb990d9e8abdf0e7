#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pairspec/spectrum.hpp"

namespace pairspec {

/// A concrete violation: carrier elements, congruences, and small integers
/// (such as k in ke), tagged with the sub-statement they refute.
struct Witness {
  std::string part;
  std::vector<Elem> elements;
  std::vector<Congruence> congruences;
  std::vector<std::size_t> numbers;
};

struct CheckReport {
  std::string check_id;
  bool hypotheses_held = false;
  std::optional<bool> passed;
  std::optional<Witness> counterexample;
  std::string note;
  double runtime_ms = 0.0;
};

/// Lazily computed data shared by the checks of one pair.
class CheckContext {
 public:
  explicit CheckContext(Pair p, std::size_t cap = default_congruence_cap())
      : pair_(std::move(p)), cap_(cap) {}

  const Pair& pair() const { return pair_; }
  std::size_t cap() const { return cap_; }

  const PairClassification& classification() {
    if (!classification_) classification_ = classify_pair(pair_);
    return *classification_;
  }

  const CongruenceLattice& lattice() {
    if (!lattice_) lattice_ = std::make_unique<CongruenceLattice>(enumerate_congruences(pair_, cap_));
    return *lattice_;
  }

  const std::vector<CongruenceClassification>& congruence_classes() {
    if (!classes_) classes_ = classify_all(lattice());
    return *classes_;
  }

  const std::vector<LiteralFlags>& literal() {
    if (!literal_) {
      literal_.emplace();
      for (std::size_t i = 0; i < lattice().size(); ++i) literal_->push_back(literal_flags(lattice(), i));
    }
    return *literal_;
  }

  const std::optional<AePair>& ae() {
    if (!ae_done_) {
      ae_ = ae_pair(pair_);
      ae_done_ = true;
    }
    return ae_;
  }

  bool has_n() const { return pair_.property_n().has_value(); }
  bool e_central() { return has_n() && classification().e_central.value_or(false); }
  bool positive() { return has_n() && classification().positive_e_type.has_value(); }

  std::size_t index(const Congruence& c) {
    const auto idx = lattice().index_of(c);
    if (!idx) throw Error(ErrorCode::NotACongruence, "witness congruence is not in the lattice");
    return *idx;
  }

 private:
  Pair pair_;
  std::size_t cap_;
  std::optional<PairClassification> classification_;
  std::unique_ptr<CongruenceLattice> lattice_;
  std::optional<std::vector<CongruenceClassification>> classes_;
  std::optional<std::vector<LiteralFlags>> literal_;
  std::optional<AePair> ae_;
  bool ae_done_ = false;
};

/// Result of the search half of a check.
struct Outcome {
  bool hypotheses = false;
  std::optional<Witness> counterexample;
  std::string note;
};

struct CheckDef {
  std::string id;
  std::string statement;
  bool needs_lattice = false;
  std::function<Outcome(CheckContext&)> run;
  /// True when the statement holds at the witness.
  std::function<bool(CheckContext&, const Witness&)> holds_at;
};

namespace detail {

inline Witness wit(std::string part, std::vector<Elem> el = {}, std::vector<Congruence> cg = {},
                   std::vector<std::size_t> nums = {}) {
  return Witness{std::move(part), std::move(el), std::move(cg), std::move(nums)};
}

inline bool quotient_is_degenerate_idempotent(const Pair& p, const Congruence& phi) {
  const Pair q = quotient_pair(p, phi);
  for (Elem x = 0; x < q.size(); ++x) {
    if (!q.in_a0(x) || q.add(x, x) != x) return false;
  }
  return phi.related(p.witness().one_dagger, p.one());
}

inline bool set_is_congruence(const Pair& p, const CoupleSet& s) {
  const auto n = static_cast<Elem>(p.size());
  auto in = [&](Elem x, Elem y) { return s[static_cast<std::size_t>(x) * n + y]; };
  for (Elem x = 0; x < n; ++x) {
    if (!in(x, x)) return false;
    for (Elem y = 0; y < n; ++y) {
      if (!in(x, y)) continue;
      if (!in(y, x)) return false;
      for (Elem z = 0; z < n; ++z) {
        if (in(y, z) && !in(x, z)) return false;
        if (!in(p.add(x, z), p.add(y, z)) || !in(p.mul(z, x), p.mul(z, y)) ||
            !in(p.mul(x, z), p.mul(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool in_ae(const Pair& p, Elem x) {
  for (Elem a = 0; a < p.size(); ++a) {
    if (p.mul(a, p.e()) == x) return true;
  }
  return false;
}

inline std::optional<std::size_t> least_k_one_plus_ke_in_a0(const Pair& p) {
  const SumOrbit o = sum_orbit(p.structure(), p.e());
  for (std::size_t k = 1; k <= o.terms.size(); ++k) {
    if (p.in_a0(p.add(p.one(), o.at(k)))) return k;
  }
  return std::nullopt;
}

inline Elem kb(const Pair& p, std::size_t k, Elem b) { return p.structure().multiple(k, b); }

/// Where the map Phi -> Phi e fails to be an order-isomorphism hSpec(A) ->
/// hSpec(Ae): a prime with a non-prime image ("image"), two primes with the
/// same image ("collision"), an order mismatch ("order"), or a prime of Ae
/// that is not hit ("missing").
inline std::optional<Witness> ae_map_failure(CheckContext& ctx) {
  const auto& lat = ctx.lattice();
  const auto& cls = ctx.congruence_classes();
  const AePair& ae = *ctx.ae();
  const CongruenceLattice lae = enumerate_congruences(ae.pair, ctx.cap());
  const auto cls_ae = classify_all(lae);
  std::vector<std::size_t> hit(lae.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> images;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!cls[i].prime.value_or(false)) continue;
    const std::size_t j = *lae.index_of(image_in_ae(ae, lat.at(i)));
    if (!cls_ae[j].prime.value_or(false)) return wit("image", {}, {lat.at(i)});
    for (const auto& [i2, j2] : images) {
      if (j2 == j) return wit("collision", {}, {lat.at(i2), lat.at(i)});
      if (lat.leq(i, i2) != lae.leq(j, j2) || lat.leq(i2, i) != lae.leq(j2, j)) {
        return wit("order", {}, {lat.at(i2), lat.at(i)});
      }
    }
    images.emplace_back(i, j);
    hit[j] = 1;
  }
  for (std::size_t j = 0; j < lae.size(); ++j) {
    if (cls_ae[j].prime.value_or(false) && !hit[j]) return wit("missing", {}, {lae.at(j)});
  }
  return std::nullopt;
}

/// Where pullback along A -> A/Diag_e fails to carry hSpec(A/Diag_e) onto
/// Spec_e(A): a prime of the quotient pulled back to a non-member ("pullback"),
/// or a member of Spec_e(A) not of that form ("missing").
inline std::optional<Witness> diag_e_map_failure(CheckContext& ctx) {
  const Pair& p = ctx.pair();
  const auto& lat = ctx.lattice();
  const auto& cls = ctx.congruence_classes();
  const Congruence de = diag_e(p);
  const Pair q = quotient_pair(p, de);
  const CongruenceLattice lq = enumerate_congruences(q, ctx.cap());
  const auto cls_q = classify_all(lq);
  std::vector<bool> hit(lat.size(), false);
  for (std::size_t j = 0; j < lq.size(); ++j) {
    if (!cls_q[j].prime.value_or(false)) continue;
    const std::size_t i = *lat.index_of(pullback(de, lq.at(j)));
    if (!cls[i].prime.value_or(false) || !cls[i].e_type) return wit("pullback", {}, {lq.at(j)});
    hit[i] = true;
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (cls[i].prime.value_or(false) && cls[i].e_type && !hit[i]) return wit("missing", {}, {lat.at(i)});
  }
  return std::nullopt;
}

}  // namespace detail

inline const std::vector<CheckDef>& check_registry() {
  using detail::wit;
  static const std::vector<CheckDef> registry = [] {
    std::vector<CheckDef> r;

    r.push_back({"BF", "twist ideal property, prime iff semiprime and irreducible, meets of semiprime/radical congruences, chains", true,
      [](CheckContext& ctx) {
        Outcome o{true, {}, "chain parts reduce to the endpoints of two-element chains"};
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        const auto n = static_cast<Elem>(p.size());
        auto fail = [&](Witness w) {
          o.counterexample = std::move(w);
          return o;
        };
        for (std::size_t i = 0; i < lat.size(); ++i) {
          for (const Couple& b2 : couples_of(lat.at(i))) {
            for (Elem x = 0; x < n; ++x) {
              for (Elem y = 0; y < n; ++y) {
                if (!lat.at(i).contains(twist(p, {x, y}, b2))) {
                  return fail(wit("ideal", {x, y, b2.first, b2.second}, {lat.at(i)}));
                }
              }
            }
          }
        }
        const auto& lit = ctx.literal();
        const auto& cls = ctx.congruence_classes();
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (lit[i].prime != (lit[i].semiprime && lit[i].irreducible)) return fail(wit("prime", {}, {lat.at(i)}));
        }
        for (std::size_t i = 0; i < lat.size(); ++i) {
          for (std::size_t j = i; j < lat.size(); ++j) {
            const std::size_t m = lat.meet_index(i, j);
            if (lit[i].semiprime && lit[j].semiprime && !lit[m].semiprime) {
              return fail(wit("semiprime-meet", {}, {lat.at(i), lat.at(j)}));
            }
            if (cls[i].radical && cls[j].radical && !cls[m].radical) {
              return fail(wit("radical-meet", {}, {lat.at(i), lat.at(j)}));
            }
            if (lat.leq(i, j) || lat.leq(j, i)) {
              CoupleSet u = to_couple_set(lat.at(i));
              const CoupleSet v = to_couple_set(lat.at(j));
              for (std::size_t k = 0; k < u.size(); ++k) u[k] = u[k] || v[k];
              if (!detail::set_is_congruence(p, u)) return fail(wit("chain", {}, {lat.at(i), lat.at(j)}));
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        if (w.part == "ideal") {
          const Couple b{w.elements[0], w.elements[1]}, b2{w.elements[2], w.elements[3]};
          return !w.congruences[0].contains(b2) || w.congruences[0].contains(twist(p, b, b2));
        }
        if (w.part == "prime") {
          const auto f = literal_flags(lat, ctx.index(w.congruences[0]));
          return f.prime == (f.semiprime && f.irreducible);
        }
        const std::size_t i = ctx.index(w.congruences[0]), j = ctx.index(w.congruences[1]);
        if (w.part == "semiprime-meet") {
          return !(literal_flags(lat, i).semiprime && literal_flags(lat, j).semiprime) ||
                 literal_flags(lat, lat.meet_index(i, j)).semiprime;
        }
        if (w.part == "radical-meet") {
          return !(is_radical(p, lat.at(i)) && is_radical(p, lat.at(j))) ||
                 is_radical(p, meet(lat.at(i), lat.at(j)));
        }
        CoupleSet u = to_couple_set(lat.at(i));
        const CoupleSet v = to_couple_set(lat.at(j));
        for (std::size_t k = 0; k < u.size(); ++k) u[k] = u[k] || v[k];
        return detail::set_is_congruence(p, u);
      }});

    r.push_back({"CHAINS", "meets with proper congruences are proper; very improper products; maximal weakly proper is weakly prime proper", true,
      [](CheckContext& ctx) {
        Outcome o{true, {}, {}};
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!cls[i].proper) continue;
          for (std::size_t j = 0; j < lat.size(); ++j) {
            if (!cls[lat.meet_index(i, j)].proper) {
              o.counterexample = wit("meet", {}, {lat.at(i), lat.at(j)});
              return o;
            }
            if (cls[j].proper && lat.leq(i, j) && !cls[lat.join_index(i, j)].proper) {
              o.counterexample = wit("chain", {}, {lat.at(i), lat.at(j)});
              return o;
            }
          }
        }
        if (!p.structure().flags().semiring() || !ctx.has_n()) {
          o.note = "parts on very improper elements need a semiring pair with Property N";
          return o;
        }
        for (std::size_t i = 0; i < lat.size(); ++i) {
          std::vector<Couple> vi;
          for (const auto& imp : improper_scan(p, lat.at(i))) {
            if (imp.very_improper && detail::in_ae(p, imp.b)) vi.push_back({imp.a, imp.b});
          }
          for (const Couple& c1 : vi) {
            for (const Couple& c2 : vi) {
              if (!is_very_improper(p, twist(p, c1, c2))) {
                o.counterexample = wit("very-improper", {c1.first, c1.second, c2.first, c2.second}, {lat.at(i)});
                return o;
              }
            }
          }
        }
        const ProperReport pr = maximal_proper_congruences(lat);
        for (std::size_t k = 0; k < pr.maximal_weakly_proper.size(); ++k) {
          if (!pr.weakly_prime_proper[k]) {
            o.counterexample = wit("weakly-prime-proper", {}, {lat.at(pr.maximal_weakly_proper[k])});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        auto proper = [&](const Congruence& c) { return improper_scan(p, c).empty(); };
        if (w.part == "meet") return !proper(w.congruences[0]) || proper(meet(w.congruences[0], w.congruences[1]));
        if (w.part == "chain") {
          return !(proper(w.congruences[0]) && proper(w.congruences[1]) && w.congruences[0].refines(w.congruences[1])) ||
                 proper(join(p, w.congruences[0], w.congruences[1]));
        }
        if (w.part == "very-improper") {
          const Couple c1{w.elements[0], w.elements[1]}, c2{w.elements[2], w.elements[3]};
          if (!is_very_improper(p, c1) || !is_very_improper(p, c2) || !w.congruences[0].contains(c1) ||
              !w.congruences[0].contains(c2)) {
            return true;
          }
          return is_very_improper(p, twist(p, c1, c2));
        }
        const ProperReport pr = maximal_proper_congruences(lat);
        const std::size_t i = ctx.index(w.congruences[0]);
        for (std::size_t k = 0; k < pr.maximal_weakly_proper.size(); ++k) {
          if (pr.maximal_weakly_proper[k] == i) return static_cast<bool>(pr.weakly_prime_proper[k]);
        }
        return true;
      }});

    r.push_back({"CONGB", "Cong_b is a congruence containing b when the pair has an e-type", false,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        if (!ctx.has_n() || !ctx.classification().e_type) return o;
        const auto n = static_cast<Elem>(p.size());
        const bool semiring = p.structure().flags().semiring();
        const ElementSet center = distributive_center(p.structure());
        std::size_t equal = 0, total = 0;
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            if (!semiring && !center.contains(p.add(x, y))) continue;
            o.hypotheses = true;
            const CongBResult res = cong_b(p, {x, y});
            ++total;
            equal += res.equals_generated;
            if (!res.is_congruence() || !res.contains_b) {
              o.counterexample = wit("congruence", {x, y});
              return o;
            }
          }
        }
        o.note = "Cong_b equals the generated congruence for " + std::to_string(equal) + " of " +
                 std::to_string(total) + " couples";
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const CongBResult res = cong_b(ctx.pair(), {w.elements[0], w.elements[1]});
        return res.is_congruence() && res.contains_b;
      }});

    r.push_back({"CP", "a proper congruence of a proper pair has a proper quotient", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.classification().proper) return o;
        o.hypotheses = true;
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (cls[i].proper && !is_proper(quotient_pair(ctx.pair(), lat.at(i)))) {
            o.counterexample = wit("quotient", {}, {lat.at(i)});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        return !improper_scan(ctx.pair(), w.congruences[0]).empty() ||
               is_proper(quotient_pair(ctx.pair(), w.congruences[0]));
      }});

    r.push_back({"EFINAL_IDEM", "e-final implies e + e = e", false,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.has_n() || !ctx.classification().e_final.value_or(false)) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        if (p.add(p.e(), p.e()) != p.e()) o.counterexample = wit("idempotent", {p.e()});
        return o;
      },
      [](CheckContext& ctx, const Witness&) {
        const Pair& p = ctx.pair();
        return p.add(p.e(), p.e()) == p.e();
      }});

    r.push_back({"EMUL", "for e-central e-idempotent pairs a -> ae is a projection onto Ae, which is idempotent with unit e", false,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.e_central() || !ctx.classification().e_idempotent.value_or(false)) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const Elem e = p.e();
        for (Elem a = 0; a < p.size(); ++a) {
          const Elem x = p.mul(a, e);
          if (p.mul(x, e) != x || p.mul(e, x) != x || p.add(x, x) != x) {
            o.counterexample = wit("projection", {a});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Elem x = p.mul(w.elements[0], p.e());
        return p.mul(x, p.e()) == x && p.mul(p.e(), x) == x && p.add(x, x) == x;
      }});

    r.push_back({"ESQ", "e-distributive implies e^2 = e + e and e distributes over A0", false,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.has_n() || !ctx.classification().e_distributive.value_or(false)) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const Elem e = p.e();
        if (p.mul(e, e) != p.add(e, e)) {
          o.counterexample = wit("square", {e});
          return o;
        }
        for (Elem b1 : p.a_zero()) {
          for (Elem b2 : p.a_zero()) {
            if (p.mul(e, p.add(b1, b2)) != p.add(p.mul(e, b1), p.mul(e, b2))) {
              o.counterexample = wit("distribute", {b1, b2});
              return o;
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Elem e = p.e();
        if (w.part == "square") return p.mul(e, e) == p.add(e, e);
        const Elem b1 = w.elements[0], b2 = w.elements[1];
        return p.mul(e, p.add(b1, b2)) == p.add(p.mul(e, b1), p.mul(e, b2));
      }});

    r.push_back({"EST", "e times 1-dagger is e", false,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.has_n()) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        for (Elem d : p.witness().all_daggers) {
          if (p.mul(p.e(), d) != p.e()) {
            o.counterexample = wit("dagger", {d});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        return p.mul(p.e(), w.elements[0]) == p.e();
      }});

    r.push_back({"ETYPE_SHALLOW", "shallow e-distributive pairs with 1 + ke in A0 have e-type k, (k,1) or 1", false,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        if (!ctx.has_n() || !ctx.classification().e_distributive.value_or(false) || !ctx.classification().shallow) {
          return o;
        }
        const auto k = detail::least_k_one_plus_ke_in_a0(p);
        if (!k) return o;
        o.hypotheses = true;
        o.note = "k = " + std::to_string(*k);
        std::optional<Elem> bad[3];
        for (Elem b = 0; b < p.size(); ++b) {
          const Elem lhs = p.add(b, detail::kb(p, *k, p.circ(b)));
          if (!bad[0] && lhs != detail::kb(p, *k, p.circ(b))) bad[0] = b;
          if (!bad[1] && lhs != p.circ(b)) bad[1] = b;
          if (!bad[2] && p.add(b, p.circ(b)) != p.circ(b)) bad[2] = b;
        }
        if (bad[0] && bad[1] && bad[2]) o.counterexample = wit("etype", {*bad[0], *bad[1], *bad[2]}, {}, {*k});
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const std::size_t k = w.numbers[0];
        auto lhs = [&](Elem b) { return p.add(b, detail::kb(p, k, p.circ(b))); };
        return lhs(w.elements[0]) == detail::kb(p, k, p.circ(w.elements[0])) ||
               lhs(w.elements[1]) == p.circ(w.elements[1]) ||
               p.add(w.elements[2], p.circ(w.elements[2])) == p.circ(w.elements[2]);
      }});

    r.push_back({"GEN", "b twisted with (z,z) is ((b1+b2)z, (b1+b2)z)", false,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        if (!p.structure().flags().right_distributive) return o;
        o.hypotheses = true;
        const auto n = static_cast<Elem>(p.size());
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            for (Elem z = 0; z < n; ++z) {
              const Elem s = p.mul(p.add(x, y), z);
              if (twist(p, {x, y}, {z, z}) != Couple{s, s}) {
                o.counterexample = wit("diag", {x, y, z});
                return o;
              }
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Elem s = p.mul(p.add(w.elements[0], w.elements[1]), w.elements[2]);
        return twist(p, {w.elements[0], w.elements[1]}, {w.elements[2], w.elements[2]}) == Couple{s, s};
      }});

    r.push_back({"HYPROP", "power-set pairs: e = H \\ {1} over a group gives e-type 2; e = {0,1,-1} gives e-idempotent and e-final", false,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        if (!p.origin() || !ctx.has_n()) return o;
        const SubsetOrigin& org = *p.origin();
        const Subset e = to_subset(org.subsets[p.e()]);
        const Subset all = org.base_size >= 64 ? ~Subset{0} : (Subset{1} << org.base_size) - 1;
        if (org.base_nonzero_group && org.base_neg_one && org.base_size > 2 &&
            e == (all & ~singleton(org.base_one))) {
          o.hypotheses = true;
          for (Elem b = 0; b < p.size(); ++b) {
            if (p.add(b, detail::kb(p, 2, p.circ(b))) != detail::kb(p, 2, p.circ(b))) {
              o.counterexample = wit("etype2", {b});
              return o;
            }
          }
        }
        if (org.base_neg_one &&
            e == (singleton(org.base_zero) | singleton(org.base_one) | singleton(*org.base_neg_one))) {
          o.hypotheses = true;
          const auto& c = ctx.classification();
          if (!c.e_idempotent.value_or(false) || !c.e_final.value_or(false)) {
            o.counterexample = wit("efinal");
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        if (w.part == "etype2") {
          const Elem b = w.elements[0];
          return p.add(b, detail::kb(p, 2, p.circ(b))) == detail::kb(p, 2, p.circ(b));
        }
        const auto c = classify_pair(p);
        return c.e_idempotent.value_or(false) && c.e_final.value_or(false);
      }});

    r.push_back({"ID1", "quotients by (1,e)-congruences are degenerate and idempotent with 1-dagger = 1", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.has_n()) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        for (const Congruence& phi : lat) {
          if (phi.related(p.one(), p.e()) && !detail::quotient_is_degenerate_idempotent(p, phi)) {
            o.counterexample = wit("quotient", {}, {phi});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        return !w.congruences[0].related(p.one(), p.e()) ||
               detail::quotient_is_degenerate_idempotent(p, w.congruences[0]);
      }});

    r.push_back({"KIND", "2 in A0 gives first kind; for cancellative pairs second kind iff 2 not in A0", false,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        const Elem two = p.add(p.one(), p.one());
        const auto& c = ctx.classification();
        if (p.in_a0(two) && c.t_distributive) {
          o.hypotheses = true;
          for (Elem a : p.tangible()) {
            if (!p.in_a0(p.add(a, a))) {
              o.counterexample = wit("first", {a});
              return o;
            }
          }
        }
        if (c.cancellative) {
          o.hypotheses = true;
          if ((c.kind == PairKind::Second) != !p.in_a0(two)) o.counterexample = wit("cancellative");
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Elem two = p.add(p.one(), p.one());
        if (w.part == "first") return !p.in_a0(two) || p.in_a0(p.add(w.elements[0], w.elements[0]));
        return (pair_kind(p) == PairKind::Second) == !p.in_a0(two);
      }});

    r.push_back({"PRO3", "over an e-central pair, (e,e^2) and (a,be) in Phi give (a,ae) in Phi", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.e_central()) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const Elem e = p.e();
        for (const Congruence& phi : ctx.lattice()) {
          if (!phi.related(e, p.mul(e, e))) continue;
          for (Elem a = 0; a < p.size(); ++a) {
            for (Elem b = 0; b < p.size(); ++b) {
              if (phi.related(a, p.mul(b, e)) && !phi.related(a, p.mul(a, e))) {
                o.counterexample = wit("contains", {a, b}, {phi});
                return o;
              }
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Congruence& phi = w.congruences[0];
        const Elem a = w.elements[0], b = w.elements[1], e = p.e();
        return !phi.related(e, p.mul(e, e)) || !phi.related(a, p.mul(b, e)) || phi.related(a, p.mul(a, e));
      }});

    r.push_back({"PRO3C", "T-cancellative congruences of e-idempotent e-central pairs with an improper element contain (1,e)", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.e_central() || !ctx.classification().e_idempotent.value_or(false)) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (cls[i].t_cancellative && !cls[i].proper && !lat.at(i).related(p.one(), p.e())) {
            o.counterexample = wit("contains", {}, {lat.at(i)});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Congruence& phi = w.congruences[0];
        return !is_t_cancellative(p, phi) || improper_scan(p, phi).empty() || phi.related(p.one(), p.e());
      }});

    r.push_back({"PRS1", "in a radical congruence b twisted with its switch forces b, and (1,b) iff (1+b^2, b+b)", true,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        const auto n = static_cast<Elem>(p.size());
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!cls[i].radical) continue;
          o.hypotheses = true;
          const Congruence& phi = lat.at(i);
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
              if (phi.contains(twist(p, {x, y}, {y, x})) && !phi.related(x, y)) {
                o.counterexample = wit("switch", {x, y}, {phi});
                return o;
              }
            }
            if (phi.related(p.one(), x) != phi.related(p.add(p.one(), p.mul(x, x)), p.add(x, x))) {
              o.counterexample = wit("square", {x}, {phi});
              return o;
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Congruence& phi = w.congruences[0];
        if (!is_radical(p, phi)) return true;
        if (w.part == "switch") {
          const Elem x = w.elements[0], y = w.elements[1];
          return !phi.contains(twist(p, {x, y}, {y, x})) || phi.related(x, y);
        }
        const Elem x = w.elements[0];
        return phi.related(p.one(), x) == phi.related(p.add(p.one(), p.mul(x, x)), p.add(x, x));
      }});

    r.push_back({"PRS2", "for e-distributive pairs: reduced gives (1,e) iff (1+2e, 2e); (1,e),(e,1) lie in the root of congruences of positive e-type", true,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        if (!ctx.has_n() || !ctx.classification().e_distributive.value_or(false)) return o;
        o.hypotheses = true;
        const Elem e = p.e();
        const Elem ee = p.add(e, e);
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        const std::size_t n = p.size();
        if (cls[lat.bottom()].radical) {
          for (const Congruence& phi : lat) {
            if (phi.related(p.one(), e) != phi.related(p.add(p.one(), ee), ee)) {
              o.counterexample = wit("reduced", {}, {phi});
              return o;
            }
          }
        }
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!cls[i].e_type) continue;
          const SqrtResult s = sqrt_phi(p, lat.at(i));
          if (!s.contains(n, {p.one(), e}) || !s.contains(n, {e, p.one()})) {
            o.counterexample = wit("root", {}, {lat.at(i)});
            return o;
          }
          if (i == lat.bottom()) {
            o.note = "(1,e) enters the root of Diag at depth " +
                     std::to_string(*s.depth[couple_index(n, {p.one(), e})]);
          }
        }
        std::string ks;
        for (std::size_t k = 1; k <= 3; ++k) {
          const auto k2 = prs2_square_index(p, k);
          ks += (k > 1 ? ", " : "") + std::to_string(k) + " -> " + (k2 ? std::to_string(*k2) : "none");
        }
        o.note += (o.note.empty() ? "" : "; ") + std::string("squares of (1+k'e, k'e) as k'': ") + ks;
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Congruence& phi = w.congruences[0];
        const Elem e = p.e();
        if (w.part == "reduced") {
          const Elem ee = p.add(e, e);
          return !is_radical(p, diagonal(p)) || phi.related(p.one(), e) == phi.related(p.add(p.one(), ee), ee);
        }
        if (!congruence_e_type(p, phi)) return true;
        const SqrtResult s = sqrt_phi(p, phi);
        return s.contains(p.size(), {p.one(), e}) && s.contains(p.size(), {e, p.one()});
      }});

    r.push_back({"RD1", "for positive e-type, every radical congruence contains (1,e)", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.positive()) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (cls[i].radical && !lat.at(i).related(p.one(), p.e())) {
            o.counterexample = wit("radical", {}, {lat.at(i)});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        return !is_radical(p, w.congruences[0]) || w.congruences[0].related(p.one(), p.e());
      }});

    r.push_back({"RD2", "for e-central pairs of positive e-type, Phi -> Phi e is an order-isomorphism hSpec(A) -> hSpec(Ae)", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.positive() || !ctx.e_central()) return o;
        if (!ctx.ae()) {
          o.note = "Ae is not closed under the operations";
          return o;
        }
        o.hypotheses = true;
        const auto v = compare_with_ae(ctx.lattice(), prime_indices(ctx.congruence_classes()), ctx.cap());
        o.note = "|hSpec(A)| = " + std::to_string(v.left_size) + ", |hSpec(Ae)| = " + std::to_string(v.right_size) +
                 (v.abstract ? ", posets isomorphic" : ", posets not isomorphic");
        o.counterexample = detail::ae_map_failure(ctx);
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const auto& lat = ctx.lattice();
        const AePair& ae = *ctx.ae();
        const CongruenceLattice lae = enumerate_congruences(ae.pair, ctx.cap());
        auto prime_a = [&](const Congruence& c) { return *classify_congruence(lat, ctx.index(c)).prime; };
        auto prime_ae = [&](const Congruence& c) { return *classify_congruence(lae, *lae.index_of(c)).prime; };
        if (w.part == "image") return !prime_a(w.congruences[0]) || prime_ae(image_in_ae(ae, w.congruences[0]));
        if (w.part == "collision") {
          return !(w.congruences[0] == w.congruences[1]) &&
                 !(image_in_ae(ae, w.congruences[0]) == image_in_ae(ae, w.congruences[1]));
        }
        if (w.part == "order") {
          const Congruence a = image_in_ae(ae, w.congruences[0]), b = image_in_ae(ae, w.congruences[1]);
          return w.congruences[0].refines(w.congruences[1]) == a.refines(b) &&
                 w.congruences[1].refines(w.congruences[0]) == b.refines(a);
        }
        if (!prime_ae(w.congruences[0])) return true;
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (prime_a(lat.at(i)) && image_in_ae(ae, lat.at(i)) == w.congruences[0]) return true;
        }
        return false;
      }});

    r.push_back({"SHALLOW1K", "proper congruences of shallow first-kind semiring pairs relate tangibles only when their sum is in A0", true,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        const auto& c = ctx.classification();
        if (!c.shallow || !c.semiring || c.kind != PairKind::First) return o;
        o.hypotheses = true;
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!cls[i].proper) continue;
          for (Elem a1 : p.tangible()) {
            for (Elem a2 : p.tangible()) {
              if (lat.at(i).related(a1, a2) && !p.in_a0(p.add(a1, a2))) {
                o.counterexample = wit("sum", {a1, a2}, {lat.at(i)});
                return o;
              }
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Congruence& phi = w.congruences[0];
        const Elem a1 = w.elements[0], a2 = w.elements[1];
        return !improper_scan(p, phi).empty() || !phi.related(a1, a2) || p.in_a0(p.add(a1, a2));
      }});

    r.push_back({"SP2", "for e-central pairs with Property N, Spec_e(A) matches hSpec(A/Diag_e), and maximal congruences without positive e-type are prime", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.e_central()) return o;
        o.hypotheses = true;
        const auto& lat = ctx.lattice();
        const auto& cls = ctx.congruence_classes();
        std::vector<std::size_t> spec_e;
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (cls[i].prime.value_or(false) && cls[i].e_type) spec_e.push_back(i);
        }
        const auto v = compare_with_diag_e(lat, spec_e, ctx.cap());
        o.note = "|Spec_e(A)| = " + std::to_string(v.left_size) + ", |hSpec(A/Diag_e)| = " +
                 std::to_string(v.right_size) + (v.abstract ? ", posets isomorphic" : ", posets not isomorphic");
        if (auto f = detail::diag_e_map_failure(ctx)) {
          o.counterexample = std::move(f);
          return o;
        }
        std::vector<std::size_t> without;
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!cls[i].e_type) without.push_back(i);
        }
        for (std::size_t i : maximal_among(lat, without)) {
          if (!cls[i].prime.value_or(false)) {
            o.counterexample = wit("maximal", {}, {lat.at(i)});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        if (w.part == "maximal") {
          const std::size_t i = ctx.index(w.congruences[0]);
          if (congruence_e_type(p, lat.at(i))) return true;
          for (std::size_t j = 0; j < lat.size(); ++j) {
            if (j != i && lat.leq(i, j) && !congruence_e_type(p, lat.at(j))) return true;
          }
          return *classify_congruence(lat, i).prime;
        }
        const Congruence de = diag_e(p);
        if (w.part == "pullback") {
          const Pair q = quotient_pair(p, de);
          const CongruenceLattice lq = enumerate_congruences(q, ctx.cap());
          if (!*classify_congruence(lq, *lq.index_of(w.congruences[0])).prime) return true;
          const std::size_t i = ctx.index(pullback(de, w.congruences[0]));
          return *classify_congruence(lat, i).prime && congruence_e_type(p, lat.at(i)).has_value();
        }
        // a member of Spec_e(A) must contain Diag_e to come from the quotient
        const std::size_t i = ctx.index(w.congruences[0]);
        if (!*classify_congruence(lat, i).prime || !congruence_e_type(p, lat.at(i))) return true;
        if (!de.refines(lat.at(i))) return false;
        const Pair q = quotient_pair(p, de);
        const CongruenceLattice lq = enumerate_congruences(q, ctx.cap());
        std::vector<Elem> labels(q.size());
        for (Elem x = 0; x < p.size(); ++x) labels[de.block_of(x)] = lat.at(i).block_of(x);
        const auto j = lq.index_of(Congruence::from_labels(labels));
        return j && *classify_congruence(lq, *j).prime;
      }});

    r.push_back({"TR1", "congruences of A/Diag_e inject into those of A; Phi -> Phi e is a lattice homomorphism, bijective on (1,e)-congruences when e-final", true,
      [](CheckContext& ctx) {
        Outcome o;
        if (!ctx.has_n()) return o;
        o.hypotheses = true;
        const Pair& p = ctx.pair();
        const auto& lat = ctx.lattice();
        const Congruence de = diag_e(p);
        const Pair q = quotient_pair(p, de);
        const CongruenceLattice lq = enumerate_congruences(q, ctx.cap());
        for (std::size_t a = 0; a < lq.size(); ++a) {
          for (std::size_t b = a; b < lq.size(); ++b) {
            const Congruence pa = pullback(de, lq.at(a)), pb = pullback(de, lq.at(b));
            if ((a != b && pa == pb) || !(pullback(de, meet(lq.at(a), lq.at(b))) == meet(pa, pb)) ||
                !(pullback(de, join(q, lq.at(a), lq.at(b))) == join(p, pa, pb))) {
              o.counterexample = wit("injection", {}, {lq.at(a), lq.at(b)});
              return o;
            }
          }
        }
        if (!ctx.e_central() || !ctx.ae()) return o;
        const AePair& ae = *ctx.ae();
        std::vector<Congruence> images;
        for (const Congruence& phi : lat) images.push_back(image_in_ae(ae, phi));
        for (std::size_t a = 0; a < lat.size(); ++a) {
          for (std::size_t b = a; b < lat.size(); ++b) {
            if (!(images[lat.meet_index(a, b)] == meet(images[a], images[b]))) {
              o.counterexample = wit("meet", {}, {lat.at(a), lat.at(b)});
              return o;
            }
            if (!(images[lat.join_index(a, b)] == join(ae.pair, images[a], images[b]))) {
              o.counterexample = wit("join", {}, {lat.at(a), lat.at(b)});
              return o;
            }
          }
        }
        if (!ctx.classification().e_final.value_or(false)) return o;
        const CongruenceLattice lae = enumerate_congruences(ae.pair, ctx.cap());
        std::vector<int> owner(lae.size(), -1);
        for (std::size_t a = 0; a < lat.size(); ++a) {
          if (!lat.at(a).related(p.one(), p.e())) continue;
          const std::size_t j = *lae.index_of(images[a]);
          if (owner[j] >= 0) {
            o.counterexample = wit("bijection", {}, {lat.at(static_cast<std::size_t>(owner[j])), lat.at(a)});
            return o;
          }
          owner[j] = static_cast<int>(a);
        }
        for (std::size_t j = 0; j < lae.size(); ++j) {
          if (owner[j] < 0) {
            o.counterexample = wit("onto", {}, {lae.at(j)});
            return o;
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Congruence de = diag_e(p);
        if (w.part == "injection") {
          const Pair q = quotient_pair(p, de);
          const Congruence &a = w.congruences[0], &b = w.congruences[1];
          const Congruence pa = pullback(de, a), pb = pullback(de, b);
          return (a == b || !(pa == pb)) && pullback(de, meet(a, b)) == meet(pa, pb) &&
                 pullback(de, join(q, a, b)) == join(p, pa, pb);
        }
        const AePair& ae = *ctx.ae();
        if (w.part == "meet" || w.part == "join") {
          const Congruence &a = w.congruences[0], &b = w.congruences[1];
          if (w.part == "meet") return image_in_ae(ae, meet(a, b)) == meet(image_in_ae(ae, a), image_in_ae(ae, b));
          return image_in_ae(ae, join(p, a, b)) == join(ae.pair, image_in_ae(ae, a), image_in_ae(ae, b));
        }
        if (w.part == "bijection") {
          const Congruence &a = w.congruences[0], &b = w.congruences[1];
          return !(a.related(p.one(), p.e()) && b.related(p.one(), p.e())) || a == b ||
                 !(image_in_ae(ae, a) == image_in_ae(ae, b));
        }
        for (const Congruence& phi : ctx.lattice()) {
          if (phi.related(p.one(), p.e()) && image_in_ae(ae, phi) == w.congruences[0]) return true;
        }
        return false;
      }});

    r.push_back({"TWASS", "the twist product is associative over a semiring", false,
      [](CheckContext& ctx) {
        Outcome o;
        const Pair& p = ctx.pair();
        if (!p.structure().flags().semiring()) return o;
        o.hypotheses = true;
        const auto n = static_cast<Elem>(p.size());
        const std::size_t N = static_cast<std::size_t>(n) * n;
        for (std::size_t i = 0; i < N; ++i) {
          for (std::size_t j = 0; j < N; ++j) {
            const Couple bc = twist(p, couple_at(n, i), couple_at(n, j));
            for (std::size_t k = 0; k < N; ++k) {
              const Couple b = couple_at(n, i), c = couple_at(n, j), d = couple_at(n, k);
              if (twist(p, bc, d) != twist(p, b, twist(p, c, d))) {
                o.counterexample = wit("associative", {b.first, b.second, c.first, c.second, d.first, d.second});
                return o;
              }
            }
          }
        }
        return o;
      },
      [](CheckContext& ctx, const Witness& w) {
        const Pair& p = ctx.pair();
        const Couple b{w.elements[0], w.elements[1]}, c{w.elements[2], w.elements[3]}, d{w.elements[4], w.elements[5]};
        return twist(p, twist(p, b, c), d) == twist(p, b, twist(p, c, d));
      }});

    std::sort(r.begin(), r.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    return r;
  }();
  return registry;
}

inline std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : check_registry()) ids.push_back(c.id);
  return ids;
}

inline const CheckDef& find_check(const std::string& id) {
  for (const auto& c : check_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownCheckId, "unknown check id '" + id + "'");
}

inline CheckReport run_check(CheckContext& ctx, const std::string& id) {
  const CheckDef& def = find_check(id);
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out = def.run(ctx);
  CheckReport r;
  r.check_id = def.id;
  r.note = std::move(out.note);
  r.hypotheses_held = out.hypotheses;
  if (out.hypotheses) {
    r.passed = !out.counterexample.has_value();
    r.counterexample = std::move(out.counterexample);
    if (!*r.passed && !ctx.pair().t_distributive()) {
      r.hypotheses_held = false;
      r.passed.reset();
      r.note += std::string(r.note.empty() ? "" : "; ") +
                "violation discounted: multiplication by T does not distribute over addition";
    }
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline CheckReport run_check(const Pair& p, const std::string& id,
                             std::size_t cap = default_congruence_cap()) {
  CheckContext ctx(p, cap);
  return run_check(ctx, id);
}

inline std::vector<CheckReport> run_all(CheckContext& ctx) {
  std::vector<CheckReport> out;
  for (const auto& def : check_registry()) out.push_back(run_check(ctx, def.id));
  return out;
}

inline std::vector<CheckReport> run_all(const Pair& p, std::size_t cap = default_congruence_cap()) {
  CheckContext ctx(p, cap);
  return run_all(ctx);
}

/// A reported counterexample is genuine when the statement fails at it.
inline bool reverify(CheckContext& ctx, const CheckReport& r) {
  if (!r.counterexample) return true;
  return !find_check(r.check_id).holds_at(ctx, *r.counterexample);
}

}  // namespace pairspec

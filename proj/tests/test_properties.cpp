#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pairspec/pairspec.hpp"

using namespace pairspec;

namespace {

std::vector<Pair> catalog_up_to(std::size_t n) {
  std::vector<Pair> out;
  for (const auto& entry : extended_catalog()) {
    Pair p = entry.pair();
    if (p.size() <= n) out.push_back(std::move(p));
  }
  return out;
}

/// The same pair with element i renamed to position perm[i].
Pair relabel(const Pair& p, const std::vector<Elem>& perm) {
  const RawStructure raw = p.structure().raw();
  const std::size_t n = p.size();
  RawStructure r;
  r.names.resize(n);
  r.add.assign(n, std::vector<Elem>(n));
  r.mul.assign(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    r.names[perm[x]] = raw.names[x];
    for (Elem y = 0; y < n; ++y) {
      r.add[perm[x]][perm[y]] = perm[raw.add[x][y]];
      r.mul[perm[x]][perm[y]] = perm[raw.mul[x][y]];
    }
  }
  r.zero = perm[raw.zero];
  r.one = perm[raw.one];
  std::vector<Elem> t, a0;
  for (Elem x : p.tangible()) t.push_back(perm[x]);
  for (Elem x : p.a_zero()) a0.push_back(perm[x]);
  std::sort(t.begin(), t.end());
  std::sort(a0.begin(), a0.end());
  return validate_pair(r, t, a0, p.name());
}

std::vector<Elem> shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Relabeling, ClassificationIsInvariant) {
  std::mt19937 rng(11);
  for (const Pair& p : catalog_up_to(16)) {
    const auto perm = shuffled(p.size(), rng);
    const Pair q = relabel(p, perm);
    const auto a = classify_pair(p), b = classify_pair(q);
    EXPECT_EQ(a.kind, b.kind) << p.name();
    EXPECT_EQ(a.proper, b.proper);
    EXPECT_EQ(a.shallow, b.shallow);
    EXPECT_EQ(a.metatangible, b.metatangible);
    EXPECT_EQ(a.a0_bipotent, b.a0_bipotent);
    EXPECT_EQ(a.admissible, b.admissible);
    EXPECT_EQ(a.e_type, b.e_type) << p.name();
    EXPECT_EQ(a.e_final, b.e_final);
    EXPECT_EQ(a.e_central, b.e_central);
    EXPECT_EQ(a.characteristic, b.characteristic);
    EXPECT_EQ(a.a0_characteristic, b.a0_characteristic);
    ASSERT_EQ(p.property_n().has_value(), q.property_n().has_value());
    if (p.property_n()) EXPECT_EQ(perm[p.e()], q.e()) << p.name();
  }
}

TEST(Relabeling, LatticeAndSpectrumAreInvariant) {
  std::mt19937 rng(12);
  for (const Pair& p : catalog_up_to(9)) {
    const Pair q = relabel(p, shuffled(p.size(), rng));
    const SpectrumReport a = spectrum_report(p), b = spectrum_report(q);
    EXPECT_EQ(a.lattice_size, b.lattice_size) << p.name();
    EXPECT_EQ(a.hspec.size(), b.hspec.size()) << p.name();
    EXPECT_EQ(a.spec_e.size(), b.spec_e.size());
    EXPECT_EQ(a.radical.size(), b.radical.size());
    EXPECT_EQ(a.strongly_prime.size(), b.strongly_prime.size());
    EXPECT_EQ(a.ae_spectrum.holds(), b.ae_spectrum.holds());
    EXPECT_EQ(a.diag_e_spectrum.holds(), b.diag_e_spectrum.holds());
  }
}

TEST(Relabeling, CheckOutcomesAreInvariant) {
  std::mt19937 rng(13);
  for (const Pair& p : catalog_up_to(9)) {
    const Pair q = relabel(p, shuffled(p.size(), rng));
    const auto a = run_all(p), b = run_all(q);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      // a relabeled pair no longer carries its hyperstructure origin
      if (a[i].check_id == "HYPROP") continue;
      EXPECT_EQ(a[i].hypotheses_held, b[i].hypotheses_held) << p.name() << " " << a[i].check_id;
      EXPECT_EQ(a[i].passed, b[i].passed) << p.name() << " " << a[i].check_id;
    }
  }
}

TEST(Quotients, RandomQuotientsValidateAndKeepInvariants) {
  std::mt19937 rng(21);
  for (const Pair& p : catalog_up_to(16)) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(p.size() - 1));
    const auto cls = classify_pair(p);
    for (int round = 0; round < 10; ++round) {
      const Congruence phi = generated_congruence(p, {Couple{pick(rng), pick(rng)}});
      const Pair q = quotient_pair(p, phi);
      EXPECT_EQ(q.size(), phi.block_count());
      const oracle::Tables t(q);
      EXPECT_TRUE(oracle::pair_axioms_hold(t.add, t.mul, t.zero, t.one, t.tangible, t.a0)) << p.name();
      if (cls.proper && improper_scan(p, phi).empty()) EXPECT_TRUE(classify_pair(q).proper) << p.name();
      if (p.property_n() && phi.related(p.one(), p.e())) {
        EXPECT_EQ(q.a_zero().size(), q.size()) << p.name();
        for (Elem x = 0; x < q.size(); ++x) EXPECT_EQ(q.add(x, x), x) << p.name();
      }
    }
  }
}

TEST(Radical, Prs1Identities) {
  for (const Pair& p : catalog_up_to(9)) {
    if (!p.structure().flags().semiring()) continue;
    const auto n = static_cast<Elem>(p.size());
    const oracle::Tables t(p);
    for (const auto& phi : enumerate_congruences(p)) {
      const oracle::Rel r = oracle::relation_of(phi.labels());
      if (!oracle::flags(t, {}, r).radical) continue;
      for (Elem b = 0; b < n; ++b) {
        const Elem lhs = p.add(p.one(), p.mul(b, b));
        EXPECT_EQ(phi.related(p.one(), b), phi.related(lhs, p.add(b, b))) << p.name();
      }
      for (Elem b1 = 0; b1 < n; ++b1) {
        for (Elem b2 = 0; b2 < n; ++b2) {
          const auto tw = oracle::twist(t, {b1, b2}, {b2, b1});
          if (phi.related(tw.first, tw.second)) EXPECT_TRUE(phi.related(b1, b2)) << p.name();
        }
      }
    }
  }
}

TEST(Radical, PositiveETypeRadicalsContainOneE) {
  for (const Pair& p : catalog_up_to(16)) {
    if (!p.property_n() || !classify_pair(p).e_type) continue;
    const oracle::Tables t(p);
    for (const auto& phi : enumerate_congruences(p)) {
      if (oracle::flags(t, {}, oracle::relation_of(phi.labels())).radical) {
        EXPECT_TRUE(phi.related(p.one(), p.e())) << p.name();
      }
    }
  }
}

TEST(Generated, RandomGeneratorSetsAgreeWithOracle) {
  std::mt19937 rng(31);
  for (const Pair& p : catalog_up_to(5)) {
    const oracle::Tables t(p);
    const auto all = oracle::all_congruences(t);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(p.size() - 1));
    for (int round = 0; round < 25; ++round) {
      std::vector<Couple> gens;
      std::vector<std::pair<Elem, Elem>> og;
      for (int k = 0; k < 3; ++k) {
        const Couple c{pick(rng), pick(rng)};
        gens.push_back(c);
        og.push_back({c.first, c.second});
      }
      EXPECT_EQ(generated_congruence(p, gens).labels(), oracle::labels_of(p.size(), oracle::generated(all, og)));
    }
  }
}

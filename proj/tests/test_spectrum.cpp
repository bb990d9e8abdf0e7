#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pairspec/pairspec.hpp"

using namespace pairspec;

namespace {

std::vector<Pair> small_pairs(std::size_t max_size) {
  std::vector<Pair> out;
  for (const auto& entry : extended_catalog()) {
    Pair p = entry.pair();
    if (p.size() <= max_size) out.push_back(std::move(p));
  }
  return out;
}

oracle::Rel rel(const Congruence& c) { return oracle::relation_of(c.labels()); }

bool sqrt_equals(const Pair& p, const SqrtResult& s, const Congruence& phi) {
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = 0; y < p.size(); ++y) {
      if (s.contains(p.size(), {x, y}) != phi.related(x, y)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Flags, CoverFlagsMatchLiteralOracle) {
  for (const Pair& p : small_pairs(7)) {
    const oracle::Tables t(p);
    const auto all = oracle::all_congruences(t);
    const CongruenceLattice lat = enumerate_congruences(p);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto c = classify_congruence(lat, i);
      const auto o = oracle::flags(t, all, rel(lat.at(i)));
      EXPECT_EQ(*c.prime, o.prime) << p.name() << " #" << i;
      EXPECT_EQ(*c.semiprime, o.semiprime) << p.name() << " #" << i;
      EXPECT_EQ(*c.irreducible, o.irreducible) << p.name() << " #" << i;
      EXPECT_EQ(c.radical, o.radical) << p.name() << " #" << i;
      EXPECT_EQ(c.strongly_prime, o.strongly_prime) << p.name() << " #" << i;
      const auto lit = literal_flags(lat, i);
      EXPECT_EQ(lit.prime, o.prime);
      EXPECT_EQ(lit.semiprime, o.semiprime);
      EXPECT_EQ(lit.irreducible, o.irreducible);
    }
  }
}

TEST(Flags, ImplicationsAcrossCatalog) {
  for (const auto& entry : extended_catalog()) {
    const Pair p = entry.pair();
    const CongruenceLattice lat = enumerate_congruences(p);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto c = classify_congruence(lat, i);
      if (c.strongly_prime) EXPECT_TRUE(*c.prime) << entry.id << " #" << i;
      EXPECT_EQ(*c.prime, *c.semiprime && *c.irreducible) << entry.id << " #" << i;
      EXPECT_EQ(c.radical, sqrt_equals(p, sqrt_phi(p, lat.at(i)), lat.at(i))) << entry.id << " #" << i;
    }
  }
}

TEST(Flags, ClassificationWithoutLatticeLeavesLatticeFlagsEmpty) {
  const Pair p = super_boolean();
  const auto c = classify_congruence(p, diagonal(p));
  EXPECT_FALSE(c.prime.has_value());
  EXPECT_FALSE(c.semiprime.has_value());
  EXPECT_FALSE(c.irreducible.has_value());
}

TEST(Flags, IntersectionsOfRadicalAndSemiprime) {
  for (const Pair& p : small_pairs(9)) {
    const CongruenceLattice lat = enumerate_congruences(p);
    const auto cls = classify_all(lat);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (std::size_t j = 0; j < lat.size(); ++j) {
        const std::size_t m = lat.meet_index(i, j);
        if (cls[i].radical && cls[j].radical) EXPECT_TRUE(cls[m].radical) << p.name();
        if (*cls[i].semiprime && *cls[j].semiprime) EXPECT_TRUE(*cls[m].semiprime) << p.name();
      }
    }
  }
}

TEST(Flags, SuperBooleanOneECongruence) {
  const Pair p = super_boolean();
  const CongruenceLattice lat = enumerate_congruences(p);
  const std::size_t i = *lat.index_of(diag_e(p));
  const auto c = classify_congruence(lat, i);
  const auto o = oracle::flags(oracle::Tables(p), oracle::all_congruences(oracle::Tables(p)), rel(lat.at(i)));
  EXPECT_EQ(c.radical, o.radical);
  EXPECT_TRUE(*c.contains_1e);
  EXPECT_EQ(c.e_type, std::optional<std::size_t>{1});
}

TEST(Sqrt, FixedPointsAndDepth) {
  const Pair p = super_boolean();
  const SqrtResult full = sqrt_phi(p, Congruence::full(3));
  EXPECT_TRUE(std::all_of(full.members.begin(), full.members.end(), [](bool b) { return b; }));
  EXPECT_EQ(full.iterations, 1u);

  const SqrtResult d = sqrt_phi(p, diagonal(p));
  EXPECT_TRUE(d.contains(3, {p.one(), p.e()}));
  EXPECT_TRUE(d.contains(3, {p.e(), p.one()}));
  EXPECT_EQ(d.depth[couple_index(3, {p.one(), p.e()})], std::optional<std::size_t>{2});
  EXPECT_EQ(d.depth[couple_index(3, {0, 0})], std::optional<std::size_t>{1});
}

TEST(Sqrt, PositiveETypeContainsOneE) {
  for (const auto& entry : extended_catalog()) {
    const Pair p = entry.pair();
    if (!p.property_n() || !classify_pair(p).e_type) continue;
    const SqrtResult s = sqrt_phi(p, diagonal(p));
    EXPECT_TRUE(s.contains(p.size(), {p.one(), p.e()})) << entry.id;
    EXPECT_TRUE(s.contains(p.size(), {p.e(), p.one()})) << entry.id;
  }
}

TEST(Sqrt, DepthIsConsistentWithSquares) {
  for (const Pair& p : small_pairs(9)) {
    for (const auto& phi : enumerate_congruences(p)) {
      const SqrtResult s = sqrt_phi(p, phi);
      for (std::size_t i = 0; i < s.members.size(); ++i) {
        const Couple b = couple_at(p.size(), i);
        ASSERT_EQ(static_cast<bool>(s.members[i]), s.depth[i].has_value());
        if (s.depth[i] && *s.depth[i] > 1) {
          const auto sq = s.depth[couple_index(p.size(), twist_square(p, b))];
          ASSERT_TRUE(sq.has_value());
          EXPECT_EQ(*sq + 1, *s.depth[i]);
        }
        if (phi.contains(b)) EXPECT_EQ(s.depth[i], std::optional<std::size_t>{1});
      }
    }
  }
}

TEST(Disjoint, SuperBooleanAvoidingOneE) {
  const Pair p = super_boolean();
  const CongruenceLattice lat = enumerate_congruences(p);
  const DisjointResult r = maximal_disjoint_congruence(lat, {{p.one(), p.e()}}, false);
  ASSERT_TRUE(r.chosen);
  for (std::size_t m : r.maximal) {
    EXPECT_FALSE(lat.at(m).contains({p.one(), p.e()}));
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (j != m && lat.leq(m, j)) EXPECT_TRUE(lat.at(j).contains({p.one(), p.e()}));
    }
  }
  EXPECT_EQ(r.prime, *classify_congruence(lat, *r.chosen).prime);
}

TEST(Disjoint, MeetingTheDiagonalIsRejected) {
  const Pair p = super_boolean();
  const CongruenceLattice lat = enumerate_congruences(p);
  try {
    maximal_disjoint_congruence(lat, {{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoDisjointCongruence);
  }
}

TEST(Disjoint, PrimeWhenHypothesisHolds) {
  for (const Pair& p : small_pairs(9)) {
    const CongruenceLattice lat = enumerate_congruences(p);
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) {
        if (x == y) continue;
        const DisjointResult r = maximal_disjoint_congruence(lat, {{x, y}}, false);
        if (!r.chosen) continue;
        EXPECT_EQ(r.prime, *classify_congruence(lat, *r.chosen).prime);
        if (r.hypothesis_held) {
          for (std::size_t m : r.maximal) EXPECT_TRUE(*classify_congruence(lat, m).prime) << p.name();
        } else {
          EXPECT_THROW(maximal_disjoint_congruence(lat, {{x, y}}), Error);
        }
      }
    }
  }
}

TEST(Improper, ScanExamples) {
  for (const auto& entry : extended_catalog()) {
    const Pair p = entry.pair();
    if (classify_pair(p).proper) EXPECT_TRUE(improper_scan(p, diagonal(p)).empty()) << entry.id;
  }
  const Pair sb = super_boolean();
  const auto all = improper_scan(sb, Congruence::full(3));
  EXPECT_NE(std::find(all.begin(), all.end(), ImproperElement{sb.one(), sb.e(), false}), all.end());
  for (const auto& imp : all) {
    EXPECT_TRUE(sb.is_tangible(imp.a) && sb.in_a0(imp.b));
    EXPECT_EQ(imp.very_improper, sb.add(imp.a, imp.b) == imp.a);
  }
}

TEST(Improper, OneKeUnderTheLiteralDefinition) {
  // with e-type k, 1 + ke = ke, which differs from 1, so a + b = a fails
  const Pair p = super_boolean();
  EXPECT_TRUE(is_improper(p, {p.one(), p.e()}));
  EXPECT_FALSE(is_very_improper(p, {p.one(), p.e()}));
  EXPECT_TRUE(is_very_improper(p, {p.one(), p.zero()}));
}

TEST(Proper, MaximalProperAndWeaklyProper) {
  for (const Pair& p : small_pairs(9)) {
    const CongruenceLattice lat = enumerate_congruences(p);
    const ProperReport r = maximal_proper_congruences(lat);
    EXPECT_EQ(r.weakly_prime_proper.size(), r.maximal_weakly_proper.size());
    for (std::size_t i : r.maximal_proper) {
      EXPECT_TRUE(improper_scan(p, lat.at(i)).empty());
      EXPECT_TRUE(classify_congruence(p, lat.at(i)).proper);
    }
    for (std::size_t i : r.maximal_weakly_proper) EXPECT_TRUE(classify_congruence(p, lat.at(i)).weakly_proper);
    if (!p.structure().flags().semiring() || !p.property_n()) continue;
    for (bool b : r.weakly_prime_proper) EXPECT_TRUE(b) << p.name();
  }
}

TEST(Proper, DegeneratePairHasNoProperCongruence) {
  const Pair p = quotient_pair(super_boolean(), diag_e(super_boolean()));
  ASSERT_EQ(p.a_zero().size(), p.size());
  const ProperReport r = maximal_proper_congruences(enumerate_congruences(p));
  EXPECT_TRUE(r.maximal_proper.empty());
}

TEST(Report, SuperBoolean) {
  const SpectrumReport r = spectrum_report(super_boolean());
  EXPECT_FALSE(r.hspec.empty());
  EXPECT_TRUE(r.ae_spectrum.holds());
  EXPECT_TRUE(r.diag_e_spectrum.holds());
  EXPECT_EQ(r.radical_contains_1e, std::optional<bool>{true});
}

TEST(Report, OneElementPair) {
  const Pair p = quotient_pair(super_boolean(), Congruence::full(3));
  const SpectrumReport r = spectrum_report(p);
  EXPECT_EQ(r.lattice_size, 1u);
  // the only congruence has nothing above it, so it is prime vacuously
  EXPECT_EQ(r.hspec, std::vector<std::size_t>{0});
}

TEST(Report, MinimalBipotentSecondKind) {
  const SpectrumReport r = spectrum_report(minimal_bipotent(cyclic_group(2), BipotentKind::Second));
  EXPECT_TRUE(r.diag_e_spectrum.applicable);
  // hSpec has more primes than its image in Ae: the expected counterexample
  EXPECT_FALSE(r.ae_spectrum.holds());
}

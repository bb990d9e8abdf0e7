#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "pairspec/pairspec.hpp"

using namespace pairspec;

namespace {

Elem idx(const Pair& p, const std::string& label) { return *p.structure().index_of(label); }

RawStructure super_boolean_raw() {
  RawStructure r;
  r.names = {"0", "1", "e"};
  r.zero = 0;
  r.one = 1;
  r.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  r.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  return r;
}

/// -inf, 0..4 with max and saturating +; T = {0..4}, A0 = {-inf}.
Pair truncated_max_plus() {
  RawStructure r;
  r.names = {"-inf", "0", "1", "2", "3", "4"};
  r.zero = 0;
  r.one = 1;
  const std::size_t n = 6;
  r.add.assign(n, std::vector<Elem>(n));
  r.mul.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      r.add[a][b] = std::max(a, b);
      r.mul[a][b] = (a == 0 || b == 0) ? 0 : std::min<Elem>(5, a + b - 1);
    }
  }
  return validate_pair(r, std::vector<Elem>{1, 2, 3, 4, 5}, std::vector<Elem>{0}, "max_plus");
}

}  // namespace

TEST(Structure, SuperBooleanTablesValidate) {
  const FiniteStructure s = validate_structure(super_boolean_raw());
  EXPECT_TRUE(s.flags().distributive());
  EXPECT_TRUE(s.flags().mul_associative);
  EXPECT_TRUE(s.flags().commutative_mul);
}

TEST(Structure, AsymmetricAdditionRejected) {
  RawStructure r;
  r.names = {"0", "1"};
  r.zero = 0;
  r.one = 1;
  r.add = {{0, 1}, {0, 1}};
  r.mul = {{0, 0}, {0, 1}};
  try {
    validate_structure(r);
    FAIL() << "expected NonCommutativeAdd";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonCommutativeAdd);
    EXPECT_EQ(e.witness().size(), 2u);
  }
}

TEST(Structure, ZeroLawsEnforced) {
  RawStructure r = super_boolean_raw();
  r.add[0][1] = r.add[1][0] = 2;
  EXPECT_THROW(
      {
        try {
          validate_structure(r);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::ZeroNotNeutral);
          throw;
        }
      },
      Error);
  r = super_boolean_raw();
  r.mul[0][2] = 2;
  try {
    validate_structure(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroNotAbsorbing);
  }
}

TEST(Structure, NonAssociativeAdditionNamesTriple) {
  RawStructure r;
  r.names = {"0", "a", "b"};
  r.zero = 0;
  r.one = 1;
  // (a+a)+b = 0 but a+(a+b) = b
  r.add = {{0, 1, 2}, {1, 2, 1}, {2, 1, 0}};
  r.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  try {
    validate_structure(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonAssociativeAdd);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(Structure, KrasnerPowerSetValidates) {
  const Pair p = power_set_pair(krasner());
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(p.structure().flags().mul_associative);
}

TEST(Pair, SuperBooleanIsAValidPair) {
  const Pair p = super_boolean();
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(pair_kind(p), PairKind::First);
  ASSERT_TRUE(p.property_n());
  EXPECT_EQ(p.witness().one_dagger, idx(p, "1"));
  EXPECT_EQ(p.e(), idx(p, "e"));
}

TEST(Pair, MissingZeroInA0Rejected) {
  try {
    validate_pair(super_boolean_raw(), std::vector<Elem>{1}, std::vector<Elem>{2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::A0NotSubmodule);
  }
}

TEST(Pair, TangibleSetMustContainOne) {
  const Pair p = standard_supertropical(cyclic_group(2), {0, 1});
  try {
    validate_pair(p.structure().raw(), std::vector<Elem>{idx(p, "g")}, p.a_zero().members());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TNotClosed);
  }
}

TEST(Pair, MinimalBipotentWitnesses) {
  const Pair first = minimal_bipotent(cyclic_group(2), BipotentKind::First);
  EXPECT_EQ(first.size(), 4u);
  ASSERT_TRUE(first.property_n());
  EXPECT_EQ(first.witness().one_dagger, idx(first, "1"));

  const Pair second = minimal_bipotent(cyclic_group(2), BipotentKind::Second);
  ASSERT_TRUE(second.property_n());
  EXPECT_EQ(second.witness().one_dagger, idx(second, "g"));
  EXPECT_EQ(second.e(), idx(second, "inf"));
  EXPECT_EQ(height(first, idx(first, "inf")), 2u);

  EXPECT_FALSE(minimal_bipotent(cyclic_group(1), BipotentKind::Second).property_n());
}

TEST(Pair, TruncatedMaxPlusLacksPropertyN) {
  const Pair p = truncated_max_plus();
  EXPECT_FALSE(p.property_n());
  EXPECT_THROW(p.e(), Error);
  const CheckReport r = run_check(p, "EST");
  EXPECT_FALSE(r.hypotheses_held);
  EXPECT_FALSE(r.passed.has_value());
}

TEST(Classify, SuperBoolean) {
  const Pair p = super_boolean();
  const auto c = classify_pair(p);
  ASSERT_TRUE(c.e_type);
  EXPECT_EQ(*c.e_type, (ETypeValue{1, 1}));
  EXPECT_TRUE(c.e_final.value());
  ASSERT_TRUE(c.characteristic);
  EXPECT_EQ(*c.characteristic, (Characteristic{1, 2}));
  EXPECT_EQ(height(p, idx(p, "e")), 2u);
  EXPECT_EQ(height(p, idx(p, "0")), 0u);
  EXPECT_EQ(height(p, idx(p, "1")), 1u);
  EXPECT_TRUE(c.admissible);
}

TEST(Classify, SupertropicalOverC2) {
  const auto c = classify_pair(standard_supertropical(cyclic_group(2), {0, 1}));
  EXPECT_TRUE(c.proper);
  EXPECT_EQ(c.kind, PairKind::First);
  EXPECT_TRUE(c.shallow);
  EXPECT_TRUE(c.e_final.value());
  EXPECT_EQ(*c.characteristic, (Characteristic{1, 2}));
  EXPECT_EQ(c.a0_characteristic, 2u);
}

TEST(Classify, SupertropicalMetatangibility) {
  const auto id = classify_pair(standard_supertropical(cyclic_group(2), {0, 1}));
  EXPECT_TRUE(id.metatangible);
  EXPECT_TRUE(id.a0_bipotent);
  // every sum of tangibles is e, which lies in A0, so the literal definition holds
  const auto constant = classify_pair(constant_supertropical(cyclic_group(2)));
  EXPECT_TRUE(constant.metatangible);
}

TEST(Classify, SupertropicalWithTrivialMonoidIsSuperBoolean) {
  const Pair p = standard_supertropical(cyclic_group(1), {0});
  const Pair sb = super_boolean();
  ASSERT_EQ(p.size(), sb.size());
  EXPECT_EQ(classify_pair(p).e_type, classify_pair(sb).e_type);
  EXPECT_EQ(p.a_zero().size(), 2u);
}

TEST(Classify, PowerSetPairs) {
  const Pair kr = power_set_pair(krasner());
  EXPECT_TRUE(classify_pair(kr).e_final.value());
  EXPECT_EQ(kr.label(kr.e()), "{0,1}");

  const Pair sg = power_set_pair(signs());
  EXPECT_EQ(sg.size(), 7u);
  EXPECT_TRUE(classify_pair(sg).e_final.value());
  EXPECT_EQ(sg.label(sg.e()), "{0,1,-1}");

  for (std::size_t order : {2u, 3u, 4u}) {
    const Pair p = power_set_pair(group_hyperfield(order));
    const auto c = classify_pair(p);
    ASSERT_TRUE(c.e_type) << order;
    EXPECT_EQ(*c.e_type, (ETypeValue{2, 2})) << order;
  }
}

TEST(Classify, ETypeFinalEquivalence) {
  for (const auto& entry : extended_catalog()) {
    const Pair p = entry.pair();
    if (!p.property_n()) continue;
    const auto c = classify_pair(p);
    EXPECT_EQ(c.e_type == (ETypeValue{1, 1}), c.e_final.value()) << entry.id;
    if (c.e_final.value()) {
      EXPECT_TRUE(c.e_idempotent.value()) << entry.id;
    }
  }
}

TEST(Negation, IdentityAndSwitch) {
  EXPECT_NO_THROW(with_negation(super_boolean(), {0, 1, 2}));
  const DoubledPair d = double_pair(super_boolean());
  ASSERT_TRUE(d.pair.negation());
  EXPECT_EQ(d.pair.label(d.pair.e()), "(1,1)");

  const Pair second = minimal_bipotent(cyclic_group(2), BipotentKind::Second);
  std::vector<Elem> id(second.size());
  std::iota(id.begin(), id.end(), 0);
  try {
    with_negation(second, id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuasiNegationFails);
    ASSERT_FALSE(e.witness().empty());
    EXPECT_EQ(e.witness()[0], second.one());
  }
}

TEST(Negation, IdentityAcceptedExactlyForFirstKind) {
  for (const auto& entry : extended_catalog()) {
    const Pair p = entry.pair();
    std::vector<Elem> id(p.size());
    std::iota(id.begin(), id.end(), 0);
    bool accepted = true;
    try {
      with_negation(p, id);
    } catch (const Error&) {
      accepted = false;
    }
    EXPECT_EQ(accepted, pair_kind(p) == PairKind::First) << entry.id;
  }
}

TEST(Center, CommutativeSemiringIsItsOwnCenter) {
  const Pair p = super_boolean();
  EXPECT_EQ(distributive_center(p.structure()).size(), p.size());
  const Pair sg = power_set_pair(signs());
  const ElementSet z = distributive_center(sg.structure());
  EXPECT_LT(z.size(), sg.size());
  EXPECT_TRUE(z.contains(sg.zero()));
  EXPECT_TRUE(z.contains(sg.one()));
}

TEST(Center, EInCenterMatchesECentral) {
  for (const auto& entry : extended_catalog()) {
    const Pair p = entry.pair();
    if (!p.property_n()) continue;
    const auto c = classify_pair(p);
    if (!c.e_distributive.value()) continue;
    EXPECT_EQ(distributive_center(p.structure()).contains(p.e()), c.e_central.value()) << entry.id;
  }
}

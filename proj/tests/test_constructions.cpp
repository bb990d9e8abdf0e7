#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "pairspec/pairspec.hpp"

using namespace pairspec;

namespace {

Elem idx(const Pair& p, const std::string& label) { return *p.structure().index_of(label); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadTable;
}

}  // namespace

TEST(Catalog, EveryEntryValidates) {
  for (const auto& entry : extended_catalog()) {
    EXPECT_NO_THROW(entry.pair()) << entry.id;
  }
}

TEST(SuperBoolean, Tables) {
  const Pair p = super_boolean();
  const Elem one = idx(p, "1"), e = idx(p, "e");
  EXPECT_EQ(p.add(one, one), e);
  for (Elem x = 0; x < p.size(); ++x) EXPECT_EQ(p.add(e, x), e);
  EXPECT_EQ(p.a_zero().members(), (std::vector<Elem>{0, e}));
  EXPECT_EQ(p.tangible().members(), (std::vector<Elem>{one}));
}

TEST(Supertropical, RejectsBadInputs) {
  OrderedMonoid g;
  g.monoid.names = {"0", "e"};
  g.monoid.table = {{0, 0}, {0, 1}};
  g.monoid.unit = 1;
  g.zero = 0;
  g.rank = {0, 0};
  EXPECT_EQ(code_of([&] { supertropical(cyclic_group(2), g, {1, 1}); }), ErrorCode::OrderNotTotal);
  g.rank = {0, 1};
  EXPECT_EQ(code_of([&] { supertropical(cyclic_group(2), g, {1, 0}); }), ErrorCode::NuNotHomomorphism);

  // nu : C2 -> C3 cannot be a homomorphism onto a non-unit
  OrderedMonoid g3;
  g3.monoid.names = {"0", "1", "h", "h2"};
  g3.monoid.unit = 1;
  g3.monoid.table = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  g3.zero = 0;
  g3.rank = {0, 1, 2, 3};
  EXPECT_EQ(code_of([&] { supertropical(cyclic_group(2), g3, {1, 2}); }), ErrorCode::NuNotHomomorphism);
}

TEST(Supertropical, AdditionRule) {
  const Pair p = standard_supertropical(cyclic_group(2), {0, 1});
  const Elem one = idx(p, "1"), g = idx(p, "g");
  const Elem one_ghost = idx(p, "1'"), g_ghost = idx(p, "g'");
  EXPECT_EQ(p.add(one, g), g);
  EXPECT_EQ(p.add(one, one), one_ghost);
  EXPECT_EQ(p.add(g, g), g_ghost);
  EXPECT_EQ(p.add(g, one_ghost), g);
  EXPECT_EQ(p.add(one, g_ghost), g_ghost);
  EXPECT_EQ(p.e(), one_ghost);
}

TEST(Truncated, Saturation) {
  const Pair p = truncated_supertropical(3);
  EXPECT_EQ(p.mul(idx(p, "2"), idx(p, "2")), idx(p, "3"));
  EXPECT_EQ(p.mul(idx(p, "2"), idx(p, "2'")), idx(p, "3'"));
  const auto c = classify_pair(p);
  EXPECT_TRUE(c.proper);
  EXPECT_TRUE(c.shallow);
  EXPECT_TRUE(c.e_final.value());
  EXPECT_TRUE(c.a0_bipotent);

  const Pair one = truncated_supertropical(1);
  EXPECT_EQ(one.size(), 3u);
  EXPECT_EQ(one.tangible().size(), 1u);
  EXPECT_EQ(code_of([] { truncated_supertropical(0); }), ErrorCode::BadBound);
}

TEST(MinimalBipotent, Tables) {
  const Pair first = minimal_bipotent(cyclic_group(2), BipotentKind::First);
  const Pair second = minimal_bipotent(cyclic_group(2), BipotentKind::Second);
  const Elem inf = idx(first, "inf");
  EXPECT_EQ(first.add(idx(first, "1"), idx(first, "1")), inf);
  EXPECT_EQ(first.add(idx(first, "1"), idx(first, "g")), inf);
  EXPECT_EQ(second.add(idx(second, "g"), idx(second, "g")), idx(second, "g"));
  for (Elem x = 1; x < first.size(); ++x) EXPECT_EQ(first.mul(x, inf), inf);
}

TEST(Double, SuperBoolean) {
  const DoubledPair d = double_pair(super_boolean());
  EXPECT_TRUE(d.validated);
  EXPECT_TRUE(d.twist_associative);
  EXPECT_EQ(d.pair.size(), 9u);
  const Pair& p = d.pair;
  EXPECT_EQ(p.mul(idx(p, "(0,1)"), idx(p, "(0,1)")), idx(p, "(1,0)"));
  EXPECT_EQ(p.e(), idx(p, "(1,1)"));
  // A0 is the diagonal
  for (Elem x : p.a_zero()) {
    const std::string& l = p.label(x);
    EXPECT_EQ(l.substr(1, l.find(',') - 1), l.substr(l.find(',') + 1, l.size() - l.find(',') - 2));
  }
}

TEST(Double, TwistAgainstDiagonalCouple) {
  const Pair base = super_boolean();
  const auto n = static_cast<Elem>(base.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const Elem s = base.mul(base.add(x, y), z);
        EXPECT_EQ(twist(base, {x, y}, {z, z}), (Couple{s, s}));
      }
    }
  }
}

TEST(Quotient, ByDiagonalAndAll) {
  const Pair p = super_boolean();
  const Pair q = quotient_pair(p, diagonal(p));
  EXPECT_EQ(q.size(), p.size());
  EXPECT_EQ(q.structure().raw().add, p.structure().raw().add);
  EXPECT_EQ(quotient_pair(p, Congruence::full(p.size())).size(), 1u);
}

TEST(Quotient, SuperBooleanByOneE) {
  const Pair p = super_boolean();
  const Pair q = quotient_pair(p, generated_congruence(p, {Couple{p.one(), p.e()}}));
  EXPECT_EQ(q.size(), 2u);
  EXPECT_EQ(q.a_zero().size(), q.size());
  for (Elem x = 0; x < q.size(); ++x) EXPECT_EQ(q.add(x, x), x);
}

TEST(Quotient, RejectsNonCongruence) {
  const Pair p = super_boolean();
  EXPECT_EQ(code_of([&] { quotient_pair(p, Congruence::from_labels(std::vector<Elem>{0, 0, 1})); }), ErrorCode::NotACongruence);
}

TEST(Hyper, BuiltinsValidate) {
  EXPECT_TRUE(krasner().is_hyperfield());
  const HyperStructure s = signs();
  EXPECT_TRUE(s.is_hyperfield());
  EXPECT_EQ(s.sum(Elem{1}, Elem{2}), Subset{0b111});
}

TEST(Hyper, ZeroLawViolation) {
  RawHyper r;
  r.names = {"0", "1"};
  r.zero = 0;
  r.one = 1;
  r.mul = {{0, 0}, {0, 1}};
  r.hyperadd = {{{0}, {0}}, {{0}, {0, 1}}};
  EXPECT_EQ(code_of([&] { validate_hyperstructure(r); }), ErrorCode::ZeroLaw);
}

TEST(Hyper, NonAssociativeHyperaddition) {
  RawHyper r;
  r.names = {"0", "1", "a"};
  r.zero = 0;
  r.one = 1;
  r.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  // (1+1)+a = {a}+a = {0}, 1+(1+a) = 1+{1} = {a}
  r.hyperadd = {{{0}, {1}, {2}}, {{1}, {2}, {1}}, {{2}, {1}, {0}}};
  EXPECT_EQ(code_of([&] { validate_hyperstructure(r); }), ErrorCode::HyperAddNotAssociative);
}

TEST(PowerSet, SizesAndErrors) {
  EXPECT_EQ(power_set_pair(krasner()).size(), 3u);
  EXPECT_EQ(power_set_pair(signs()).size(), 7u);
  EXPECT_EQ(code_of([] { power_set_pair(group_hyperfield(4), std::nullopt, 16); }), ErrorCode::CarrierTooLarge);
  // S0 must meet H only in 0
  EXPECT_EQ(code_of([] { power_set_pair(signs(), Subset{0b011}); }), ErrorCode::S0NotValid);
}

TEST(PowerSet, MultiplicationIsElementwiseAndAssociative) {
  const HyperStructure h = signs();
  const Pair p = power_set_pair(h);
  EXPECT_TRUE(p.structure().flags().mul_associative);
  const auto& org = *p.origin();
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = 0; y < p.size(); ++y) {
      std::set<Elem> prod;
      for (Elem a : org.subsets[x]) {
        for (Elem b : org.subsets[y]) prod.insert(h.mul(a, b));
      }
      EXPECT_EQ(std::vector<Elem>(prod.begin(), prod.end()), org.subsets[p.mul(x, y)]);
    }
  }
}

TEST(PowerSet, ProductsIntoSumsAreContained) {
  for (const HyperStructure& h : {krasner(), signs(), group_hyperfield(2), group_hyperfield(3)}) {
    const Pair p = power_set_pair(h);
    const auto& org = *p.origin();
    auto mask = [&](Elem x) { return to_subset(org.subsets[x]); };
    for (Elem s = 0; s < p.size(); ++s) {
      for (Elem s1 = 0; s1 < p.size(); ++s1) {
        for (Elem s2 = 0; s2 < p.size(); ++s2) {
          const Subset lhs = mask(p.mul(s, p.add(s1, s2)));
          const Subset rhs = mask(p.add(p.mul(s, s1), p.mul(s, s2)));
          EXPECT_EQ(lhs & ~rhs, Subset{0});
        }
      }
    }
  }
}

TEST(Hyperpair, Closures) {
  const Pair kr = hyperpair_generated(krasner());
  EXPECT_EQ(kr.size(), 3u);
  const Pair sg = hyperpair_generated(signs());
  // singletons and {0,1,-1}
  EXPECT_EQ(sg.size(), 4u);

  RawHyper trivial;
  trivial.names = {"0"};
  trivial.mul = {{0}};
  trivial.hyperadd = {{{0}}};
  EXPECT_EQ(hyperpair_generated(validate_hyperstructure(trivial)).size(), 1u);
}

TEST(Residue, F5ByPlusMinusOneAgainstCosetOracle) {
  const HyperStructure h = residue_hyperstructure(prime_field(5), {1, 4});
  // cosets {0}, {1,4}, {2,3} computed by hand with integer arithmetic mod 5
  const std::vector<std::set<int>> cosets = {{0}, {1, 4}, {2, 3}};
  auto class_of = [&](int v) {
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (cosets[i].count(((v % 5) + 5) % 5)) return static_cast<Elem>(i);
    }
    return Elem{99};
  };
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h.names(), (std::vector<std::string>{"0", "{1,4}", "{2,3}"}));
  for (Elem i = 0; i < 3; ++i) {
    for (Elem j = 0; j < 3; ++j) {
      std::set<Elem> sums, prods;
      for (int x : cosets[i]) {
        for (int y : cosets[j]) {
          sums.insert(class_of(x + y));
          prods.insert(class_of(x * y));
        }
      }
      ASSERT_EQ(prods.size(), 1u);
      EXPECT_EQ(h.mul(i, j), *prods.begin());
      Subset expect = 0;
      for (Elem s : sums) expect |= singleton(s);
      EXPECT_EQ(h.sum(i, j), expect);
    }
  }
  EXPECT_TRUE(h.is_hyperfield());
  ASSERT_TRUE(h.hypernegation());
}

TEST(Residue, F3ByUnitsIsKrasner) {
  const HyperStructure h = residue_hyperstructure(prime_field(3), {1, 2});
  const HyperStructure k = krasner();
  ASSERT_EQ(h.size(), k.size());
  for (Elem a = 0; a < h.size(); ++a) {
    for (Elem b = 0; b < h.size(); ++b) {
      EXPECT_EQ(h.sum(a, b), k.sum(a, b));
      EXPECT_EQ(h.mul(a, b), k.mul(a, b));
    }
  }
}

TEST(Residue, TrivialGroupKeepsStructure) {
  const Pair f5 = prime_field(5);
  const HyperStructure h = residue_hyperstructure(f5, {1});
  ASSERT_EQ(h.size(), 5u);
  for (Elem a = 0; a < 5; ++a) {
    for (Elem b = 0; b < 5; ++b) {
      EXPECT_EQ(h.sum(a, b), singleton(f5.add(a, b)));
      EXPECT_EQ(h.mul(a, b), f5.mul(a, b));
    }
  }
}

TEST(Residue, Errors) {
  EXPECT_EQ(code_of([] { residue_hyperstructure(prime_field(5), {1, 2}); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([] { residue_hyperstructure(prime_field(5), {4}); }), ErrorCode::NotAGroup);
}

TEST(FunctionPair, SuperBooleanOverSaturatingMonoid) {
  const Pair p = function_pair(super_boolean(), saturating_monoid(2));
  EXPECT_EQ(p.size(), 9u);
  const auto c = classify_pair(p);
  EXPECT_EQ(c.e_type, (ETypeValue{1, 1}));
  EXPECT_TRUE(c.e_central.value());
  const Pair one = function_pair(super_boolean(), cyclic_group(1));
  EXPECT_EQ(one.size(), 3u);
  EXPECT_EQ(one.structure().raw().add, super_boolean().structure().raw().add);
  EXPECT_EQ(one.structure().raw().mul, super_boolean().structure().raw().mul);
  EXPECT_EQ(code_of([] { function_pair(super_boolean(), saturating_monoid(3), 20); }), ErrorCode::CarrierTooLarge);
}

TEST(FunctionPair, PreservesETypeOfBase) {
  for (const auto& id : {"super_boolean", "minimal_bipotent_first", "power_set_krasner"}) {
    for (const auto& entry : core_catalog()) {
      if (entry.id != id) continue;
      const Pair base = entry.pair();
      const Pair f = function_pair(base, saturating_monoid(2));
      EXPECT_EQ(classify_pair(f).e_type, classify_pair(base).e_type) << id;
      EXPECT_EQ(classify_pair(f).e_central, classify_pair(base).e_central) << id;
    }
  }
}

TEST(Builders, ParametersAreChecked) {
  EXPECT_EQ(code_of([] { build("truncated", {{"m", "x"}}); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build("truncated", {{"k", "3"}}); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { build("nope", {}); }), ErrorCode::BadParameter);
  EXPECT_EQ(build("residue", {}).hyper->size(), 3u);
  EXPECT_EQ(build("power_set", {{"hyper", "signs"}, {"s0", "0"}}).pair->size(), 7u);
}

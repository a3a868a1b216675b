#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"

namespace permkit {
namespace {

using test::P;
using test::perms;

TEST(SumDecompose, Examples) {
  EXPECT_EQ(sum_decompose(P("23145")).components, perms({"231", "1", "1"}));
  EXPECT_EQ(sum_decompose(Permutation::identity(3)).components, perms({"1", "1", "1"}));
  EXPECT_EQ(sum_decompose(P("2413")).components, perms({"2413"}));
  EXPECT_TRUE(sum_decompose(Permutation{}).components.empty());
  EXPECT_EQ(sum_decompose(P("21354")).lengths(), (std::vector<std::size_t>{2, 1, 2}));
}

TEST(SumDecompose, ComponentsAreIndecomposableAndRecombine) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto d = sum_decompose(p);
      ASSERT_EQ(d.recombine(), p);
      for (const auto& c : d.components) {
        // No proper prefix of an indecomposable component holds exactly
        // its smallest values.
        for (std::size_t cut = 1; cut < c.size(); ++cut) {
          int mx = 0;
          for (std::size_t i = 0; i < cut; ++i) mx = std::max(mx, c[i]);
          ASSERT_NE(mx, static_cast<int>(cut)) << c.str();
        }
      }
    }
  }
}

TEST(IdiMember, Examples) {
  EXPECT_TRUE(idi_member(P("2143")));
  EXPECT_FALSE(idi_member(P("2413")));
  EXPECT_TRUE(idi_member(Permutation{}));
  EXPECT_TRUE(idi_member(P("23145")));
  EXPECT_FALSE(idi_member(P("3142")));
}

TEST(IdiMember, AgreesWithRealizedClass) {
  const auto idi = realize("IDI", 7);
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) ASSERT_EQ(idi_member(p), idi.contains(p)) << p.str();
  }
}

TEST(IsLayered, AgreesWithRealizedClass) {
  const auto layered = realize("L", 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) ASSERT_EQ(is_layered(p), layered.contains(p));
  }
}

TEST(LayeredDecomposition, Examples) {
  const auto a = layered_decomposition(P("231"));
  EXPECT_EQ(a.alpha, P("132"));
  EXPECT_EQ(a.beta, P("321"));
  EXPECT_EQ(compose(a.alpha, a.beta), P("231"));

  const auto b = layered_decomposition(P("23145"));
  EXPECT_EQ(b.alpha, P("13245"));
  EXPECT_EQ(b.beta, P("32145"));
  EXPECT_EQ(compose(b.alpha, b.beta), P("23145"));

  // Grouping 1 ⊕ 1 into the single D[I] block 12 gives another valid pair.
  EXPECT_TRUE(is_layered(P("13254")) && is_layered(P("32154")));
  EXPECT_EQ(compose(P("13254"), P("32154")), P("23145"));

  const auto c = layered_decomposition(Permutation::identity(4));
  EXPECT_EQ(c.alpha, Permutation::identity(4));
  EXPECT_EQ(c.beta, Permutation::identity(4));

  const auto e = layered_decomposition(Permutation{});
  EXPECT_TRUE(e.alpha.empty());
  EXPECT_TRUE(e.beta.empty());

  EXPECT_THROW(layered_decomposition(P("2413")), domain_error);
}

TEST(LayeredDecomposition, FactorsEveryIdiMemberUpTo8) {
  const auto idi = realize("IDI", 8);
  const auto layered = realize("L", 8);
  for (const auto& p : idi.members(8)) {
    const auto [alpha, beta] = layered_decomposition(p);
    ASSERT_TRUE(member(layered, alpha)) << p.str();
    ASSERT_TRUE(member(layered, beta)) << p.str();
    ASSERT_EQ(compose(alpha, beta), p);
  }
}

TEST(ComposeClasses, Examples) {
  const auto layered = realize("L", 6);
  const auto ll = compose_classes_upto(layered, layered, 6);
  const auto idi = realize("IDI", 6);
  for (const auto& p : idi.members(6)) EXPECT_TRUE(ll.contains(p)) << p.str();
  EXPECT_TRUE(ll.hereditary);

  const auto inc = realize("I", 5);
  const auto ii = compose_classes_upto(inc, inc, 5);
  EXPECT_EQ(ii.to_class(), inc);
  EXPECT_EQ(ii.pairs_examined, 6u);

  const auto dec = realize("D", 4);
  EXPECT_EQ(compose_classes_upto(dec, dec, 4).to_class(), realize("I", 4));
}

TEST(ComposeClasses, RawSetIsNotClosedSilently) {
  // A non-hereditary raw set is reported as such by the audit.
  Levels levels{{Permutation{}}, {}, {P("21")}};
  CompositionSet raw;
  raw.cap = 2;
  raw.levels = levels;
  EXPECT_FALSE(detail::audit_hereditary(raw.levels));
  EXPECT_EQ(raw.to_class().members(2), perms({"e", "1", "21"}));
}

TEST(ComposeClasses, Budget) {
  Limits tight;
  tight.pair_budget = 100;
  const auto l = realize("L", 6);
  EXPECT_THROW(compose_classes_upto(l, l, 6, tight), resource_limit);
  EXPECT_THROW(compose_classes_upto(l, l, 7), out_of_range);
}

TEST(LemmaDecreasing, Examples) {
  EXPECT_EQ(lemma_decreasing_check(1, 1, 5, LemmaMode::increasing_case).verdict, Verdict::pass);
  EXPECT_EQ(lemma_decreasing_check(2, 2, 7, LemmaMode::increasing_case).verdict, Verdict::pass);
  EXPECT_EQ(lemma_decreasing_check(1, 1, 5, LemmaMode::decreasing_case).verdict, Verdict::pass);
  EXPECT_THROW(lemma_decreasing_check(0, 1, 5, LemmaMode::increasing_case), invalid_input);
}

TEST(LemmaDecreasing, AllSmallParameters) {
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t l = 1; l <= 2; ++l) {
      for (auto mode : {LemmaMode::increasing_case, LemmaMode::decreasing_case}) {
        const auto r = lemma_decreasing_check(k, l, 6, mode);
        EXPECT_EQ(r.verdict, Verdict::pass) << k << "," << l;
        EXPECT_FALSE(r.counterexample);
      }
    }
  }
}

TEST(LemmaDecreasing, BoundIsAttained) {
  // The bound kl is tight: some I_2 ∘ I_2 composition has a decreasing run of 4.
  const auto i2 = realize("I_2", 6);
  std::size_t best = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& a : i2.level(n)) {
      for (const auto& b : i2.level(n)) best = std::max(best, monotone_stats(compose(a, b)).lds_length);
    }
  }
  EXPECT_EQ(best, 4u);
}

TEST(Composability, Examples) {
  const auto idi = realize("IDI", 7);
  const auto layered = realize("L", 7);
  EXPECT_TRUE(composability_check_upto(idi, {layered, layered}, 7));

  const auto inc = realize("I", 5);
  const auto short_inc = realize("G(12)", 5);
  const auto r = composability_check_upto(inc, {short_inc, short_inc}, 5);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.counterexample, Permutation::identity(3));
}

TEST(Composability, L2WithNaturalCandidates) {
  // L_2 against its one-layer and two-singleton-layer subclasses.
  const auto l2 = realize("L_2", 5);
  const auto l1 = realize("L_1", 5);
  const auto d = realize("D", 5);
  EXPECT_FALSE(composability_check_upto(l2, {l1, l1}, 5));
  EXPECT_FALSE(composability_check_upto(l2, {l1, d}, 5));
}

TEST(Composability, RequiresProperSubclasses) {
  const auto l = realize("L", 5);
  EXPECT_THROW(composability_check_upto(l, {l, realize("I", 5)}, 5), precondition_violation);
  EXPECT_THROW(composability_check_upto(realize("I", 5), {realize("D", 5)}, 5),
               precondition_violation);
}

TEST(Composability, EvenChainsOfDecreasingClassesAvoidDelta2) {
  // With m = 1, members of D_1 = D compose in pairs into I, so every even
  // chain avoids δ_2 while odd chains do not.
  const std::size_t cap = 5;
  const auto d = realize("D_1", cap);
  const auto delta2 = Permutation::decreasing(2);
  for (std::size_t k : {2u, 4u}) {
    const std::vector<FiniteClass> chain(k, d);
    const auto set = compose_chain_upto(chain, cap);
    for (const auto& level : set.levels) {
      for (const auto& p : level) EXPECT_TRUE(avoids(p, delta2)) << p.str();
    }
  }
  const std::vector<FiniteClass> odd(3, d);
  const auto set = compose_chain_upto(odd, cap);
  EXPECT_TRUE(set.contains(Permutation::decreasing(2)));
}

}  // namespace
}  // namespace permkit

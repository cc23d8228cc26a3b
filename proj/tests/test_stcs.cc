#include <gtest/gtest.h>

#include "mgs/classical.h"
#include "mgs/errors.h"
#include "mgs/randomized.h"
#include "mgs/stcs.h"
#include "oracles.h"

using namespace mgs;

namespace
{

StabilizerChain random_chain(std::vector<Matrix> const &gens, std::uint64_t seed)
{
  CounterRng rng(seed);
  return random_schreier_sims(gens, rng);
}

} // namespace

TEST(Ratio, Parse)
{
  Ratio const r = Ratio::parse("6/5");
  EXPECT_EQ(r.num, 6u);
  EXPECT_EQ(r.den, 5u);
  EXPECT_EQ(r.scale_up(10), 12u);
  EXPECT_EQ(r.scale_up(8), 10u);
  EXPECT_EQ(Ratio::parse("2").scale_up(7), 14u);
  EXPECT_EQ(Ratio{}.str(), "6/5");
  for (char const *bad : {"", "x", "1/0", "0", "3/", "-1/2"})
    EXPECT_THROW(Ratio::parse(bad), Error) << bad;
}

TEST(Relators, CheckedOnInsert)
{
  auto c = compute_bsgs_deterministic(make_gl(2, Field::make(3)));
  RelatorStore store;
  store.add_generator_relations(c);
  for (Word const &w : store.relators())
    EXPECT_TRUE(evaluate_word(c, w).is_identity());
  EXPECT_GT(store.size(), 0u);

  EXPECT_FALSE(store.add(c, {1, -1}));
  EXPECT_THROW(store.add(c, {1}), Error);
}

TEST(Stcs, RandomChainsVerified)
{
  struct Case
  {
    std::vector<Matrix> gens;
    Order order;
  };
  std::vector<Case> cases{{make_gl(2, field_for_order(3)), 48},
                          {make_sl(3, field_for_order(2)), 168},
                          {make_gl(3, field_for_order(3)), 11232},
                          {make_sl(2, field_for_order(5)), 120},
                          {make_gl(2, field_for_order(4)), 180}};
  for (auto const &cs : cases) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto c = random_chain(cs.gens, seed);
      StcsStats const st = verify_chain_stcs(c);
      EXPECT_TRUE(c.is_complete());
      EXPECT_EQ(group_order(c), cs.order);
      EXPECT_FALSE(failing_level(c));
      EXPECT_GT(st.enumerations, 0u);
    }
  }
}

TEST(Stcs, SmallGroups)
{
  for (auto const &g : oracle::small_groups()) {
    SCOPED_TRACE(g.name);
    auto c = get_partial_bsgs(g.gens);
    verify_chain_stcs(c);
    EXPECT_EQ(group_order(c), g.order);
    EXPECT_FALSE(failing_level(c));
  }
}

TEST(Stcs, RepairsTruncatedChain)
{
  auto gens = make_gl(2, field_for_order(3));
  auto c = compute_bsgs_deterministic(gens);
  c.remove_generator(c.sgs().size() - 1u);
  c.refresh_all_levels();
  verify_chain_stcs(c);
  EXPECT_EQ(group_order(c), 48);
}

TEST(Stcs, CompleteChainUnchanged)
{
  auto gens = make_gl(3, field_for_order(3));
  auto c = compute_bsgs_deterministic(gens);
  auto const sgs_before = c.sgs().size();
  auto const base_before = c.length();
  StcsStats const st = verify_chain_stcs(c);
  EXPECT_EQ(st.schreier.additions, 0u);
  EXPECT_EQ(c.sgs().size(), sgs_before);
  EXPECT_EQ(c.length(), base_before);
  EXPECT_EQ(group_order(c), 11232);
}

TEST(Stcs, EnumerationClosesLevels)
{
  // enough relators accumulate for coset counting to end some levels early
  auto c = random_chain(make_gl(3, field_for_order(3)), 1);
  StcsStats const st = verify_chain_stcs(c);
  EXPECT_GT(st.closed_by_enumeration, 0u);
}

TEST(Stcs, AgreesWithDeterministic)
{
  for (auto [d, q] : classical_parameters()) {
    auto gens = make_sl(d, field_for_order(q));
    auto c = random_chain(gens, d + q);
    verify_chain_stcs(c, Ratio::parse("3/2"));
    EXPECT_EQ(group_order(c), group_order(compute_bsgs_deterministic(gens)));
  }
}

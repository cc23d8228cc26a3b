#include <set>

#include <gtest/gtest.h>

#include "mgs/base_points.h"
#include "mgs/chain.h"
#include "mgs/classical.h"
#include "mgs/errors.h"
#include "mgs/random.h"
#include "oracles.h"

using namespace mgs;

namespace
{

auto const f2 = Field::make(2);
auto const f3 = Field::make(3);
auto const f5 = Field::make(5);

RowVector v(FieldPtr const &f, std::vector<unsigned> xs)
{
  return RowVector::from_indices(f, xs);
}

} // namespace

TEST(Alternating, Examples)
{
  auto [l1, v1] = alternating_base_points(v(f3, {1, 0}));
  EXPECT_EQ(l1.rep(), v(f3, {1, 0}));
  EXPECT_EQ(v1, v(f3, {1, 0}));

  auto [l2, v2] = alternating_base_points(v(f3, {0, 2, 1}));
  EXPECT_EQ(l2.rep(), v(f3, {0, 1, 2}));
  EXPECT_EQ(v2, v(f3, {0, 2, 1}));

  EXPECT_THROW(alternating_base_points(v(f3, {0, 0})), Error);
}

TEST(Alternating, OrbitSplit)
{
  auto gens = make_gl(2, f3);
  RowVector const e1 = RowVector::unit(f3, 2, 0);
  auto const group = oracle::closure(gens);
  OrbitPoint const line = ProjectivePoint::line_through(e1);

  auto const line_orbit = oracle::orbit(gens, line);
  auto const stab = oracle::stabilizer(group, line);
  std::vector<Matrix> stab_gens(stab.begin(), stab.end());
  auto const inner = oracle::orbit(stab_gens, OrbitPoint(e1));

  EXPECT_EQ(line_orbit.size(), 4u);
  EXPECT_EQ(inner.size(), 2u);
  EXPECT_EQ(oracle::orbit(gens, OrbitPoint(e1)).size(), 8u);
}

TEST(Alternating, MultiplierSubgroup)
{
  for (std::size_t d = 1; d <= 3; ++d) {
    // monomial matrices stand in for GL(3,5), whose closure is too large
    auto const gens =
      d == 3 ? std::vector<Matrix>{Matrix::from_rows(f5, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                   Matrix::from_rows(f5, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                                   Matrix::from_rows(f5, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})}
             : make_gl(d, f5);
    auto const group = oracle::closure(gens);
    RowVector const e1 = RowVector::unit(f5, d, 0);
    auto const stab = oracle::stabilizer(group, ProjectivePoint::line_through(e1));
    std::vector<Matrix> stab_gens(stab.begin(), stab.end());
    auto const inner = oracle::orbit(stab_gens, OrbitPoint(e1));

    std::set<unsigned> multipliers;
    for (unsigned m = 1; m < 5; ++m) {
      RowVector w(f5, d);
      w.set(0, FieldElement{static_cast<std::uint16_t>(m)});
      if (inner.count(OrbitPoint(w)))
        multipliers.insert(m);
    }
    for (unsigned a : multipliers)
      for (unsigned b : multipliers)
        EXPECT_TRUE(multipliers.count(a * b % 5));
    EXPECT_EQ(4u % multipliers.size(), 0u);
  }
}

TEST(Eigen, CharacteristicPolynomial)
{
  Matrix const swap = Matrix::from_rows(f3, {{0, 1}, {1, 0}});
  // x^2 - 1 = x^2 + 2
  Polynomial const chi = characteristic_polynomial(swap);
  EXPECT_EQ(chi, (Polynomial{{2}, {0}, {1}}));
  auto rs = roots(*f3, chi);
  EXPECT_EQ(rs, (std::vector<FieldElement>{{1}, {2}}));

  auto basis = eigenspace_basis(swap, f3->one());
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], v(f3, {1, 1}));

  Matrix big = Matrix::identity(f3, 9);
  try {
    characteristic_polynomial(big);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionTooLarge);
  }
}

TEST(Eigen, CharacteristicPolynomialRandom)
{
  // chi(A) evaluated at each root must make A - lambda I singular
  CounterRng rng(9);
  auto f9 = Field::make(3, 2);
  for (int i = 0; i < 40; ++i) {
    Matrix const a = random_invertible(f9, 1 + i % 5, rng);
    Polynomial const chi = characteristic_polynomial(a);
    ASSERT_EQ(chi.size(), a.dim() + 1u);
    EXPECT_EQ(chi.back(), f9->one());
    for (FieldElement lambda : roots(*f9, chi)) {
      Matrix shifted = a;
      for (std::size_t k = 0; k < a.dim(); ++k)
        shifted.set(k, k, f9->sub(a(k, k), lambda));
      EXPECT_EQ(shifted.determinant(), f9->zero());
      EXPECT_FALSE(eigenspace_basis(a, lambda).empty());
    }
  }
}

TEST(Eigen, BasePointChoice)
{
  std::vector<Matrix> ident{Matrix::identity(f3, 3)};
  auto best = eigenvector_base_point(ident);
  ASSERT_TRUE(best);
  EXPECT_EQ(*best, RowVector::unit(f3, 3, 0));

  std::vector<Matrix> rotation{Matrix::from_rows(f3, {{0, 1}, {2, 0}})};
  EXPECT_FALSE(eigenvector_base_point(rotation));
  auto pts = select_base_point(BaseStrategy::eigenvector, rotation, rotation[0]);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], OrbitPoint(new_base_point(rotation[0])));
}

TEST(Eigen, OrbitDividesQMinusOne)
{
  CounterRng rng(2);
  for (int i = 0; i < 40; ++i) {
    std::vector<Matrix> gens{random_invertible(f5, 2, rng)};
    auto best = eigenvector_base_point(gens);
    if (!best)
      continue;
    auto orbit = oracle::orbit(gens, OrbitPoint(*best));
    EXPECT_EQ(4u % orbit.size(), 0u);
  }
}

TEST(Select, Examples)
{
  std::vector<Matrix> none;
  Matrix const two = Matrix::scalar(f3, 2, FieldElement{2});
  auto nat = select_base_point(BaseStrategy::natural, none, two);
  ASSERT_EQ(nat.size(), 1u);
  EXPECT_EQ(nat[0], OrbitPoint(RowVector::unit(f3, 2, 0)));

  Matrix const sigma = Matrix::from_rows(f2, {{0, 1}, {1, 0}});
  auto proj = select_base_point(BaseStrategy::projective, none, sigma);
  ASSERT_EQ(proj.size(), 2u);
  EXPECT_EQ(proj[0], OrbitPoint(ProjectivePoint::line_through(v(f2, {1, 0}))));
  EXPECT_EQ(proj[1], OrbitPoint(v(f2, {1, 0})));

  try {
    select_base_point(BaseStrategy::natural, none, Matrix::identity(f3, 2));
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.kind(), ErrorKind::IdentityMatrix);
  }
}

TEST(Select, ProjectiveChainSoundness)
{
  ChainOptions o;
  o.strategy = BaseStrategy::projective;
  for (auto [d, q] : std::vector<std::pair<std::size_t, unsigned>>{
         {2, 3}, {2, 5}, {3, 3}, {3, 4}}) {
    auto gens = make_gl(d, field_for_order(q));
    auto c = compute_bsgs_deterministic(gens, o);
    EXPECT_EQ(group_order(c), gl_order(d, q));

    CounterRng rng(d * 10 + q);
    for (int i = 0; i < 100; ++i) {
      Matrix const a = random_element(c, rng) * random_element(c, rng);
      EXPECT_TRUE(c.sift(a).residue.is_identity());
    }
  }

  auto c = compute_bsgs_deterministic(make_gl(2, f3), o);
  ASSERT_GE(c.length(), 2u);
  EXPECT_TRUE(is_projective(c.base()[0]));
  EXPECT_EQ(c.orbit_sizes()[0], 4u);
  EXPECT_EQ(2u % c.orbit_sizes()[1], 0u);
}

TEST(Select, EigenStrategyBeyondCapFallsBack)
{
  ChainOptions o;
  o.strategy = BaseStrategy::eigenvector;
  auto gens = make_sl(9, f2);
  auto c = get_partial_bsgs(gens, {}, o);
  EXPECT_GE(c.length(), 1u);
}

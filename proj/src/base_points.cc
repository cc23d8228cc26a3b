#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "mgs/base_points.h"
#include "mgs/errors.h"

namespace mgs
{

namespace
{

void poly_add_scaled(Field const &f, Polynomial &acc, Polynomial const &a,
                     Polynomial const &b)
{
  // acc += a * b
  if (a.empty() || b.empty())
    return;
  if (acc.size() < a.size() + b.size() - 1u)
    acc.resize(a.size() + b.size() - 1u, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index == 0u)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = f.add(acc[i + j], f.mul(a[i], b[j]));
  }
}

FieldElement evaluate(Field const &f, Polynomial const &poly, FieldElement x)
{
  FieldElement acc = f.zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = f.add(f.mul(acc, x), *it);
  return acc;
}

// colexicographic: compare the last coordinate first, so e_1 < e_2 < ...
bool colex_less(RowVector const &a, RowVector const &b)
{
  for (std::size_t i = a.dim(); i-- > 0u;) {
    if (a[i] != b[i])
      return a[i] < b[i];
  }
  return false;
}

bool is_eigenvector(RowVector const &v, Matrix const &a)
{
  RowVector const image = act(v, a);
  return !image.is_zero() && canonical(image) == canonical(v);
}

} // namespace

char const *to_string(BaseStrategy s)
{
  switch (s) {
    case BaseStrategy::natural: return "natural";
    case BaseStrategy::projective: return "projective";
    case BaseStrategy::eigenvector: return "eigen";
  }
  return "?";
}

BaseStrategy parse_base_strategy(std::string const &s)
{
  if (s == "natural")
    return BaseStrategy::natural;
  if (s == "projective")
    return BaseStrategy::projective;
  if (s == "eigen" || s == "eigenvector")
    return BaseStrategy::eigenvector;
  throw Error(ErrorKind::ParseError, "unknown base strategy '" + s + "'");
}

std::pair<ProjectivePoint, RowVector> alternating_base_points(RowVector const &v)
{
  return {ProjectivePoint::line_through(v), v};
}

Polynomial characteristic_polynomial(Matrix const &a)
{
  std::size_t const d = a.dim();
  if (d > eigenvector_dimension_cap)
    throw Error(ErrorKind::DimensionTooLarge,
                "characteristic polynomial limited to dimension " +
                std::to_string(eigenvector_dimension_cap));

  Field const &f = a.field();

  // det(xI - A) = sum over permutations; dp[mask] accumulates the signed
  // products for rows 0..popcount(mask)-1 placed in the columns of mask
  std::vector<Polynomial> dp(std::size_t{1} << d);
  dp[0] = {f.one()};

  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].empty())
      continue;
    std::size_t const row = static_cast<std::size_t>(std::popcount(mask));
    if (row == d)
      continue;

    for (std::size_t col = 0; col < d; ++col) {
      if (mask & (std::size_t{1} << col))
        continue;

      Polynomial entry{f.neg(a(row, col))};
      if (row == col)
        entry.push_back(f.one());

      // each already-placed column to the right of col is an inversion
      std::size_t const inversions = static_cast<std::size_t>(
        std::popcount(mask >> (col + 1u)));
      if (inversions % 2u == 1u)
        for (auto &c : entry)
          c = f.neg(c);

      poly_add_scaled(f, dp[mask | (std::size_t{1} << col)], dp[mask], entry);
    }
  }

  Polynomial res = dp.back();
  res.resize(d + 1u, f.zero());
  return res;
}

std::vector<FieldElement> roots(Field const &field, Polynomial const &poly)
{
  std::vector<FieldElement> res;
  for (unsigned x = 0; x < field.size(); ++x) {
    FieldElement const e{static_cast<std::uint16_t>(x)};
    if (evaluate(field, poly, e).index == 0u)
      res.push_back(e);
  }
  return res;
}

std::vector<RowVector> eigenspace_basis(Matrix const &a, FieldElement lambda)
{
  Field const &f = a.field();
  std::size_t const d = a.dim();

  // v (A - lambda I) = 0  <=>  (A - lambda I)^T v^T = 0
  std::vector<std::vector<FieldElement>> m(d, std::vector<FieldElement>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m[j][i] = i == j ? f.sub(a(i, j), lambda) : a(i, j);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t p = row;
    while (p < d && m[p][col].index == 0u)
      ++p;
    if (p == d)
      continue;
    std::swap(m[p], m[row]);

    FieldElement const s = f.inv(m[row][col]);
    for (auto &x : m[row])
      x = f.mul(x, s);

    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][col].index == 0u)
        continue;
      FieldElement const factor = f.neg(m[r][col]);
      for (std::size_t j = 0; j < d; ++j)
        m[r][j] = f.add(m[r][j], f.mul(factor, m[row][j]));
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<RowVector> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) !=
        pivot_cols.end())
      continue;

    RowVector v(a.field_ptr(), d);
    v.set(free, f.one());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      v.set(pivot_cols[r], f.neg(m[r][free]));
    basis.push_back(canonical(v));
  }
  return basis;
}

std::vector<RowVector> eigenvector_candidates(std::span<Matrix const> gens)
{
  struct Candidate
  {
    RowVector v;
    unsigned lambda_order;
    std::size_t score;
  };
  std::vector<Candidate> cands;

  for (Matrix const &a : gens) {
    Field const &f = a.field();
    for (FieldElement lambda : roots(f, characteristic_polynomial(a))) {
      unsigned const order = f.multiplicative_order(lambda);
      for (RowVector &v : eigenspace_basis(a, lambda)) {
        auto it = std::find_if(cands.begin(), cands.end(),
                               [&v](Candidate const &c) { return c.v == v; });
        if (it != cands.end())
          it->lambda_order = std::min(it->lambda_order, order);
        else
          cands.push_back({std::move(v), order, 0u});
      }
    }
  }

  for (auto &c : cands)
    for (Matrix const &a : gens)
      if (is_eigenvector(c.v, a))
        ++c.score;

  std::sort(cands.begin(), cands.end(),
            [](Candidate const &x, Candidate const &y) {
              if (x.score != y.score)
                return x.score > y.score;
              if (x.lambda_order != y.lambda_order)
                return x.lambda_order < y.lambda_order;
              return colex_less(x.v, y.v);
            });

  std::vector<RowVector> res;
  res.reserve(cands.size());
  for (auto &c : cands)
    res.push_back(std::move(c.v));
  return res;
}

std::optional<RowVector> eigenvector_base_point(std::span<Matrix const> gens)
{
  auto cands = eigenvector_candidates(gens);
  if (cands.empty())
    return std::nullopt;
  return cands.front();
}

std::vector<OrbitPoint> select_base_point(BaseStrategy strategy,
                                          std::span<Matrix const> gens,
                                          Matrix const &residue,
                                          std::span<OrbitPoint const> existing)
{
  if (residue.is_identity())
    throw Error(ErrorKind::IdentityMatrix, "the identity moves no point");

  auto in_base = [&existing](OrbitPoint const &p) {
    return std::find(existing.begin(), existing.end(), p) != existing.end();
  };

  switch (strategy) {
    case BaseStrategy::natural:
      break;

    case BaseStrategy::projective: {
      auto [line, v] = alternating_base_points(new_base_point(residue));
      std::vector<OrbitPoint> pts;
      if (!in_base(OrbitPoint(line)))
        pts.emplace_back(std::move(line));
      pts.emplace_back(std::move(v));
      return pts;
    }

    case BaseStrategy::eigenvector: {
      if (residue.dim() > eigenvector_dimension_cap)
        break;
      for (RowVector &v : eigenvector_candidates(gens)) {
        OrbitPoint pt(v);
        if (act(v, residue) != v && !in_base(pt))
          return {std::move(pt)};
      }
      break;
    }
  }

  return {OrbitPoint(new_base_point(residue))};
}

} // namespace mgs

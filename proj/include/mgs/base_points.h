#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mgs/matrix.h"

namespace mgs
{

/// How new base points are chosen when a residue fixes the whole base.
enum class BaseStrategy
{
  natural,       ///< new_base_point on the residue
  projective,    ///< the line through that vector, then the vector itself
  eigenvector    ///< an eigenvector shared by many input generators
};

char const *to_string(BaseStrategy s);
BaseStrategy parse_base_strategy(std::string const &s);

/// (line(v), v). The line goes first in the base so that the vector level
/// only sees the stabiliser of the line, whose orbit on v lies inside the
/// line and therefore has size dividing q - 1.
std::pair<ProjectivePoint, RowVector> alternating_base_points(RowVector const &v);

/// Polynomial over GF(q), coefficients in ascending degree.
using Polynomial = std::vector<FieldElement>;

inline constexpr std::size_t eigenvector_dimension_cap = 8;

/// det(xI - A) by cofactor expansion over column subsets. Throws
/// DimensionTooLarge above eigenvector_dimension_cap.
Polynomial characteristic_polynomial(Matrix const &a);

/// Roots of a polynomial in F_q, ascending by index (found by scanning F_q).
std::vector<FieldElement> roots(Field const &field, Polynomial const &poly);

/// Basis of {v : v A = lambda v}, each vector scaled to have leading
/// coordinate 1, in reduced echelon order.
std::vector<RowVector> eigenspace_basis(Matrix const &a, FieldElement lambda);

/// Candidate eigenvector base points drawn from all generators, best first.
/// A vector scores by the number of generators it is an eigenvector of;
/// ties prefer the smaller multiplicative order of the eigenvalue it was
/// found for, then colexicographic order of the coordinates (e_1 first).
std::vector<RowVector> eigenvector_candidates(std::span<Matrix const> gens);

/// The best candidate, or nothing when no generator has an eigenvalue in F_q.
std::optional<RowVector> eigenvector_base_point(std::span<Matrix const> gens);

/// Base points to append for a residue that fixes the current base. The
/// returned points always include one the residue moves. The eigenvector
/// strategy takes the best candidate that the residue moves and that is not
/// in `existing`, falling back to the natural choice.
std::vector<OrbitPoint> select_base_point(BaseStrategy strategy,
                                          std::span<Matrix const> gens,
                                          Matrix const &residue,
                                          std::span<OrbitPoint const> existing = {});

} // namespace mgs

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mgs/field.h"

namespace mgs
{

class RandomSource;

/// Row vector in F_q^d. The group acts on it from the right.
class RowVector
{
public:
  RowVector() = default;
  RowVector(FieldPtr field, std::size_t dim);
  RowVector(FieldPtr field, std::vector<FieldElement> coords);

  static RowVector unit(FieldPtr field, std::size_t dim, std::size_t i);
  static RowVector from_indices(FieldPtr field,
                                std::vector<unsigned> const &indices);

  std::size_t dim() const { return _coords.size(); }
  Field const &field() const { return *_field; }
  FieldPtr const &field_ptr() const { return _field; }

  FieldElement operator[](std::size_t i) const { return _coords[i]; }
  void set(std::size_t i, FieldElement x) { _coords[i] = x; }
  std::span<FieldElement const> coords() const { return _coords; }

  bool is_zero() const;

  bool operator==(RowVector const &other) const
  { return _coords == other._coords; }

  std::size_t hash() const;
  std::string str() const;

private:
  FieldPtr _field;
  std::vector<FieldElement> _coords;
};

/// A one-dimensional subspace, stored as the representative whose first
/// nonzero coordinate is 1.
class ProjectivePoint
{
public:
  ProjectivePoint() = default;

  /// Throws ZeroVector for v = 0.
  static ProjectivePoint line_through(RowVector const &v);

  RowVector const &rep() const { return _rep; }

  bool operator==(ProjectivePoint const &other) const
  { return _rep == other._rep; }

  std::size_t hash() const { return _rep.hash() ^ 0x9e3779b97f4a7c15ull; }
  std::string str() const { return "<" + _rep.str() + ">"; }

private:
  explicit ProjectivePoint(RowVector rep) : _rep(std::move(rep)) {}

  RowVector _rep;
};

/// Scales v so that its first nonzero coordinate is 1.
RowVector canonical(RowVector const &v);

/// A base point: either a vector under the natural action or a line under
/// the projective action.
using OrbitPoint = std::variant<RowVector, ProjectivePoint>;

struct OrbitPointHash
{
  std::size_t operator()(OrbitPoint const &pt) const;
};

std::string to_string(OrbitPoint const &pt);
bool is_projective(OrbitPoint const &pt);
RowVector const &underlying_vector(OrbitPoint const &pt);

/// Dense invertible d x d matrix over GF(q), row major.
class Matrix
{
public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t dim);

  static Matrix identity(FieldPtr field, std::size_t dim);
  static Matrix scalar(FieldPtr field, std::size_t dim, FieldElement s);
  static Matrix diagonal(FieldPtr field, std::vector<FieldElement> const &diag);
  static Matrix from_rows(FieldPtr field,
                          std::vector<std::vector<unsigned>> const &rows);

  std::size_t dim() const { return _dim; }
  Field const &field() const { return *_field; }
  FieldPtr const &field_ptr() const { return _field; }

  FieldElement operator()(std::size_t i, std::size_t j) const
  { return _entries[i * _dim + j]; }

  void set(std::size_t i, std::size_t j, FieldElement x)
  { _entries[i * _dim + j] = x; }

  std::span<FieldElement const> entries() const { return _entries; }

  bool is_identity() const;
  bool is_scalar() const;

  Matrix inverse() const;
  FieldElement determinant() const;

  bool operator==(Matrix const &other) const
  { return _dim == other._dim && _entries == other._entries; }

  std::size_t hash() const;
  std::string str() const;

private:
  FieldPtr _field;
  std::size_t _dim = 0;
  std::vector<FieldElement> _entries;
};

struct MatrixHash
{
  std::size_t operator()(Matrix const &m) const { return m.hash(); }
};

Matrix operator*(Matrix const &a, Matrix const &b);

/// Matrix products performed by the calling thread since it started. Used to
/// instrument transversal lookups.
std::uint64_t multiplication_count();

RowVector act(RowVector const &v, Matrix const &m);
ProjectivePoint act(ProjectivePoint const &pt, Matrix const &m);
OrbitPoint act(OrbitPoint const &pt, Matrix const &m);

/// A vector moved by m: e_i for the first off-diagonal nonzero in row-major
/// order, else e_i + e_j for the first pair of unequal diagonal entries,
/// else e_1. Throws IdentityMatrix for m = I.
RowVector new_base_point(Matrix const &m);

/// Uniform entries, resampled until invertible.
Matrix random_invertible(FieldPtr field, std::size_t dim, RandomSource &rng);

} // namespace mgs

template <>
struct std::hash<mgs::Matrix>
{
  std::size_t operator()(mgs::Matrix const &m) const { return m.hash(); }
};

#include <sstream>
#include <utility>

#include "mgs/errors.h"
#include "mgs/matrix.h"
#include "mgs/random.h"

namespace mgs
{

namespace
{

thread_local std::uint64_t multiplications = 0u;

std::size_t hash_elements(std::span<FieldElement const> xs, std::size_t seed)
{
  std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (auto x : xs) {
    h ^= x.index;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(mix64(h));
}

void check_same_shape(std::size_t a, std::size_t b)
{
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

// RowVector

RowVector::RowVector(FieldPtr field, std::size_t dim)
  : _field(std::move(field)), _coords(dim)
{}

RowVector::RowVector(FieldPtr field, std::vector<FieldElement> coords)
  : _field(std::move(field)), _coords(std::move(coords))
{}

RowVector RowVector::unit(FieldPtr field, std::size_t dim, std::size_t i)
{
  RowVector v(std::move(field), dim);
  v._coords[i] = FieldElement{1};
  return v;
}

RowVector RowVector::from_indices(FieldPtr field,
                                  std::vector<unsigned> const &indices)
{
  std::vector<FieldElement> coords;
  coords.reserve(indices.size());
  for (unsigned x : indices)
    coords.push_back(field->element(x));
  return RowVector(std::move(field), std::move(coords));
}

bool RowVector::is_zero() const
{
  for (auto x : _coords)
    if (x.index != 0u)
      return false;
  return true;
}

std::size_t RowVector::hash() const { return hash_elements(_coords, 0u); }

std::string RowVector::str() const
{
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < _coords.size(); ++i)
    ss << (i ? "," : "") << _coords[i].index;
  ss << ')';
  return ss.str();
}

RowVector canonical(RowVector const &v)
{
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].index != 0u) {
      if (v[i].index == 1u)
        return v;
      Field const &f = v.field();
      FieldElement const s = f.inv(v[i]);
      RowVector res(v.field_ptr(), v.dim());
      for (std::size_t j = i; j < v.dim(); ++j)
        res.set(j, f.mul(v[j], s));
      return res;
    }
  }
  throw Error(ErrorKind::ZeroVector, "zero vector spans no line");
}

ProjectivePoint ProjectivePoint::line_through(RowVector const &v)
{
  return ProjectivePoint(canonical(v));
}

std::size_t OrbitPointHash::operator()(OrbitPoint const &pt) const
{
  return std::visit([](auto const &p) { return p.hash(); }, pt);
}

std::string to_string(OrbitPoint const &pt)
{
  return std::visit([](auto const &p) { return p.str(); }, pt);
}

bool is_projective(OrbitPoint const &pt)
{
  return std::holds_alternative<ProjectivePoint>(pt);
}

RowVector const &underlying_vector(OrbitPoint const &pt)
{
  if (auto const *line = std::get_if<ProjectivePoint>(&pt))
    return line->rep();
  return std::get<RowVector>(pt);
}

// Matrix

Matrix::Matrix(FieldPtr field, std::size_t dim)
  : _field(std::move(field)), _dim(dim), _entries(dim * dim)
{}

Matrix Matrix::identity(FieldPtr field, std::size_t dim)
{
  return scalar(std::move(field), dim, FieldElement{1});
}

Matrix Matrix::scalar(FieldPtr field, std::size_t dim, FieldElement s)
{
  Matrix m(std::move(field), dim);
  for (std::size_t i = 0; i < dim; ++i)
    m.set(i, i, s);
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, std::vector<FieldElement> const &diag)
{
  Matrix m(std::move(field), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m.set(i, i, diag[i]);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field,
                         std::vector<std::vector<unsigned>> const &rows)
{
  std::size_t const d = rows.size();
  Matrix m(field, d);
  for (std::size_t i = 0; i < d; ++i) {
    check_same_shape(rows[i].size(), d);
    for (std::size_t j = 0; j < d; ++j)
      m.set(i, j, field->element(rows[i][j]));
  }
  return m;
}

bool Matrix::is_identity() const
{
  for (std::size_t i = 0; i < _dim; ++i)
    for (std::size_t j = 0; j < _dim; ++j)
      if ((*this)(i, j).index != (i == j ? 1u : 0u))
        return false;
  return true;
}

bool Matrix::is_scalar() const
{
  for (std::size_t i = 0; i < _dim; ++i)
    for (std::size_t j = 0; j < _dim; ++j) {
      if (i != j && (*this)(i, j).index != 0u)
        return false;
      if (i == j && (*this)(i, i) != (*this)(0, 0))
        return false;
    }
  return true;
}

Matrix Matrix::inverse() const
{
  Field const &f = *_field;
  std::size_t const d = _dim;

  // Gauss-Jordan on [A | I]
  Matrix a = *this;
  Matrix inv = identity(_field, d);

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a(pivot, col).index == 0u)
      ++pivot;
    if (pivot == d)
      throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");

    if (pivot != col) {
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(a._entries[pivot * d + j], a._entries[col * d + j]);
        std::swap(inv._entries[pivot * d + j], inv._entries[col * d + j]);
      }
    }

    FieldElement const s = f.inv(a(col, col));
    for (std::size_t j = 0; j < d; ++j) {
      a.set(col, j, f.mul(a(col, j), s));
      inv.set(col, j, f.mul(inv(col, j), s));
    }

    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || a(row, col).index == 0u)
        continue;
      FieldElement const factor = f.neg(a(row, col));
      for (std::size_t j = 0; j < d; ++j) {
        a.set(row, j, f.add(a(row, j), f.mul(factor, a(col, j))));
        inv.set(row, j, f.add(inv(row, j), f.mul(factor, inv(col, j))));
      }
    }
  }
  return inv;
}

FieldElement Matrix::determinant() const
{
  Field const &f = *_field;
  std::size_t const d = _dim;
  Matrix a = *this;
  FieldElement det = f.one();

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a(pivot, col).index == 0u)
      ++pivot;
    if (pivot == d)
      return f.zero();

    if (pivot != col) {
      for (std::size_t j = 0; j < d; ++j)
        std::swap(a._entries[pivot * d + j], a._entries[col * d + j]);
      det = f.neg(det);
    }

    det = f.mul(det, a(col, col));
    FieldElement const s = f.inv(a(col, col));
    for (std::size_t row = col + 1; row < d; ++row) {
      if (a(row, col).index == 0u)
        continue;
      FieldElement const factor = f.neg(f.mul(a(row, col), s));
      for (std::size_t j = col; j < d; ++j)
        a.set(row, j, f.add(a(row, j), f.mul(factor, a(col, j))));
    }
  }
  return det;
}

std::size_t Matrix::hash() const { return hash_elements(_entries, _dim); }

std::string Matrix::str() const
{
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < _dim; ++i) {
    ss << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < _dim; ++j)
      ss << (j ? "," : "") << (*this)(i, j).index;
    ss << ']';
  }
  ss << ']';
  return ss.str();
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
  check_same_shape(a.dim(), b.dim());
  ++multiplications;

  std::size_t const d = a.dim();
  Field const &f = a.field();
  Matrix c(a.field_ptr(), d);

  if (f.degree() == 1u) {
    // prime field: accumulate integer products and reduce once
    std::uint64_t const p = f.characteristic();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t acc = 0u;
        for (std::size_t k = 0; k < d; ++k)
          acc += std::uint64_t{a(i, k).index} * b(k, j).index;
        c.set(i, j, FieldElement{static_cast<std::uint16_t>(acc % p)});
      }
    }
    return c;
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      FieldElement const aik = a(i, k);
      if (aik.index == 0u)
        continue;
      for (std::size_t j = 0; j < d; ++j)
        c.set(i, j, f.add(c(i, j), f.mul(aik, b(k, j))));
    }
  }
  return c;
}

std::uint64_t multiplication_count() { return multiplications; }

RowVector act(RowVector const &v, Matrix const &m)
{
  check_same_shape(v.dim(), m.dim());

  std::size_t const d = m.dim();
  Field const &f = m.field();
  RowVector res(m.field_ptr(), d);

  if (f.degree() == 1u) {
    std::uint64_t const p = f.characteristic();
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t acc = 0u;
      for (std::size_t i = 0; i < d; ++i)
        acc += std::uint64_t{v[i].index} * m(i, j).index;
      res.set(j, FieldElement{static_cast<std::uint16_t>(acc % p)});
    }
    return res;
  }

  for (std::size_t i = 0; i < d; ++i) {
    if (v[i].index == 0u)
      continue;
    for (std::size_t j = 0; j < d; ++j)
      res.set(j, f.add(res[j], f.mul(v[i], m(i, j))));
  }
  return res;
}

ProjectivePoint act(ProjectivePoint const &pt, Matrix const &m)
{
  return ProjectivePoint::line_through(act(pt.rep(), m));
}

OrbitPoint act(OrbitPoint const &pt, Matrix const &m)
{
  return std::visit([&m](auto const &p) { return OrbitPoint(act(p, m)); }, pt);
}

RowVector new_base_point(Matrix const &m)
{
  std::size_t const d = m.dim();

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j && m(i, j).index != 0u)
        return RowVector::unit(m.field_ptr(), d, i);

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j && m(i, i) != m(j, j)) {
        RowVector v = RowVector::unit(m.field_ptr(), d, i);
        v.set(j, FieldElement{1});
        return v;
      }
    }
  }

  if (m(0, 0).index == 1u)
    throw Error(ErrorKind::IdentityMatrix, "the identity moves no point");

  return RowVector::unit(m.field_ptr(), d, 0);
}

Matrix random_invertible(FieldPtr field, std::size_t dim, RandomSource &rng)
{
  unsigned const q = field->size();
  Matrix m(field, dim);
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m.set(i, j, FieldElement{static_cast<std::uint16_t>(rng.below(q))});
    if (m.determinant().index != 0u)
      return m;
  }
}

} // namespace mgs

#include <string>

#include "mgs/classical.h"
#include "mgs/errors.h"

namespace mgs
{

FieldPtr field_for_order(unsigned q)
{
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0u)
      continue;
    unsigned r = 0, rest = q;
    while (rest % p == 0u) {
      rest /= p;
      ++r;
    }
    if (rest != 1u || !is_prime(p))
      break;
    return Field::make(p, r);
  }
  throw Error(ErrorKind::NonPrimeCharacteristic,
              std::to_string(q) + " is not a prime power");
}

namespace
{

void check_dim(std::size_t d)
{
  if (d == 0u)
    throw Error(ErrorKind::BadDimension, "dimension must be at least 1");
}

Matrix signed_cycle(std::size_t d, FieldPtr const &field)
{
  Field const &f = *field;
  FieldElement const minus_one = f.neg(f.one());

  Matrix b(field, d);
  b.set(0, 0, minus_one);
  b.set(0, d - 1u, f.add(b(0, d - 1u), f.one()));
  for (std::size_t i = 1; i < d; ++i)
    b.set(i, i - 1u, minus_one);
  return b;
}

} // namespace

std::vector<Matrix> make_gl(std::size_t d, FieldPtr const &field)
{
  check_dim(d);
  if (field->size() == 2u)
    return make_sl(d, field);

  std::vector<FieldElement> diag(d, field->one());
  diag[0] = field->primitive_element();
  if (d == 1u)
    return {Matrix::diagonal(field, diag)};

  return {Matrix::diagonal(field, diag), signed_cycle(d, field)};
}

std::vector<Matrix> make_sl(std::size_t d, FieldPtr const &field)
{
  check_dim(d);
  if (d == 1u)
    return {Matrix::identity(field, 1u)};

  Matrix t = Matrix::identity(field, d);
  t.set(0, 1, field->one());

  std::vector<Matrix> gens{t, signed_cycle(d, field)};
  if (field->degree() > 1u) {
    std::vector<FieldElement> diag(d, field->one());
    diag[0] = field->primitive_element();
    diag[1] = field->inv(diag[0]);
    gens.push_back(Matrix::diagonal(field, diag));
  }
  return gens;
}

std::vector<std::pair<std::size_t, unsigned>> const &classical_parameters()
{
  static std::vector<std::pair<std::size_t, unsigned>> const params{
    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}};
  return params;
}

Order gl_order(std::size_t d, unsigned q)
{
  Order const qd = boost::multiprecision::pow(Order(q), static_cast<unsigned>(d));
  Order res = 1, qi = 1;
  for (std::size_t i = 0; i < d; ++i) {
    res *= qd - qi;
    qi *= q;
  }
  return res;
}

Order sl_order(std::size_t d, unsigned q)
{
  return gl_order(d, q) / (q - 1u);
}

} // namespace mgs

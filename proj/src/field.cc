#include <algorithm>
#include <string>

#include "mgs/errors.h"
#include "mgs/field.h"

namespace mgs
{

namespace
{

using Poly = std::vector<unsigned>;

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0u)
    a.pop_back();
}

// remainder of a modulo the monic polynomial m, coefficients mod p
Poly poly_mod(Poly a, Poly const &m, unsigned p)
{
  trim(a);
  std::size_t const dm = m.size() - 1u;
  while (a.size() >= m.size()) {
    unsigned const lead = a.back();
    std::size_t const shift = a.size() - 1u - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly digits(unsigned index, unsigned p, unsigned r)
{
  Poly d(r, 0u);
  for (unsigned i = 0; i < r; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

unsigned undigits(Poly const &d, unsigned p)
{
  unsigned index = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    index = index * p + *it;
  return index;
}

unsigned mul_mod_poly(unsigned a, unsigned b, Poly const &m, unsigned p,
                      unsigned r)
{
  if (r == 1u)
    return static_cast<unsigned>((std::uint64_t{a} * b) % p);

  Poly const da = digits(a, p, r);
  Poly const db = digits(b, p, r);
  Poly prod(2u * r - 1u, 0u);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;

  Poly rem = poly_mod(prod, m, p);
  rem.resize(r, 0u);
  return undigits(rem, p);
}

unsigned pow_mod_poly(unsigned a, std::uint64_t n, Poly const &m, unsigned p,
                      unsigned r)
{
  unsigned result = 1u;
  while (n > 0u) {
    if (n & 1u)
      result = mul_mod_poly(result, a, m, p, r);
    a = mul_mod_poly(a, a, m, p, r);
    n >>= 1u;
  }
  return result;
}

std::vector<unsigned> prime_factors(unsigned n)
{
  std::vector<unsigned> res;
  for (unsigned f = 2; f * f <= n; ++f) {
    if (n % f == 0u) {
      res.push_back(f);
      while (n % f == 0u)
        n /= f;
    }
  }
  if (n > 1u)
    res.push_back(n);
  return res;
}

void check_size(unsigned p, unsigned r)
{
  if (!is_prime(p))
    throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p));

  if (r == 0u)
    throw Error(ErrorKind::FieldTooLarge, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > Field::max_size)
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(r));
  }
}

} // namespace

bool is_prime(unsigned n)
{
  if (n < 2u)
    return false;
  for (unsigned f = 2; f * f <= n; ++f)
    if (n % f == 0u)
      return false;
  return true;
}

namespace detail
{

bool is_irreducible(unsigned p, std::vector<unsigned> const &poly)
{
  std::size_t const r = poly.size() - 1u;
  if (r <= 1u)
    return r == 1u;

  // every monic divisor candidate of degree 1 .. r/2
  for (std::size_t deg = 1; deg <= r / 2u; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i)
      count *= p;

    for (std::uint64_t n = 0; n < count; ++n) {
      Poly div(deg + 1u, 0u);
      std::uint64_t m = n;
      for (std::size_t i = 0; i < deg; ++i) {
        div[i] = static_cast<unsigned>(m % p);
        m /= p;
      }
      div[deg] = 1u;

      if (poly_mod(poly, div, p).empty())
        return false;
    }
  }
  return true;
}

} // namespace detail

FieldPtr Field::make(unsigned p, unsigned r)
{
  check_size(p, r);

  if (r == 1u)
    return FieldPtr(new Field(p, 1u, {0u, 1u}));

  std::uint64_t count = 1;
  for (unsigned i = 0; i < r; ++i)
    count *= p;

  // the constant coefficient is the most significant in the ordering
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly poly(r + 1u, 0u);
    std::uint64_t m = n;
    for (unsigned i = r; i-- > 0u;) {
      poly[i] = static_cast<unsigned>(m % p);
      m /= p;
    }
    poly[r] = 1u;

    if (detail::is_irreducible(p, poly))
      return FieldPtr(new Field(p, r, std::move(poly)));
  }

  throw Error(ErrorKind::ReduciblePolynomial, "no irreducible polynomial found");
}

FieldPtr Field::with_polynomial(unsigned p, std::vector<unsigned> poly)
{
  if (poly.size() < 2u || poly.back() != 1u)
    throw Error(ErrorKind::ReduciblePolynomial, "polynomial must be monic");

  unsigned const r = static_cast<unsigned>(poly.size() - 1u);
  check_size(p, r);

  for (unsigned c : poly) {
    if (c >= p)
      throw Error(ErrorKind::ReduciblePolynomial, "coefficient out of range");
  }

  if (r == 1u)
    return make(p, 1u);

  if (!detail::is_irreducible(p, poly))
    throw Error(ErrorKind::ReduciblePolynomial, "polynomial is reducible");

  return FieldPtr(new Field(p, r, std::move(poly)));
}

Field::Field(unsigned p, unsigned r, std::vector<unsigned> poly)
  : _p(p), _r(r), _poly(std::move(poly))
{
  _q = 1u;
  for (unsigned i = 0; i < r; ++i)
    _q *= p;

  _neg_table.resize(_q);
  for (unsigned a = 0; a < _q; ++a) {
    Poly d = digits(a, p, r);
    for (auto &c : d)
      c = (p - c) % p;
    _neg_table[a] = static_cast<std::uint16_t>(undigits(d, p));
  }

  if (_q <= 256u) {
    _add_table.resize(_q * _q);
    for (unsigned a = 0; a < _q; ++a)
      for (unsigned b = 0; b < _q; ++b)
        _add_table[a * _q + b] = add_slow({static_cast<std::uint16_t>(a)},
                                          {static_cast<std::uint16_t>(b)}).index;
  }

  // smallest primitive element, tested against the prime divisors of q - 1
  unsigned const group_order = _q - 1u;
  auto const factors = prime_factors(group_order);
  unsigned generator = 1u;
  if (group_order > 1u) {
    for (generator = 2u; generator < _q; ++generator) {
      bool primitive = true;
      for (unsigned f : factors) {
        if (pow_mod_poly(generator, group_order / f, _poly, p, r) == 1u) {
          primitive = false;
          break;
        }
      }
      if (primitive)
        break;
    }
  }

  _log.assign(_q, 0u);
  _exp.assign(2u * group_order, 0u);
  unsigned x = 1u;
  for (unsigned k = 0; k < group_order; ++k) {
    _exp[k] = static_cast<std::uint16_t>(x);
    _exp[k + group_order] = static_cast<std::uint16_t>(x);
    _log[x] = k;
    x = mul_mod_poly(x, generator, _poly, p, r);
  }
}

FieldElement Field::add_slow(FieldElement a, FieldElement b) const
{
  if (_r == 1u)
    return {static_cast<std::uint16_t>((a.index + b.index) % _p)};

  if (_p == 2u)
    return {static_cast<std::uint16_t>(a.index ^ b.index)};

  unsigned x = a.index, y = b.index, res = 0u, scale = 1u;
  for (unsigned i = 0; i < _r; ++i) {
    res += ((x % _p + y % _p) % _p) * scale;
    x /= _p;
    y /= _p;
    scale *= _p;
  }
  return {static_cast<std::uint16_t>(res)};
}

FieldElement Field::element(unsigned index) const
{
  if (index >= _q)
    throw Error(ErrorKind::ParseError,
                "field element index " + std::to_string(index) +
                " out of range for GF(" + std::to_string(_q) + ")");
  return {static_cast<std::uint16_t>(index)};
}

FieldElement Field::inv(FieldElement a) const
{
  if (a.index == 0u)
    throw Error(ErrorKind::DivisionByZero, "inverse of zero");

  unsigned const l = _log[a.index];
  return {_exp[l == 0u ? 0u : (_q - 1u) - l]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const
{
  if (n == 0u)
    return one();
  if (a.index == 0u)
    return zero();

  std::uint64_t const e = (std::uint64_t{_log[a.index]} * (n % (_q - 1u))) % (_q - 1u);
  return {_exp[e]};
}

unsigned Field::multiplicative_order(FieldElement a) const
{
  if (a.index == 0u)
    throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");

  unsigned const n = _q - 1u;
  unsigned const l = _log[a.index];
  unsigned g = n, b = l;
  while (b != 0u) {
    unsigned t = g % b;
    g = b;
    b = t;
  }
  return n / g;
}

} // namespace mgs

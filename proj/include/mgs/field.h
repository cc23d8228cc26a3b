#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

/**
 * @file field.h
 * @brief Table driven arithmetic in GF(p^r) for q = p^r <= 2^16.
 *
 * An element is stored as its index, the base-p positional encoding of its
 * coefficient vector in the polynomial basis: the element sum e_i x^i has
 * index sum e_i p^i. Index 0 is zero and index 1 is one.
 */

namespace mgs
{

struct FieldElement
{
  std::uint16_t index = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field;
using FieldPtr = std::shared_ptr<Field const>;

class Field
{
public:
  static constexpr unsigned max_size = 1u << 16;

  /// GF(p^r) reduced modulo the lexicographically least monic irreducible
  /// polynomial of degree r (coefficients compared from the constant term up).
  static FieldPtr make(unsigned p, unsigned r = 1);

  /// GF(p^r) reduced modulo a caller supplied monic irreducible polynomial
  /// (ascending coefficients, length r + 1).
  static FieldPtr with_polynomial(unsigned p, std::vector<unsigned> poly);

  unsigned characteristic() const { return _p; }
  unsigned degree() const { return _r; }
  unsigned size() const { return _q; }
  std::vector<unsigned> const &polynomial() const { return _poly; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(unsigned index) const;

  FieldElement add(FieldElement a, FieldElement b) const
  {
    if (!_add_table.empty())
      return {_add_table[a.index * _q + b.index]};
    return add_slow(a, b);
  }

  FieldElement neg(FieldElement a) const { return {_neg_table[a.index]}; }

  FieldElement sub(FieldElement a, FieldElement b) const
  { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const
  {
    if (a.index == 0 || b.index == 0)
      return {0};
    return {_exp[_log[a.index] + _log[b.index]]};
  }

  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const
  { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::uint64_t n) const;

  /// Smallest-index generator of the multiplicative group.
  FieldElement primitive_element() const { return {_exp[1]}; }

  /// Order of a in the multiplicative group; a must be nonzero.
  unsigned multiplicative_order(FieldElement a) const;

  bool operator==(Field const &other) const
  { return _p == other._p && _poly == other._poly; }

private:
  Field(unsigned p, unsigned r, std::vector<unsigned> poly);

  FieldElement add_slow(FieldElement a, FieldElement b) const;

  unsigned _p;
  unsigned _r;
  unsigned _q;
  std::vector<unsigned> _poly;

  // log/antilog tables; _exp has 2(q-1) entries so a sum of logs needs no
  // reduction
  std::vector<std::uint32_t> _log;
  std::vector<std::uint16_t> _exp;
  std::vector<std::uint16_t> _neg_table;
  std::vector<std::uint16_t> _add_table; // only for q <= 256
};

bool is_prime(unsigned n);

namespace detail
{

/// Monic irreducibility test by trial division; poly is ascending, monic.
bool is_irreducible(unsigned p, std::vector<unsigned> const &poly);

} // namespace detail

} // namespace mgs

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mgs/chain.h"
#include "mgs/field.h"
#include "mgs/matrix.h"

namespace mgs
{

/// GF(q) for a prime power q. Throws NonPrimeCharacteristic otherwise.
FieldPtr field_for_order(unsigned q);

/// Two generators for GL(d, q): diag(z, 1, ..., 1) with z primitive, and the
/// signed cycle B with B[1][1] = -1, B[1][d] = 1, B[i][i-1] = -1. For q = 2
/// this is the SL(d, 2) set. Throws BadDimension for d = 0.
std::vector<Matrix> make_gl(std::size_t d, FieldPtr const &field);

/// The transvection I + E_12 and B, plus diag(z, z^-1, 1, ..., 1) when q is
/// not prime. SL(1, q) is generated by I.
std::vector<Matrix> make_sl(std::size_t d, FieldPtr const &field);

/// (d, q) for the classical benchmark suite.
std::vector<std::pair<std::size_t, unsigned>> const &classical_parameters();

/// prod_{i<d} (q^d - q^i)
Order gl_order(std::size_t d, unsigned q);
Order sl_order(std::size_t d, unsigned q);

} // namespace mgs

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mgs/chain.h"
#include "mgs/matrix.h"

namespace mgs
{

/**
 * A generating set with its field and degree. On disk:
 *
 *   matgroup v1
 *   q=3^2 d=2 poly=2,2,1
 *   gen
 *   1 0
 *   0 3
 *
 * `poly` (ascending coefficients) is required when r > 1. Entries are field
 * element indices. Blank lines and lines starting with '#' are ignored.
 */
struct GroupSpec
{
  std::string label;
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  std::optional<Order> known_order; // set for builtin classical groups
};

GroupSpec parse_group(std::istream &in, std::string label = {});
GroupSpec parse_group(std::string const &text, std::string label = {});
std::string serialize_group(GroupSpec const &spec);

/// `builtin:GL(d,q)`, `builtin:SL(d,q)` or a group file path.
GroupSpec load_group(std::string const &uri);

/// d rows of d integers, optionally preceded by a `gen` line.
Matrix parse_matrix(std::istream &in, FieldPtr const &field, std::size_t dim);
Matrix load_matrix(std::string const &path, FieldPtr const &field,
                   std::size_t dim);

} // namespace mgs

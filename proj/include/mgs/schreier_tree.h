#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "mgs/matrix.h"

namespace mgs
{

/// How edges are labelled. With generator labels an edge p -> p^s stores
/// s and a transversal element is the product along the root path; with
/// transversal labels every point stores that product directly, so lookup
/// needs no multiplication at the cost of one matrix per orbit point.
enum class LabelMode
{
  generators,
  transversal
};

inline constexpr std::size_t default_orbit_limit = 1'000'000;

struct TreeStats
{
  std::size_t size = 0;
  std::size_t max_depth = 0;
};

/**
 * Breadth-first spanning tree of the orbit of a root point under a list of
 * generators. Points are hashed, so orbit membership is a single lookup.
 *
 * Generators are applied in input order; orbits do not depend on that
 * order but the coset representatives do.
 */
class SchreierTree
{
public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  SchreierTree() = default;

  /// Throws OrbitLimitExceeded if the orbit exceeds `orbit_limit` points.
  static SchreierTree compute(std::span<Matrix const> gens,
                              OrbitPoint const &root, LabelMode mode,
                              std::size_t orbit_limit = default_orbit_limit);

  /// Adds generators and grows the orbit from the existing nodes. Existing
  /// edges are kept, so the result may be deeper than a fresh computation.
  void extend(std::span<Matrix const> new_gens,
              std::size_t orbit_limit = default_orbit_limit);

  OrbitPoint const &root() const { return _points.front(); }
  LabelMode mode() const { return _mode; }
  std::span<Matrix const> generators() const { return _gens; }

  std::size_t size() const { return _points.size(); }
  TreeStats stats() const { return {_points.size(), _max_depth}; }

  /// Orbit points in breadth-first order, root first.
  std::span<OrbitPoint const> points() const { return _points; }

  bool contains(OrbitPoint const &p) const { return _index.count(p) != 0u; }

  /// Position of p in points(), or npos.
  std::size_t find(OrbitPoint const &p) const;

  /// Position in points() of the parent of the point at `pos` (npos for the
  /// root) and the position in generators() of the generator on its edge.
  std::size_t parent(std::size_t pos) const { return _nodes[pos].parent; }
  std::size_t edge_generator(std::size_t pos) const { return _nodes[pos].gen; }
  std::size_t depth(std::size_t pos) const { return _nodes[pos].depth; }

  /// The element t(p) with root^t(p) = p. Throws PointNotInOrbit.
  Matrix orbit_element(OrbitPoint const &p) const;
  Matrix orbit_element_at(std::size_t pos) const;

  /// t(p) as a word: positions in generators(), read left to right.
  std::vector<std::size_t> orbit_word_at(std::size_t pos) const;

private:
  struct Node
  {
    std::size_t parent;
    std::size_t gen;
    std::size_t depth;
  };

  void grow(std::size_t first_gen, std::size_t orbit_limit);
  bool try_add(std::size_t parent, std::size_t gen, std::size_t orbit_limit);

  LabelMode _mode = LabelMode::generators;
  Matrix _identity;
  std::vector<Matrix> _gens;
  std::vector<OrbitPoint> _points;
  std::vector<Node> _nodes;
  std::vector<Matrix> _transversal; // transversal mode only
  std::unordered_map<OrbitPoint, std::size_t, OrbitPointHash> _index;
  std::size_t _max_depth = 0;
};

/// t(p) s t(p^s)^-1 for the point at `pos` and generator `gen` (positions in
/// the tree). It fixes the root. Returns the identity without multiplying
/// when (p, p^s) is a tree edge labelled s.
Matrix schreier_generator(SchreierTree const &tree, std::size_t pos,
                          std::size_t gen);

/// Same, for an arbitrary orbit point and group element.
Matrix schreier_generator(SchreierTree const &tree, OrbitPoint const &p,
                          Matrix const &s);

/**
 * Sims's generator reduction for levels 1..m of a partial BSGS: among the
 * level-i generators (those fixing the first i-1 base points), all that map
 * base point i to the same moved image are replaced by pivot * h^-1, where
 * the pivot is the first such generator. The replaced elements fix base
 * point i. Identities and duplicates are dropped; the generated group is
 * unchanged.
 */
std::vector<Matrix> boil_schreier_generators(std::span<OrbitPoint const> base,
                                             std::vector<Matrix> sgs,
                                             std::size_t m);

} // namespace mgs

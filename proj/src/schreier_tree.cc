#include <algorithm>
#include <string>
#include <unordered_set>

#include "mgs/errors.h"
#include "mgs/schreier_tree.h"

namespace mgs
{

SchreierTree SchreierTree::compute(std::span<Matrix const> gens,
                                   OrbitPoint const &root, LabelMode mode,
                                   std::size_t orbit_limit)
{
  SchreierTree tree;
  tree._mode = mode;
  tree._gens.assign(gens.begin(), gens.end());
  tree._points.push_back(root);
  tree._nodes.push_back({npos, npos, 0u});
  tree._index.emplace(root, 0u);

  RowVector const &v = underlying_vector(root);
  tree._identity = Matrix::identity(v.field_ptr(), v.dim());
  if (mode == LabelMode::transversal)
    tree._transversal.push_back(tree._identity);

  tree.grow(0u, orbit_limit);
  return tree;
}

void SchreierTree::extend(std::span<Matrix const> new_gens,
                          std::size_t orbit_limit)
{
  std::size_t const first_new = _gens.size();
  _gens.insert(_gens.end(), new_gens.begin(), new_gens.end());
  grow(first_new, orbit_limit);
}

// Breadth-first closure. Nodes that existed before the call only need the
// generators from `first_gen` on; nodes added during the call need all.
void SchreierTree::grow(std::size_t first_gen, std::size_t orbit_limit)
{
  std::size_t const old_size = _points.size();

  for (std::size_t pos = 0; pos < _points.size(); ++pos) {
    std::size_t const start = pos < old_size ? first_gen : 0u;
    for (std::size_t g = start; g < _gens.size(); ++g)
      try_add(pos, g, orbit_limit);
  }
}

bool SchreierTree::try_add(std::size_t parent, std::size_t gen,
                           std::size_t orbit_limit)
{
  OrbitPoint image = act(_points[parent], _gens[gen]);
  if (_index.count(image))
    return false;

  if (_points.size() >= orbit_limit)
    throw Error(ErrorKind::OrbitLimitExceeded,
                "orbit exceeds " + std::to_string(orbit_limit) + " points");

  std::size_t const depth = _nodes[parent].depth + 1u;
  _max_depth = std::max(_max_depth, depth);

  _index.emplace(image, _points.size());
  _points.push_back(std::move(image));
  _nodes.push_back({parent, gen, depth});

  if (_mode == LabelMode::transversal)
    _transversal.push_back(_transversal[parent] * _gens[gen]);

  return true;
}

std::size_t SchreierTree::find(OrbitPoint const &p) const
{
  auto it = _index.find(p);
  return it == _index.end() ? npos : it->second;
}

Matrix SchreierTree::orbit_element(OrbitPoint const &p) const
{
  std::size_t const pos = find(p);
  if (pos == npos)
    throw Error(ErrorKind::PointNotInOrbit, to_string(p));
  return orbit_element_at(pos);
}

Matrix SchreierTree::orbit_element_at(std::size_t pos) const
{
  if (_mode == LabelMode::transversal)
    return _transversal[pos];

  // walk towards the root, prepending each edge label
  Matrix g;
  bool first = true;
  while (_nodes[pos].parent != npos) {
    Matrix const &s = _gens[_nodes[pos].gen];
    if (first) {
      g = s;
      first = false;
    } else {
      g = s * g;
    }
    pos = _nodes[pos].parent;
  }

  if (first)
    return _identity;
  return g;
}

std::vector<std::size_t> SchreierTree::orbit_word_at(std::size_t pos) const
{
  std::vector<std::size_t> word;
  while (_nodes[pos].parent != npos) {
    word.push_back(_nodes[pos].gen);
    pos = _nodes[pos].parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Matrix schreier_generator(SchreierTree const &tree, std::size_t pos,
                          std::size_t gen)
{
  Matrix const &s = tree.generators()[gen];
  OrbitPoint const image = act(tree.points()[pos], s);
  std::size_t const image_pos = tree.find(image);
  if (image_pos == SchreierTree::npos)
    throw Error(ErrorKind::PointNotInOrbit, to_string(image));

  if (tree.parent(image_pos) == pos && tree.edge_generator(image_pos) == gen)
    return Matrix::identity(s.field_ptr(), s.dim());

  return tree.orbit_element_at(pos) * s *
         tree.orbit_element_at(image_pos).inverse();
}

Matrix schreier_generator(SchreierTree const &tree, OrbitPoint const &p,
                          Matrix const &s)
{
  std::size_t const pos = tree.find(p);
  if (pos == SchreierTree::npos)
    throw Error(ErrorKind::PointNotInOrbit, to_string(p));

  OrbitPoint const image = act(p, s);
  std::size_t const image_pos = tree.find(image);
  if (image_pos == SchreierTree::npos)
    throw Error(ErrorKind::PointNotInOrbit, to_string(image));

  return tree.orbit_element_at(pos) * s *
         tree.orbit_element_at(image_pos).inverse();
}

std::vector<Matrix> boil_schreier_generators(std::span<OrbitPoint const> base,
                                             std::vector<Matrix> sgs,
                                             std::size_t m)
{
  m = std::min(m, base.size());

  for (std::size_t level = 0; level < m; ++level) {
    OrbitPoint const &alpha = base[level];

    std::unordered_map<OrbitPoint, std::size_t, OrbitPointHash> pivot_of;
    for (std::size_t k = 0; k < sgs.size(); ++k) {
      bool in_level = true;
      for (std::size_t j = 0; j < level && in_level; ++j)
        in_level = act(base[j], sgs[k]) == base[j];
      if (!in_level)
        continue;

      OrbitPoint image = act(alpha, sgs[k]);
      if (image == alpha)
        continue;

      auto [it, inserted] = pivot_of.emplace(std::move(image), k);
      if (!inserted)
        sgs[k] = sgs[it->second] * sgs[k].inverse();
    }
  }

  std::vector<Matrix> res;
  std::unordered_set<Matrix, MatrixHash> seen;
  for (auto &g : sgs) {
    if (g.is_identity() || !seen.insert(g).second)
      continue;
    res.push_back(std::move(g));
  }
  return res;
}

} // namespace mgs

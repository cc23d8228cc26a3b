#include <algorithm>
#include <cmath>
#include <string>

#include "mgs/chain.h"
#include "mgs/errors.h"
#include "mgs/random.h"

namespace mgs
{

StabilizerChain::StabilizerChain(FieldPtr field, std::size_t dim,
                                 ChainOptions options)
  : _field(std::move(field)), _dim(dim), _options(options)
{}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const
{
  std::vector<std::size_t> res;
  res.reserve(_levels.size());
  for (auto const &level : _levels)
    res.push_back(level.tree.size());
  return res;
}

SiftResult StabilizerChain::sift(Matrix const &g, std::size_t from_level,
                                 std::vector<SiftStep> *trace) const
{
  Matrix r = g;
  for (std::size_t i = from_level; i < _base.size(); ++i) {
    SchreierTree const &tree = _levels[i].tree;
    std::size_t const pos = tree.find(act(_base[i], r));
    if (pos == SchreierTree::npos)
      return {std::move(r), i};

    if (trace)
      trace->push_back({i, pos});
    if (pos != 0u)
      r = r * tree.orbit_element_at(pos).inverse();
  }
  return {std::move(r), _base.size()};
}

std::size_t StabilizerChain::fixed_prefix(Matrix const &g) const
{
  std::size_t i = 0;
  while (i < _base.size() && act(_base[i], g) == _base[i])
    ++i;
  return i;
}

std::optional<std::size_t> StabilizerChain::index_of(Matrix const &g) const
{
  auto it = _sgs_index.find(g);
  if (it == _sgs_index.end())
    return std::nullopt;
  return it->second;
}

void StabilizerChain::place(std::size_t k, std::size_t from_level)
{
  std::size_t i = from_level;
  while (i < _base.size()) {
    _levels[i].generators.push_back(k);
    if (act(_base[i], _sgs[k]) != _base[i])
      break;
    ++i;
  }
  _prefix[k] = i;
}

bool StabilizerChain::add_single(Matrix const &g)
{
  if (g.is_identity() || _sgs_index.count(g))
    return false;

  std::size_t const k = _sgs.size();
  _sgs.push_back(g);
  _sgs_index.emplace(g, k);
  _prefix.push_back(0u);
  place(k, 0u);
  return true;
}

bool StabilizerChain::add_generator(Matrix const &g)
{
  if (g.is_identity())
    return false;

  bool changed = add_single(g);
  changed = add_single(g.inverse()) || changed;
  if (changed && _sgs.size() > _options.generator_cap)
    throw Error(ErrorKind::GeneratorBlowup,
                "strong generating set exceeds " +
                std::to_string(_options.generator_cap) + " elements");
  return changed;
}

void StabilizerChain::extend_base(std::vector<OrbitPoint> points)
{
  for (auto &pt : points) {
    std::size_t const level = _base.size();
    _base.push_back(std::move(pt));
    _levels.emplace_back();

    for (std::size_t k = 0; k < _sgs.size(); ++k) {
      if (_prefix[k] != level)
        continue;
      _levels[level].generators.push_back(k);
      if (act(_base[level], _sgs[k]) == _base[level])
        _prefix[k] = level + 1u;
    }
  }
}

std::vector<OrbitPoint> StabilizerChain::new_base_points_for(
  Matrix const &residue) const
{
  return select_base_point(_options.strategy, _input, residue, _base);
}

void StabilizerChain::ensure_partial_base()
{
  for (std::size_t k = 0; k < _sgs.size(); ++k) {
    if (_prefix[k] == _base.size())
      extend_base(new_base_points_for(_sgs[k]));
  }
}

void StabilizerChain::replace_generators(std::vector<Matrix> gens)
{
  _sgs.clear();
  _sgs_index.clear();
  _prefix.clear();
  for (auto &level : _levels) {
    level.generators.clear();
    level.tree_generators.clear();
    level.tree = SchreierTree();
  }

  for (auto const &g : gens)
    add_single(g);

  ensure_partial_base();
  _complete = false;
}

void StabilizerChain::remove_generator(std::size_t index)
{
  std::vector<Matrix> gens = _sgs;
  gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(index));
  replace_generators(std::move(gens));
}

void StabilizerChain::close_under_inverses()
{
  std::size_t const n = _sgs.size();
  for (std::size_t k = 0; k < n; ++k)
    add_single(_sgs[k].inverse());
}

void StabilizerChain::refresh_level(std::size_t i)
{
  Level &level = _levels[i];
  bool const built = level.tree.size() != 0u;
  if (built && level.tree_generators == level.generators)
    return;

  auto gather = [this](std::vector<std::size_t> const &indices) {
    std::vector<Matrix> gens;
    gens.reserve(indices.size());
    for (std::size_t k : indices)
      gens.push_back(_sgs[k]);
    return gens;
  };

  if (built && _options.rebuild == RebuildPolicy::extend &&
      std::includes(level.generators.begin(), level.generators.end(),
                    level.tree_generators.begin(),
                    level.tree_generators.end())) {
    std::vector<std::size_t> added;
    std::set_difference(level.generators.begin(), level.generators.end(),
                        level.tree_generators.begin(),
                        level.tree_generators.end(),
                        std::back_inserter(added));
    level.tree.extend(gather(added), _options.orbit_limit);
    level.tree_generators.insert(level.tree_generators.end(), added.begin(),
                                 added.end());

    // depth watchdog: keep extended trees shallow
    TreeStats const stats = level.tree.stats();
    double const bound = 4.0 * std::log2(static_cast<double>(stats.size));
    if (static_cast<double>(stats.max_depth) <= std::max(bound, 1.0))
      return;
  }

  level.tree_generators = level.generators;
  level.tree = SchreierTree::compute(gather(level.generators), _base[i],
                                     _options.label_mode, _options.orbit_limit);
}

void StabilizerChain::refresh_all_levels()
{
  for (std::size_t i = 0; i < _levels.size(); ++i)
    refresh_level(i);
}

StabilizerChain get_partial_bsgs(std::span<Matrix const> gens,
                                 std::vector<OrbitPoint> seed_base,
                                 ChainOptions options)
{
  if (gens.empty())
    throw Error(ErrorKind::NoGenerators, "a group needs generators");

  StabilizerChain chain(gens.front().field_ptr(), gens.front().dim(), options);

  std::vector<Matrix> input;
  for (auto const &g : gens) {
    if (g.dim() != chain.dim())
      throw Error(ErrorKind::DimensionMismatch, "generators differ in degree");
    if (!g.is_identity())
      input.push_back(g);
  }
  chain.set_input_generators(input);
  chain.extend_base(std::move(seed_base));

  for (auto const &s : input) {
    if (chain.index_of(s))
      continue;
    if (chain.fixes_base(s))
      chain.extend_base(chain.new_base_points_for(s));
    chain.add_generator(s);
  }

  chain.refresh_all_levels();
  return chain;
}

SchreierSimsStats schreier_sims(StabilizerChain &chain, std::size_t level,
                                SchreierSimsHooks *hooks)
{
  struct Frame
  {
    std::size_t level;
    std::size_t point = 0;
    std::size_t gen = 0;
    // levels next_recurse, next_recurse - 1, ..., level + 1 are still to be
    // redone after an addition
    std::size_t next_recurse = 0;
    bool started = false;
  };

  SchreierSimsStats stats;
  std::vector<Frame> stack{Frame{level}};
  std::vector<SiftStep> trace;

  while (!stack.empty()) {
    std::size_t const top = stack.size() - 1u;

    if (!stack[top].started) {
      chain.refresh_level(stack[top].level);
      stack[top].started = true;
    }

    if (stack[top].next_recurse > stack[top].level) {
      std::size_t const j = stack[top].next_recurse--;
      stack.push_back(Frame{j});
      continue;
    }

    Frame &f = stack[top];
    SchreierTree const &tree = chain.level(f.level).tree;
    std::size_t const ngens = tree.generators().size();

    if (ngens == 0u || f.point >= tree.size()) {
      stack.pop_back();
      continue;
    }

    if (hooks && hooks->level_done(chain, f.level)) {
      stack.pop_back();
      continue;
    }

    std::size_t const p = f.point, s = f.gen;
    if (++f.gen == ngens) {
      f.gen = 0u;
      ++f.point;
    }

    Matrix gen = schreier_generator(tree, p, s);
    ++stats.schreier_generators;

    trace.clear();
    if (gen.is_identity()) {
      if (hooks)
        hooks->trivial_sift(chain, f.level, p, s, trace);
      continue;
    }

    ++stats.sifts;
    SiftResult const sr = chain.sift(gen, f.level + 1u, hooks ? &trace : nullptr);
    if (sr.residue.is_identity()) {
      if (hooks)
        hooks->trivial_sift(chain, f.level, p, s, trace);
      continue;
    }

    // The raw generator joins S. New base points come from the residue,
    // which is the element guaranteed to fix the current base.
    std::size_t const old_length = chain.length();
    chain.add_generator(gen);
    std::size_t redo_from = sr.dropout;
    if (sr.dropout == old_length) {
      chain.extend_base(chain.new_base_points_for(sr.residue));
      redo_from = chain.length() - 1u;
    }
    ++stats.additions;

    stack[top].next_recurse = redo_from;
  }

  return stats;
}

void complete_deterministic(StabilizerChain &chain)
{
  chain.ensure_partial_base();
  for (std::size_t i = chain.length(); i-- > 0u;)
    schreier_sims(chain, i);

  chain.refresh_all_levels();
  chain.set_complete(true);
}

StabilizerChain compute_bsgs_deterministic(std::span<Matrix const> gens,
                                           ChainOptions options)
{
  StabilizerChain chain = get_partial_bsgs(gens, {}, options);
  complete_deterministic(chain);
  return chain;
}

StabilizerChain compute_bsgs_naive(std::span<Matrix const> gens,
                                   ChainOptions options)
{
  StabilizerChain chain = get_partial_bsgs(gens, {}, options);

  for (std::size_t i = 0; i < chain.length(); ++i) {
    chain.refresh_level(i);
    SchreierTree const tree = chain.level(i).tree;

    for (std::size_t p = 0; p < tree.size(); ++p) {
      for (std::size_t s = 0; s < tree.generators().size(); ++s) {
        Matrix gen = schreier_generator(tree, p, s);
        if (gen.is_identity() || !chain.add_generator(gen))
          continue;
        if (chain.fixes_base(gen))
          chain.extend_base(chain.new_base_points_for(gen));
      }
    }

    std::vector<Matrix> sgs(chain.sgs().begin(), chain.sgs().end());
    chain.replace_generators(
      boil_schreier_generators(chain.base(), std::move(sgs), i + 1u));
  }

  chain.close_under_inverses();
  chain.refresh_all_levels();
  chain.set_complete(true);
  return chain;
}

namespace
{

void require_complete(StabilizerChain const &chain)
{
  if (!chain.is_complete())
    throw Error(ErrorKind::IncompleteChain, "chain is not known to be complete");
}

std::vector<std::vector<Matrix>> transversals(StabilizerChain const &chain)
{
  std::vector<std::vector<Matrix>> res(chain.length());
  for (std::size_t i = 0; i < chain.length(); ++i) {
    SchreierTree const &tree = chain.level(i).tree;
    res[i].reserve(tree.size());
    for (std::size_t pos = 0; pos < tree.size(); ++pos)
      res[i].push_back(tree.orbit_element_at(pos));
  }
  return res;
}

} // namespace

bool is_member(StabilizerChain const &chain, Matrix const &g)
{
  require_complete(chain);
  SiftResult const sr = chain.sift(g);
  return sr.dropout == chain.length() && sr.residue.is_identity();
}

Order orbit_product(StabilizerChain const &chain)
{
  Order order = 1;
  for (std::size_t size : chain.orbit_sizes())
    order *= size;
  return order;
}

Order group_order(StabilizerChain const &chain)
{
  require_complete(chain);
  return orbit_product(chain);
}

void for_each_element(StabilizerChain const &chain,
                      std::function<void(Matrix const &)> const &visit,
                      std::size_t cap)
{
  require_complete(chain);
  if (group_order(chain) > cap)
    throw Error(ErrorKind::GroupTooLarge,
                "group order exceeds enumeration cap " + std::to_string(cap));

  auto const trans = transversals(chain);
  std::size_t const n = trans.size();

  // partial[k] = u_{n-1} ... u_k for the current choice at levels >= k
  std::vector<Matrix> partial(n + 1u);
  partial[n] = chain.identity();
  std::vector<std::size_t> choice(n, 0u);

  if (n == 0u) {
    visit(partial[0]);
    return;
  }

  std::size_t k = n;
  while (true) {
    while (k > 0u) {
      --k;
      partial[k] = partial[k + 1u] * trans[k][choice[k]];
    }
    visit(partial[0]);

    // advance the odometer, lowest level fastest
    while (k < n && ++choice[k] == trans[k].size()) {
      choice[k] = 0u;
      ++k;
    }
    if (k == n)
      return;
    ++k;
  }
}

std::vector<Matrix> enumerate_elements(StabilizerChain const &chain,
                                       std::size_t cap)
{
  std::vector<Matrix> res;
  for_each_element(chain, [&res](Matrix const &g) { res.push_back(g); }, cap);
  return res;
}

std::vector<Matrix> factorize(StabilizerChain const &chain, Matrix const &g)
{
  std::vector<SiftStep> trace;
  SiftResult const sr = chain.sift(g, 0u, &trace);
  if (sr.dropout != chain.length() || !sr.residue.is_identity())
    throw Error(ErrorKind::NotAMember, g.str());

  std::vector<Matrix> factors;
  factors.reserve(trace.size());
  for (auto it = trace.rbegin(); it != trace.rend(); ++it)
    factors.push_back(chain.level(it->level).tree.orbit_element_at(it->point));
  return factors;
}

Matrix random_element(StabilizerChain const &chain, RandomSource &rng)
{
  require_complete(chain);

  Matrix g = chain.identity();
  for (std::size_t i = chain.length(); i-- > 0u;) {
    SchreierTree const &tree = chain.level(i).tree;
    std::size_t const pos = static_cast<std::size_t>(rng.below(tree.size()));
    if (pos != 0u)
      g = g * tree.orbit_element_at(pos);
  }
  return g;
}

std::optional<std::size_t> failing_level(StabilizerChain const &chain)
{
  for (std::size_t i = 0; i < chain.length(); ++i) {
    SchreierTree const &tree = chain.level(i).tree;
    for (std::size_t p = 0; p < tree.size(); ++p) {
      for (std::size_t s = 0; s < tree.generators().size(); ++s) {
        Matrix const gen = schreier_generator(tree, p, s);
        if (!chain.sift(gen, i + 1u).residue.is_identity())
          return i;
      }
    }
  }

  // the last stabiliser must be trivial as well
  for (auto const &g : chain.sgs())
    if (chain.fixes_base(g))
      return chain.length();

  return std::nullopt;
}

} // namespace mgs

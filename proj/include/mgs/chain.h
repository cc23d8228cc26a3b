#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mgs/base_points.h"
#include "mgs/matrix.h"
#include "mgs/schreier_tree.h"

namespace mgs
{

class RandomSource;

using Order = boost::multiprecision::cpp_int;

/// What happens to a level's Schreier tree when its generator set grows.
enum class RebuildPolicy
{
  always, ///< recompute from scratch
  extend  ///< grow from the existing tree; recompute when it gets too deep
};

struct ChainOptions
{
  LabelMode label_mode = LabelMode::transversal;
  RebuildPolicy rebuild = RebuildPolicy::always;
  BaseStrategy strategy = BaseStrategy::natural;
  std::size_t orbit_limit = default_orbit_limit;
  std::size_t generator_cap = 100'000;
};

/// Levels are numbered from 0. `dropout` is the level at which the residue
/// left the chain, or the base length if every level was passed.
struct SiftResult
{
  Matrix residue;
  std::size_t dropout;
};

/// One level passed while sifting: the tree position of the image point.
struct SiftStep
{
  std::size_t level;
  std::size_t point;
};

/**
 * Base B = (a_1, ..., a_n), strong generating set S and, for each level i,
 * the members of S fixing a_1 .. a_{i-1} together with a Schreier tree of
 * the orbit of a_i under them.
 *
 * Invariants maintained by the mutators: S holds no identity and no
 * duplicates, and no member of S fixes every base point once
 * ensure_partial_base() or the construction routines have run.
 */
class StabilizerChain
{
public:
  struct Level
  {
    std::vector<std::size_t> generators; // indices into sgs()
    SchreierTree tree;
    std::vector<std::size_t> tree_generators; // what `tree` was built from
  };

  StabilizerChain(FieldPtr field, std::size_t dim, ChainOptions options = {});

  FieldPtr const &field_ptr() const { return _field; }
  std::size_t dim() const { return _dim; }
  ChainOptions const &options() const { return _options; }

  std::span<OrbitPoint const> base() const { return _base; }
  std::span<Matrix const> sgs() const { return _sgs; }
  std::size_t length() const { return _base.size(); }
  Level const &level(std::size_t i) const { return _levels[i]; }

  /// The generators the chain was built for; consulted by the eigenvector
  /// base point strategy.
  std::span<Matrix const> input_generators() const { return _input; }
  void set_input_generators(std::vector<Matrix> gens) { _input = std::move(gens); }

  std::vector<std::size_t> orbit_sizes() const;

  bool is_complete() const { return _complete; }
  void set_complete(bool complete) { _complete = complete; }

  Matrix identity() const { return Matrix::identity(_field, _dim); }

  /// Strips g through levels from_level, from_level + 1, ... using the
  /// current trees. The residue may be nontrivial even when every level is
  /// passed.
  SiftResult sift(Matrix const &g, std::size_t from_level = 0,
                  std::vector<SiftStep> *trace = nullptr) const;

  /// Number of leading base points fixed by g.
  std::size_t fixed_prefix(Matrix const &g) const;
  bool fixes_base(Matrix const &g) const { return fixed_prefix(g) == _base.size(); }

  std::optional<std::size_t> index_of(Matrix const &g) const;

  /// Adds g and g^-1 to S, skipping the identity and members already present.
  /// Returns true if S changed. Trees are not touched.
  bool add_generator(Matrix const &g);
  bool add_single(Matrix const &g);

  void extend_base(std::vector<OrbitPoint> points);

  /// Base points for a residue that fixes the whole base, per the configured
  /// strategy.
  std::vector<OrbitPoint> new_base_points_for(Matrix const &residue) const;

  /// Appends base points until no member of S fixes the whole base.
  void ensure_partial_base();

  /// Replaces S wholesale (no inverse closure), keeping the base, then
  /// restores the partial base property. All trees are invalidated.
  void replace_generators(std::vector<Matrix> gens);
  void remove_generator(std::size_t index);
  void close_under_inverses();

  /// Brings level i's tree up to date with its generator set, following the
  /// rebuild policy. A no-op when nothing changed.
  void refresh_level(std::size_t i);
  void refresh_all_levels();

private:
  void place(std::size_t sgs_index, std::size_t from_level);

  FieldPtr _field;
  std::size_t _dim;
  ChainOptions _options;

  std::vector<Matrix> _input;
  std::vector<OrbitPoint> _base;
  std::vector<Matrix> _sgs;
  std::vector<std::size_t> _prefix; // fixed_prefix of each sgs member
  std::unordered_map<Matrix, std::size_t, MatrixHash> _sgs_index;
  std::vector<Level> _levels;
  bool _complete = false;
};

/// Partial base and SGS: every non-identity generator (with its inverse) is
/// kept, and base points are appended whenever a generator fixes the base.
/// Trees are built for all levels. Throws NoGenerators for an empty list.
StabilizerChain get_partial_bsgs(std::span<Matrix const> gens,
                                 std::vector<OrbitPoint> seed_base = {},
                                 ChainOptions options = {});

/// Hooks into the level loop of schreier_sims, used by the coset
/// enumeration variant.
class SchreierSimsHooks
{
public:
  virtual ~SchreierSimsHooks() = default;

  /// Asked before each Schreier generator of `level` is formed; true ends
  /// the level.
  virtual bool level_done(StabilizerChain &, std::size_t /*level*/)
  { return false; }

  /// The Schreier generator for (point, gen) at `level` stripped to the
  /// identity through the levels below; `trace` lists the levels passed
  /// (empty when the generator itself was the identity).
  virtual void trivial_sift(StabilizerChain const &, std::size_t /*level*/,
                            std::size_t /*point*/, std::size_t /*gen*/,
                            std::vector<SiftStep> const & /*trace*/)
  {}
};

struct SchreierSimsStats
{
  std::size_t schreier_generators = 0;
  std::size_t sifts = 0;
  std::size_t additions = 0;
};

/**
 * Makes level `level` and everything below it complete, assuming the levels
 * below already are: every Schreier generator of the level is sifted and
 * nontrivial ones are added to S, after which the affected lower levels are
 * redone from the drop-out level upwards. The recursion runs on an explicit
 * stack.
 */
SchreierSimsStats schreier_sims(StabilizerChain &chain, std::size_t level,
                                SchreierSimsHooks *hooks = nullptr);

/// Runs schreier_sims on every level, bottom level first, and flags the
/// chain complete. Works on a partial BSGS from any construction.
void complete_deterministic(StabilizerChain &chain);

/// Deterministic Schreier-Sims over all levels, bottom level first.
StabilizerChain compute_bsgs_deterministic(std::span<Matrix const> gens,
                                           ChainOptions options = {});

/// Top-down: all Schreier generators of each level are added, then the
/// generating set is boiled. Throws GeneratorBlowup past options.generator_cap.
StabilizerChain compute_bsgs_naive(std::span<Matrix const> gens,
                                   ChainOptions options = {});

/// True iff g sifts to the identity. Throws IncompleteChain.
bool is_member(StabilizerChain const &chain, Matrix const &g);

/// Product of the level orbit sizes. Throws IncompleteChain.
Order group_order(StabilizerChain const &chain);

/// Product of the level orbit sizes of a chain in any state.
Order orbit_product(StabilizerChain const &chain);

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Calls `visit` once for every group element u_n ... u_1.
void for_each_element(StabilizerChain const &chain,
                      std::function<void(Matrix const &)> const &visit,
                      std::size_t cap = default_enumeration_cap);

std::vector<Matrix> enumerate_elements(StabilizerChain const &chain,
                                       std::size_t cap = default_enumeration_cap);

/// (u_n, ..., u_1) with u_i in the level-i transversal and product g.
/// Throws NotAMember.
std::vector<Matrix> factorize(StabilizerChain const &chain, Matrix const &g);

/// Exactly uniform element from a complete chain.
Matrix random_element(StabilizerChain const &chain, RandomSource &rng);

/// First level at which some Schreier generator fails to sift to the
/// identity through the levels below, or nothing if there is none. A chain
/// passes exactly when it is complete.
std::optional<std::size_t> failing_level(StabilizerChain const &chain);

} // namespace mgs

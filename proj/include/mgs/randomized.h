#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mgs/chain.h"
#include "mgs/matrix.h"
#include "mgs/random.h"

namespace mgs
{

/// Product replacement state: m slots, each an element of the group.
struct ShakeState
{
  std::vector<Matrix> slots;
};

inline constexpr std::size_t default_burn_in = 60;

std::size_t default_slot_count(std::size_t generator_count);

/// Slots are the generators padded with identities to length m (default
/// max(10, 2n + 1)), followed by `burn_in` discarded steps. Throws
/// NoGenerators for an empty list.
ShakeState shake_init(std::span<Matrix const> gens, RandomSource &rng,
                      std::optional<std::size_t> slot_count = std::nullopt,
                      std::size_t burn_in = default_burn_in);

/// Replaces a random slot a_i by a_i a_j or a_j a_i (i != j) and returns it.
Matrix shake_next(ShakeState &state, RandomSource &rng);

struct RandomSchreierSimsOptions
{
  std::size_t stop = 20; // consecutive trivial sifts
  bool literal_element = false; // add the random element, not its residue
  std::optional<std::size_t> slot_count;
  std::size_t burn_in = default_burn_in;
};

/// Called with the chain after construction and after every change.
using ChainObserver = std::function<void(StabilizerChain const &)>;

/// Sifts random elements until `stop` consecutive ones reduce to the
/// identity. The result is not flagged complete.
StabilizerChain random_schreier_sims(std::span<Matrix const> gens,
                                     RandomSource &rng,
                                     RandomSchreierSimsOptions const &opts = {},
                                     ChainOptions chain_options = {},
                                     ChainObserver const &observer = {});

} // namespace mgs

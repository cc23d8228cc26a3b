#include <algorithm>

#include "mgs/errors.h"
#include "mgs/randomized.h"

namespace mgs
{

std::size_t default_slot_count(std::size_t generator_count)
{
  return std::max<std::size_t>(10u, 2u * generator_count + 1u);
}

ShakeState shake_init(std::span<Matrix const> gens, RandomSource &rng,
                      std::optional<std::size_t> slot_count,
                      std::size_t burn_in)
{
  if (gens.empty())
    throw Error(ErrorKind::NoGenerators, "shake needs generators");

  std::size_t const m =
    std::max<std::size_t>(slot_count.value_or(0u),
                          default_slot_count(gens.size()));

  ShakeState state;
  state.slots.assign(gens.begin(), gens.end());
  state.slots.resize(m, Matrix::identity(gens.front().field_ptr(),
                                         gens.front().dim()));

  for (std::size_t k = 0; k < burn_in; ++k)
    shake_next(state, rng);
  return state;
}

Matrix shake_next(ShakeState &state, RandomSource &rng)
{
  std::size_t const m = state.slots.size();
  std::size_t const i = static_cast<std::size_t>(rng.below(m));
  std::size_t j = static_cast<std::size_t>(rng.below(m - 1u));
  if (j >= i)
    ++j;

  if (rng.coin())
    state.slots[i] = state.slots[i] * state.slots[j];
  else
    state.slots[i] = state.slots[j] * state.slots[i];
  return state.slots[i];
}

StabilizerChain random_schreier_sims(std::span<Matrix const> gens,
                                     RandomSource &rng,
                                     RandomSchreierSimsOptions const &opts,
                                     ChainOptions chain_options,
                                     ChainObserver const &observer)
{
  StabilizerChain chain = get_partial_bsgs(gens, {}, chain_options);
  if (observer)
    observer(chain);

  ShakeState state = shake_init(gens, rng, opts.slot_count, opts.burn_in);

  std::size_t trivial = 0;
  while (trivial < opts.stop) {
    Matrix g = shake_next(state, rng);
    SiftResult sr = chain.sift(g);
    if (sr.residue.is_identity()) {
      ++trivial;
      continue;
    }

    if (sr.dropout == chain.length())
      chain.extend_base(chain.new_base_points_for(sr.residue));
    chain.add_generator(opts.literal_element ? g : sr.residue);
    chain.ensure_partial_base();
    chain.refresh_all_levels();
    trivial = 0;

    if (observer)
      observer(chain);
  }

  return chain;
}

} // namespace mgs

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mgs/chain.h"
#include "mgs/coset_enum.h"

namespace mgs
{

/// Positive rational num/den, parsed from "6/5" or "2".
struct Ratio
{
  std::uint64_t num = 6;
  std::uint64_t den = 5;

  static Ratio parse(std::string const &s);
  /// ceil(num * x / den)
  std::size_t scale_up(std::size_t x) const;
  std::string str() const;
};

/**
 * Relators over the strong generators of a chain. Letters are signed
 * 1-based sgs indices. Every relator is evaluated when added and rejected
 * with an exception unless it is the identity.
 */
class RelatorStore
{
public:
  explicit RelatorStore(bool check = true) : _check(check) {}

  /// Returns false for words that reduce to the empty word.
  bool add(StabilizerChain const &chain, Word w);

  /// Inverse-pair relators g g^-1 and power relators g^k (k <= 64) for sgs
  /// members not seen before.
  void add_generator_relations(StabilizerChain const &chain);

  std::vector<Word> const &relators() const { return _relators; }
  std::size_t size() const { return _relators.size(); }

private:
  bool _check;
  std::size_t _seen_generators = 0;
  std::vector<Word> _relators;
};

inline constexpr std::size_t power_relator_limit = 64;

Matrix evaluate_word(StabilizerChain const &chain, Word const &w);

/// The word of t(point) at `level`, over sgs indices.
Word transversal_word(StabilizerChain const &chain, std::size_t level,
                      std::size_t point);

struct StcsStats
{
  std::size_t enumerations = 0;
  std::size_t closed_by_enumeration = 0; // levels finished by coset counting
  std::size_t relators = 0;
  SchreierSimsStats schreier;
};

/// Completes `level` assuming the levels below are complete, interleaving
/// sifting with coset enumeration of <S^{level+1}> in <S^level>.
StcsStats stcs_level(StabilizerChain &chain, std::size_t level,
                     RelatorStore &store, Ratio ratio = {});

/// stcs_level from the bottom of the chain to the top, then flags the chain
/// complete. Missing strong generators found on the way are inserted.
StcsStats verify_chain_stcs(StabilizerChain &chain, Ratio ratio = {});

} // namespace mgs

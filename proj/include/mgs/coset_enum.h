#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mgs
{

/// Letters are signed 1-based generator numbers: k stands for generator k,
/// -k for its inverse.
using Word = std::vector<int>;

struct Presentation
{
  std::size_t generator_count = 0;
  std::vector<Word> relators;
  std::vector<Word> subgroup_words;
};

/// Cancels adjacent inverse letters.
Word free_reduce(Word const &w);
Word inverse_word(Word const &w);

struct CosetTable
{
  enum class Status
  {
    Complete,
    CutoffReached
  };

  static constexpr std::uint32_t undefined = 0xffffffffu;

  /// rows[c][2(k-1)] is the image of coset c under generator k and
  /// rows[c][2(k-1)+1] under its inverse. Coset 0 is the subgroup. Cosets
  /// are numbered densely in the order they were defined.
  std::vector<std::vector<std::uint32_t>> rows;
  Status status = Status::CutoffReached;
  std::size_t defined_count = 0; // live cosets at the end
  std::size_t total_defined = 0; // including those lost to coincidences

  bool complete() const { return status == Status::Complete; }
};

/// HLT enumeration of the cosets of <subgroup_words> in the presented group.
/// Stops with CutoffReached as soon as a definition would take the number of
/// live cosets past max_cosets; the rows are then empty. Throws
/// InvalidWord for a letter that is 0 or out of range.
CosetTable todd_coxeter(Presentation const &pres, std::size_t max_cosets);

} // namespace mgs

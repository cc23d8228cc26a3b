#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>

#include "mgs/errors.h"
#include "mgs/stcs.h"

namespace mgs
{

Ratio Ratio::parse(std::string const &s)
{
  Ratio r{1u, 1u};
  auto const slash = s.find('/');
  std::string const a = s.substr(0, slash);
  std::string const b = slash == std::string::npos ? "1" : s.substr(slash + 1u);

  auto read = [&s](std::string const &t, std::uint64_t &out) {
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw Error(ErrorKind::ParseError, "bad ratio '" + s + "'");
  };
  read(a, r.num);
  read(b, r.den);
  if (r.num == 0u || r.den == 0u)
    throw Error(ErrorKind::ParseError, "ratio must be positive");
  return r;
}

std::size_t Ratio::scale_up(std::size_t x) const
{
  Order const v = (Order(num) * x + den - 1u) / den;
  return static_cast<std::size_t>(v);
}

std::string Ratio::str() const
{
  return std::to_string(num) + "/" + std::to_string(den);
}

Matrix evaluate_word(StabilizerChain const &chain, Word const &w)
{
  Matrix g = chain.identity();
  auto const sgs = chain.sgs();
  for (int a : w) {
    std::size_t const k = static_cast<std::size_t>(std::abs(a)) - 1u;
    if (a == 0 || k >= sgs.size())
      throw Error(ErrorKind::InvalidWord, "letter outside the sgs");
    g = g * (a > 0 ? sgs[k] : sgs[k].inverse());
  }
  return g;
}

bool RelatorStore::add(StabilizerChain const &chain, Word w)
{
  w = free_reduce(w);
  if (w.empty())
    return false;
  if (_check && !evaluate_word(chain, w).is_identity())
    throw Error(ErrorKind::InvalidWord, "relator does not evaluate to I");
  _relators.push_back(std::move(w));
  return true;
}

void RelatorStore::add_generator_relations(StabilizerChain const &chain)
{
  auto const sgs = chain.sgs();
  for (std::size_t k = _seen_generators; k < sgs.size(); ++k) {
    int const letter = static_cast<int>(k) + 1;

    auto inv = chain.index_of(sgs[k].inverse());
    if (inv && *inv > k)
      add(chain, {letter, static_cast<int>(*inv) + 1});

    Matrix power = sgs[k];
    for (std::size_t e = 2; e <= power_relator_limit; ++e) {
      power = power * sgs[k];
      if (power.is_identity()) {
        add(chain, Word(e, letter));
        break;
      }
    }
  }
  _seen_generators = sgs.size();
}

Word transversal_word(StabilizerChain const &chain, std::size_t level,
                      std::size_t point)
{
  auto const &lv = chain.level(level);
  Word w;
  for (std::size_t g : lv.tree.orbit_word_at(point))
    w.push_back(static_cast<int>(lv.tree_generators[g]) + 1);
  return w;
}

namespace
{

class StcsHooks final : public SchreierSimsHooks
{
public:
  StcsHooks(RelatorStore &store, Ratio ratio, StcsStats &stats)
    : _store(store), _ratio(ratio), _stats(stats)
  {}

  bool level_done(StabilizerChain &chain, std::size_t level) override
  {
    _store.add_generator_relations(chain);

    Attempt &a = _attempts[level];
    auto const &lv = chain.level(level);
    std::size_t const batch = std::max<std::size_t>(1u, lv.generators.size());
    bool const stale = !a.tried || a.sgs_size != chain.sgs().size() ||
                       _store.size() >= a.relators + batch;
    if (!stale)
      return false;

    a.tried = true;
    a.sgs_size = chain.sgs().size();
    a.relators = _store.size();

    if (enumerate(chain, level)) {
      ++_stats.closed_by_enumeration;
      return true;
    }
    return false;
  }

  void trivial_sift(StabilizerChain const &chain, std::size_t level,
                    std::size_t point, std::size_t gen,
                    std::vector<SiftStep> const &trace) override
  {
    auto const &lv = chain.level(level);
    SchreierTree const &tree = lv.tree;

    Word w = transversal_word(chain, level, point);
    w.push_back(static_cast<int>(lv.tree_generators[gen]) + 1);

    std::size_t const image =
      tree.find(act(tree.points()[point], tree.generators()[gen]));
    Word const back = inverse_word(transversal_word(chain, level, image));
    w.insert(w.end(), back.begin(), back.end());

    // the generator equals u_n ... u_{level+1}; append its inverse
    for (SiftStep const &st : trace) {
      Word const u = inverse_word(transversal_word(chain, st.level, st.point));
      w.insert(w.end(), u.begin(), u.end());
    }

    if (_store.add(chain, std::move(w)))
      ++_stats.relators;
  }

private:
  struct Attempt
  {
    bool tried = false;
    std::size_t sgs_size = 0;
    std::size_t relators = 0;
  };

  bool enumerate(StabilizerChain const &chain, std::size_t level)
  {
    auto const &lv = chain.level(level);
    std::size_t const orbit = lv.tree.size();

    // local numbering of S^level
    std::map<std::size_t, int> local;
    for (std::size_t k : lv.generators)
      local.emplace(k, static_cast<int>(local.size()) + 1);

    Presentation pres;
    pres.generator_count = local.size();
    for (Word const &r : _store.relators()) {
      Word lw;
      lw.reserve(r.size());
      bool ok = true;
      for (int a : r) {
        auto it = local.find(static_cast<std::size_t>(std::abs(a)) - 1u);
        if (it == local.end()) {
          ok = false;
          break;
        }
        lw.push_back(a > 0 ? it->second : -it->second);
      }
      if (ok)
        pres.relators.push_back(std::move(lw));
    }
    if (level + 1u < chain.length())
      for (std::size_t k : chain.level(level + 1u).generators)
        pres.subgroup_words.push_back({local.at(k)});

    ++_stats.enumerations;
    CosetTable const t = todd_coxeter(pres, _ratio.scale_up(orbit));
    return t.complete() && t.defined_count == orbit;
  }

  RelatorStore &_store;
  Ratio _ratio;
  StcsStats &_stats;
  std::map<std::size_t, Attempt> _attempts;
};

void accumulate(SchreierSimsStats &acc, SchreierSimsStats const &s)
{
  acc.schreier_generators += s.schreier_generators;
  acc.sifts += s.sifts;
  acc.additions += s.additions;
}

} // namespace

StcsStats stcs_level(StabilizerChain &chain, std::size_t level,
                     RelatorStore &store, Ratio ratio)
{
  StcsStats stats;
  StcsHooks hooks(store, ratio, stats);
  stats.schreier = schreier_sims(chain, level, &hooks);
  return stats;
}

StcsStats verify_chain_stcs(StabilizerChain &chain, Ratio ratio)
{
  chain.ensure_partial_base();
  chain.refresh_all_levels();

  StcsStats stats;
  RelatorStore store;
  StcsHooks hooks(store, ratio, stats);
  for (std::size_t i = chain.length(); i-- > 0u;)
    accumulate(stats.schreier, schreier_sims(chain, i, &hooks));

  chain.refresh_all_levels();
  chain.set_complete(true);
  return stats;
}

} // namespace mgs

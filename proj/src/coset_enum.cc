#include <cstdlib>
#include <string>

#include "mgs/coset_enum.h"
#include "mgs/errors.h"

namespace mgs
{

Word free_reduce(Word const &w)
{
  Word res;
  res.reserve(w.size());
  for (int a : w) {
    if (!res.empty() && res.back() == -a)
      res.pop_back();
    else
      res.push_back(a);
  }
  return res;
}

Word inverse_word(Word const &w)
{
  Word res(w.rbegin(), w.rend());
  for (int &a : res)
    a = -a;
  return res;
}

namespace
{

using Coset = std::uint32_t;
constexpr Coset none = CosetTable::undefined;

struct CutoffHit
{};

class Enumerator
{
public:
  Enumerator(std::size_t ngens, std::size_t max_cosets)
    : _cols(2u * ngens), _max(max_cosets)
  {
    new_coset();
  }

  static std::size_t column(int letter)
  {
    return letter > 0 ? 2u * static_cast<std::size_t>(letter - 1)
                      : 2u * static_cast<std::size_t>(-letter - 1) + 1u;
  }

  std::vector<std::size_t> columns(Word const &w) const
  {
    std::vector<std::size_t> res;
    res.reserve(w.size());
    for (int a : w)
      res.push_back(column(a));
    return res;
  }

  void run(std::vector<std::vector<std::size_t>> const &relators,
           std::vector<std::vector<std::size_t>> const &subgroup)
  {
    for (auto const &w : subgroup)
      scan_and_fill(0u, w);

    for (Coset c = 0; c < _parent.size(); ++c) {
      for (auto const &r : relators) {
        if (!live(c))
          break;
        scan_and_fill(c, r);
      }
      if (!live(c))
        continue;
      for (std::size_t x = 0; x < _cols; ++x)
        if (at(c, x) == none)
          define(c, x);
    }
  }

  CosetTable table() const
  {
    CosetTable t;
    t.status = CosetTable::Status::Complete;
    t.total_defined = _parent.size();

    std::vector<Coset> renumber(_parent.size(), none);
    Coset next = 0;
    for (Coset c = 0; c < _parent.size(); ++c)
      if (live(c))
        renumber[c] = next++;

    t.defined_count = next;
    t.rows.reserve(next);
    for (Coset c = 0; c < _parent.size(); ++c) {
      if (!live(c))
        continue;
      std::vector<Coset> row(_cols);
      for (std::size_t x = 0; x < _cols; ++x)
        row[x] = renumber[rep(at(c, x))];
      t.rows.push_back(std::move(row));
    }
    return t;
  }

  std::size_t live_count() const { return _live; }
  std::size_t total() const { return _parent.size(); }

private:
  Coset &at(Coset c, std::size_t x) { return _table[c * _cols + x]; }
  Coset at(Coset c, std::size_t x) const { return _table[c * _cols + x]; }
  bool live(Coset c) const { return _parent[c] == c; }

  Coset new_coset()
  {
    Coset const c = static_cast<Coset>(_parent.size());
    _parent.push_back(c);
    _table.resize(_table.size() + _cols, none);
    ++_live;
    return c;
  }

  void define(Coset c, std::size_t x)
  {
    if (_live >= _max)
      throw CutoffHit{};
    Coset const d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1u) = c;
  }

  Coset rep(Coset c) const
  {
    while (_parent[c] != c)
      c = _parent[c];
    return c;
  }

  Coset find(Coset c)
  {
    Coset root = rep(c);
    while (_parent[c] != root) {
      Coset const next = _parent[c];
      _parent[c] = root;
      c = next;
    }
    return root;
  }

  void merge(Coset k, Coset l)
  {
    k = find(k);
    l = find(l);
    if (k == l)
      return;
    if (l < k)
      std::swap(k, l);
    _parent[l] = k;
    --_live;
    _queue.push_back(l);
  }

  void coincidence(Coset a, Coset b)
  {
    _queue.clear();
    merge(a, b);
    for (std::size_t i = 0; i < _queue.size(); ++i) {
      Coset const e = _queue[i];
      for (std::size_t x = 0; x < _cols; ++x) {
        Coset const f = at(e, x);
        if (f == none)
          continue;
        at(f, x ^ 1u) = none;

        Coset const e1 = find(e), f1 = find(f);
        if (at(e1, x) != none)
          merge(f1, at(e1, x));
        else if (at(f1, x ^ 1u) != none)
          merge(e1, at(f1, x ^ 1u));
        else {
          at(e1, x) = f1;
          at(f1, x ^ 1u) = e1;
        }
      }
    }
  }

  void scan_and_fill(Coset c, std::vector<std::size_t> const &w)
  {
    if (w.empty())
      return;

    Coset f = c, b = c;
    std::size_t i = 0, j = w.size();
    // w[i..j) is the unscanned part
    while (true) {
      while (i < j && at(f, w[i]) != none)
        f = at(f, w[i++]);
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }

      while (j > i && at(b, w[j - 1u] ^ 1u) != none)
        b = at(b, w[--j] ^ 1u);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1u) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1u) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t _cols;
  std::size_t _max;
  std::size_t _live = 0;
  std::vector<Coset> _parent;
  std::vector<Coset> _table;
  std::vector<Coset> _queue;
};

void check_word(Word const &w, std::size_t ngens)
{
  for (int a : w) {
    if (a == 0 || static_cast<std::size_t>(std::abs(a)) > ngens)
      throw Error(ErrorKind::InvalidWord,
                  "letter " + std::to_string(a) + " outside 1.." +
                  std::to_string(ngens));
  }
}

} // namespace

CosetTable todd_coxeter(Presentation const &pres, std::size_t max_cosets)
{
  if (max_cosets == 0u)
    max_cosets = 1u;
  for (auto const &w : pres.relators)
    check_word(w, pres.generator_count);
  for (auto const &w : pres.subgroup_words)
    check_word(w, pres.generator_count);

  Enumerator e(pres.generator_count, max_cosets);
  std::vector<std::vector<std::size_t>> rels, sub;
  for (auto const &w : pres.relators)
    rels.push_back(e.columns(free_reduce(w)));
  for (auto const &w : pres.subgroup_words)
    sub.push_back(e.columns(free_reduce(w)));

  try {
    e.run(rels, sub);
  } catch (CutoffHit const &) {
    CosetTable t;
    t.status = CosetTable::Status::CutoffReached;
    t.defined_count = e.live_count();
    t.total_defined = e.total();
    return t;
  }
  return e.table();
}

} // namespace mgs

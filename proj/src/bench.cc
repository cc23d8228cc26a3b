#include <chrono>
#include <sstream>

#include "mgs/bench.h"
#include "mgs/classical.h"
#include "mgs/errors.h"

namespace mgs
{

char const *to_string(Method m)
{
  switch (m) {
    case Method::det: return "det";
    case Method::naive: return "naive";
    case Method::random: return "random";
    case Method::stcs: return "stcs";
  }
  return "?";
}

Method parse_method(std::string const &s)
{
  for (Method m : {Method::det, Method::naive, Method::random, Method::stcs})
    if (s == to_string(m))
      return m;
  throw Error(ErrorKind::ParseError, "unknown method '" + s + "'");
}

StabilizerChain build_chain(std::span<Matrix const> gens, RunConfig const &config,
                            RandomSource &rng)
{
  switch (config.method) {
    case Method::det:
      return compute_bsgs_deterministic(gens, config.chain);
    case Method::naive:
      return compute_bsgs_naive(gens, config.chain);
    case Method::random: {
      StabilizerChain chain =
        random_schreier_sims(gens, rng, config.random, config.chain);
      complete_deterministic(chain);
      return chain;
    }
    case Method::stcs: {
      StabilizerChain chain =
        random_schreier_sims(gens, rng, config.random, config.chain);
      verify_chain_stcs(chain, config.stcs_ratio);
      return chain;
    }
  }
  throw Error(ErrorKind::ParseError, "unknown method");
}

BenchRecord run_record(std::string label, std::span<Matrix const> gens,
                       RunConfig const &config, RandomSource &rng)
{
  auto const t0 = std::chrono::steady_clock::now();
  StabilizerChain const chain = build_chain(gens, config, rng);
  auto const t1 = std::chrono::steady_clock::now();

  BenchRecord r;
  r.group = std::move(label);
  r.method = to_string(config.method);
  r.strategy = to_string(config.chain.strategy);
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  r.order = group_order(chain);
  r.baselen = chain.length();
  r.orbits = chain.orbit_sizes();
  for (OrbitPoint const &pt : chain.base())
    r.base.push_back(to_string(pt));
  for (Matrix const &g : chain.sgs())
    r.sgs.push_back(g.str());
  return r;
}

std::vector<BenchRecord> bench_classical_suite(RunConfig const &config)
{
  CounterRng const root(config.seed);
  std::vector<BenchRecord> records;
  std::uint64_t stream = 0;

  for (auto [d, q] : classical_parameters()) {
    FieldPtr const field = field_for_order(q);
    for (bool gl : {true, false}) {
      std::string const label = std::string(gl ? "GL(" : "SL(") +
                                std::to_string(d) + "," + std::to_string(q) + ")";
      auto const gens = gl ? make_gl(d, field) : make_sl(d, field);
      CounterRng rng = root.split(stream++);
      BenchRecord r = run_record(label, gens, config, rng);
      r.expected = gl ? gl_order(d, q) : sl_order(d, q);
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<BenchRecord> bench_random_suite(unsigned q, std::size_t d,
                                            std::size_t setsize,
                                            std::size_t trials,
                                            RunConfig const &config,
                                            CounterRng const &rng)
{
  if (trials == 0u)
    throw Error(ErrorKind::ParseError, "trials must be at least 1");
  if (setsize == 0u)
    throw Error(ErrorKind::NoGenerators, "setsize must be at least 1");

  FieldPtr const field = field_for_order(q);
  std::vector<BenchRecord> records;
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng trial = rng.split(t);
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < setsize; ++k)
      gens.push_back(random_invertible(field, d, trial));

    std::string const label = "random(" + std::to_string(d) + "," +
                              std::to_string(q) + ")#" + std::to_string(t);
    records.push_back(run_record(label, gens, config, trial));
  }
  return records;
}

double mean_ms(std::span<BenchRecord const> records)
{
  if (records.empty())
    return 0.0;
  double total = 0.0;
  for (auto const &r : records)
    total += static_cast<double>(r.ms);
  return total / static_cast<double>(records.size());
}

namespace
{

std::string orbit_list(std::vector<std::size_t> const &orbits)
{
  std::string s;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    s += (i ? "x" : "") + std::to_string(orbits[i]);
  return s;
}

// RFC 4180 quoting; group labels such as GL(2,3) contain commas
std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string res = "\"";
  for (char c : s) {
    if (c == '"')
      res += '"';
    res += c;
  }
  return res + "\"";
}

} // namespace

std::string csv_header()
{
  return "group,method,strategy,ms,order,baselen,orbits";
}

std::string to_csv(BenchRecord const &r)
{
  std::ostringstream out;
  out << csv_field(r.group) << ',' << r.method << ',' << r.strategy << ',' << r.ms << ','
      << r.order << ',' << r.baselen << ',' << orbit_list(r.orbits);
  return out.str();
}

std::string to_text(BenchRecord const &r)
{
  std::ostringstream out;
  out << r.group << "  order " << r.order << "  base " << r.baselen
      << "  orbits " << orbit_list(r.orbits) << "  " << r.method << '/'
      << r.strategy << "  " << r.ms << " ms";
  if (r.mismatch())
    out << "  MISMATCH (expected " << *r.expected << ")";
  return out.str();
}

nlohmann::json order_json(Order const &order)
{
  if (order <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(order);
  return order.str();
}

nlohmann::json to_json(BenchRecord const &r)
{
  nlohmann::json j{{"group", r.group},     {"method", r.method},
                   {"strategy", r.strategy}, {"ms", r.ms},
                   {"order", order_json(r.order)}, {"baselen", r.baselen},
                   {"orbits", r.orbits},     {"base", r.base},
                   {"sgs_size", r.sgs.size()}};
  if (r.expected)
    j["expected"] = order_json(*r.expected);
  return j;
}

} // namespace mgs

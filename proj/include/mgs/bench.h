#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgs/chain.h"
#include "mgs/random.h"
#include "mgs/randomized.h"
#include "mgs/stcs.h"

namespace mgs
{

enum class Method
{
  det,
  naive,
  random,
  stcs
};

char const *to_string(Method m);
Method parse_method(std::string const &s);

struct RunConfig
{
  Method method = Method::det;
  ChainOptions chain;
  RandomSchreierSimsOptions random;
  Ratio stcs_ratio;
  std::uint64_t seed = 0;
};

/// A complete chain by the configured method. The random method is followed
/// by a deterministic completion pass, stcs by verify_chain_stcs.
StabilizerChain build_chain(std::span<Matrix const> gens, RunConfig const &config,
                            RandomSource &rng);

struct BenchRecord
{
  std::string group;
  std::string method;
  std::string strategy;
  std::int64_t ms = 0;
  Order order;
  std::size_t baselen = 0;
  std::vector<std::size_t> orbits;
  std::vector<std::string> base;
  std::vector<std::string> sgs;
  std::optional<Order> expected;

  bool mismatch() const { return expected && *expected != order; }
};

BenchRecord run_record(std::string label, std::span<Matrix const> gens,
                       RunConfig const &config, RandomSource &rng);

std::vector<BenchRecord> bench_classical_suite(RunConfig const &config);

/// `trials` sets of `setsize` random invertible d x d matrices over GF(q).
/// Trial t draws from rng.split(t).
std::vector<BenchRecord> bench_random_suite(unsigned q, std::size_t d,
                                            std::size_t setsize,
                                            std::size_t trials,
                                            RunConfig const &config,
                                            CounterRng const &rng);

double mean_ms(std::span<BenchRecord const> records);

std::string csv_header();
std::string to_csv(BenchRecord const &r);
std::string to_text(BenchRecord const &r);
nlohmann::json to_json(BenchRecord const &r);
/// A number when it fits in 64 bits, otherwise a decimal string.
nlohmann::json order_json(Order const &order);

} // namespace mgs

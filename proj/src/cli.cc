#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgs/bench.h"
#include "mgs/cli.h"
#include "mgs/errors.h"
#include "mgs/group_file.h"

namespace mgs
{

namespace
{

enum class Output
{
  text,
  csv,
  json
};

struct ParseFailure
{
  std::string message;
};

struct Settings
{
  std::string method = "det";
  std::string strategy = "natural";
  std::string tree = "transversal";
  std::string rebuild = "always";
  std::size_t sift_threshold = 20;
  std::string stcs_ratio = "6/5";
  std::uint64_t seed = 0;
  std::size_t orbit_limit = default_orbit_limit;
  std::string output = "text";
  bool literal = false;

  std::string group;
  std::string matrix;

  std::string suite = "classical";
  unsigned field = 2;
  std::size_t dim = 3;
  std::size_t setsize = 2;
  std::size_t trials = 20;
};

RunConfig make_config(Settings const &s)
{
  RunConfig c;
  c.method = parse_method(s.method);
  c.chain.strategy = parse_base_strategy(s.strategy);
  c.chain.label_mode =
    s.tree == "generators" ? LabelMode::generators : LabelMode::transversal;
  c.chain.rebuild =
    s.rebuild == "extend" ? RebuildPolicy::extend : RebuildPolicy::always;
  c.chain.orbit_limit = s.orbit_limit;
  c.random.stop = s.sift_threshold;
  c.random.literal_element = s.literal;
  c.stcs_ratio = Ratio::parse(s.stcs_ratio);
  c.seed = s.seed;
  return c;
}

Output parse_output(std::string const &s)
{
  return s == "csv" ? Output::csv : s == "json" ? Output::json : Output::text;
}

void print_records(std::vector<BenchRecord> const &records, Output output,
                   bool with_mean, std::ostream &out)
{
  switch (output) {
    case Output::text:
      for (auto const &r : records)
        out << to_text(r) << '\n';
      if (with_mean)
        out << "mean " << mean_ms(records) << " ms over " << records.size()
            << " runs\n";
      break;
    case Output::csv:
      out << csv_header() << '\n';
      for (auto const &r : records)
        out << to_csv(r) << '\n';
      break;
    case Output::json: {
      nlohmann::json j = nlohmann::json::array();
      for (auto const &r : records)
        j.push_back(to_json(r));
      if (with_mean)
        j = {{"records", j}, {"mean_ms", mean_ms(records)}};
      out << j.dump(2) << '\n';
      break;
    }
  }
}

GroupSpec load(std::string const &uri)
{
  try {
    return load_group(uri);
  } catch (Error const &e) {
    throw ParseFailure{e.what()};
  }
}

int run_order(Settings const &s, RunConfig const &config, std::ostream &out,
              std::ostream &err)
{
  GroupSpec const spec = load(s.group);
  CounterRng rng(config.seed);
  BenchRecord r = run_record(spec.label, spec.gens, config, rng);
  r.expected = spec.known_order;

  Output const output = parse_output(s.output);
  if (output == Output::text)
    out << r.order << '\n';
  else
    print_records({r}, output, false, out);

  if (r.mismatch()) {
    err << "order " << r.order << " disagrees with " << *r.expected << '\n';
    return 3;
  }
  return 0;
}

int run_member(Settings const &s, RunConfig const &config, std::ostream &out)
{
  GroupSpec const spec = load(s.group);
  Matrix g;
  try {
    g = load_matrix(s.matrix, spec.field, spec.dim);
  } catch (Error const &e) {
    throw ParseFailure{e.what()};
  }

  CounterRng rng(config.seed);
  StabilizerChain const chain = build_chain(spec.gens, config, rng);
  SiftResult const sr = chain.sift(g);
  bool const member = sr.dropout == chain.length() && sr.residue.is_identity();

  if (parse_output(s.output) == Output::json)
    out << nlohmann::json{{"member", member}, {"dropout", sr.dropout + 1u}}.dump()
        << '\n';
  else
    out << (member ? "yes" : "no") << " dropout " << sr.dropout + 1u << '\n';
  return 0;
}

int run_chain(Settings const &s, RunConfig const &config, std::ostream &out)
{
  GroupSpec const spec = load(s.group);
  CounterRng rng(config.seed);
  StabilizerChain const chain = build_chain(spec.gens, config, rng);

  std::vector<std::string> base;
  for (auto const &pt : chain.base())
    base.push_back(to_string(pt));

  if (parse_output(s.output) == Output::json) {
    out << nlohmann::json{{"base", base},
                          {"orbits", chain.orbit_sizes()},
                          {"sgs_size", chain.sgs().size()},
                          {"order", order_json(group_order(chain))}}
             .dump(2)
        << '\n';
    return 0;
  }

  out << "base:";
  for (auto const &b : base)
    out << ' ' << b;
  out << "\norbits:";
  for (std::size_t o : chain.orbit_sizes())
    out << ' ' << o;
  out << "\nsgs: " << chain.sgs().size() << "\norder: " << group_order(chain)
      << '\n';
  return 0;
}

int run_bench(Settings const &s, RunConfig const &config, std::ostream &out,
              std::ostream &err)
{
  std::vector<BenchRecord> records;
  if (s.suite == "classical")
    records = bench_classical_suite(config);
  else
    records = bench_random_suite(s.field, s.dim, s.setsize, s.trials, config,
                                 CounterRng(config.seed));

  print_records(records, parse_output(s.output), true, out);

  for (auto const &r : records) {
    if (r.mismatch()) {
      err << r.group << ": order " << r.order << " disagrees with "
          << *r.expected << '\n';
      return 3;
    }
  }
  return 0;
}

} // namespace

int cli_main(int argc, char const *const *argv, std::ostream &out,
             std::ostream &err)
{
  Settings s;
  CLI::App app{"Base and strong generating sets for matrix groups over finite fields",
               "mgs"};
  app.require_subcommand(1);

  app.add_option("--method", s.method, "det, naive, random or stcs")
    ->check(CLI::IsMember({"det", "naive", "random", "stcs"}));
  app.add_option("--base-strategy", s.strategy, "natural, projective or eigen")
    ->check(CLI::IsMember({"natural", "projective", "eigen"}));
  app.add_option("--tree", s.tree, "Schreier tree labels")
    ->check(CLI::IsMember({"generators", "transversal"}));
  app.add_option("--rebuild", s.rebuild, "tree update policy")
    ->check(CLI::IsMember({"always", "extend"}));
  app.add_option("--sift-threshold", s.sift_threshold,
                 "consecutive trivial sifts that end the random method")
    ->check(CLI::PositiveNumber);
  app.add_option("--stcs-ratio", s.stcs_ratio, "coset cutoff ratio, e.g. 6/5");
  app.add_option("--seed", s.seed);
  app.add_option("--orbit-limit", s.orbit_limit)->check(CLI::PositiveNumber);
  app.add_option("--output", s.output)
    ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--literal", s.literal,
               "random method adds the random element, not its residue");

  auto *order = app.add_subcommand("order", "print the group order");
  order->add_option("group", s.group, "group file or builtin:GL(d,q)")->required();
  auto *member = app.add_subcommand("member", "test membership of a matrix");
  member->add_option("group", s.group)->required();
  member->add_option("matrix", s.matrix)->required();
  auto *chain = app.add_subcommand("chain", "print base, orbits and sgs size");
  chain->add_option("group", s.group)->required();
  auto *bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", s.suite)
    ->check(CLI::IsMember({"classical", "random"}));
  bench->add_option("--field", s.field, "q for the random suite");
  bench->add_option("--dim", s.dim)->check(CLI::PositiveNumber);
  bench->add_option("--setsize", s.setsize)->check(CLI::PositiveNumber);
  bench->add_option("--trials", s.trials)->check(CLI::PositiveNumber);

  for (auto *sub : {order, member, chain, bench})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  RunConfig config;
  try {
    config = make_config(s);
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (order->parsed())
      return run_order(s, config, out, err);
    if (member->parsed())
      return run_member(s, config, out);
    if (chain->parsed())
      return run_chain(s, config, out);
    return run_bench(s, config, out, err);
  } catch (ParseFailure const &e) {
    err << "error: " << e.message << '\n';
    return 1;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? 1 : 2;
  }
}

} // namespace mgs

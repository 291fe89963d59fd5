// Command-line front end: builds character tables, runs verification
// suites and sampling experiments, writes CSV.

#include <iostream>

#include "CLI11.hpp"
#include "symchar/cli.hpp"

namespace {

void add_common(CLI::App* sub, symchar::cli::RunConfig& c) {
  sub->add_option("--out", c.out, "Output CSV path (default: stdout)");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "RNG seed");
  sub->add_option("--cache-dir", c.cache_dir, "Directory for cached character tables");
  sub->add_option("--exact-cap", c.exact_cap, "Largest N for exact tables");
  sub->add_option("--mod-cap", c.mod_cap, "Largest N for residue tables");
}

}  // namespace

int main(int argc, char** argv) {
  using symchar::cli::Command;
  symchar::cli::RunConfig c;

  CLI::App app{"Symmetric-group character tables, mod-p reduction and partition bounds"};
  app.set_version_flag("--version", std::string(symchar::cli::version()));
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Dump the character table as lambda,mu,value");
  table->add_option("--N", c.n_spec, "Size of the symmetric group")->required();
  table->add_option("--mode", c.mode, "exact or mod")->check(CLI::IsMember({"exact", "mod"}));
  table->add_option("--p", c.p, "Prime modulus (mod mode)");

  auto* density = app.add_subcommand("density", "Fraction of entries divisible by p (and zero)");
  density->add_option("--N", c.n_spec, "N or a range a..b")->required();
  density->add_option("--p", c.p, "Prime")->required();

  auto* reduce = app.add_subcommand("reduce", "Merge p equal parts until every multiplicity is < p");
  reduce->add_option("--p", c.p, "Prime")->required();
  reduce->add_option("--mu", c.mu, "Comma-separated parts")->required();
  reduce->add_flag("--trace", c.trace, "Print each merge");

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on any violation");
  verify->add_option("--suite", c.suite,
                     "orthogonality|congruence|tcore|noncore|confluence|restricted|lemma3|hooks")
      ->required();
  verify->add_option("--N", c.n_spec, "N or a range a..b");
  verify->add_option("--p", c.p, "Prime");
  verify->add_option("--r", c.r, "Digit count r (restricted suite)");
  verify->add_option("--K", c.k_spec, "Comma-separated k values coprime to p (restricted suite)");
  verify->add_option("--samples", c.samples, "Random partitions per N (confluence suite)");

  auto* bounds = app.add_subcommand("bounds", "Certified interval bounds as name,lo,hi,certified");
  bounds->add_option("--kind", c.kind, "restricted|delta|fp|saddle");
  bounds->add_option("--N", c.n_spec, "N");
  bounds->add_option("--p", c.p, "Prime");
  bounds->add_option("--r", c.r, "Digit count r");
  bounds->add_option("--K", c.k_spec, "Comma-separated k values coprime to p");
  bounds->add_option("--x", c.x, "Argument of F_p (kind fp)");

  auto* sample = app.add_subcommand("sample", "Uniform random partitions of N");
  sample->add_option("--N", c.n_spec, "N")->required();
  sample->add_option("--samples", c.samples, "Number of samples");
  sample->add_option("--p", c.p, "Also report the reduced largest part and the tail fraction");

  for (auto* sub : {table, density, reduce, verify, bounds, sample}) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : symchar::cli::kExitUsage;
  }

  if (table->parsed()) c.command = Command::table;
  if (density->parsed()) c.command = Command::density;
  if (reduce->parsed()) c.command = Command::reduce;
  if (verify->parsed()) c.command = Command::verify;
  if (bounds->parsed()) c.command = Command::bounds;
  if (sample->parsed()) c.command = Command::sample;

  try {
    return symchar::cli::run(c, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

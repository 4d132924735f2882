#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"

using namespace spreadcode;

namespace {

struct Io {
  std::string in_path;
  std::string out_path;
  std::ifstream in_file;
  std::ofstream out_file;

  std::istream& in() {
    if (in_path.empty() || in_path == "-") return std::cin;
    in_file.open(in_path);
    if (!in_file) throw cli::UsageError("cannot open input file " + in_path);
    return in_file;
  }
  std::ostream& out() {
    if (out_path.empty() || out_path == "-") return std::cout;
    out_file.open(out_path);
    if (!out_file) throw cli::UsageError("cannot open output file " + out_path);
    return out_file;
  }
};

void add_code_options(CLI::App* cmd, cli::CodeOptions& o) {
  cmd->add_option("--q", o.q, "prime field size")->default_val(2);
  cmd->add_option("--k", o.k, "codeword dimension (extension degree)")->default_val(2);
  cmd->add_option("--r", o.r, "number of blocks; n = r*k")->default_val(2);
  cmd->add_option("--p", o.p, "modulus coefficients p_0,...,p_{k-1} (default: smallest irreducible)")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spread codes for random linear network coding"};
  app.require_subcommand(1);

  cli::CodeOptions code;
  Io io;
  cli::SimulateOptions sim;
  cli::BenchOptions bench;

  auto* params = app.add_subcommand("params", "print the code header, cardinality and minimum distance");
  add_code_options(params, code);

  auto* encode = app.add_subcommand("encode", "encode a projective point file into a subspace file");
  add_code_options(encode, code);
  encode->add_option("--in", io.in_path, "point file (default stdin)");
  encode->add_option("--out", io.out_path, "subspace file (default stdout)");

  auto* decode = app.add_subcommand("decode", "decode a subspace file; exit 0 decoded, 2 failure, 1 bad input");
  decode->add_option("--in", io.in_path, "subspace file (default stdin)");
  decode->add_option("--out", io.out_path, "codeword file (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "seeded channel simulation over an (errors, erasures) grid");
  add_code_options(simulate, code);
  simulate->add_option("--trials", sim.trials)->default_val(100);
  simulate->add_option("--errors", sim.errors, "error counts, comma separated")->delimiter(',')->default_str("0");
  simulate->add_option("--erasures", sim.erasures, "erasure counts, comma separated")
      ->delimiter(',')
      ->default_str("0");
  simulate->add_option("--seed", sim.seed)->default_val(1);
  simulate->add_option("--out", io.out_path, "statistics file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "F_{q^k} operation counts of decode across k");
  bench_cmd->add_option("--q", bench.q)->default_val(2);
  bench_cmd->add_option("--k", bench.ks, "extension degrees, comma separated")->delimiter(',')->default_str("3,5,7,9");
  bench_cmd->add_option("--r", bench.r)->default_val(2);
  bench_cmd->add_option("--trials", bench.trials)->default_val(20);
  bench_cmd->add_option("--seed", bench.seed)->default_val(1);
  bench_cmd->add_option("--out", io.out_path, "table file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kInputError;
  }

  try {
    if (*params) return cli::cmd_params(code, io.out());
    if (*encode) return cli::cmd_encode(code, io.in(), io.out());
    if (*decode) return cli::cmd_decode(io.in(), io.out(), std::cerr);
    if (*simulate) return cli::cmd_simulate(code, sim, io.out());
    if (*bench_cmd) {
      if (bench.ks.empty()) throw cli::UsageError("--k needs at least one value");
      for (auto k : bench.ks)
        if (k < 2) throw cli::UsageError("every k must be at least 2");
      return cli::cmd_bench(bench, io.out());
    }
  } catch (const text::ParseError& e) {
    std::cerr << "error: " << (io.in_path.empty() ? "<stdin>" : io.in_path) << ": " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kInputError;
}

#include <iostream>

#include "CLI11.hpp"

#include "graded/cli.hpp"
#include "graded/error.hpp"

using namespace graded;

namespace {

AnyAlgebra load(const std::string& path) {
  if (path != "-") return read_algebra_file(path);
  Json j;
  try {
    j = Json::parse(std::cin);
  } catch (const nlohmann::json::exception& e) {
    invalid_input(std::string("malformed JSON on stdin: ") + e.what());
  }
  return algebra_from_json(j);
}

int emit(const cli::Outcome& out, bool json, const std::string& out_path) {
  if (!out_path.empty()) {
    auto w = cli::guarded([&] {
      write_json_file(out_path, out.report);
      return cli::Outcome{};
    });
    if (w.report.contains("error")) {
      std::cerr << w.text;
      return cli::kError;
    }
  }
  if (json)
    std::cout << dump_json(out.report);
  else
    (out.exit_code == cli::kError ? std::cerr : std::cout) << out.text;
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradedctl: decide structural properties of group-graded algebras"};
  app.require_subcommand(1);

  cli::BuildRequest req;
  std::string build_out;
  auto* build = app.add_subcommand("build", "Emit a graded algebra as JSON");
  build->add_option("kind", req.kind, "group-algebra, skew-group, crossed-product, galois-skew, m3")->required();
  build->add_option("--field", req.field, "gf<p> or q")->capture_default_str();
  build->add_option("--group", req.group, "z<n>, s3, v4, ...")->capture_default_str();
  build->add_option("--p", req.p, "prime for GF(p^n)");
  build->add_option("--n", req.n, "extension degree");
  build->add_option("--c", req.c, "u^n = c for the cyclic crossed product");
  build->add_option("--base", req.base, "skew-group base: m2, diag2, field")->capture_default_str();
  build->add_option("--action", req.action, "identity, swap, inner, frobenius")->capture_default_str();
  build->add_option("--seed", req.seed, "seed for random cocycles")->capture_default_str();
  build->add_option("--out", build_out, "write to a file instead of stdout");

  std::string input, property, what, out_path;
  bool json = false, serial = false;
  SearchOptions sopts;
  OracleOptions oopts;

  auto* check = app.add_subcommand("check", "Decide a property of an algebra file");
  check->add_option("file", input, "algebra JSON, or - for stdin")->required();
  check->add_option("--property", property,
                    "valid, strong, nondegenerate, graded-simple, simple, controlled, crossed-product, "
                    "centralizer, picard-injective, necessary, crossed-controlled, subrings")
      ->required();
  check->add_option("--seed", sopts.seed)->capture_default_str();
  check->add_option("--budget", sopts.exhaustive_budget, "largest exhaustive scan")->capture_default_str();
  check->add_option("--trials", sopts.random_trials, "random trials for unit searches")->capture_default_str();
  check->add_option("--meataxe-tries", sopts.meataxe_tries)->capture_default_str();
  check->add_flag("--json", json, "print the JSON report");
  check->add_flag("--serial", serial, "use the serial kernels");
  check->add_option("--out", out_path, "also write the JSON report here");

  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration over GF(p)");
  oracle->add_option("file", input, "algebra JSON, or - for stdin")->required();
  oracle->add_option("--what", what, "sub-bimodules, subrings, ideals, controlled")->required();
  oracle->add_option("--subspace-budget", oopts.subspace_budget)->capture_default_str();
  oracle->add_option("--vector-budget", oopts.vector_budget)->capture_default_str();
  oracle->add_flag("--json", json, "print the JSON report");
  oracle->add_flag("--serial", serial, "use the serial kernels");
  oracle->add_option("--out", out_path, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kError;
  }

  if (*build) {
    auto out = cli::guarded([&] {
      auto j = cli::build(req);
      if (build_out.empty())
        std::cout << dump_json(j);
      else
        write_json_file(build_out, j);
      return cli::Outcome{cli::kHolds, {}, {}};
    });
    if (out.exit_code != cli::kHolds) std::cerr << out.text;
    return out.exit_code;
  }

  const ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;
  sopts.mode = mode;
  oopts.mode = mode;
  cli::Outcome out = cli::guarded([&] {
    auto a = load(input);
    return *check ? cli::check(a, property, sopts) : cli::oracle(a, what, oopts);
  });
  return emit(out, json, out_path);
}

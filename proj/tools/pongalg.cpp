// pongalg: structure constants and verification suites for the pong and
// asteroids algebras, with JSON on stdin/stdout.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 internal invariant breach.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pong/errors.hpp"
#include "pong/io.hpp"
#include "pong/pong_algebra.hpp"
#include "pong/suites.hpp"
#include "pong/table_cache.hpp"

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kInternalError = 3 };

struct Params {
  std::string algebra = "pong";
  int m = 0;
  int k = 0;
  int max_disp = 2;
  int jobs = 1;
  std::string cache_dir;
  std::string format = "json";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pong::InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pong::Context checked_context(const Params& p) {
  if (p.max_disp < 0) throw pong::InvalidArgument("--max-disp must be nonnegative");
  if (p.jobs < 1) throw pong::InvalidArgument("--jobs must be positive");
  return p.algebra == "pong" ? pong::make_pong_context(p.m, p.k) : pong::make_asteroids_context(p.m, p.k);
}

int cmd_gens(const Params& p) {
  const pong::Context ctx = checked_context(p);
  pong::Json out = pong::Json::array();
  if (p.algebra == "pong") {
    for (const auto& g : pong::enumerate_generators(ctx, p.max_disp)) out.push_back(pong::to_json(pong::to_record(g)));
  } else {
    for (const auto& g : pong::a_enumerate_generators(ctx, p.max_disp)) {
      out.push_back(pong::to_json(pong::to_record(g)));
    }
  }
  std::cout << pong::dump(out);
  return kOk;
}

int cmd_diff(const Params& p, const std::string& input) {
  const pong::Json doc = pong::parse_json(read_input(input));
  if (pong::element_algebra(doc, p.algebra) == "asteroids") {
    std::cout << pong::dump(pong::to_json(pong::diff(pong::asteroids_element_from_json(doc))));
  } else {
    std::cout << pong::dump(pong::to_json(pong::diff(pong::pong_element_from_json(doc))));
  }
  return kOk;
}

// Operands come from two files, or from one file holding a two-element list.
int cmd_mul(const Params& p, const std::vector<std::string>& inputs) {
  pong::Json left;
  pong::Json right;
  if (inputs.size() == 2) {
    if (inputs[0] == "-" && inputs[1] == "-") throw pong::InvalidArgument("only one operand can come from stdin");
    left = pong::parse_json(read_input(inputs[0]));
    right = pong::parse_json(read_input(inputs[1]));
  } else {
    const pong::Json pair = pong::parse_json(read_input(inputs.empty() ? "-" : inputs[0]));
    if (!pair.is_array() || pair.size() != 2) throw pong::InvalidArgument("mul expects a list of two elements");
    left = pair[0];
    right = pair[1];
  }
  const std::string la = pong::element_algebra(left, p.algebra);
  const std::string ra = pong::element_algebra(right, p.algebra);
  if (la != ra) throw pong::InvalidArgument("operands from different algebras");
  if (la == "asteroids") {
    std::cout << pong::dump(pong::to_json(
        pong::mu2(pong::asteroids_element_from_json(left), pong::asteroids_element_from_json(right))));
  } else {
    std::cout << pong::dump(
        pong::to_json(pong::mu2(pong::pong_element_from_json(left), pong::pong_element_from_json(right))));
  }
  return kOk;
}

int cmd_verify(const Params& p, const std::string& suite) {
  if (p.max_disp < 0) throw pong::InvalidArgument("--max-disp must be nonnegative");
  if (p.jobs < 1) throw pong::InvalidArgument("--jobs must be positive");
  std::unique_ptr<pong::TableCache> cache;
  if (!p.cache_dir.empty()) cache = std::make_unique<pong::TableCache>(p.cache_dir, &std::cerr);
  const pong::VerificationReport report = pong::run_suite(suite, {p.m, p.k}, p.max_disp, p.jobs, cache.get());
  std::cout << pong::dump(pong::to_json(report));
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_export(const Params& p) {
  const pong::Context ctx = checked_context(p);
  std::unique_ptr<pong::TableCache> cache;
  if (!p.cache_dir.empty()) cache = std::make_unique<pong::TableCache>(p.cache_dir, &std::cerr);
  pong::Json body;
  if (p.algebra == "pong") {
    body = pong::to_json(cache ? cache->pong(ctx, p.max_disp) : pong::build_pong_table(ctx, p.max_disp));
  } else {
    body = pong::to_json(cache ? cache->asteroids(ctx, p.max_disp) : pong::build_asteroids_table(ctx, p.max_disp));
  }
  const pong::Json out{{"format_version", pong::TableCache::kFormatVersion},
                       {"digest", pong::table_digest(body)},
                       {"table", body}};
  std::cout << pong::dump(out);
  return kOk;
}

void add_params(CLI::App* cmd, Params& p, bool algebra, bool bounds) {
  if (algebra) {
    cmd->add_option("--algebra", p.algebra, "pong or asteroids")->check(CLI::IsMember({"pong", "asteroids"}));
  }
  if (bounds) {
    cmd->add_option("--m", p.m, "number of markings")->required();
    cmd->add_option("--k", p.k, "number of strands")->required();
    cmd->add_option("--max-disp", p.max_disp, "displacement bound |f(x) - x|")->capture_default_str();
  }
  cmd->add_option("--format", p.format, "output format")->check(CLI::IsMember({"json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pong and asteroids algebras: generators, structure maps and verification suites"};
  app.require_subcommand(1);
  Params p;
  std::string input = "-";
  std::vector<std::string> mul_inputs;
  std::string suite;

  CLI::App* gens = app.add_subcommand("gens", "list generators within a displacement bound");
  add_params(gens, p, true, true);

  CLI::App* diff = app.add_subcommand("diff", "differential of an element or generator record");
  add_params(diff, p, true, false);
  diff->add_option("input", input, "JSON file, or - for stdin")->capture_default_str();

  CLI::App* mul = app.add_subcommand("mul", "product of two elements");
  add_params(mul, p, true, false);
  mul->add_option("inputs", mul_inputs, "two JSON files, or one file holding a two-element list")->expected(0, 2);

  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
  add_params(verify, p, false, true);
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(pong::suite_names()));
  verify->add_option("--jobs", p.jobs, "worker threads")->capture_default_str();
  verify->add_option("--cache", p.cache_dir, "directory of cached structure tables");

  CLI::App* table = app.add_subcommand("export-table", "differentials and products of all generators in a bound");
  add_params(table, p, true, true);
  table->add_option("--cache", p.cache_dir, "directory of cached structure tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*gens) return cmd_gens(p);
    if (*diff) return cmd_diff(p, input);
    if (*mul) return cmd_mul(p, mul_inputs);
    if (*verify) return cmd_verify(p, suite);
    if (*table) return cmd_export(p);
  } catch (const pong::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const pong::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

// Command-line interface for exact gl(m|1) character computations.
//
// Exit codes: 0 success / verification clean, 1 verification mismatch,
// 2 invalid input.

#include <atomic>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glm1/characters.hpp"
#include "glm1/composite_schur.hpp"
#include "glm1/json_io.hpp"
#include "glm1/super_schur.hpp"
#include "glm1/weights.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
  int m = 1;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--m", opts.m, "number of even variables (m >= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

glm1::Route parse_route(const std::string& name) {
  if (name == "lemma21") return glm1::Route::lemma21;
  if (name == "suzhang") return glm1::Route::suzhang;
  if (name == "determinant") return glm1::Route::determinant;
  throw std::invalid_argument("unknown route '" + name + "'");
}

int run_char(const CommonOpts& opts, const std::string& weight_text,
             const std::string& route_name) {
  const glm1::SuperWeight w = glm1::parse_super_weight(weight_text, opts.m);
  if (route_name != "all") {
    const glm1::Character ch = glm1::character_via(w, parse_route(route_name));
    if (opts.format == "json")
      std::cout << glm1::poly_to_json(ch.value).dump() << "\n";
    else
      std::cout << glm1::to_string(ch.value) << "\n";
    return 0;
  }
  const std::vector<std::string> names = {"lemma21", "suzhang", "determinant"};
  std::vector<glm1::LaurentPoly> values;
  for (const std::string& name : names)
    values.push_back(glm1::character_via(w, parse_route(name)).value);
  const bool agree = values[0] == values[1] && values[1] == values[2];
  if (opts.format == "json") {
    ordered_json j;
    j["weight"] = glm1::format_super_weight(w);
    j["m"] = opts.m;
    j["routes"] = ordered_json::object();
    for (size_t i = 0; i < names.size(); ++i)
      j["routes"][names[i]] = glm1::poly_to_json(values[i]);
    j["agreement"] = agree;
    std::cout << j.dump() << "\n";
  } else {
    for (size_t i = 0; i < names.size(); ++i)
      std::cout << names[i] << ": " << glm1::to_string(values[i]) << "\n";
    std::cout << "agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
  }
  return agree ? 0 : kExitVerifyFailed;
}

int run_classify(const CommonOpts& opts, const std::string& weight_text) {
  const glm1::SuperWeight w = glm1::parse_super_weight(weight_text, opts.m);
  const auto roots = glm1::atypical_roots(w);
  const auto kind = glm1::special_kind(w);
  if (opts.format == "json") {
    ordered_json j;
    j["weight"] = glm1::format_super_weight(w);
    j["m"] = opts.m;
    j["typical"] = roots.empty();
    if (roots.empty())
      j["atypical_root"] = nullptr;
    else
      j["atypical_root"] = roots.front();
    j["special"] = kind.has_value();
    if (kind) {
      const glm1::CompositePartition cp = glm1::phi(w);
      j["k"] = *kind;
      j["nu"] = glm1::format_partition(cp.nu);
      j["mu"] = glm1::format_partition(cp.mu);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weight: " << glm1::format_super_weight(w) << "\n";
    std::cout << "m: " << opts.m << "\n";
    std::cout << "typical: " << (roots.empty() ? "true" : "false") << "\n";
    std::cout << "atypical_root: "
              << (roots.empty() ? std::string("none") : std::to_string(roots.front()))
              << "\n";
    std::cout << "special: " << (kind ? "true" : "false") << "\n";
    if (kind) {
      const glm1::CompositePartition cp = glm1::phi(w);
      std::cout << "k: " << *kind << "\n";
      std::cout << "nu: \"" << glm1::format_partition(cp.nu) << "\"\n";
      std::cout << "mu: \"" << glm1::format_partition(cp.mu) << "\"\n";
    }
  }
  return 0;
}

int run_reduce(const CommonOpts& opts, const std::string& weight_text) {
  const glm1::SuperWeight w = glm1::parse_super_weight(weight_text, opts.m);
  const glm1::Reduction red = glm1::reduce_to_special(w);
  if (opts.format == "json") {
    ordered_json j;
    j["weight"] = glm1::format_super_weight(w);
    j["m"] = opts.m;
    j["j"] = red.j;
    j["special"] = glm1::format_super_weight(red.special);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weight: " << glm1::format_super_weight(w) << "\n";
    std::cout << "j: " << red.j << "\n";
    std::cout << "special: " << glm1::format_super_weight(red.special) << "\n";
  }
  return 0;
}

int run_verify(const CommonOpts& opts, int bound, int jobs) {
  const std::vector<glm1::SuperWeight> weights =
      glm1::enumerate_special_weights(opts.m, bound);
  std::vector<uint8_t> ok(weights.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= weights.size()) return;
      ok[i] = glm1::verify_routes(weights[i]) ? 1 : 0;
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  int typical = 0, atypical = 0;
  std::vector<std::string> failed;
  for (size_t i = 0; i < weights.size(); ++i) {
    (glm1::is_typical(weights[i]) ? typical : atypical) += 1;
    if (!ok[i]) failed.push_back(glm1::format_super_weight(weights[i]));
  }

  if (opts.format == "json") {
    ordered_json j;
    j["m"] = opts.m;
    j["bound"] = bound;
    j["total"] = weights.size();
    j["typical"] = typical;
    j["atypical"] = atypical;
    j["failures"] = failed.size();
    j["failed"] = failed;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "m: " << opts.m << "\n";
    std::cout << "bound: " << bound << "\n";
    std::cout << "total: " << weights.size() << "\n";
    std::cout << "typical: " << typical << "\n";
    std::cout << "atypical: " << atypical << "\n";
    std::cout << "failures: " << failed.size() << "\n";
    for (const std::string& w : failed) std::cout << "failed: " << w << "\n";
  }
  return failed.empty() ? 0 : kExitVerifyFailed;
}

int run_super_schur(const CommonOpts& opts, const std::string& nu_text,
                    const std::string& mu_text) {
  const glm1::CompositePartition cp{glm1::parse_partition(nu_text),
                                    glm1::parse_partition(mu_text)};
  if (!glm1::is_m_standard(cp, opts.m))
    throw std::invalid_argument("composite partition is not m-standard: l(nu)+l(mu) > m");
  const glm1::LaurentPoly value = glm1::composite_super_schur(cp, opts.m);
  if (opts.format == "json")
    std::cout << glm1::poly_to_json(value).dump() << "\n";
  else
    std::cout << glm1::to_string(value) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact irreducible characters of the Lie superalgebra gl(m|1)"};
  app.require_subcommand(1);

  CommonOpts char_opts;
  std::string char_weight;
  std::string char_route = "lemma21";
  CLI::App* cmd_char = app.add_subcommand("char", "compute an irreducible character");
  add_common(cmd_char, char_opts);
  cmd_char->add_option("--weight", char_weight, "weight \"l1,...,lm;mu\"")->required();
  cmd_char->add_option("--route", char_route, "computation route")
      ->check(CLI::IsMember({"lemma21", "suzhang", "determinant", "all"}))
      ->capture_default_str();

  CommonOpts classify_opts;
  std::string classify_weight;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "typicality, speciality and composite shape");
  add_common(cmd_classify, classify_opts);
  cmd_classify->add_option("--weight", classify_weight, "weight \"l1,...,lm;mu\"")
      ->required();

  CommonOpts reduce_opts;
  std::string reduce_weight;
  CLI::App* cmd_reduce =
      app.add_subcommand("reduce", "shift a weight to its special translate");
  add_common(cmd_reduce, reduce_opts);
  cmd_reduce->add_option("--weight", reduce_weight, "weight \"l1,...,lm;mu\"")
      ->required();

  CommonOpts verify_opts;
  int verify_bound = 0;
  int verify_jobs = 1;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check all three character routes over every special weight in range");
  add_common(cmd_verify, verify_opts);
  cmd_verify->add_option("--bound", verify_bound, "max |lambda_i|")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CommonOpts ss_opts;
  std::string ss_nu, ss_mu;
  CLI::App* cmd_ss = app.add_subcommand(
      "super-schur", "composite super-symmetric Schur function s_(nu;mu)(x/y)");
  add_common(cmd_ss, ss_opts);
  cmd_ss->add_option("--nu", ss_nu, "contravariant partition (empty for none)");
  cmd_ss->add_option("--mu", ss_mu, "covariant partition (empty for none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (cmd_char->parsed()) return run_char(char_opts, char_weight, char_route);
    if (cmd_classify->parsed()) return run_classify(classify_opts, classify_weight);
    if (cmd_reduce->parsed()) return run_reduce(reduce_opts, reduce_weight);
    if (cmd_verify->parsed()) return run_verify(verify_opts, verify_bound, verify_jobs);
    if (cmd_ss->parsed()) return run_super_schur(ss_opts, ss_nu, ss_mu);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

// ordspan: command-line front end over the C API.
#include "ordspan/ordspan.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3, kMismatch = 4 };

int exit_code(ordspan_status s) {
  switch (s) {
    case ORDSPAN_OK: return kOk;
    case ORDSPAN_CONFIG:
    case ORDSPAN_INVALID_ARGUMENT:
    case ORDSPAN_SYNTAX: return kUsage;
    case ORDSPAN_RESOURCE: return kResource;
    default: return kFailure;
  }
}

using Runner = ordspan_status (*)(ordspan_context*, ordspan_report**);

// Options are collected as key/value text and applied to the context after
// the environment config file, so flags win.
struct Settings {
  std::vector<std::pair<std::string, std::optional<std::string>*>> text;
  std::vector<std::pair<std::string, bool*>> flags;
};

void text_option(CLI::App& app, Settings& s, const std::string& flag, const std::string& key,
                 const std::string& help, std::optional<std::string>& slot) {
  app.add_option(flag, slot, help);
  s.text.emplace_back(key, &slot);
}

void flag_option(CLI::App& app, Settings& s, const std::string& flag, const std::string& key,
                 const std::string& help, bool& slot) {
  app.add_flag(flag, slot, help);
  s.flags.emplace_back(key, &slot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered digit-span computations: spans, tuple prefix codes, growth checks, Friedman witnesses"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ordspan_version());

  Settings s;
  std::map<std::string, std::optional<std::string>> slots;
  bool allow_leading_zero = false;
  bool rational_exponents = false;
  bool permute = false;

  auto& o = slots;
  text_option(app, s, "--base", "base", "number base, 2..36", o["base"]);
  text_option(app, s, "--max-bits", "max_bits", "value cap in bits (default 256)", o["max_bits"]);
  text_option(app, s, "--max-exp", "max_exp", "largest exponent magnitude (default 64)", o["max_exp"]);
  text_option(app, s, "--radical-free-variant", "radical_free_variant",
              "not-perfect-power | not-perfect-square | no-filter", o["variant"]);
  flag_option(app, s, "--allow-leading-zero", "allow_leading_zero", "allow atoms like 01", allow_leading_zero);
  flag_option(app, s, "--rational-exponents", "rational_exponents", "allow exact roots such as 4^(1/2)",
              rational_exponents);
  text_option(app, s, "--max-length", "max_length", "longest digit string accepted (default 12)", o["max_length"]);
  text_option(app, s, "--format", "format", "json | csv | table", o["format"]);
  text_option(app, s, "--out", "out", "output file (default stdout)", o["out"]);
  text_option(app, s, "--jobs", "jobs", "worker threads (default: all cores)", o["jobs"]);

  std::map<std::string, Runner> runners;
  auto sub = [&](const char* name, const char* help, Runner r) {
    runners[name] = r;
    return app.add_subcommand(name, help);
  };

  auto* span = sub("span", "ordered span of a digit string", ordspan_run_span);
  text_option(*span, s, "digits", "source", "digit string in the chosen base", o["source"]);
  span->get_option("digits")->required();

  auto* table = sub("table", "new radical-free numbers and N' for [d]^n", ordspan_run_table);
  text_option(*table, s, "--digit", "digit", "repeated digit (default base-1)", o["digit"]);
  text_option(*table, s, "--max-n", "max_n", "rows 1..max-n (default 7 in base 2, else 6)", o["max_n"]);

  auto* tuples = sub("tuples", "tuple span of a digit string or of [d]^n", ordspan_run_tuples);
  text_option(*tuples, s, "digits", "source", "digit string (default [d]^n)", o["source"]);
  text_option(*tuples, s, "--digit", "digit", "repeated digit (default base-1)", o["digit"]);
  text_option(*tuples, s, "-n,--n", "n", "repetitions", o["n"]);

  auto* prefix = sub("prefix-code", "maximum prefix code N' and the M(n) recurrence", ordspan_run_prefix_code);
  text_option(*prefix, s, "--digit", "digit", "repeated digit (default base-1)", o["digit"]);
  text_option(*prefix, s, "-n,--n", "n", "repetitions", o["n"]);
  text_option(*prefix, s, "--coefficients", "coefficients", "recurrence coefficients c1,c2,...", o["coefficients"]);

  auto* growth = sub("growth", "growth polynomial sign and root at the base", ordspan_run_growth);
  text_option(*growth, s, "--digit", "digit", "repeated digit (default base-1)", o["digit"]);
  text_option(*growth, s, "--max-n", "max_n", "starting degree for recomputed counts", o["max_n"]);
  text_option(*growth, s, "--coefficients", "coefficients", "use these counts instead", o["coefficients"]);

  auto* bound = sub("bound", "span size against b^L in base 28, and the string-count bound", ordspan_run_bound);
  text_option(*bound, s, "--digits", "bound_digits", "digit values (default 1,7,27)", o["bound_digits"]);
  text_option(*bound, s, "--length", "bound_length", "longest string (default 3)", o["bound_length"]);
  text_option(*bound, s, "--max-l", "max_l", "lengths 1..max-l for the counting bound (default 32)", o["max_l"]);

  auto* verify = sub("verify", "nice-Friedman check with witness", ordspan_run_verify);
  text_option(*verify, s, "target", "target", "positive decimal integer", o["target"]);
  verify->get_option("target")->required();
  text_option(*verify, s, "--witness", "witness", "also check this expression", o["witness"]);
  flag_option(*verify, s, "--permute", "permute", "allow digit permutations (plain Friedman)", permute);

  auto* scan = sub("scan", "nice-Friedman numbers in [1, limit]", ordspan_run_scan);
  text_option(*scan, s, "--limit", "limit", "upper end of the range (default 200)", o["limit"]);
  text_option(*scan, s, "--scan-ceiling", "scan_ceiling", "refuse limits above this (default 100000)",
              o["scan_ceiling"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  ordspan_context* raw = nullptr;
  if (ordspan_context_create(&raw) != ORDSPAN_OK) {
    std::fprintf(stderr, "ordspan: cannot allocate context\n");
    return kFailure;
  }
  std::unique_ptr<ordspan_context, decltype(&ordspan_context_destroy)> ctx(raw, ordspan_context_destroy);

  auto fail = [&](ordspan_status st) {
    std::fprintf(stderr, "ordspan: %s: %s\n", ordspan_status_string(st), ordspan_context_last_error(ctx.get()));
    return exit_code(st);
  };

  const std::string name = app.get_subcommands().front()->get_name();
  // Friedman numbers are conventionally decimal.
  if (name == "verify" || name == "scan") ordspan_context_set(ctx.get(), "base", "10");

  if (const char* path = std::getenv("ORDSPAN_CONFIG"); path && *path) {
    // An unreadable config file is a configuration problem, whatever the cause.
    if (auto st = ordspan_context_load_config(ctx.get(), path); st != ORDSPAN_OK) return fail(st) ? kUsage : kOk;
  }
  for (const auto& [key, slot] : s.text) {
    if (!*slot) continue;
    if (auto st = ordspan_context_set(ctx.get(), key.c_str(), (*slot)->c_str()); st != ORDSPAN_OK) return fail(st);
  }
  for (const auto& [key, slot] : s.flags) {
    if (!*slot) continue;
    if (auto st = ordspan_context_set(ctx.get(), key.c_str(), "true"); st != ORDSPAN_OK) return fail(st);
  }

  ordspan_report* report_raw = nullptr;
  if (auto st = runners.at(name)(ctx.get(), &report_raw); st != ORDSPAN_OK) return fail(st);
  std::unique_ptr<ordspan_report, decltype(&ordspan_report_destroy)> report(report_raw, ordspan_report_destroy);

  if (auto st = ordspan_report_write(ctx.get(), report.get(), ordspan_context_format(ctx.get()),
                                     ordspan_context_out(ctx.get()), nullptr);
      st != ORDSPAN_OK) {
    return fail(st);
  }
  if (name == "table" && ordspan_report_mismatch(report.get())) {
    std::fprintf(stderr, "ordspan: table differs from the published binary rows\n");
    return kMismatch;
  }
  return kOk;
}

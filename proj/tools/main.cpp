// applf command-line interface: period/function evaluation, point counting,
// genus, Hasse invariants, and the identity verification harness.  Output is
// machine readable (JSON by default, CSV on request) and byte-stable across
// identical invocations.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "applf/appell.hpp"
#include "applf/classical.hpp"
#include "applf/curves.hpp"
#include "applf/errors.hpp"
#include "applf/field.hpp"
#include "applf/verify.hpp"
#include "json.hpp"

using applf::i64;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string format = "json";
};

ordered_json cyc_to_json(const applf::CycValue& v) {
  return ordered_json{{"level", v.level()}, {"coeffs", v.coeffs()}};
}

std::string cyc_to_csv(const applf::CycValue& v) {
  std::ostringstream os;
  os << v.level() << ':';
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
    if (i) os << ';';
    os << v.coeffs()[i];
  }
  return os.str();
}

void emit_record(const CommonOpts& opts, const std::string& command,
                 const ordered_json& inputs, const ordered_json& result,
                 const std::string& status,
                 const std::vector<std::pair<std::string, std::string>>& csv_row) {
  if (opts.format == "csv") {
    std::ostringstream head, row;
    for (std::size_t i = 0; i < csv_row.size(); ++i) {
      if (i) {
        head << ',';
        row << ',';
      }
      head << csv_row[i].first;
      row << csv_row[i].second;
    }
    std::cout << head.str() << "\n" << row.str() << "\n";
    return;
  }
  ordered_json record{{"command", command},
                      {"inputs", inputs},
                      {"result", result},
                      {"status", status}};
  std::cout << record.dump(2) << "\n";
}

// Character spec: a plain integer exponent, or "oN" for the canonical
// character of order N (exponent (p-1)/N).
i64 parse_char_exponent(const std::string& text, i64 p) {
  if (!text.empty() && (text[0] == 'o' || text[0] == 'O')) {
    const i64 order = std::stoll(text.substr(1));
    if (order < 1 || (p - 1) % order != 0)
      applf::fail(applf::ErrorCode::OrderDoesNotDivide,
                  "order " + text.substr(1) + " does not divide p-1");
    return (p - 1) / order;
  }
  return std::stoll(text);
}

std::pair<i64, i64> parse_prime_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const i64 p = std::stoll(text);
    return {p, p};
  }
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

ordered_json report_to_json(const applf::VerificationReport& report) {
  ordered_json out{{"identity", applf::identity_name(report.id)},
                   {"prime", report.prime},
                   {"mode", report.exhaustive ? "exhaustive" : "sampled"}};
  if (!report.exhaustive) {
    out["seed"] = report.seed;
    out["samples_requested"] = report.samples_requested;
  }
  out["cases_checked"] = report.cases_checked;
  out["failure_count"] = report.failure_count;
  ordered_json failures = ordered_json::array();
  for (const auto& ce : report.failures) {
    ordered_json item;
    for (const auto& [name, value] : ce.values) item[name] = value;
    failures.push_back(item);
  }
  out["failures"] = failures;
  if (!report.note.empty()) out["note"] = report.note;
  out["pass"] = report.pass();
  return out;
}

struct EvalArgs {
  i64 p = 0;
  std::string a, c;
  std::vector<std::string> bs;
  std::vector<i64> lambdas;
};

applf::AppellParams build_params(const EvalArgs& args, const applf::PrimeField& f) {
  applf::AppellParams params{applf::Character(f, parse_char_exponent(args.a, f.p())),
                             {},
                             applf::Character(f, parse_char_exponent(args.c, f.p())),
                             args.lambdas};
  for (const auto& b : args.bs)
    params.bs.push_back(applf::Character(f, parse_char_exponent(b, f.p())));
  return params;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"finite-field Appell-Lauricella toolkit"};
  app.require_subcommand(1);
  CommonOpts opts;

  EvalArgs eval_args;
  auto add_eval_options = [&](CLI::App* cmd) {
    cmd->add_option("--p", eval_args.p, "odd prime modulus")->required();
    cmd->add_option("--a", eval_args.a, "top character exponent (or oN)")->required();
    cmd->add_option("--b", eval_args.bs, "row character exponents")
        ->required()
        ->delimiter(',');
    cmd->add_option("--c", eval_args.c, "bottom character exponent (or oN)")
        ->required();
    cmd->add_option("--lambda", eval_args.lambdas, "arguments lambda_1,...")
        ->required()
        ->delimiter(',');
    cmd->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* eval_pd = app.add_subcommand("eval-pd", "evaluate a period sum");
  add_eval_options(eval_pd);
  CLI::App* eval_fd = app.add_subcommand("eval-fd", "evaluate a normalized function");
  add_eval_options(eval_fd);

  struct {
    i64 p = 0, N = 0, i = 0, j = 0;
    std::vector<i64> ks, lambdas;
    bool naive = false;
  } count_args;
  CLI::App* count = app.add_subcommand("count", "count points on a curve");
  count->add_option("--p", count_args.p)->required();
  count->add_option("--N", count_args.N)->required();
  count->add_option("--i", count_args.i)->required();
  count->add_option("--j", count_args.j)->required();
  count->add_option("--k", count_args.ks)->required()->delimiter(',');
  count->add_option("--lambda", count_args.lambdas)->required()->delimiter(',');
  count->add_flag("--naive", count_args.naive, "force exhaustive enumeration");
  count->add_option("--format", opts.format)->check(CLI::IsMember({"json", "csv"}));

  struct {
    i64 N = 0, i = 0, j = 0;
    std::vector<i64> ks;
  } genus_args;
  CLI::App* genus = app.add_subcommand("genus", "genus of the smooth model");
  genus->add_option("--N", genus_args.N)->required();
  genus->add_option("--i", genus_args.i)->required();
  genus->add_option("--j", genus_args.j)->required();
  genus->add_option("--k", genus_args.ks)->required()->delimiter(',');
  genus->add_option("--format", opts.format)->check(CLI::IsMember({"json", "csv"}));

  struct {
    i64 p = 0, s = 0, t = 0;
  } hasse_args;
  CLI::App* hasse = app.add_subcommand("hasse", "Hasse invariant of a cubic model");
  hasse->add_option("--p", hasse_args.p)->required();
  hasse->add_option("--s", hasse_args.s)->required();
  hasse->add_option("--t", hasse_args.t)->required();
  hasse->add_option("--format", opts.format)->check(CLI::IsMember({"json", "csv"}));

  struct {
    std::string id, primes, mode = "auto";
    std::uint64_t seed = applf::kDefaultSampleSeed;
  } verify_args;
  CLI::App* verify = app.add_subcommand("verify", "verify an identity over primes");
  verify->footer([] {
    std::string names = "Identities:";
    for (applf::IdentityId id : applf::all_identities())
      names += std::string("\n  ") + applf::identity_name(id) + "  (" +
               applf::identity_description(id) + ")";
    return names;
  });
  verify->add_option("--id", verify_args.id, "identity name")->required();
  verify->add_option("--primes", verify_args.primes, "prime or range A..B")
      ->required();
  verify->add_option("--mode", verify_args.mode)
      ->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
  verify->add_option("--seed", verify_args.seed, "seed for sampled mode");
  verify->add_option("--format", opts.format)->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  if (eval_pd->parsed() || eval_fd->parsed()) {
    const bool normalized = eval_fd->parsed();
    const std::string command = normalized ? "eval-fd" : "eval-pd";
    ordered_json inputs{{"p", eval_args.p}, {"a", eval_args.a}, {"b", eval_args.bs},
                        {"c", eval_args.c}, {"lambda", eval_args.lambdas}};
    applf::PrimeField f(eval_args.p);
    applf::AppellParams params = build_params(eval_args, f);
    if (normalized) {
      applf::CycFraction value = applf::fdn(params);
      emit_record(opts, command, inputs,
                  ordered_json{{"num", cyc_to_json(value.num())},
                               {"den", cyc_to_json(value.den())}},
                  "ok",
                  {{"num", cyc_to_csv(value.num())}, {"den", cyc_to_csv(value.den())}});
    } else {
      applf::CycValue value = applf::pdn(params);
      emit_record(opts, command, inputs, cyc_to_json(value), "ok",
                  {{"value", cyc_to_csv(value)}});
    }
    return 0;
  }

  if (count->parsed()) {
    ordered_json inputs{{"p", count_args.p},   {"N", count_args.N},
                        {"i", count_args.i},   {"j", count_args.j},
                        {"k", count_args.ks},  {"lambda", count_args.lambdas},
                        {"naive", count_args.naive}};
    applf::PrimeField f(count_args.p);
    applf::CurveInstance inst{
        applf::CurveSpec{count_args.N, count_args.i, count_args.j, count_args.ks},
        count_args.lambdas, &f};
    const i64 points = count_args.naive ? applf::count_points_naive(inst)
                                        : applf::count_points_formula(inst);
    emit_record(opts, "count", inputs, ordered_json{{"count", points}}, "ok",
                {{"count", std::to_string(points)}});
    return 0;
  }

  if (genus->parsed()) {
    ordered_json inputs{{"N", genus_args.N}, {"i", genus_args.i},
                        {"j", genus_args.j}, {"k", genus_args.ks}};
    const i64 g = applf::genus_picard(
        applf::CurveSpec{genus_args.N, genus_args.i, genus_args.j, genus_args.ks});
    emit_record(opts, "genus", inputs, ordered_json{{"genus", g}}, "ok",
                {{"genus", std::to_string(g)}});
    return 0;
  }

  if (hasse->parsed()) {
    ordered_json inputs{{"p", hasse_args.p}, {"s", hasse_args.s}, {"t", hasse_args.t}};
    const i64 h = applf::hasse_invariant(hasse_args.p, hasse_args.s, hasse_args.t);
    emit_record(opts, "hasse", inputs, ordered_json{{"hasse", h}}, "ok",
                {{"hasse", std::to_string(h)}});
    return 0;
  }

  // verify
  const applf::IdentityId id = applf::identity_from_name(verify_args.id);
  const auto [lo, hi] = parse_prime_range(verify_args.primes);
  applf::Mode mode;
  if (verify_args.mode == "exhaustive")
    mode = applf::Mode::exhaustive();
  else if (verify_args.mode == "sample")
    mode = applf::Mode::sampled(verify_args.seed);
  else
    mode.seed = verify_args.seed;
  const auto entries = applf::sweep(id, lo, hi, mode);

  bool any_fail = false;
  ordered_json inputs{{"id", applf::identity_name(id)},
                      {"primes", verify_args.primes},
                      {"mode", verify_args.mode},
                      {"seed", verify_args.seed}};
  ordered_json reports = ordered_json::array();
  std::ostringstream csv;
  csv << "prime,status,mode,cases_checked,failure_count,note\n";
  for (const auto& entry : entries) {
    if (entry.skipped) {
      reports.push_back(ordered_json{{"prime", entry.prime},
                                     {"skipped", true},
                                     {"reason", entry.skip_reason}});
      csv << entry.prime << ",skip,," << ",," << entry.skip_reason << "\n";
      continue;
    }
    const auto& report = *entry.report;
    any_fail = any_fail || !report.pass();
    reports.push_back(report_to_json(report));
    csv << report.prime << ',' << (report.pass() ? "pass" : "fail") << ','
        << (report.exhaustive ? "exhaustive" : "sampled") << ','
        << report.cases_checked << ',' << report.failure_count << ','
        << report.note << "\n";
  }

  if (opts.format == "csv") {
    std::cout << csv.str();
  } else {
    ordered_json record{{"command", "verify"},
                        {"inputs", inputs},
                        {"reports", reports},
                        {"status", any_fail ? "fail" : "pass"}};
    std::cout << record.dump(2) << "\n";
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const applf::Error& e) {
    ordered_json record{
        {"error",
         {{"code", applf::error_code_name(e.code())}, {"message", e.what()}}},
        {"status", "error"}};
    std::cout << record.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    ordered_json record{{"error", {{"code", "Internal"}, {"message", e.what()}}},
                        {"status", "error"}};
    std::cout << record.dump(2) << "\n";
    return 2;
  }
}

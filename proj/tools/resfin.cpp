// Copyright 2026 The resfin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Results go to stdout; failures are reported on
// stderr as one JSON object {"error", "message", "exit_code"}.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "resfin/error.hpp"
#include "resfin/io.hpp"
#include "resfin/profiler.hpp"
#include "resfin/random_poly.hpp"

namespace {

using namespace resfin;

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kParse = 3,
  kIdentity = 4,
  kBudget = 5,
  kInvalid = 6,
  kIo = 7,
  kInternal = 8,
};

int exit_code_for(const std::string& code) {
  if (code == "parse_error") return kParse;
  if (code == "identity_word") return kIdentity;
  if (code == "budget_exceeded" || code == "not_found_within_budget") return kBudget;
  if (code == "invalid_argument" || code == "unknown_label" || code == "ring_mismatch") {
    return kInvalid;
  }
  if (code == "io_error") return kIo;
  return kInternal;
}

int report(const std::string& code, const std::string& message, int exit_code) {
  nlohmann::json j;
  j["error"] = code;
  j["message"] = message;
  j["exit_code"] = exit_code;
  std::cerr << j.dump() << "\n";
  return exit_code;
}

std::optional<std::string> getenv_opt(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

BigInt parse_bigint(const std::string& s, const char* what) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw InvalidArgument(std::string(what) + ": not an integer: '" + s + "'");
  }
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

struct BudgetFlags {
  std::optional<std::uint64_t> max_elements, closure_budget, prime_bound, degree_bound;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-elements", max_elements, "ball enumeration element budget");
    cmd->add_option("--closure-budget", closure_budget, "image closure element budget");
    cmd->add_option("--prime-bound", prime_bound, "largest prime in the reduction search");
    cmd->add_option("--degree-bound", degree_bound, "largest modulus degree in the reduction search");
  }
  Budgets budgets() const { return {max_elements, closure_budget, prime_bound, degree_bound}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-quotient witnesses and divisibility profiles for matrix groups"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // witness
  std::string spec_path, word_text, out_path, witness_path;
  bool with_order = false;
  BudgetFlags witness_budget;
  auto* witness = app.add_subcommand("witness", "separate a word by a finite-field quotient");
  witness->add_option("spec", spec_path, "group spec file")->required();
  witness->add_option("--word", word_text, "word, e.g. \"a b^-1 a^2\"")->required();
  witness->add_option("--out", out_path, "write the witness file here instead of stdout");
  witness->add_flag("--image-order", with_order, "also compute the exact image order");
  witness_budget.attach(witness);
  witness->callback([&] {
    const GroupSpecFile file = load_spec_file(spec_path);
    const GroupSpec spec = to_group_spec(file);
    const ResolvedBudgets b = resolve_budgets(witness_budget.budgets(), file.budgets, getenv_opt);
    const Word word = parse_word(spec, word_text);
    SeparateOptions opts;
    opts.compute_image_order = with_order;
    opts.closure_budget = b.closure_budget;
    WitnessFile wf{spec_fingerprint(file), separate(spec, word, opts)};
    emit(serialize_witness(spec, wf), out_path);
    if (!wf.record.verified) exit_code = kVerifyFailed;
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a witness file against a group spec");
  verify->add_option("spec", spec_path, "group spec file")->required();
  verify->add_option("witness", witness_path, "witness file")->required();
  verify->callback([&] {
    const GroupSpecFile file = load_spec_file(spec_path);
    const GroupSpec spec = to_group_spec(file);
    const WitnessFile wf = parse_witness(spec, read_file(witness_path));
    VerifyResult res;
    if (wf.spec_fingerprint != spec_fingerprint(file)) {
      res = {false, "spec fingerprint mismatch"};
    } else {
      res = verify_witness(spec, wf.record);
    }
    nlohmann::json j;
    j["verified"] = res.ok;
    j["reason"] = res.reason;
    std::cout << j.dump() << "\n";
    if (!res.ok) exit_code = kVerifyFailed;
  });

  // profile
  std::size_t radius = 0;
  bool with_dred = false;
  BudgetFlags profile_budget;
  auto* profile = app.add_subcommand("profile", "CSV divisibility profile over word balls");
  profile->add_option("spec", spec_path, "group spec file")->required();
  profile->add_option("--radius", radius, "largest word length")->required()->check(CLI::Range(1, 64));
  profile->add_flag("--d-reduction", with_dred, "add the exhaustive congruence-quotient minimum");
  profile->add_option("--out", out_path, "write the CSV here instead of stdout");
  profile_budget.attach(profile);
  profile->callback([&] {
    const GroupSpecFile file = load_spec_file(spec_path);
    const GroupSpec spec = to_group_spec(file);
    const ResolvedBudgets b = resolve_budgets(profile_budget.budgets(), file.budgets, getenv_opt);
    ProfileOptions opts;
    opts.max_elements = b.max_elements;
    opts.compute_d_reduction = with_dred;
    opts.reduction = {b.prime_bound, b.degree_bound, b.closure_budget};
    emit(profile_csv(farb_profile(spec, radius, opts)), out_path);
  });

  // growth
  BudgetFlags growth_budget;
  auto* growth = app.add_subcommand("growth", "word growth |B(n)| including the identity");
  growth->add_option("spec", spec_path, "group spec file")->required();
  growth->add_option("--radius", radius, "largest word length")->required()->check(CLI::Range(0, 64));
  growth_budget.attach(growth);
  growth->callback([&] {
    const GroupSpecFile file = load_spec_file(spec_path);
    const GroupSpec spec = to_group_spec(file);
    const ResolvedBudgets b = resolve_budgets(growth_budget.budgets(), file.budgets, getenv_opt);
    const auto w = word_growth(spec, radius, b.max_elements);
    std::cout << "n,word_growth\n";
    for (std::size_t n = 0; n < w.size(); ++n) std::cout << n << ',' << w[n] << '\n';
  });

  // dz
  std::string int_text;
  auto* dz_cmd = app.add_subcommand("dz", "least m >= 2 not dividing i");
  dz_cmd->add_option("i", int_text, "nonzero integer")->required();
  dz_cmd->callback([&] {
    const BigInt i = parse_bigint(int_text, "dz");
    if (i == 0) throw InvalidArgument("dz: i must be nonzero");
    std::cout << resfin::to_string(dz(i)) << "\n";
  });

  // farb-z
  std::vector<std::uint64_t> farb_ns;
  bool farb_csv = false;
  auto* farb = app.add_subcommand("farb-z", "max of dz over 1..n");
  farb->add_option("n", farb_ns, "one or more n >= 1")->required()->check(CLI::PositiveNumber);
  farb->add_flag("--csv", farb_csv, "print an n,farb_z table");
  farb->callback([&] {
    if (farb_csv) std::cout << "n,farb_z\n";
    for (std::uint64_t n : farb_ns) {
      const std::uint64_t f = farb_z(n);
      if (farb_csv) {
        std::cout << n << ',' << f << '\n';
      } else {
        std::cout << f << '\n';
      }
    }
  });

  // gauss-count
  std::string p_text;
  std::uint64_t degree = 0;
  auto* gauss = app.add_subcommand("gauss-count", "number of monic irreducibles of degree l over F_p");
  gauss->add_option("p", p_text, "prime")->required();
  gauss->add_option("l", degree, "degree >= 1")->required()->check(CLI::PositiveNumber);
  gauss->callback([&] {
    const BigInt p = parse_bigint(p_text, "gauss-count");
    if (p < 2 || !is_prime(p)) throw InvalidArgument("gauss-count: p must be prime");
    std::cout << resfin::to_string(gauss_irreducible_count(p, degree)) << "\n";
  });

  // audit-z
  std::uint64_t audit_max = 0;
  bool audit_rows = false;
  auto* audit = app.add_subcommand("audit-z", "check w(n) <= F(n)^s(F(n)) for the integers");
  audit->add_option("--max", audit_max, "largest n")->required()->check(CLI::Range(1, 10000000));
  audit->add_flag("--rows", audit_rows, "print every row, not only failures");
  audit->callback([&] {
    const AuditReport rep = inequality_audit("Z", audit_max);
    double min_margin = INFINITY;
    std::uint64_t failures = 0;
    for (const AuditRow& r : rep.rows) {
      min_margin = std::min(min_margin, r.log_margin);
      if (!r.pass) ++failures;
      if (audit_rows || !r.pass) {
        std::printf("row n=%llu w=%llu F=%llu s=%llu log_margin=%.6f %s\n",
                    static_cast<unsigned long long>(r.n),
                    static_cast<unsigned long long>(r.word_growth),
                    static_cast<unsigned long long>(r.farb),
                    static_cast<unsigned long long>(r.subgroup_growth), r.log_margin,
                    r.pass ? "pass" : "FAIL");
      }
    }
    std::printf("audit group=Z n_max=%llu rows=%zu failures=%llu min_log_margin=%.6f result=%s\n",
                static_cast<unsigned long long>(audit_max), rep.rows.size(),
                static_cast<unsigned long long>(failures), min_margin,
                rep.all_pass ? "pass" : "FAIL");
    if (!rep.all_pass) exit_code = kVerifyFailed;
  });

  // threshold
  std::string csv_path;
  std::optional<double> floor;
  auto* threshold = app.add_subcommand("threshold", "(log F)^2 / log log n over CSV samples");
  threshold->add_option("csv", csv_path, "CSV with columns n and farb_z (or a profile CSV)")->required();
  threshold->add_option("--floor", floor, "fail unless every ratio is at least this");
  threshold->callback([&] {
    auto samples = read_threshold_csv(read_file(csv_path));
    const std::size_t before = samples.size();
    std::erase_if(samples, [](const auto& s) { return s.first < 16; });
    if (samples.empty()) throw InvalidArgument("threshold: insufficient range, no sample with n >= 16");
    const ThresholdReport rep = threshold_check(samples, floor);
    for (const ThresholdRow& r : rep.rows) {
      std::printf("sample n=%llu F=%llu ratio=%.6f\n", static_cast<unsigned long long>(r.n),
                  static_cast<unsigned long long>(r.farb), r.ratio);
    }
    std::printf("threshold samples=%zu skipped_below_16=%zu min_ratio=%.6f asserted=%s result=%s\n",
                rep.rows.size(), before - samples.size(), rep.min_ratio,
                rep.asserted ? "yes" : "no", rep.pass ? "pass" : "FAIL");
    if (!rep.pass) exit_code = kVerifyFailed;
  });

  // check-lemma-z
  std::uint64_t seed = 1;
  std::size_t count = 200;
  auto* lemma = app.add_subcommand("check-lemma-z", "exponent selection on random polynomials");
  lemma->add_option("--seed", seed, "random seed (recorded in the output)");
  lemma->add_option("--count", count, "number of polynomials");
  lemma->callback([&] {
    const LemmaZSummary s = check_lemma_z(seed, count);
    std::printf(
        "lemma-z seed=%llu cases=%zu nonzero=%zu recursion=%zu fallback=%zu "
        "bound_violations=%zu interpretations_disagree=%zu result=%s\n",
        static_cast<unsigned long long>(seed), s.cases, s.nonzero, s.recursion, s.fallback,
        s.bound_violations, s.interpretations_disagree,
        s.nonzero == s.cases && s.bound_violations == 0 ? "pass" : "FAIL");
    if (s.nonzero != s.cases || s.bound_violations != 0) exit_code = kVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), kUsage);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    return report(e.code(), e.what(), code);
  } catch (const std::exception& e) {
    return report("internal", e.what(), kInternal);
  }
  return exit_code;
}

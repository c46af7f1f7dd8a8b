#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfib/errors.hpp"
#include "qfib/genfun.hpp"
#include "qfib/polynomial.hpp"
#include "qfib/sequences.hpp"
#include "qfib/tilings.hpp"
#include "qfib/verify.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Specialization {
  std::optional<mpz_class> a;
  std::optional<mpz_class> b;
  std::optional<mpz_class> q;
};

std::string rendered(const qfib::Polynomial& p, const Specialization& at) {
  return p.specialize(at.a, at.b, at.q).str();
}

// Cap precedence: --cap flag, then the QFIB_CAP environment variable, then
// the built-in default.
int resolve_cap(bool flag_given, int flag_value) {
  if (flag_given) return flag_value;
  const char* env = std::getenv("QFIB_CAP");
  if (env == nullptr) return qfib::kDefaultEnumerationCap;
  const std::string text(env);
  if (text.empty()) return qfib::kDefaultEnumerationCap;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw qfib::DomainError("QFIB_CAP must be a non-negative integer, got '" +
                              text + "'");
    }
  }
  return std::stoi(text);
}

int run_seq(const std::string& kind, int n, int shift, bool shift_given,
            const Specialization& at) {
  qfib::SequenceSet seqs;
  const qfib::Polynomial* value = nullptr;
  if (kind == "F") {
    value = &seqs.f(n);
  } else if (kind == "Fhat") {
    value = &seqs.f_hat(n);
  } else if (kind == "D") {
    value = &seqs.d(n);
  } else {
    if (!shift_given) {
      throw qfib::DomainError("--kind Fshift requires --s");
    }
    value = &seqs.f_shifted(shift, n);
  }
  std::cout << rendered(*value, at) << "\n";
  return 0;
}

int run_tilings(int n, int cap, bool list) {
  if (list) {
    for (const qfib::Tiling& tiling : qfib::enumerate_tilings(n, cap)) {
      std::cout << qfib::tiling_word(tiling) << "\t"
                << qfib::weight_of(tiling).to_polynomial().str() << "\n";
    }
    return 0;
  }
  std::cout << qfib::total_weight(n, cap).str() << "\n";
  return 0;
}

int run_genfun(const std::string& method, int order,
               const Specialization& at) {
  const qfib::PowerSeries series = method == "expansion"
                                       ? qfib::expansion_series(order)
                                       : qfib::solve_w(order);
  nlohmann::json coefficients = nlohmann::json::array();
  for (int i = 0; i <= order; ++i) {
    coefficients.push_back(rendered(series.coeff(i), at));
  }
  std::cout << coefficients.dump() << "\n";
  return 0;
}

int run_verify(const std::string& identity, const qfib::CheckBounds& bounds,
               const std::string& format) {
  const qfib::VerificationReport report =
      qfib::check_identity(identity, bounds);
  if (format == "json") {
    nlohmann::json records = nlohmann::json::array();
    for (const qfib::CheckRecord& rec : report.records) {
      records.push_back({{"identity", rec.identity},
                         {"indices", rec.indices},
                         {"status", rec.pass ? "pass" : "fail"},
                         {"lhs_canonical", rec.lhs},
                         {"rhs_canonical", rec.rhs}});
    }
    std::cout << records.dump() << "\n";
  } else {
    std::size_t passed = 0;
    for (const qfib::CheckRecord& rec : report.records) {
      std::cout << rec.identity;
      for (std::size_t i = 0; i < rec.indices.size(); ++i) {
        std::cout << " " << report.index_names[i] << "=" << rec.indices[i];
      }
      std::cout << ": " << (rec.pass ? "pass" : "FAIL") << "\n";
      if (!rec.pass) {
        std::cout << "  lhs = " << rec.lhs << "\n";
        std::cout << "  rhs = " << rec.rhs << "\n";
      }
      if (rec.pass) ++passed;
    }
    std::cout << report.identity << ": " << passed << "/"
              << report.records.size() << " instances pass\n";
  }
  return report.all_pass() ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for a two-parameter weighted "
               "Fibonacci family"};
  app.require_subcommand(1);

  // seq
  auto* seq = app.add_subcommand(
      "seq", "print one sequence value as a canonical polynomial");
  std::string seq_kind = "F";
  int seq_n = 0;
  int seq_shift = 0;
  long seq_a = 0, seq_b = 0, seq_q = 0;
  seq->add_option("--kind", seq_kind, "sequence: F, Fhat, D, or Fshift")
      ->check(CLI::IsMember({"F", "Fhat", "D", "Fshift"}));
  seq->add_option("--n", seq_n, "index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* seq_shift_opt = seq->add_option("--s", seq_shift,
                                        "shift (Fshift only)")
                            ->check(CLI::NonNegativeNumber);
  auto* seq_a_opt = seq->add_option("--a", seq_a, "substitute an integer for a");
  auto* seq_b_opt = seq->add_option("--b", seq_b, "substitute an integer for b");
  auto* seq_q_opt = seq->add_option("--q", seq_q, "substitute an integer for q");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check an identity instance by instance");
  std::string verify_identity;
  std::string verify_format = "text";
  std::string verify_variant = "corrected";
  int verify_max_n = -1, verify_max_k = -1, verify_order = -1;
  int verify_n = 0, verify_k = 0;
  verify->add_option("--identity", verify_identity, "identity name")
      ->required();
  verify->add_option("--max-n", verify_max_n, "sweep bound on the main index");
  verify->add_option("--max-k", verify_max_k,
                     "sweep bound on the secondary index");
  auto* verify_n_opt =
      verify->add_option("--n", verify_n, "pin the main index")
          ->check(CLI::NonNegativeNumber);
  auto* verify_k_opt =
      verify->add_option("--k", verify_k, "pin the secondary index")
          ->check(CLI::NonNegativeNumber);
  verify->add_option("--order", verify_order,
                     "series order for the generating-function checks");
  verify->add_option("--variant", verify_variant,
                     "median-square exponent variant")
      ->check(CLI::IsMember({"corrected", "statement"}));
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  // tilings
  auto* tilings = app.add_subcommand(
      "tilings", "total weight of the n-board tilings");
  int tilings_n = 0;
  int tilings_cap = qfib::kDefaultEnumerationCap;
  bool tilings_list = false;
  tilings->add_option("--n", tilings_n, "board length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* tilings_cap_opt =
      tilings->add_option("--cap", tilings_cap,
                          "longest board the enumeration will accept")
          ->check(CLI::NonNegativeNumber);
  tilings->add_flag("--list", tilings_list,
                    "list every tiling as word<TAB>weight");

  // genfun
  auto* genfun = app.add_subcommand(
      "genfun", "series coefficients of the generating function");
  int genfun_order = 0;
  std::string genfun_method = "solve";
  long gf_a = 0, gf_b = 0, gf_q = 0;
  genfun->add_option("--order", genfun_order, "truncation order")
      ->required()
      ->check(CLI::PositiveNumber);
  genfun->add_option("--method", genfun_method,
                     "solve the fixed point or expand the product form")
      ->check(CLI::IsMember({"solve", "expansion"}));
  auto* gf_a_opt = genfun->add_option("--a", gf_a, "substitute an integer for a");
  auto* gf_b_opt = genfun->add_option("--b", gf_b, "substitute an integer for b");
  auto* gf_q_opt = genfun->add_option("--q", gf_q, "substitute an integer for q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) {
      Specialization at;
      if (seq_a_opt->count() > 0) at.a = mpz_class(seq_a);
      if (seq_b_opt->count() > 0) at.b = mpz_class(seq_b);
      if (seq_q_opt->count() > 0) at.q = mpz_class(seq_q);
      return run_seq(seq_kind, seq_n, seq_shift, seq_shift_opt->count() > 0,
                     at);
    }
    if (verify->parsed()) {
      qfib::CheckBounds bounds;
      bounds.max_n = verify_max_n;
      bounds.max_k = verify_max_k;
      bounds.order = verify_order;
      if (verify_n_opt->count() > 0) bounds.n = verify_n;
      if (verify_k_opt->count() > 0) bounds.k = verify_k;
      bounds.median_variant = verify_variant == "statement"
                                  ? qfib::MedianVariant::kStatement
                                  : qfib::MedianVariant::kCorrected;
      return run_verify(verify_identity, bounds, verify_format);
    }
    if (tilings->parsed()) {
      const int cap = resolve_cap(tilings_cap_opt->count() > 0, tilings_cap);
      return run_tilings(tilings_n, cap, tilings_list);
    }
    if (genfun->parsed()) {
      Specialization at;
      if (gf_a_opt->count() > 0) at.a = mpz_class(gf_a);
      if (gf_b_opt->count() > 0) at.b = mpz_class(gf_b);
      if (gf_q_opt->count() > 0) at.q = mpz_class(gf_q);
      return run_genfun(genfun_method, genfun_order, at);
    }
  } catch (const qfib::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qfib::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qfib::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

// rho: exact Roman harmonic number tables, evaluations, derivative and
// moment queries, and identity-verification suites.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rho/exact_core.hpp"
#include "rho/identities.hpp"
#include "rho/numeric_bridge.hpp"
#include "rho/pochhammer.hpp"
#include "rho/roman_harmonic.hpp"
#include "rho/series.hpp"
#include "rho/stirling.hpp"
#include "rho/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

void apply_cache_cap_env() {
  const char* cap = std::getenv("RHO_CACHE_CAP");
  if (cap == nullptr || *cap == '\0') return;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(cap, &end, 10);
  if (end == nullptr || *end != '\0')
    throw std::invalid_argument("RHO_CACHE_CAP: not a nonnegative integer");
  rho::harmonic_table().set_entry_cap(static_cast<std::size_t>(value));
  rho::stirling_table().set_entry_cap(static_cast<std::size_t>(value));
}

int cmd_table(long n_min, long n_max, long k_max, const std::string& format) {
  if (n_min > n_max) {
    std::cerr << "table: empty range (--n-min > --n-max)\n";
    return kExitUsage;
  }
  rho::harmonic_table().warm(n_min, n_max, k_max);
  const bool json = format == "json";
  if (json)
    std::cout << "[\n";
  else
    std::cout << "n,k,value\n";
  for (long n = n_min; n <= n_max; ++n)
    for (long k = 0; k <= k_max; ++k) {
      const std::string value = rho::c(n, k).str();
      if (json) {
        const bool last = n == n_max && k == k_max;
        std::cout << "{\"n\":" << n << ",\"k\":" << k << ",\"value\":\"" << value << "\"}"
                  << (last ? "\n" : ",\n");
      } else {
        std::cout << n << ',' << k << ',' << value << '\n';
      }
    }
  if (json) std::cout << "]\n";
  return kExitOk;
}

struct EvalArgs {
  std::string object;
  long n = 0, k = 0, order = 0, index = 0;
  bool has_n = false, has_k = false, has_order = false, has_index = false;
};

int cmd_eval(const EvalArgs& a) {
  const auto need = [&](bool present, const char* flag) {
    if (!present)
      throw std::invalid_argument("eval " + a.object + ": missing required option " + flag);
  };
  rho::Rational value;
  if (a.object == "c") {
    need(a.has_n, "-n");
    need(a.has_k, "-k");
    value = rho::c(a.n, a.k);
  } else if (a.object == "stirling1") {
    need(a.has_n, "-n");
    need(a.has_k, "-k");
    value = rho::stirling_first(a.n, a.k);
  } else if (a.object == "stirling2") {
    need(a.has_n, "-n");
    need(a.has_k, "-k");
    value = rho::Rational(rho::stirling_second(a.n, a.k));
  } else if (a.object == "bernoulli") {
    need(a.has_order, "-m");
    need(a.has_index, "-j");
    value = rho::gen_bernoulli(a.order, a.index);
  } else if (a.object == "harmonic") {
    need(a.has_n, "-n");
    need(a.has_k, "-k");
    value = rho::harmonic(a.n, a.k);
  } else {
    throw std::invalid_argument("eval: unknown object '" + a.object + "'");
  }
  std::cout << value.str() << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, long n_max, long k_max, double tol, bool serial,
               bool verbose, const std::string& format) {
  rho::verify::Options options;
  options.n_max = n_max;
  options.k_max = k_max;
  options.tol = tol;
  options.parallel = !serial;
  const auto summaries = rho::verify::run_suite(suite, options);
  const bool json = format == "json";
  long passed = 0;
  for (const auto& s : summaries) {
    if (s.pass) ++passed;
    const std::string residual =
        s.exact ? s.max_residual.str() : [&] {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3e", s.max_fresidual);
          return std::string(buf);
        }();
    if (json) {
      std::cout << "{\"suite\":\"" << s.suite << "\",\"rule\":\"" << s.rule
                << "\",\"cases\":" << s.cases << ",\"pass\":" << (s.pass ? "true" : "false")
                << ",\"max_residual\":\"" << residual << "\"";
      if (!s.note.empty()) std::cout << ",\"note\":\"" << json_escape(s.note) << "\"";
      std::cout << "}\n";
    } else {
      std::printf("%s  %s/%-34s  cases=%-5ld  max|residual|=%s%s%s\n",
                  s.pass ? "PASS" : "FAIL", s.suite.c_str(), s.rule.c_str(), s.cases,
                  residual.c_str(), s.note.empty() ? "" : "  ", s.note.c_str());
    }
  }
  if (verbose && (suite == "sumrules" || suite == "all") && !json) {
    // Informational: the alternating order sums are only Abel-summable; show
    // how far the partial sums swing.
    for (long n = 1; n <= 8; ++n) {
      const auto [lo, hi] = rho::alternating_partial_sum_range(n, 60);
      std::printf("info  alternating_partial_sums n=%ld  min=%s max=%s (Abel value %s)\n", n,
                  lo.str().c_str(), hi.str().c_str(), rho::Rational(1, n + 1).str().c_str());
    }
  }
  if (!json)
    std::printf("%ld/%zu rules passed\n", passed, summaries.size());
  return passed == static_cast<long>(summaries.size()) ? kExitOk : kExitVerifyFailed;
}

int cmd_deriv(const std::string& target, long n, long k, const std::string& at) {
  const rho::Rational x = rho::Rational::parse(at);
  rho::Rational value;
  if (target == "pochhammer")
    value = rho::pochhammer_deriv(n, k, x);
  else if (target == "reciprocal")
    value = rho::recip_deriv(n, k, x);
  else
    throw std::invalid_argument("deriv: unknown target '" + target + "'");
  std::cout << value.str() << '\n';
  return kExitOk;
}

int cmd_moment(long D, long p, double tol, const std::string& format) {
  const rho::QuadratureResult q = rho::distribution_moment(D, p, tol / 10.0);
  const rho::Rational exact = rho::Rational(rho::factorial(p)) /
                              rho::Rational(rho::pow(rho::Integer(2), static_cast<unsigned long>(p))) *
                              rho::c(D - 1, p);
  const double diff = std::abs(q.value - exact.to_double());
  if (format == "json") {
    std::printf(
        "{\"value\":%.17g,\"est_error\":%.3e,\"evaluations\":%ld,\"exact\":\"%s\",\"abs_diff\":%.3e}\n",
        q.value, q.est_error, q.evaluations, exact.str().c_str(), diff);
  } else {
    std::printf("value,est_error,evaluations,exact,abs_diff\n%.17g,%.3e,%ld,%s,%.3e\n", q.value,
                q.est_error, q.evaluations, exact.str().c_str(), diff);
  }
  return diff <= tol ? kExitOk : kExitVerifyFailed;
}

int cmd_series(const std::string& kind, long n, long k, long terms, const std::string& format) {
  rho::TruncatedSeries series;
  if (kind == "order")
    series = rho::gf_order(n, terms);
  else if (kind == "fk")
    series = rho::f_k_series(k, terms);
  else
    throw std::invalid_argument("series: unknown kind '" + kind + "'");
  const bool json = format == "json";
  if (json)
    std::cout << "[\n";
  else
    std::cout << "index,value\n";
  for (long i = 0; i <= series.order(); ++i) {
    if (json)
      std::cout << "{\"index\":" << i << ",\"value\":\"" << series[i].str() << "\"}"
                << (i == series.order() ? "\n" : ",\n");
    else
      std::cout << i << ',' << series[i].str() << '\n';
  }
  if (json) std::cout << "]\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Roman harmonic numbers: tables, identities, derivatives"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"csv", "json"};

  auto* table = app.add_subcommand("table", "dump a c_n^(k) grid");
  long t_nmin = 0, t_nmax = 0, t_kmax = 0;
  std::string t_format = "csv";
  table->add_option("--n-min", t_nmin, "smallest degree")->required();
  table->add_option("--n-max", t_nmax, "largest degree")->required();
  table->add_option("--k-max", t_kmax, "largest order")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", t_format)->check(CLI::IsMember(formats));

  auto* eval = app.add_subcommand("eval", "evaluate one exact quantity");
  EvalArgs e;
  eval->add_option("object", e.object, "c | stirling1 | stirling2 | bernoulli | harmonic")
      ->required();
  auto* en = eval->add_option("-n", e.n, "degree / first argument");
  auto* ek = eval->add_option("-k", e.k, "order / second argument");
  auto* em = eval->add_option("-m,--order", e.order, "bernoulli order");
  auto* ej = eval->add_option("-j,--index", e.index, "bernoulli index");

  auto* verify = app.add_subcommand("verify", "run identity-verification suites");
  std::string v_suite = "all";
  long v_nmax = 0, v_kmax = 0;
  double v_tol = 0.0;
  bool v_serial = false, v_verbose = false;
  std::string v_format = "text";
  verify->add_option("--suite", v_suite, "defs|nested|generating|transforms|sumrules|pochhammer|numeric|all");
  verify->add_option("--n-max", v_nmax, "override default degree cap");
  verify->add_option("--k-max", v_kmax, "override default order cap");
  verify->add_option("--tol", v_tol, "override numeric tolerance");
  verify->add_flag("--serial", v_serial, "disable parallel case evaluation");
  verify->add_flag("--verbose", v_verbose, "print informational extras");
  verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

  auto* deriv = app.add_subcommand("deriv", "exact Pochhammer / reciprocal derivative");
  std::string d_target;
  long d_n = 0, d_k = 0;
  std::string d_at;
  deriv->add_option("target", d_target, "pochhammer | reciprocal")->required();
  deriv->add_option("-n", d_n, "symbol length")->required();
  deriv->add_option("-k", d_k, "derivative order")->required();
  deriv->add_option("--at", d_at, "evaluation point, rational p/q")->required();

  auto* moment = app.add_subcommand("moment", "distribution moment vs exact value");
  long m_D = 0, m_p = 0;
  double m_tol = 1e-8;
  std::string m_format = "csv";
  moment->add_option("-D,--dimension", m_D, "dimension, >= 2")->required();
  moment->add_option("-p,--power", m_p, "moment power")->required();
  moment->add_option("--tol", m_tol, "comparison tolerance");
  moment->add_option("--format", m_format)->check(CLI::IsMember(formats));

  auto* series = app.add_subcommand("series", "dump generating-series coefficients");
  std::string s_kind;
  long s_n = 1, s_k = 0, s_terms = 10;
  std::string s_format = "csv";
  series->add_option("kind", s_kind, "order | fk")->required();
  series->add_option("-n", s_n, "degree (kind=order)");
  series->add_option("-k", s_k, "order (kind=fk)");
  series->add_option("--terms", s_terms, "truncation order")->check(CLI::NonNegativeNumber);
  series->add_option("--format", s_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_cache_cap_env();
    if (*table) return cmd_table(t_nmin, t_nmax, t_kmax, t_format);
    if (*eval) {
      e.has_n = en->count() > 0;
      e.has_k = ek->count() > 0;
      e.has_order = em->count() > 0;
      e.has_index = ej->count() > 0;
      return cmd_eval(e);
    }
    if (*verify) return cmd_verify(v_suite, v_nmax, v_kmax, v_tol, v_serial, v_verbose, v_format);
    if (*deriv) return cmd_deriv(d_target, d_n, d_k, d_at);
    if (*moment) return cmd_moment(m_D, m_p, m_tol, m_format);
    if (*series) return cmd_series(s_kind, s_n, s_k, s_terms, s_format);
  } catch (const std::exception& err) {
    std::cerr << "rho: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

// riordan-gep: command-line front end for the library.
// Exit codes: 0 success, 1 domain or computation failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "riordan_gep/riordan_gep.hpp"

using namespace rgep;

namespace {

constexpr int kDefaultOrder = 16;
constexpr long kDefaultMaxOrder = 4096;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long max_order = kDefaultMaxOrder;

long read_max_order() {
  const char* env = std::getenv("RIORDAN_GEP_MAX_ORDER");
  if (!env || !*env) return kDefaultMaxOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("RIORDAN_GEP_MAX_ORDER must be a positive integer, got '") + env + "'");
  return v;
}

int limited(long value, const std::string& what) {
  if (value > max_order)
    fail(ErrorKind::OutOfRange, what + " " + std::to_string(value) + " exceeds RIORDAN_GEP_MAX_ORDER=" + std::to_string(max_order));
  return static_cast<int>(value);
}

/// Source line and marker for the last failing expression.
std::string error_location;

void mark(const std::string& text, std::size_t begin, std::size_t end) {
  error_location = "  " + text + "\n  " + std::string(begin, ' ') + std::string(std::max<std::size_t>(1, end - begin), '^') + "\n";
}

Series series_arg(const std::string& text, int order) {
  limited(order, "order");
  try {
    return eval_expr(*parse_expr(text), order);
  } catch (const ParseError& e) {
    mark(text, e.offset(), e.offset() + 1);
    throw;
  } catch (const DomainError& e) {
    mark(text, e.span().begin, e.span().end);
    throw;
  }
}

const CLI::Validator rational_value(
    [](std::string& s) {
      try {
        parse_rational(s);
        return std::string();
      } catch (const Error&) {
        return "expected a rational like 3, -2 or 1/2, got '" + s + "'";
      }
    },
    "RATIONAL");

RiordanKind parse_kind(const std::string& s) {
  if (s == "ordinary") return RiordanKind::Ordinary;
  if (s == "square") return RiordanKind::Square;
  return RiordanKind::Exponential;
}

RMatrix named_matrix(const std::string& name, int n) {
  if (name == "U") return matrix_U(n);
  if (name == "Uinv") return matrix_Uinv(n);
  if (name == "V") return matrix_V(n);
  if (name == "Vinv") return matrix_Vinv(n);
  if (name == "VU") return matrix_V(n) * matrix_U(n);
  return matrix_Uinv(n) * matrix_Vinv(n);
}

ABetaConstruction parse_construction(const std::string& s) {
  if (s == "dtilde") return ABetaConstruction::Dtilde;
  if (s == "log") return ABetaConstruction::LogSeries;
  return ABetaConstruction::Conjugation;
}

OutputDoc w_check_report(int n, int m) {
  VerifyReport report;
  auto add = [&](const std::string& name, const std::function<bool()>& f) {
    VerifyCheck c{"w", name, false, ""};
    try {
      c.passed = f();
    } catch (const Error& e) {
      c.detail = e.what();
    }
    report.checks.push_back(c);
  };
  const RMatrix W = w_matrix(n, m).matrix;
  add("column-sums", [&] {
    for (const Rational& s : column_sums(W))
      if (s != pow(Rational(m), n)) return false;
    return true;
  });
  add("conjugation-form", [&] { return w_matrix_conjugation(n, m) == W; });
  add("alt-form", [&] { return w_alt_form(n, m) == W; });
  add("identities", [&] { return w_identities(n, m, m); });
  add("restriction", [&] {
    for (int p = 0; p < n; ++p)
      if (!w_restriction(n, m, p)) return false;
    return true;
  });
  return report.to_doc();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan array and generalized Euler polynomial calculator", "riordan-gep"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));

  std::function<OutputDoc()> action;
  bool doc_is_check = false;

  // series eval
  auto* series = app.add_subcommand("series", "Truncated power series")->require_subcommand(1);
  std::string series_expr;
  int series_order = kDefaultOrder;
  auto* series_eval = series->add_subcommand("eval", "Evaluate an expression in x");
  series_eval->add_option("EXPR", series_expr, "Expression such as (1+x)/(1-x)")->required();
  series_eval->add_option("--order", series_order, "Truncation order")->check(CLI::NonNegativeNumber);
  series_eval->callback([&] { action = [&] { return doc_series(series_arg(series_expr, series_order)); }; });

  // riordan table
  auto* riordan = app.add_subcommand("riordan", "Riordan arrays")->require_subcommand(1);
  std::string rf = "1", rg, rkind = "ordinary";
  int rrows = 8, rcols = 8;
  auto* rtable = riordan->add_subcommand("table", "Finite window of (f, g)");
  rtable->add_option("--f", rf, "First generating function");
  rtable->add_option("--g", rg, "Second generating function")->required();
  rtable->add_option("--kind", rkind, "Array kind")->check(CLI::IsMember({"ordinary", "square", "exp"}));
  rtable->add_option("--rows", rrows, "Rows")->check(CLI::PositiveNumber);
  rtable->add_option("--cols", rcols, "Columns")->check(CLI::PositiveNumber);
  rtable->callback([&] {
    action = [&] {
      const int rows = limited(rrows, "rows"), cols = limited(rcols, "cols");
      const int order = std::max(rows, cols) + 1;
      const Series f = series_arg(rf, order), g = series_arg(rg, order);
      const RiordanKind kind = parse_kind(rkind);
      const RiordanArray A = kind == RiordanKind::Ordinary ? RiordanArray::ordinary(f, g)
                             : kind == RiordanKind::Square ? RiordanArray::square(f, g)
                                                           : RiordanArray::exponential(f, g);
      return doc_matrix(riordan_window(A, rows, cols));
    };
  });

  // gep alpha|u|v|matrix
  auto* gep = app.add_subcommand("gep", "Generalized Euler polynomials")->require_subcommand(1);
  std::string gep_a;
  int gep_n = 1;
  for (const char* which : {"alpha", "u", "v"}) {
    auto* sub = gep->add_subcommand(which, std::string("The polynomial ") + which + "_n of a");
    sub->add_option("--a", gep_a, "Series a with a_0 = 1")->required();
    sub->add_option("--n", gep_n, "Index n")->required()->check(CLI::PositiveNumber);
    const std::string w = which;
    sub->callback([&, w] {
      action = [&, w] {
        const int n = limited(gep_n, "n");
        const GepContext ctx(series_arg(gep_a, limited(std::max(kDefaultOrder, GepContext::required_order(n)), "order")), n);
        return doc_polynomial(w == "alpha" ? ctx.alpha() : w == "u" ? ctx.u() : ctx.v(), n);
      };
    });
  }
  std::string gep_matrix_name;
  auto* gep_matrix = gep->add_subcommand("matrix", "Transform matrices");
  gep_matrix->add_option("NAME", gep_matrix_name, "Matrix name")
      ->required()
      ->check(CLI::IsMember({"U", "Uinv", "V", "Vinv", "VU", "UinvVinv"}));
  gep_matrix->add_option("--n", gep_n, "Size n")->required()->check(CLI::PositiveNumber);
  gep_matrix->callback([&] { action = [&] { return doc_matrix(named_matrix(gep_matrix_name, limited(gep_n, "n")), gep_n); }; });

  // euler
  int euler_n = 1;
  auto* euler = app.add_subcommand("euler", "Euler polynomial A_n");
  euler->add_option("--n", euler_n, "Index n")->required()->check(CLI::NonNegativeNumber);
  euler->callback([&] { action = [&] { return doc_polynomial(euler_poly(limited(euler_n, "n")), euler_n); }; });

  // w
  int w_n = 1, w_m = 2;
  bool w_check = false;
  auto* w = app.add_subcommand("w", "Multinomial matrix W_(n,m)");
  w->add_option("--n", w_n, "Size n")->required()->check(CLI::PositiveNumber);
  w->add_option("--m", w_m, "Power m")->required()->check(CLI::PositiveNumber);
  w->add_flag("--check", w_check, "Report the identities instead of the matrix");
  w->callback([&] {
    action = [&] {
      const int n = limited(w_n, "n"), m = w_m;
      limited(static_cast<long>(n) * m, "order n*m");
      if (w_check) {
        doc_is_check = true;
        return w_check_report(n, m);
      }
      return doc_matrix(w_matrix(n, m).matrix, n);
    };
  });

  // abeta
  int ab_n = 1;
  std::string ab_beta = "1", ab_construction = "conj";
  auto* abeta = app.add_subcommand("abeta", "Lagrange transform matrix A_n^beta");
  abeta->add_option("--n", ab_n, "Size n")->required()->check(CLI::PositiveNumber);
  abeta->add_option("--beta", ab_beta, "Rational beta")->required()->check(rational_value);
  abeta->add_option("--construction", ab_construction, "Construction")->check(CLI::IsMember({"conj", "dtilde", "log"}));
  abeta->callback([&] {
    action = [&] {
      return doc_matrix(abeta_matrix(limited(ab_n, "n"), parse_rational(ab_beta), parse_construction(ab_construction)).matrix, ab_n);
    };
  });

  // lagrange
  std::string lg_a, lg_beta = "1", lg_phi = "1";
  int lg_order = kDefaultOrder;
  auto* lagrange = app.add_subcommand("lagrange", "Coefficients of (beta)a^phi");
  lagrange->add_option("--a", lg_a, "Series a with a_0 = 1")->required();
  lagrange->add_option("--beta", lg_beta, "Rational beta")->check(rational_value);
  lagrange->add_option("--phi", lg_phi, "Rational phi")->check(rational_value);
  lagrange->add_option("--order", lg_order, "Truncation order")->check(CLI::NonNegativeNumber);
  lagrange->callback([&] {
    action = [&] {
      const LagrangeFamily fam(series_arg(lg_a, lg_order), parse_rational(lg_beta), lg_order);
      return doc_series(lagrange_coeffs(fam, parse_rational(lg_phi)));
    };
  });

  // dirichlet table|g
  auto* dirichlet = app.add_subcommand("dirichlet", "Formal Dirichlet series")->require_subcommand(1);
  std::string preset = "zeta";
  int d_rows = 12, d_cols = 4;
  auto* dtable = dirichlet->add_subcommand("table", "Rows n = 1..R of <a(s)>; column k holds a^k");
  dtable->add_option("--preset", preset, "Series")->check(CLI::IsMember({"zeta", "zeta-inv", "zeta-log", "zeta-minus-one"}));
  dtable->add_option("--rows", d_rows, "Rows")->check(CLI::PositiveNumber);
  dtable->add_option("--cols", d_cols, "Columns")->check(CLI::PositiveNumber);
  dtable->callback([&] {
    action = [&] {
      const int rows = limited(d_rows, "rows"), cols = limited(d_cols, "cols");
      const DirichletVariant v = preset == "zeta-inv" ? DirichletVariant::Inv
                                 : preset == "zeta-log" ? DirichletVariant::Log
                                 : preset == "zeta-minus-one" ? DirichletVariant::MinusOne
                                                              : DirichletVariant::Plain;
      const RMatrix full = dirichlet_window(DirichletSeries::zeta(rows), v, rows + 1, cols);
      return doc_matrix(full.block(1, 0, rows, cols));
    };
  });
  int g_p = 1, g_r = 1;
  auto* dg = dirichlet->add_subcommand("g", "Numerator G_r^(p) for n a product of r primes to the power p");
  dg->add_option("--p", g_p, "Prime exponent p")->required()->check(CLI::PositiveNumber);
  dg->add_option("--r", g_r, "Number of primes r")->required()->check(CLI::PositiveNumber);
  dg->callback([&] {
    action = [&] {
      limited(static_cast<long>(g_p) * g_r, "degree p*r");
      return doc_polynomial(carlitz_hoggatt(g_r, g_p));
    };
  });

  // verify
  std::string suite = "all";
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("SUITE", suite, "Suite")->check(CLI::IsMember({"all", "gep", "w", "abeta", "dirichlet"}));
  verify->add_option("--seed", vopt.seed, "Generator seed");
  verify->add_option("--max-n", vopt.max_n, "Largest size")->check(CLI::PositiveNumber);
  verify->add_option("--samples", vopt.samples, "Random samples per property")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      limited(vopt.max_n, "max-n");
      doc_is_check = true;
      return run_verify(suite, vopt).to_doc();
    };
  });

  try {
    max_order = read_max_order();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const OutputDoc doc = action();
    std::cout << render(doc, parse_format(format));
    if (doc_is_check)
      for (const auto& row : doc.entries)
        if (row.at(2) != "pass") return 1;
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << error_location;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n" << error_location;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

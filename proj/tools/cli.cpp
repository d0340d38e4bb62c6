#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpslab/bernoulli.hpp"
#include "fpslab/changevar.hpp"
#include "fpslab/jacobi.hpp"
#include "fpslab/power_series.hpp"
#include "fpslab/series_json.hpp"
#include "verify.hpp"

namespace fpslab::cli {

namespace {

using jacobi::IntRange;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(std::string_view text, const std::string& flag) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(flag + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

// "a..b" or a single integer "a".
IntRange parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, flag);
    return {v, v};
  }
  const IntRange r{parse_int(std::string_view(text).substr(0, dots), flag),
                   parse_int(std::string_view(text).substr(dots + 2), flag)};
  if (r.empty()) throw UsageError(flag + ": empty range '" + text + "'");
  return r;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected p/q or an integer, got '" + text + "'");
  }
}

struct FunctionFlags {
  std::string func = "exp";
  std::string a = "1";
  std::string coeffs;
  int order = 15;
};

void add_function_flags(CLI::App* cmd, FunctionFlags& f) {
  cmd->add_option("--func", f.func, "exp: (e^{ax}-1)/a, id: x, custom: --coeffs")
      ->check(CLI::IsMember({"exp", "id", "custom"}))
      ->capture_default_str();
  cmd->add_option("--a", f.a, "rational a for --func exp")->capture_default_str();
  cmd->add_option("--coeffs", f.coeffs, "a2,a3,... for --func custom");
  cmd->add_option("--order", f.order, "truncation order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

PowerSeries build_function(const FunctionFlags& f) {
  if (f.func == "id") return PowerSeries::variable(f.order);
  if (f.func == "exp") {
    const Rational a = parse_rational(f.a, "--a");
    if (a.is_zero()) throw UsageError("--a must be nonzero");
    return changevar::scaled_exponential(a, f.order);
  }
  if (f.coeffs.empty()) throw UsageError("--func custom needs --coeffs a2,a3,...");
  std::vector<Rational> c = {Rational(0), Rational(1)};
  std::stringstream ss(f.coeffs);
  for (std::string item; std::getline(ss, item, ',');) {
    c.push_back(parse_rational(item, "--coeffs"));
  }
  return PowerSeries(std::move(c), f.order);
}

// Left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string render_terms(const std::vector<Rational>& terms, const char* symbol,
                         const std::string& format, bool scaled) {
  if (format == "csv") {
    std::string out = std::string("j,") + symbol + (scaled ? ",scaled" : "") + "\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const int j = static_cast<int>(i) + 1;
      out += std::to_string(j) + ',' + terms[i].to_string();
      if (scaled) out += ',' + (Rational::factorial(j) * terms[i]).to_string();
      out += '\n';
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"j", std::string(symbol) + "_j"});
  if (scaled) rows.back().push_back(std::string("j!*") + symbol + "_j");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const int j = static_cast<int>(i) + 1;
    rows.push_back({std::to_string(j), terms[i].to_string()});
    if (scaled) rows.back().push_back((Rational::factorial(j) * terms[i]).to_string());
  }
  return aligned(rows);
}

std::string render_qtables(const std::vector<bernoulli::QTable>& tables,
                           const std::string& format) {
  if (format == "csv") return bernoulli::to_csv(tables);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : tables) arr.push_back(bernoulli::to_json(t));
    return json_text(arr);
  }
  std::vector<std::vector<std::string>> rows = {{"m", "n", "k", "q"}};
  for (const auto& t : tables) {
    for (int k = t.lowest(); k <= t.top(); ++k) {
      rows.push_back({std::to_string(t.m()), std::to_string(t.n()),
                      std::to_string(k), t.at(k).to_string()});
    }
  }
  return aligned(rows);
}

struct Emit {
  std::string text;
  int status = kExitOk;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact formal power series: changes of variable, Bernoulli-type "
               "numbers and vertex operator coefficients",
               "fpslab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "pretty";
  std::string out_path;
  app.add_option("--format", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write to a file instead of stdout");

  FunctionFlags fn;
  auto* decompose_cmd = app.add_subcommand("decompose", "product decomposition b_j of f");
  add_function_flags(decompose_cmd, fn);
  auto* sumform_cmd = app.add_subcommand("sumform", "single-exponential coefficients A_j of f");
  add_function_flags(sumform_cmd, fn);
  auto* cbh_cmd = app.add_subcommand("cbh", "check product and sum forms against f");
  add_function_flags(cbh_cmd, fn);

  std::string m_text = "1";
  std::string n_text = "1..4";
  int q_order = 10;
  auto* qtable_cmd = app.add_subcommand("qtable", "expand e^{mx}/(e^x-1)^n");
  qtable_cmd->add_option("--m", m_text, "range a..b")->capture_default_str();
  qtable_cmd->add_option("--n", n_text, "range a..b")->capture_default_str();
  qtable_cmd->add_option("--order", q_order, "terms past the lowest exponent")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  int jmax = 10;
  auto* qrecur_cmd = app.add_subcommand("qrecur", "q^{(1,n)} by the recursion only");
  qrecur_cmd->add_option("--n", n_text, "range a..b")->capture_default_str();
  qrecur_cmd->add_option("--jmax", jmax, "largest j")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string rm_text = "-12..12";
  std::string rn_text = "1..12";
  auto* residues_cmd = app.add_subcommand("residues", "Res e^{my}/(e^y-1)^n, formula and expansion");
  residues_cmd->add_option("--m", rm_text, "range a..b")->capture_default_str();
  residues_cmd->add_option("--n", rn_text, "range a..b with a >= 1")->capture_default_str();

  int weight = 1;
  int comm_n = 0;
  std::string j_text = "-3..3";
  std::string k_text;
  auto* commutator_cmd = app.add_subcommand("commutator", "commutator coefficient grid");
  commutator_cmd->add_option("--w", weight, "weight of u")->capture_default_str();
  commutator_cmd->add_option("--n", comm_n, "power of (x_1 - x_2)")->capture_default_str();
  commutator_cmd->add_option("--j", j_text, "range a..b")->capture_default_str();
  commutator_cmd->add_option("--k", k_text, "range a..b (default n..n+6)");

  std::string suite_text = "all";
  verify::Options options;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  verify_cmd->add_option("--suite", suite_text, "all, series, changevar, bernoulli or jacobi")
      ->check(CLI::IsMember({"all", "series", "changevar", "bernoulli", "jacobi"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-order", options.max_order, "series truncation order")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  verify_cmd->add_option("--jmax", options.jmax, "depth for the Bernoulli checks")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  verify_cmd->add_option("--cases", options.random_cases, "random cases per series check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", options.seed, "random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Emit emit;
  try {
    if (decompose_cmd->parsed() || sumform_cmd->parsed()) {
      const PowerSeries f = build_function(fn);
      std::vector<Rational> terms;
      nlohmann::json j;
      if (decompose_cmd->parsed()) {
        const auto d = changevar::decompose(f);
        terms.assign(d.terms().begin(), d.terms().end());
        j = changevar::to_json(d);
      } else {
        const auto s = changevar::sum_form(f);
        terms.assign(s.terms().begin(), s.terms().end());
        j = changevar::to_json(s);
      }
      const bool product = decompose_cmd->parsed();
      if (format == "json") {
        emit.text = json_text(j);
      } else {
        emit.text = render_terms(terms, product ? "b" : "A", format, product);
        if (format == "pretty") emit.text = "f = " + to_string(f) + "\n" + emit.text;
      }
    } else if (cbh_cmd->parsed()) {
      const PowerSeries f = build_function(fn);
      const auto r = changevar::cbh_check(f);
      nlohmann::json j = {{"f", to_json(f)},
                          {"decomposition", changevar::to_json(r.decomposition)},
                          {"sum_form", changevar::to_json(r.sum)},
                          {"product_matches", r.product_matches},
                          {"sum_matches", r.sum_matches},
                          {"operators_agree", r.operators_agree},
                          {"first_mismatch_degree", nullptr},
                          {"passed", r.passed()}};
      if (r.first_mismatch_degree) j["first_mismatch_degree"] = *r.first_mismatch_degree;
      if (format == "json") {
        emit.text = json_text(j);
      } else if (format == "csv") {
        emit.text = "check,value\n";
        for (const char* key : {"product_matches", "sum_matches", "operators_agree", "passed"}) {
          emit.text += std::string(key) + ',' + (j[key].get<bool>() ? "true" : "false") + '\n';
        }
      } else {
        const auto yes = [](bool b) { return b ? "yes" : "no"; };
        std::ostringstream os;
        os << "f = " << f << '\n'
           << "product form reproduces f: " << yes(r.product_matches) << '\n'
           << "sum form reproduces f: " << yes(r.sum_matches) << '\n'
           << "both act as g -> g(f) on 1/(1-x): " << yes(r.operators_agree) << '\n';
        if (r.first_mismatch_degree) {
          os << "first mismatch at degree " << *r.first_mismatch_degree << '\n';
        }
        os << (r.passed() ? "PASS" : "FAIL") << '\n';
        emit.text = os.str();
      }
      emit.status = r.passed() ? kExitOk : kExitCheckFailed;
    } else if (qtable_cmd->parsed()) {
      const IntRange m = parse_range(m_text, "--m");
      const IntRange n = parse_range(n_text, "--n");
      std::vector<bernoulli::QTable> tables;
      for (int mi = m.lo; mi <= m.hi; ++mi)
        for (int ni = n.lo; ni <= n.hi; ++ni)
          tables.push_back(bernoulli::q_series(mi, ni, -ni + q_order));
      emit.text = render_qtables(tables, format);
    } else if (qrecur_cmd->parsed()) {
      const IntRange n = parse_range(n_text, "--n");
      std::vector<bernoulli::QTable> tables;
      bernoulli::QRecursion rec(jmax);
      for (int ni = n.lo; ni <= n.hi; ++ni) {
        std::vector<Rational> c;
        for (int j = 0; j <= jmax; ++j) c.push_back(rec.value(ni, j));
        tables.emplace_back(1, ni, std::move(c));
      }
      emit.text = render_qtables(tables, format);
    } else if (residues_cmd->parsed()) {
      const IntRange m = parse_range(rm_text, "--m");
      const IntRange n = parse_range(rn_text, "--n");
      if (n.lo < 1) throw UsageError("--n: residues need n >= 1");
      const auto rows = jacobi::residue_table(m, n);
      const bool agree = std::all_of(rows.begin(), rows.end(),
                                     [](const auto& r) { return r.agrees(); });
      if (format == "csv") {
        emit.text = jacobi::to_csv(rows);
      } else if (format == "json") {
        emit.text = json_text(jacobi::to_json(rows));
      } else {
        std::vector<std::vector<std::string>> t = {{"m", "n", "formula", "expansion"}};
        for (const auto& r : rows) {
          t.push_back({std::to_string(r.m), std::to_string(r.n), r.formula.to_string(),
                       r.oracle.to_string()});
        }
        emit.text = aligned(t) + (agree ? "all rows agree\n" : "MISMATCH\n");
      }
      emit.status = agree ? kExitOk : kExitCheckFailed;
    } else if (commutator_cmd->parsed()) {
      const IntRange j = parse_range(j_text, "--j");
      const IntRange k = k_text.empty() ? IntRange{comm_n, comm_n + 6}
                                        : parse_range(k_text, "--k");
      if (k.lo < comm_n) throw UsageError("--k: range must start at n or above");
      const auto table = jacobi::coefficient_table(weight, comm_n, j, k);
      if (format == "csv") {
        emit.text = jacobi::to_csv(table);
      } else if (format == "json") {
        emit.text = json_text(jacobi::to_json(table));
      } else {
        std::vector<std::vector<std::string>> t = {{"j\\k"}};
        for (int kk = k.lo; kk <= k.hi; ++kk) t[0].push_back(std::to_string(kk));
        for (const auto& e : table.entries) {
          if (e.query.k == k.lo) t.push_back({std::to_string(e.query.j)});
          t.back().push_back(e.value.to_string());
        }
        emit.text = "w = " + std::to_string(weight) + ", n = " + std::to_string(comm_n) +
                    "\n" + aligned(t);
      }
    } else if (verify_cmd->parsed()) {
      const auto results = verify::run_suite(*verify::parse_suite(suite_text), options);
      if (format == "json") {
        emit.text = json_text(verify::to_json(results));
      } else if (format == "csv") {
        emit.text = verify::to_csv(results);
      } else {
        emit.text = verify::to_pretty(results);
      }
      emit.status = verify::all_passed(results) ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << emit.text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << out_path << '\n';
      return kExitUsage;
    }
    file << emit.text;
  }
  return emit.status;
}

}  // namespace fpslab::cli

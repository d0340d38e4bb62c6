#include "verify.hpp"

#include <exception>
#include <random>
#include <sstream>
#include <utility>

#include "fpslab/bernoulli.hpp"
#include "fpslab/changevar.hpp"
#include "fpslab/npolynomial.hpp"
#include "fpslab/power_series.hpp"

namespace fpslab::verify {

namespace {

class Tally {
 public:
  Tally(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  // `describe` is only evaluated for the first failure.
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok) fail(describe());
  }

  void fail(std::string what) {
    if (result_.passed) result_.counterexample = std::move(what);
    result_.passed = false;
  }

  void note(std::string text) { result_.note = std::move(text); }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

template <typename Body>
CheckResult guarded(std::string suite, std::string name, Body&& body) {
  Tally t(std::move(suite), std::move(name));
  try {
    body(t);
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  return t.take();
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

PowerSeries random_series(std::mt19937_64& rng, int order, int from = 0) {
  std::vector<Rational> c(order + 1);
  for (int k = from; k <= order; ++k) c[k] = random_rational(rng);
  return PowerSeries(std::move(c));
}

PowerSeries random_change_of_variable(std::mt19937_64& rng, int order) {
  auto c = random_series(rng, order, 2);
  std::vector<Rational> v(c.coefficients().begin(), c.coefficients().end());
  v[1] = Rational(1);
  return PowerSeries(std::move(v));
}

std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) return std::min(a.order(), b.order()) + 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

std::string describe_difference(const PowerSeries& got, const PowerSeries& want,
                                int degree) {
  if (got.order() != want.order()) {
    return cat("orders differ: got O(x^", got.order() + 1, "), expected O(x^",
               want.order() + 1, ")");
  }
  return cat("degree ", degree, ": got ", got.coefficient(degree), ", expected ",
             want.coefficient(degree));
}

NPolynomial n_minus(const Rational& root) {
  return NPolynomial::linear_factor(root);
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "series") return Suite::series;
  if (name == "changevar") return Suite::changevar;
  if (name == "bernoulli") return Suite::bernoulli;
  if (name == "jacobi") return Suite::jacobi;
  return std::nullopt;
}

CheckResult reversion_roundtrip(int cases, int max_order, std::uint64_t seed) {
  return guarded("series", "reversion_roundtrip", [&](Tally& t) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
      const int order = 1 + i % max_order;
      const auto f = random_change_of_variable(rng, order);
      const auto g = reversion(f);
      const auto x = PowerSeries::variable(order);
      t.expect(compose(f, g) == x && compose(g, f) == x,
               [&] { return cat("f = ", f); });
    }
  });
}

CheckResult exp_log_roundtrip(int cases, int max_order, std::uint64_t seed) {
  return guarded("series", "exp_log_roundtrip", [&](Tally& t) {
    std::mt19937_64 rng(seed + 1);
    for (int i = 0; i < cases; ++i) {
      const int order = 1 + i % max_order;
      const auto p = random_series(rng, order, 1);
      const auto unit = PowerSeries::one(order) + p;
      t.expect(log_series(exp_series(p)) == p && exp_series(log_series(unit)) == unit,
               [&] { return cat("p = ", p); });
    }
  });
}

CheckResult truncation_soundness(int cases, int max_order, std::uint64_t seed) {
  return guarded("series", "truncation_soundness", [&](Tally& t) {
    std::mt19937_64 rng(seed + 2);
    for (int i = 0; i < cases; ++i) {
      const int high = 1 + i % max_order;
      const int low = 1 + (7 * i) % high;
      const auto a = random_series(rng, high);
      const auto b = random_series(rng, high);
      const auto p = random_series(rng, high, 1);
      const auto f = random_change_of_variable(rng, high);
      const auto unit = PowerSeries::one(high) + p;
      const bool ok =
          (a * b).truncated(low) == a.truncated(low) * b.truncated(low) &&
          compose(a, f).truncated(low) ==
              compose(a.truncated(low), f.truncated(low)) &&
          reciprocal(unit).truncated(low) == reciprocal(unit.truncated(low)) &&
          reversion(f).truncated(low) == reversion(f.truncated(low)) &&
          log_series(unit).truncated(low) == log_series(unit.truncated(low)) &&
          exp_series(p).truncated(low) == exp_series(p.truncated(low));
      t.expect(ok, [&] { return cat("orders ", high, " -> ", low, ", a = ", a); });
    }
  });
}

CheckResult b_prime_table(int order) {
  return guarded("changevar", "b_prime_table", [&](Tally& t) {
    // n! b_n for e^x - 1, n = 1..14.
    const std::vector<Rational> expected = {
        Rational(1, 2),  Rational(-1, 6),  Rational(0),          Rational(-1, 20),
        Rational(0),     Rational(5, 84),  Rational(0),          Rational(-7, 24),
        Rational(0),     Rational(35, 22), Rational(0),          Rational(-4279, 312),
        Rational(0),     Rational(3003, 16)};
    const auto d = changevar::decompose(exp_minus_one(order));
    const int last = std::min<int>(d.order(), expected.size());
    for (int n = 1; n <= last; ++n) {
      const Rational got = Rational::factorial(n) * d.b(n);
      t.expect(got == expected[n - 1], [&] {
        return cat("n = ", n, ": n!*b_n = ", got, ", expected ", expected[n - 1]);
      });
    }
    for (int n = 3; n <= d.order(); n += 2) {
      t.expect(d.b(n).is_zero(), [&] { return cat("b_", n, " = ", d.b(n)); });
    }
  });
}

CheckResult inverse_product_log(int order) {
  return guarded("changevar", "inverse_product_log", [&](Tally& t) {
    const auto d = changevar::decompose(exp_minus_one(order));
    const auto got = changevar::apply_decomposition(
        d, PowerSeries::variable(order), changevar::kInverseProduct);
    const auto want =
        log_series(PowerSeries::one(order) + PowerSeries::variable(order));
    const auto diff = first_difference(got, want);
    t.expect(!diff, [&] { return describe_difference(got, want, *diff); });
  });
}

CheckResult inverse_product_random(int cases, int order, std::uint64_t seed) {
  return guarded("changevar", "inverse_product_random", [&](Tally& t) {
    std::mt19937_64 rng(seed + 3);
    for (int i = 0; i < cases; ++i) {
      const auto f = random_change_of_variable(rng, order);
      const auto got = changevar::apply_decomposition(
          changevar::decompose(f), PowerSeries::variable(order),
          changevar::kInverseProduct);
      const auto want = reversion(f);
      const auto diff = first_difference(got, want);
      t.expect(!diff, [&] {
        return cat("f = ", f, ", ", describe_difference(got, want, *diff));
      });
    }
  });
}

CheckResult cbh_equivalence(int random_cases, int order, std::uint64_t seed) {
  return guarded("changevar", "cbh_equivalence", [&](Tally& t) {
    std::vector<PowerSeries> fs = {
        exp_minus_one(order), changevar::scaled_exponential(Rational(2), order),
        PowerSeries(std::vector<Rational>{0, 1, 1}, order)};
    std::mt19937_64 rng(seed + 4);
    for (int i = 0; i < random_cases; ++i) {
      fs.push_back(random_change_of_variable(rng, order));
    }
    for (const auto& f : fs) {
      const auto report = changevar::cbh_check(f);
      t.expect(report.passed(), [&] {
        return cat("f = ", f, ", first mismatch at degree ",
                   report.first_mismatch_degree.value_or(-1));
      });
    }
  });
}

CheckResult odd_vanishing(const std::vector<Rational>& as, int order) {
  return guarded("changevar", "odd_vanishing", [&](Tally& t) {
    std::string note;
    for (const auto& a : as) {
      const auto r = changevar::odd_vanishing_report(a, order);
      t.expect(r.b1_is_half_a, [&] {
        return cat("a = ", a, ": b_1 = ", r.decomposition.b(1));
      });
      t.expect(r.nonvanishing_odd.empty(), [&] {
        return cat("a = ", a, ": b_", r.nonvanishing_odd.front(), " != 0");
      });
      std::string signs;
      for (int s : r.even_signs) signs += s > 0 ? '+' : (s < 0 ? '-' : '0');
      if (!note.empty()) note += "; ";
      note += cat("a=", a, " signs of b_4..b_", 2 + 2 * r.even_signs.size(),
                  ": ", signs, r.signs_alternate ? " (alternating)" : " (not alternating)");
    }
    t.note(std::move(note));
  });
}

CheckResult bernoulli_consistency(int jmax) {
  return guarded("bernoulli", "bernoulli_consistency", [&](Tally& t) {
    const auto b = bernoulli::bernoulli_numbers(jmax);
    const auto q = bernoulli::q_series(1, 1, jmax - 1);
    t.expect(b[1] == Rational(1, 2), [&] { return cat("B_1 = ", b[1]); });
    for (int j = 0; j <= jmax; ++j) {
      const Rational scaled = Rational::factorial(j) * q.at(j - 1);
      t.expect(b[j] == scaled, [&] {
        return cat("j = ", j, ": B_j = ", b[j], ", j!*q = ", scaled);
      });
      const Rational at_one = bernoulli::bernoulli_polynomial_value(j, Rational(1));
      t.expect(at_one == b[j], [&] {
        return cat("j = ", j, ": B_j(1) = ", at_one, ", B_j = ", b[j]);
      });
      if (j > 1 && j % 2 == 1) {
        t.expect(b[j].is_zero(), [&] { return cat("B_", j, " = ", b[j]); });
      }
    }
  });
}

CheckResult recursion_vs_expansion(IntRange n_range, int jmax) {
  return guarded("bernoulli", "recursion_vs_expansion", [&](Tally& t) {
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      const auto rec = bernoulli::q_recursive(n, jmax);
      const auto direct = bernoulli::q_series(1, n, -n + jmax);
      for (int j = 0; j <= jmax; ++j) {
        const Rational a = rec.from_lowest(j);
        const Rational b = direct.from_lowest(j);
        t.expect(a == b, [&] {
          return cat("n = ", n, ", j = ", j, ": recursion ", a, ", expansion ", b);
        });
      }
    }
  });
}

CheckResult expansion_table() {
  return guarded("bernoulli", "expansion_table", [&](Tally& t) {
    const std::vector<NPolynomial> expected = {
        NPolynomial::constant(Rational(1)),
        Rational(-1, 2) * n_minus(Rational(2)),
        Rational(1, 8) * n_minus(Rational(3)) * n_minus(Rational(4, 3)),
        Rational(-1, 48) * n_minus(Rational(1)) * n_minus(Rational(2)) *
            n_minus(Rational(4)),
        Rational(1, 384) * n_minus(Rational(5)) *
            NPolynomial{Rational(-16, 5), Rational(22, 3), Rational(-5), Rational(1)},
        Rational(-1, 3840) * n_minus(Rational(1)) * n_minus(Rational(2)) *
            n_minus(Rational(6)) *
            NPolynomial{Rational(8, 3), Rational(-13, 3), Rational(1)},
    };
    for (int j = 0; j < static_cast<int>(expected.size()); ++j) {
      const auto e = bernoulli::expansion_polynomial(j);
      t.expect(e.validated() && e.polynomial == expected[j], [&] {
        return cat("j = ", j, ": interpolated ", e.polynomial, ", expected ",
                   expected[j]);
      });
    }
  });
}

CheckResult polynomiality(int jmax) {
  return guarded("bernoulli", "polynomiality", [&](Tally& t) {
    for (int j = 0; j <= jmax; ++j) {
      const auto e = bernoulli::expansion_polynomial(j);
      t.expect(e.validated(), [&] {
        return cat("j = ", j, ": not a polynomial at n = ", e.first_failure.value_or(0));
      });
      t.expect(e.polynomial.degree() <= j, [&] {
        return cat("j = ", j, ": degree ", e.polynomial.degree());
      });
      if (j == 0) continue;
      const auto d = bernoulli::divisibility_check(j);
      for (const auto& [root, value] : d.roots) {
        t.expect(value.is_zero(), [&] {
          return cat("j = ", j, ": value ", value, " at n = ", root);
        });
      }
    }
  });
}

CheckResult convolution(int radius) {
  return guarded("bernoulli", "convolution", [&](Tally& t) {
    bernoulli::QSeriesCache cache;
    for (int m = -radius; m <= radius; ++m)
      for (int n = -radius; n <= radius; ++n)
        for (int j = -radius; j <= radius; ++j) {
          const auto r = bernoulli::convolution_check(cache, m, n, j);
          t.expect(r.passed(), [&] {
            return cat("(m, n, j) = (", m, ", ", n, ", ", j, "): ", r.lhs,
                       " != ", r.rhs);
          });
        }
  });
}

CheckResult weighted_convolution(int radius) {
  return guarded("bernoulli", "weighted_convolution", [&](Tally& t) {
    bernoulli::QSeriesCache cache;
    for (int m = -radius; m <= radius; ++m)
      for (int n = -radius; n <= radius; ++n) {
        const auto r = bernoulli::weighted_convolution_check(cache, m, n);
        t.expect(r.passed(), [&] {
          return cat("(m, n) = (", m, ", ", n, "): ", r.lhs, " != ", r.rhs);
        });
      }
  });
}

CheckResult residues(IntRange m, IntRange n) {
  return guarded("jacobi", "residues", [&](Tally& t) {
    for (const auto& row : jacobi::residue_table(m, n)) {
      t.expect(row.agrees(), [&] {
        return cat("(m, n) = (", row.m, ", ", row.n, "): formula ", row.formula,
                   ", expansion ", row.oracle);
      });
    }
  });
}

CheckResult commutator(IntRange w_range, IntRange n_range, IntRange j_range,
                       int k_span) {
  return guarded("jacobi", "commutator", [&](Tally& t) {
    for (int w = w_range.lo; w <= w_range.hi; ++w)
      for (int n = n_range.lo; n <= n_range.hi; ++n) {
        const auto table = jacobi::coefficient_table(w, n, j_range, {n, n + k_span});
        for (const auto& e : table.entries) {
          const auto& q = e.query;
          const Rational want = jacobi::residue_oracle(w - q.j, q.k - n + 1);
          t.expect(e.value == want, [&] {
            return cat("(w, n, j, k) = (", w, ", ", n, ", ", q.j, ", ", q.k,
                       "): ", e.value, ", residue ", want);
          });
        }
        for (int j = j_range.lo; j <= j_range.hi; ++j)
          for (int k = n - k_span; k < n; ++k) {
            const Rational v = jacobi::commutator_coefficient({w, j, k, n});
            t.expect(v.is_zero(), [&] {
              return cat("(w, n, j, k) = (", w, ", ", n, ", ", j, ", ", k,
                         "): ", v, " below k = n");
            });
          }
      }
  });
}

std::vector<CheckResult> run_suite(Suite suite, const Options& o) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::series) {
    out.push_back(reversion_roundtrip(o.random_cases, o.max_order, o.seed));
    out.push_back(exp_log_roundtrip(o.random_cases, o.max_order, o.seed));
    out.push_back(truncation_soundness(o.random_cases, o.max_order, o.seed));
  }
  if (all || suite == Suite::changevar) {
    out.push_back(b_prime_table(15));
    out.push_back(inverse_product_log(o.max_order));
    out.push_back(inverse_product_random(20, o.max_order, o.seed));
    out.push_back(cbh_equivalence(5, o.max_order, o.seed));
    out.push_back(odd_vanishing(
        {Rational(1), Rational(2), Rational(1, 3), Rational(-1)}, o.max_order));
  }
  if (all || suite == Suite::bernoulli) {
    out.push_back(bernoulli_consistency(o.jmax));
    out.push_back(recursion_vs_expansion({-8, 12}, o.jmax));
    out.push_back(expansion_table());
    out.push_back(polynomiality(12));
    out.push_back(convolution(6));
    out.push_back(weighted_convolution(8));
  }
  if (all || suite == Suite::jacobi) {
    out.push_back(residues({-12, 12}, {1, 12}));
    out.push_back(commutator({0, 4}, {-2, 2}, {-6, 6}, 8));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json c = {{"suite", r.suite},
                        {"name", r.name},
                        {"cases", r.cases},
                        {"passed", r.passed}};
    if (!r.passed) c["counterexample"] = r.counterexample;
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(std::move(c));
  }
  return {{"checks", std::move(checks)}, {"passed", all_passed(results)}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string to_csv(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "suite,name,cases,passed,counterexample,note\n";
  for (const auto& r : results) {
    os << r.suite << ',' << r.name << ',' << r.cases << ','
       << (r.passed ? "true" : "false") << ',' << csv_field(r.counterexample)
       << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

std::string to_pretty(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name
       << " (cases: " << r.cases << ")\n";
    if (!r.passed) os << "     counterexample: " << r.counterexample << '\n';
    if (!r.note.empty()) os << "     note: " << r.note << '\n';
    passed += r.passed ? 1 : 0;
  }
  os << passed << '/' << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace fpslab::verify

#include "fpslab/changevar.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "fpslab/series_json.hpp"

namespace fpslab::changevar {

namespace {

void require_unit_change_of_variable(const PowerSeries& f) {
  if (f.order() < 1 || !f[0].is_zero() || f[1] != Rational(1)) {
    throw std::domain_error(
        "expected a change of variable x + a_2 x^2 + ... (unit linear term)");
  }
}

std::optional<int> first_difference(const PowerSeries& a,
                                    const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

std::optional<int> earliest(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

DerivationTerm::DerivationTerm(int j, Rational b)
    : degree_shift(j), coefficient(std::move(b)) {
  if (j < 1) {
    throw std::invalid_argument("derivation x^{j+1} d/dx needs j >= 1");
  }
}

PowerSeries apply_derivation(int j, const PowerSeries& g) {
  if (j < 1) {
    throw std::invalid_argument("derivation x^{j+1} d/dx needs j >= 1");
  }
  const int n = g.order();
  std::vector<Rational> r(n + 1);
  for (int k = j + 1; k <= n; ++k) {
    const int src = k - j;
    if (!g[src].is_zero()) r[k] = Rational(src) * g[src];
  }
  return PowerSeries(std::move(r));
}

PowerSeries exp_derivation(const DerivationTerm& term, const PowerSeries& g) {
  if (term.coefficient.is_zero()) return g;
  PowerSeries sum = g;
  PowerSeries power_term = g;
  // Each application raises degrees by j >= 1, so the loop ends within
  // g.order() / j steps.
  for (int i = 1;; ++i) {
    power_term = (term.coefficient / Rational(i)) *
                 apply_derivation(term.degree_shift, power_term);
    if (power_term.is_zero()) break;
    sum = sum + power_term;
  }
  return sum;
}

PowerSeries apply_vector_field(const PowerSeries& field, const PowerSeries& g) {
  if (!field[0].is_zero()) {
    throw std::domain_error("vector field must vanish at the origin");
  }
  const int n = std::min(field.order(), g.order());
  std::vector<Rational> r(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (field[i].is_zero()) continue;
    // h_i x^i * (m g_m x^{m-1}) lands at degree i + m - 1.
    for (int m = 1; i + m - 1 <= n; ++m) {
      if (!g[m].is_zero()) r[i + m - 1] += field[i] * Rational(m) * g[m];
    }
  }
  return PowerSeries(std::move(r));
}

PowerSeries exp_vector_field(const PowerSeries& field, const PowerSeries& g) {
  if (!field[0].is_zero() || (field.order() >= 1 && !field[1].is_zero())) {
    throw std::domain_error(
        "exp_vector_field needs a field of the form sum_{j>=1} A_j x^{j+1}");
  }
  const int n = std::min(field.order(), g.order());
  const PowerSeries h = field.truncated(n);
  PowerSeries sum = g.truncated(n);
  PowerSeries power_term = sum;
  for (int i = 1;; ++i) {
    power_term = (Rational(1) / Rational(i)) * apply_vector_field(h, power_term);
    if (power_term.is_zero()) break;
    sum = sum + power_term;
  }
  return sum;
}

Decomposition decompose(const PowerSeries& f) {
  require_unit_change_of_variable(f);
  const int n_terms = f.order() - 1;
  std::vector<Rational> b(n_terms);
  // partial = exp(b_{n-1} ...) ... exp(b_1 x^2 d/dx) x. The factor with b_n
  // only moves degrees >= n + 1, and moves x^{n+1} by exactly b_n.
  PowerSeries partial = PowerSeries::variable(f.order());
  for (int n = 1; n <= n_terms; ++n) {
    b[n - 1] = f[n + 1] - partial[n + 1];
    partial = exp_derivation(DerivationTerm(n, b[n - 1]), partial);
  }
  return Decomposition(std::move(b));
}

PowerSeries apply_decomposition(const Decomposition& d, const PowerSeries& g,
                                ProductForm form) {
  const int order = std::min(g.order(), d.order() + 1);
  PowerSeries result = g.truncated(order);
  // Factors with j >= order cannot reach degree <= order from degree >= 1.
  const int last = std::min(d.order(), order - 1);
  auto apply_factor = [&](int j) {
    Rational b = d.b(j);
    if (form.negated) b = -b;
    result = exp_derivation(DerivationTerm(j, std::move(b)), result);
  };
  // The rightmost factor acts first.
  if (form.reversed) {
    for (int j = last; j >= 1; --j) apply_factor(j);
  } else {
    for (int j = 1; j <= last; ++j) apply_factor(j);
  }
  return result;
}

SumForm sum_form(const PowerSeries& f) {
  require_unit_change_of_variable(f);
  const int n_terms = f.order() - 1;
  std::vector<Rational> a(n_terms);
  for (int n = 1; n <= n_terms; ++n) {
    // A_n enters the coefficient of x^{n+1} linearly with weight 1; the
    // earlier A's fix everything else at that degree.
    std::vector<Rational> field(n + 2);
    for (int j = 1; j < n; ++j) field[j + 1] = a[j - 1];
    const PowerSeries image = exp_vector_field(PowerSeries(std::move(field)),
                                               PowerSeries::variable(n + 1));
    a[n - 1] = f[n + 1] - image[n + 1];
  }
  return SumForm(std::move(a));
}

PowerSeries sum_form_field(const SumForm& s) {
  std::vector<Rational> field(s.order() + 2);
  for (int j = 1; j <= s.order(); ++j) field[j + 1] = s.A(j);
  return PowerSeries(std::move(field));
}

PowerSeries apply_sum_form(const SumForm& s, const PowerSeries& g) {
  return exp_vector_field(sum_form_field(s), g);
}

CbhReport cbh_check(const PowerSeries& f) {
  require_unit_change_of_variable(f);
  const int order = f.order();
  const PowerSeries x = PowerSeries::variable(order);
  CbhReport report{.decomposition = decompose(f),
                   .sum = sum_form(f),
                   .product_image = x,
                   .sum_image = x};
  report.product_image = apply_decomposition(report.decomposition, x);
  report.sum_image = apply_sum_form(report.sum, x);

  const auto product_diff = first_difference(report.product_image, f);
  const auto sum_diff = first_difference(report.sum_image, f);
  report.product_matches = !product_diff;
  report.sum_matches = !sum_diff;

  // Probe 1/(1 - x): both operators must act as g -> g(f(x)).
  const PowerSeries probe =
      reciprocal(PowerSeries::one(order) - PowerSeries::variable(order));
  const PowerSeries via_product =
      apply_decomposition(report.decomposition, probe);
  const PowerSeries via_sum = apply_sum_form(report.sum, probe);
  const PowerSeries via_compose = compose(probe, f);
  const auto op_diff = earliest(first_difference(via_product, via_compose),
                                first_difference(via_sum, via_compose));
  report.operators_agree = !op_diff;
  report.first_mismatch_degree =
      earliest(earliest(product_diff, sum_diff), op_diff);
  return report;
}

PowerSeries scaled_exponential(const Rational& a, int order) {
  if (a.is_zero()) throw std::domain_error("(e^{ax}-1)/a needs a != 0");
  return (Rational(1) / a) * exp_minus_one(order, a);
}

OddVanishingReport odd_vanishing_report(const Rational& a, int order) {
  if (a.is_zero()) throw std::domain_error("odd_vanishing_report needs a != 0");
  const PowerSeries f = scaled_exponential(a, order);
  OddVanishingReport report{.a = a, .decomposition = decompose(f)};
  const Decomposition& d = report.decomposition;
  report.b1_is_half_a = d.order() >= 1 && d.b(1) == a / Rational(2);
  for (int j = 3; j <= d.order(); j += 2) {
    if (!d.b(j).is_zero()) report.nonvanishing_odd.push_back(j);
  }
  for (int j = 4; j <= d.order(); j += 2) {
    report.even_signs.push_back(d.b(j).sign());
  }
  report.signs_alternate = true;
  for (std::size_t i = 0; i < report.even_signs.size(); ++i) {
    if (report.even_signs[i] == 0 ||
        (i > 0 && report.even_signs[i] != -report.even_signs[i - 1])) {
      report.signs_alternate = false;
    }
  }
  return report;
}

nlohmann::json to_json(const Decomposition& d) {
  return {{"order", d.order()}, {"terms", rationals_to_json(d.terms())}};
}

nlohmann::json to_json(const SumForm& s) {
  return {{"order", s.order()}, {"terms", rationals_to_json(s.terms())}};
}

namespace {

std::vector<Rational> terms_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("terms")) {
    throw std::invalid_argument("expected {\"order\": N, \"terms\": [...]}");
  }
  auto terms = rationals_from_json(j.at("terms"));
  if (static_cast<int>(terms.size()) != j.at("order").get<int>()) {
    throw std::invalid_argument("terms length does not match order");
  }
  return terms;
}

}  // namespace

Decomposition decomposition_from_json(const nlohmann::json& j) {
  return Decomposition(terms_from_json(j));
}

SumForm sum_form_from_json(const nlohmann::json& j) {
  return SumForm(terms_from_json(j));
}

}  // namespace fpslab::changevar

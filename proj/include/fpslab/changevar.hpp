#ifndef FPSLAB_CHANGEVAR_HPP
#define FPSLAB_CHANGEVAR_HPP

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "fpslab/power_series.hpp"
#include "fpslab/rational.hpp"

// Formal changes of variable f(x) = x + a_2 x^2 + ... written as operators
// built from the derivations x^{j+1} d/dx, j >= 1.

namespace fpslab::changevar {

/// The operator b * x^{j+1} d/dx.
struct DerivationTerm {
  DerivationTerm(int degree_shift, Rational coefficient);

  int degree_shift;  // j >= 1
  Rational coefficient;
};

/// b_1..b_N with exp(b_N x^{N+1} d/dx) ... exp(b_1 x^2 d/dx) x = f
/// through degree N + 1.
class Decomposition {
 public:
  explicit Decomposition(std::vector<Rational> terms)
      : terms_(std::move(terms)) {}

  int order() const { return static_cast<int>(terms_.size()); }
  /// 1-based: b(1) is the x^2 d/dx coefficient.
  const Rational& b(int j) const { return terms_.at(j - 1); }
  std::span<const Rational> terms() const { return terms_; }

  friend bool operator==(const Decomposition&,
                         const Decomposition&) = default;

 private:
  std::vector<Rational> terms_;
};

/// A_1..A_N with exp(sum_j A_j x^{j+1} d/dx) x = f through degree N + 1.
class SumForm {
 public:
  explicit SumForm(std::vector<Rational> terms) : terms_(std::move(terms)) {}

  int order() const { return static_cast<int>(terms_.size()); }
  const Rational& A(int j) const { return terms_.at(j - 1); }
  std::span<const Rational> terms() const { return terms_; }

  friend bool operator==(const SumForm&, const SumForm&) = default;

 private:
  std::vector<Rational> terms_;
};

/// x^{j+1} g'(x), kept at g's truncation order.
PowerSeries apply_derivation(int j, const PowerSeries& g);

/// sum_i (b x^{j+1} d/dx)^i g / i!.
PowerSeries exp_derivation(const DerivationTerm& term, const PowerSeries& g);

/// h(x) g'(x) for a vector field h with zero constant and linear terms.
PowerSeries apply_vector_field(const PowerSeries& field, const PowerSeries& g);

/// exp(h d/dx) g. Result order is min(g.order, field.order).
PowerSeries exp_vector_field(const PowerSeries& field, const PowerSeries& g);

/// Product decomposition of f; N = f.order() - 1.
/// Throws std::domain_error unless f = x + a_2 x^2 + ...
Decomposition decompose(const PowerSeries& f);

struct ProductForm {
  bool reversed = false;  // apply exp(b_N ...) first instead of exp(b_1 ...)
  bool negated = false;   // use -b_j
};

/// The inverse operator: exp(-b_1 x^2 d/dx) exp(-b_2 x^3 d/dx) ...
inline constexpr ProductForm kInverseProduct{true, true};

/// Applies the (possibly reversed and/or negated) product of exponentials to
/// g. Result order is min(g.order(), d.order() + 1).
PowerSeries apply_decomposition(const Decomposition& d, const PowerSeries& g,
                                ProductForm form = {});

/// Sum-form coefficients A_j of f; same preconditions as decompose.
SumForm sum_form(const PowerSeries& f);

/// The vector field sum_j A_j x^{j+1}, known through degree N + 1.
PowerSeries sum_form_field(const SumForm& s);

/// exp(sum_j A_j x^{j+1} d/dx) g. Result order is min(g.order(), N + 1).
PowerSeries apply_sum_form(const SumForm& s, const PowerSeries& g);

struct CbhReport {
  Decomposition decomposition;
  SumForm sum;
  PowerSeries product_image;  // product form applied to x
  PowerSeries sum_image;      // sum form applied to x
  bool product_matches = false;
  bool sum_matches = false;
  /// Both operators agree with g -> g(f(x)) on a fixed probe series.
  bool operators_agree = false;
  std::optional<int> first_mismatch_degree;

  bool passed() const {
    return product_matches && sum_matches && operators_agree;
  }
};

/// Checks that the product form and the sum form both reproduce f, and that
/// they act identically as substitution operators.
CbhReport cbh_check(const PowerSeries& f);

/// (e^{a x} - 1) / a through the given order.
PowerSeries scaled_exponential(const Rational& a, int order);

struct OddVanishingReport {
  Rational a;
  Decomposition decomposition;
  bool b1_is_half_a = false;
  /// Odd j > 1 whose b_j failed to vanish; empty on success.
  std::vector<int> nonvanishing_odd;
  /// sign(b_{2n}) for n >= 2, in order; reported only.
  std::vector<int> even_signs;
  bool signs_alternate = false;

  bool passed() const { return b1_is_half_a && nonvanishing_odd.empty(); }
};

/// Decomposes (e^{a x} - 1)/a to the given order; throws if a == 0.
OddVanishingReport odd_vanishing_report(const Rational& a, int order);

nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const SumForm& s);
Decomposition decomposition_from_json(const nlohmann::json& j);
SumForm sum_form_from_json(const nlohmann::json& j);

}  // namespace fpslab::changevar

#endif  // FPSLAB_CHANGEVAR_HPP

#include "fpslab/jacobi.hpp"

#include <sstream>
#include <stdexcept>

#include "fpslab/bernoulli.hpp"

namespace fpslab::jacobi {

namespace {

// Integer values go out as JSON numbers when they fit, otherwise as "p/q".
nlohmann::json value_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) {
    return r.numerator().get_si();
  }
  return r.to_string();
}

Rational value_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or \"p/q\" string");
}

}  // namespace

Rational generalized_binomial(long top, long bottom) {
  if (bottom < 0) {
    throw std::invalid_argument("generalized_binomial: negative bottom");
  }
  mpz_class num = 1;
  for (long i = 0; i < bottom; ++i) num *= mpz_class(top - i);
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(bottom));
  return Rational(mpq_class(num, den));
}

Rational residue_formula(int m, int n) {
  if (n <= 0) {
    throw std::invalid_argument("residue_formula needs n > 0 (a pole)");
  }
  return generalized_binomial(m - 1, n - 1);
}

Rational residue_oracle(int m, int n) {
  if (n <= 0) {
    throw std::invalid_argument("residue_oracle needs n > 0 (a pole)");
  }
  return bernoulli::q_series(m, n, 0).at(-1);
}

Rational commutator_coefficient(const CoefficientQuery& q) {
  if (q.k < q.n) return Rational(0);
  return generalized_binomial(q.weight - q.j - 1, q.k - q.n);
}

CoefficientTable coefficient_table(int weight, int n, IntRange j_range,
                                   IntRange k_range) {
  if (!k_range.empty() && k_range.lo < n) {
    throw std::invalid_argument("coefficient_table: k range must start at n or above");
  }
  CoefficientTable t{weight, n, {}};
  t.entries.reserve(static_cast<std::size_t>(j_range.size()) * k_range.size());
  for (int j = j_range.lo; j <= j_range.hi; ++j) {
    for (int k = k_range.lo; k <= k_range.hi; ++k) {
      CoefficientQuery q{weight, j, k, n};
      t.entries.push_back({q, commutator_coefficient(q)});
    }
  }
  return t;
}

std::vector<ResidueRow> residue_table(IntRange m_range, IntRange n_range) {
  std::vector<ResidueRow> rows;
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      rows.push_back({m, n, residue_formula(m, n), residue_oracle(m, n)});
    }
  }
  return rows;
}

std::string to_csv(const CoefficientTable& t) {
  std::ostringstream os;
  os << "w,n,j,k,value\n";
  for (const auto& e : t.entries) {
    os << e.query.weight << ',' << e.query.n << ',' << e.query.j << ','
       << e.query.k << ',' << e.value << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const CoefficientTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : t.entries) {
    rows.push_back({{"j", e.query.j},
                    {"k", e.query.k},
                    {"value", value_to_json(e.value)}});
  }
  return {{"w", t.weight}, {"n", t.n}, {"entries", std::move(rows)}};
}

CoefficientTable coefficient_table_from_json(const nlohmann::json& j) {
  if (!j.contains("w") || !j.contains("n") || !j.contains("entries")) {
    throw std::invalid_argument("coefficient table JSON needs w, n, entries");
  }
  CoefficientTable t{j.at("w").get<int>(), j.at("n").get<int>(), {}};
  for (const auto& row : j.at("entries")) {
    CoefficientQuery q{t.weight, row.at("j").get<int>(), row.at("k").get<int>(),
                       t.n};
    t.entries.push_back({q, value_from_json(row.at("value"))});
  }
  return t;
}

std::string to_csv(const std::vector<ResidueRow>& rows) {
  std::ostringstream os;
  os << "m,n,formula,oracle\n";
  for (const auto& r : rows) {
    os << r.m << ',' << r.n << ',' << r.formula << ',' << r.oracle << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const std::vector<ResidueRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"m", r.m},
                   {"n", r.n},
                   {"formula", value_to_json(r.formula)},
                   {"oracle", value_to_json(r.oracle)}});
  }
  return out;
}

}  // namespace fpslab::jacobi

#ifndef FPSLAB_JACOBI_HPP
#define FPSLAB_JACOBI_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fpslab/rational.hpp"

// Residues of e^{my} / (e^y - 1)^n and the scalar coefficients of the
// Jacobi identity for the modified vertex operators X(u, x) = Y(x^{L(0)}u, x).

namespace fpslab::jacobi {

/// Closed integer interval [lo, hi].
struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
};

/// top (top-1) ... (top-bottom+1) / bottom!, for any integer top.
/// Throws std::invalid_argument if bottom < 0.
Rational generalized_binomial(long top, long bottom);

/// Res_y e^{my} / (e^y - 1)^n by the closed form C(m-1, n-1).
/// Throws std::invalid_argument if n <= 0.
Rational residue_formula(int m, int n);

/// Res_y e^{my} / (e^y - 1)^n read off the direct Laurent expansion.
Rational residue_oracle(int m, int n);

/// Coefficient of x_1^j x_2^{n-j} X(u_k v, x_2) in
/// (x_1 - x_2)^n X(u,x_1)X(v,x_2) - (-x_2 + x_1)^n X(v,x_2)X(u,x_1),
/// where weight = wt u.
struct CoefficientQuery {
  int weight = 0;
  int j = 0;
  int k = 0;
  int n = 0;
};

/// C(w - j - 1, k - n) for k >= n, zero otherwise.
Rational commutator_coefficient(const CoefficientQuery& q);

struct CoefficientEntry {
  CoefficientQuery query;
  Rational value;
};

struct CoefficientTable {
  int weight = 0;
  int n = 0;
  std::vector<CoefficientEntry> entries;  // j-major, then k
};

/// Throws std::invalid_argument if k_range reaches below n.
CoefficientTable coefficient_table(int weight, int n, IntRange j_range,
                                   IntRange k_range);

struct ResidueRow {
  int m = 0;
  int n = 0;
  Rational formula;
  Rational oracle;
  bool agrees() const { return formula == oracle; }
};

std::vector<ResidueRow> residue_table(IntRange m_range, IntRange n_range);

/// Header "w,n,j,k,value".
std::string to_csv(const CoefficientTable& t);
nlohmann::json to_json(const CoefficientTable& t);
CoefficientTable coefficient_table_from_json(const nlohmann::json& j);

/// Header "m,n,formula,oracle".
std::string to_csv(const std::vector<ResidueRow>& rows);
nlohmann::json to_json(const std::vector<ResidueRow>& rows);

}  // namespace fpslab::jacobi

#endif  // FPSLAB_JACOBI_HPP

#include "fpslab/bernoulli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fpslab/power_series.hpp"
#include "fpslab/series_json.hpp"

namespace fpslab::bernoulli {

namespace {

// (e^x - 1) / x = sum_k x^k / (k+1)!, a unit in the power series ring.
PowerSeries exp_minus_one_over_x(int order) {
  const PowerSeries e = exp_minus_one(order + 1);
  return PowerSeries(std::vector<Rational>(e.coefficients().begin() + 1,
                                           e.coefficients().end()));
}

// x e^{tx} / (e^x - 1) through x^order.
PowerSeries bernoulli_generating_series(const Rational& t, int order) {
  const PowerSeries e_tx = PowerSeries::one(order) + exp_minus_one(order, t);
  return e_tx * reciprocal(exp_minus_one_over_x(order));
}

}  // namespace

BernoulliTable bernoulli_numbers(int max_index) {
  if (max_index < 0) throw std::invalid_argument("negative Bernoulli index");
  const PowerSeries g = bernoulli_generating_series(Rational(1), max_index);
  std::vector<Rational> values(max_index + 1);
  for (int j = 0; j <= max_index; ++j) values[j] = Rational::factorial(j) * g[j];
  return BernoulliTable(std::move(values));
}

Rational bernoulli_polynomial_value(int j, const Rational& t) {
  if (j < 0) throw std::invalid_argument("negative Bernoulli index");
  return Rational::factorial(j) * bernoulli_generating_series(t, j)[j];
}

QTable::QTable(int m, int n, std::vector<Rational> coeffs)
    : m_(m), n_(n), series_(-n, std::move(coeffs)) {}

QTable q_series(int m, int n, int top) {
  if (top < -n) {
    throw std::invalid_argument("q_series: top must be >= -n");
  }
  // e^{mx} / (e^x - 1)^n = x^{-n} e^{mx} u^{-n} with u = (e^x - 1)/x.
  const int order = top + n;
  const PowerSeries u = exp_minus_one_over_x(order);
  const PowerSeries u_power =
      n > 0 ? power(reciprocal(u), static_cast<unsigned>(n))
            : power(u, static_cast<unsigned>(-n));
  const PowerSeries e_abs =
      PowerSeries::one(order) + exp_minus_one(order, Rational(m < 0 ? -m : m));
  const PowerSeries e_mx = m < 0 ? reciprocal(e_abs) : e_abs;
  const PowerSeries body = e_mx * u_power;
  return QTable(m, n, std::vector<Rational>(body.coefficients().begin(),
                                            body.coefficients().end()));
}

QRecursion::QRecursion(int max_j) : bernoulli_(bernoulli_numbers(max_j)) {
  bernoulli_over_factorial_.reserve(max_j + 1);
  for (int j = 0; j <= max_j; ++j) {
    bernoulli_over_factorial_.push_back(bernoulli_[j] /
                                        Rational::factorial(j));
  }
}

const Rational& QRecursion::value(int n, int j) {
  if (j < 0 || j > bernoulli_.max_index()) {
    throw std::out_of_range("QRecursion: j outside the prepared range");
  }
  const auto key = std::make_pair(n, j);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Rational q(1);
  if (j > 0) {
    Rational acc = bernoulli_over_factorial_[j] * Rational(n - j - 1);
    for (int i = 1; i <= j - 1; ++i) {
      // q^{(1,n+i-j)}_{-n+j} sits i steps above its lowest exponent and
      // q^{(1,-n-i+j+2)}_{n-2} sits j-i steps above its own.
      acc += Rational(i) * value(n + i - j, i) * value(-n - i + j + 2, j - i);
    }
    q = -acc / Rational(j);
  }
  return memo_.emplace(key, std::move(q)).first->second;
}

QTable q_recursive(int n, int j_max) {
  if (j_max < 0) throw std::invalid_argument("q_recursive: negative j_max");
  QRecursion recursion(j_max);
  std::vector<Rational> coeffs(j_max + 1);
  for (int j = 0; j <= j_max; ++j) coeffs[j] = recursion.value(n, j);
  return QTable(1, n, std::move(coeffs));
}

Rational QSeriesCache::value(int n, int k) {
  if (k < -n) return Rational(0);
  auto it = tables_.find(n);
  if (it == tables_.end() || it->second.top() < k) {
    const int top = std::max(k, -n) + 8;
    it = tables_.insert_or_assign(n, q_series(1, n, top)).first;
  }
  return it->second.at(k);
}

ConvolutionReport convolution_check(QSeriesCache& cache, int m, int n, int j) {
  ConvolutionReport r{.m = m, .n = n, .j = j};
  // q^{(1,k+1)}_{-m-1} vanishes for k < m, q^{(1,j-k+1)}_{-n-1} for k > j-n.
  for (int k = m; k <= -n + j; ++k) {
    r.lhs += cache.value(k + 1, -m - 1) * cache.value(j - k + 1, -n - 1);
  }
  r.rhs = cache.value(j + 1, -m - n - 1);
  return r;
}

ConvolutionReport convolution_check(int m, int n, int j) {
  QSeriesCache cache;
  return convolution_check(cache, m, n, j);
}

ConvolutionReport weighted_convolution_check(QSeriesCache& cache, int m,
                                             int n) {
  ConvolutionReport r{.m = m, .n = n};
  for (int k = m; k <= -n; ++k) {
    r.lhs += Rational(k) * cache.value(k + 1, -m - 1) *
             cache.value(-k + 1, -n - 1);
  }
  r.rhs = m + n == 0 ? Rational(m) : Rational(0);
  return r;
}

ConvolutionReport weighted_convolution_check(int m, int n) {
  QSeriesCache cache;
  return weighted_convolution_check(cache, m, n);
}

ExpansionPolynomial expansion_polynomial(int j) {
  if (j < 0) throw std::invalid_argument("expansion_polynomial: j < 0");
  auto q_at = [j](int n) { return q_series(1, n, -n + j).from_lowest(j); };

  ExpansionPolynomial out;
  out.j = j;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int n = j + 2; n <= 2 * j + 2; ++n) {
    out.sample_points.push_back(n);
    xs.emplace_back(n);
    ys.push_back(q_at(n));
  }
  out.polynomial = interpolate(xs, ys);

  for (int n = -3; n <= 0; ++n) out.validation_points.push_back(n);
  const std::size_t needed = static_cast<std::size_t>(j) + 3;
  for (int n = 2 * j + 3;
       n <= 2 * j + 5 || out.validation_points.size() < needed; ++n) {
    out.validation_points.push_back(n);
  }
  for (int n : out.validation_points) {
    if (out.polynomial.evaluate(Rational(n)) != q_at(n)) {
      out.first_failure = n;
      break;
    }
  }
  return out;
}

bool DivisibilityReport::passed() const {
  return polynomial_validated &&
         std::all_of(roots.begin(), roots.end(),
                     [](const auto& r) { return r.second.is_zero(); });
}

DivisibilityReport divisibility_check(int j) {
  if (j < 1) throw std::invalid_argument("divisibility_check needs j >= 1");
  const ExpansionPolynomial e = expansion_polynomial(j);
  DivisibilityReport r;
  r.j = j;
  r.polynomial_validated = e.validated();
  auto add_root = [&](int n) {
    r.roots.emplace_back(n, e.polynomial.evaluate(Rational(n)));
  };
  add_root(j + 1);
  if (j % 2 == 1 && j > 1) add_root(1);
  if (j % 2 == 1) add_root(2);
  return r;
}

nlohmann::json to_json(const BernoulliTable& t) {
  return {{"max_index", t.max_index()},
          {"values", rationals_to_json(t.values())}};
}

nlohmann::json to_json(const QTable& t) {
  return {{"m", t.m()},
          {"n", t.n()},
          {"lowest", t.lowest()},
          {"coeffs", rationals_to_json(t.coefficients())}};
}

QTable qtable_from_json(const nlohmann::json& j) {
  for (const char* key : {"m", "n", "lowest", "coeffs"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("QTable JSON lacks '") + key +
                                  "'");
    }
  }
  const int n = j.at("n").get<int>();
  if (j.at("lowest").get<int>() != -n) {
    throw std::invalid_argument("QTable JSON: lowest must equal -n");
  }
  return QTable(j.at("m").get<int>(), n, rationals_from_json(j.at("coeffs")));
}

std::string to_csv(std::span<const QTable> tables) {
  std::ostringstream os;
  os << "m,n,k,q\n";
  for (const auto& t : tables) {
    for (int k = t.lowest(); k <= t.top(); ++k) {
      os << t.m() << ',' << t.n() << ',' << k << ',' << t.at(k) << '\n';
    }
  }
  return os.str();
}

std::vector<QTable> qtables_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "m,n,k,q") {
    throw std::invalid_argument("QTable CSV must start with 'm,n,k,q'");
  }
  std::vector<QTable> out;
  int cur_m = 0;
  int cur_n = 0;
  int next_k = 0;
  std::vector<Rational> cur;
  auto flush = [&] {
    if (!cur.empty()) out.emplace_back(cur_m, cur_n, std::move(cur));
    cur.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string m_s, n_s, k_s, q_s;
    if (!std::getline(row, m_s, ',') || !std::getline(row, n_s, ',') ||
        !std::getline(row, k_s, ',') || !std::getline(row, q_s)) {
      throw std::invalid_argument("malformed QTable CSV row: " + line);
    }
    const int m = std::stoi(m_s);
    const int n = std::stoi(n_s);
    const int k = std::stoi(k_s);
    if (cur.empty() || m != cur_m || n != cur_n) {
      flush();
      cur_m = m;
      cur_n = n;
      next_k = -n;
    }
    if (k != next_k) {
      throw std::invalid_argument("QTable CSV rows must be contiguous from -n");
    }
    cur.push_back(Rational::parse(q_s));
    ++next_k;
  }
  flush();
  return out;
}

}  // namespace fpslab::bernoulli

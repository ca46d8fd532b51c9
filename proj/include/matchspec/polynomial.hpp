#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace matchspec {

/// Arbitrary-precision integers and rationals (boost::multiprecision); no
/// fixed width, so Faddeev-LeVerrier intermediates cannot overflow.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw RangeError("matrix must be square");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Univariate polynomial with coefficients in ascending degree; trailing
/// zeros are stripped so the leading coefficient is nonzero (or the
/// coefficient list is empty for the zero polynomial).
template <typename T>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }
  BasicPolynomial(std::initializer_list<T> ascending) : c_(ascending) { trim(); }

  /// Build from coefficients in descending degree order, as polynomials are usually written.
  static BasicPolynomial descending(std::vector<T> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return BasicPolynomial(std::move(coeffs));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  /// Horner evaluation in long double.
  long double eval(long double x) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->template convert_to<long double>();
    return acc;
  }

  T eval_exact(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BasicPolynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<int>(i));
    return BasicPolynomial(std::move(d));
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return BasicPolynomial(std::move(r));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return BasicPolynomial(std::move(r));
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return BasicPolynomial(std::move(r));
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  /// e.g. "x^3 - 3x^2 - 6x + 4"
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const T& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      const bool negative = a < 0;
      const T mag = negative ? T(-a) : a;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      if (mag != 1 || i == 0) out << mag;
      if (i >= 1) out << 'x';
      if (i >= 2) out << '^' << i;
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

/// x − c
template <typename T>
BasicPolynomial<T> linear_factor(const T& c) {
  return BasicPolynomial<T>({T(-c), T(1)});
}

/// Quotient and remainder of a / b over the rationals.
inline std::pair<RationalPolynomial, RationalPolynomial> divide(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
  if (b.is_zero()) throw RangeError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial to_rational(const Polynomial& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coefficients()) c.emplace_back(a);
  return RationalPolynomial(std::move(c));
}

namespace detail {

template <typename T>
T exact_divide(const T& a, long long k) {
  if constexpr (std::is_same_v<T, Integer>) {
    if (a % k != 0) throw Error("Faddeev-LeVerrier: inexact integer division");
  }
  return a / k;
}

}  // namespace detail

/// det(xI − M) by the Faddeev-LeVerrier recurrence in exact arithmetic:
/// M_0 = 0, c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = −tr(A M_k)/k.
/// For integer matrices each division is exact.
template <typename T>
BasicPolynomial<T> characteristic_polynomial(const SquareMatrix<T>& a) {
  const std::size_t n = a.dim();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  SquareMatrix<T> m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    SquareMatrix<T> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const T tr = (a * m).trace();
    c[n - k] = detail::exact_divide(T(-tr), static_cast<long long>(k));
  }
  return BasicPolynomial<T>(std::move(c));
}

inline constexpr double kRootTolerance = 1e-12;

/// Largest real root of p inside [lo, hi]: scan downward from hi for the
/// highest sign change (or exact zero), bisect, then Newton-polish. The scan
/// step is min(1, (hi − lo)/256) so two roots rarely share one step.
template <typename T>
double largest_real_root(const BasicPolynomial<T>& p, double lo, double hi) {
  if (p.is_zero() || p.degree() < 1) throw RangeError("largest_real_root: polynomial has no roots");
  if (!(lo < hi)) throw RangeError("largest_real_root: empty bracket");
  const double step = std::min(1.0, (hi - lo) / 256.0);
  auto f = [&](long double x) { return p.eval(x); };
  long double right = hi;
  long double f_right = f(right);
  if (f_right == 0.0L) return static_cast<double>(right);
  std::optional<std::pair<long double, long double>> bracket;
  for (long double left = hi - step;; left -= step) {
    if (left < lo) left = lo;
    const long double f_left = f(left);
    if (f_left == 0.0L) return static_cast<double>(left);
    if ((f_left < 0) != (f_right < 0)) {
      bracket = {left, right};
      break;
    }
    if (left <= lo) break;
    right = left;
    f_right = f_left;
  }
  if (!bracket) throw RangeError("largest_real_root: no sign change in bracket");
  auto [a, b] = *bracket;
  long double fa = f(a);
  for (int it = 0; it < 200 && b - a > 1e-15L * std::max(1.0L, std::fabs(b)); ++it) {
    const long double mid = 0.5L * (a + b);
    const long double fm = f(mid);
    if (fm == 0.0L) return static_cast<double>(mid);
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  long double x = 0.5L * (a + b);
  const auto dp = p.derivative();
  for (int it = 0; it < 3; ++it) {
    const long double d = dp.eval(x);
    if (d == 0.0L) break;
    const long double nx = x - f(x) / d;
    if (nx < a || nx > b) break;
    x = nx;
  }
  return static_cast<double>(x);
}

}  // namespace matchspec

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace toric {

/**
 * Exact rational scalar.
 *
 * Thin value wrapper around boost::multiprecision::cpp_rational. The wrapper
 * exists so that Eigen sees a plain class type with constrained constructors;
 * feeding the boost expression-template type to Eigen directly trips its
 * greedy converting constructors during overload resolution.
 */
class Rational {
public:
  using rep_type = boost::multiprecision::cpp_rational;
  using int_type = boost::multiprecision::cpp_int;

  Rational() = default;

  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  Rational(T value) : v_(static_cast<long long>(value)) {}

  Rational(long long num, long long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  }

  explicit Rational(rep_type v) : v_(std::move(v)) {}
  explicit Rational(int_type num, int_type den) : v_(std::move(num), std::move(den)) {}

  // Exact conversion; every finite double is a binary fraction.
  explicit Rational(double d) : v_(d) {}

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }

  Rational operator-() const { return Rational(-v_); }
  Rational operator+() const { return *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  int_type numerator() const { return boost::multiprecision::numerator(v_); }
  int_type denominator() const { return boost::multiprecision::denominator(v_); }

  double to_double() const { return v_.convert_to<double>(); }

  /// Renders as "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  /**
   * Parses "p", "p/q" or a plain decimal like "-1.25". Throws
   * std::invalid_argument on anything else (including q = 0).
   */
  static Rational parse(std::string_view text);

  const rep_type& rep() const { return v_; }

private:
  rep_type v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("Rational::parse: bad input '" + std::string(text) + "'"); };

  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  int_type num, den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) fail();
    num = int_type(std::string(p));
    den = int_type(std::string(q));
    if (den.is_zero()) fail();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail();
    if (!ip.empty() && !detail::all_digits(ip)) fail();
    if (!fp.empty() && !detail::all_digits(fp)) fail();
    std::string digits = std::string(ip) + std::string(fp);
    if (digits.empty()) fail();
    num = int_type(digits);
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
  } else {
    if (!detail::all_digits(s)) fail();
    num = int_type(std::string(s));
  }
  if (negative) num = -num;
  return Rational(rep_type(num, den));
}

} // namespace toric

namespace Eigen {

template <>
struct NumTraits<toric::Rational> : GenericNumTraits<toric::Rational> {
  using Real = toric::Rational;
  using NonInteger = toric::Rational;
  using Nested = toric::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return toric::Rational(0); }
  static inline Real dummy_precision() { return toric::Rational(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

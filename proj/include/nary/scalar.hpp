#ifndef NARY_SCALAR_HPP
#define NARY_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nary {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error hierarchy shared by the whole library.
/// ParseError: malformed input text / bad usage.  MathError: a mathematical
/// precondition or expectation failed (non-associative input, d^2 != 0, ...).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct MathError : Error {
  using Error::Error;
};

/// Element of Q(w), w a primitive cube root of unity: value = re + om*w,
/// with w^2 = -1 - w.  Plain rationals are the om == 0 case.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}            // NOLINT: implicit by design
  Scalar(long long v) : re_(v) {}      // NOLINT
  explicit Scalar(Rat re) : re_(std::move(re)) {}
  Scalar(Rat re, Rat om) : re_(std::move(re)), om_(std::move(om)) {}

  static Scalar omega() { return Scalar(Rat(0), Rat(1)); }

  const Rat& rat_part() const { return re_; }
  const Rat& omega_part() const { return om_; }

  bool is_zero() const { return re_ == 0 && om_ == 0; }
  bool is_rational() const { return om_ == 0; }
  bool is_one() const { return re_ == 1 && om_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -om_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    om_ += o.om_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    om_ -= o.om_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w   using w^2 = -1 - w
    Rat bd = om_ * o.om_;
    Rat re = re_ * o.re_ - bd;
    Rat om = re_ * o.om_ + om_ * o.re_ - bd;
    re_ = std::move(re);
    om_ = std::move(om);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.om_ == b.om_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Multiplicative inverse; throws MathError on zero.
  /// 1/(a + b w) = (a - b - b w) / (a^2 - a b + b^2).
  Scalar inverse() const {
    if (is_zero()) throw MathError("division by zero scalar");
    Rat norm = re_ * re_ - re_ * om_ + om_ * om_;
    return Scalar((re_ - om_) / norm, -om_ / norm);
  }

  /// Serialized form: `p`, `p/q`, or `a+b*w` (a, b rational literals).
  std::string str() const;

  /// Parses the serialized form; throws ParseError on malformed text.
  static Scalar parse(std::string_view text);
  static std::optional<Scalar> try_parse(std::string_view text);

 private:
  Rat re_;
  Rat om_;
};

std::string rat_str(const Rat& r);
Rat parse_rat(std::string_view text);

}  // namespace nary

#endif

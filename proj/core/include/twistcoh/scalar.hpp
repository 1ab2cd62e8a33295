#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace twistcoh {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Field { Rational, Quadratic, Approx };

// Which field a computation runs in. Quadratic carries the square-free radicand d,
// Approx carries the zero-test tolerance. Two modes are equal only if both agree.
struct NumericMode {
  Field field = Field::Rational;
  long radicand = 0;
  double tolerance = 0.0;

  static NumericMode rational() { return {}; }
  static NumericMode quadratic(long d);
  static NumericMode approx(double eps = kDefaultTolerance);

  bool exact() const { return field != Field::Approx; }
  std::string describe() const;

  friend bool operator==(const NumericMode&, const NumericMode&) = default;
};

bool is_square_free(long d);

// Immutable element of Q, Q(sqrt d) or the tolerance-guarded reals.
//
// Arithmetic never promotes implicitly: both operands must share a mode, otherwise
// ModeMismatch is thrown. Use promote() to move a value into a wider mode.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den = 1);
  static Scalar quadratic(const mpq_class& a, const mpq_class& b, long d);
  static Scalar approx(double x, double eps = kDefaultTolerance);

  // Embeds a rational into the given mode.
  static Scalar from_rational(const mpq_class& q, const NumericMode& mode);
  static Scalar zero(const NumericMode& mode) { return from_rational(0, mode); }
  static Scalar one(const NumericMode& mode) { return from_rational(1, mode); }

  const NumericMode& mode() const { return mode_; }

  // Rational value, or `a` of a + b*sqrt(d).
  const mpq_class& rational_part() const { return a_; }
  // `b` of a + b*sqrt(d); zero in Rational mode.
  const mpq_class& radical_part() const { return b_; }
  double approx_value() const { return x_; }
  double to_double() const;

  bool is_zero() const;
  // Exact sign in exact modes; values within tolerance count as 0 in Approx mode.
  int sign() const;
  bool is_positive() const { return sign() > 0; }
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long exponent) const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  // Mode-aware equality (is_zero of the difference). Throws on mode mismatch.
  friend bool operator==(const Scalar& x, const Scalar& y);

  // Canonical literal: `p`, `p/q`, `a+b*sqrt(d)` (just `a` when b = 0), or the shortest
  // round-trip decimal.
  std::string to_string() const;

 private:
  NumericMode mode_;
  mpq_class a_;
  mpq_class b_;
  double x_ = 0.0;
};

// Sign of x - y, exact in exact modes.
int compare(const Scalar& x, const Scalar& y);

// Rational -> Quadratic(d), Rational -> Approx, Quadratic -> Approx, or identity.
Scalar promote(const Scalar& x, const NumericMode& target);

// Parses a scalar literal under `mode`. Decimal literals are only accepted in Approx
// mode and radicals must match the Quadratic radicand.
Scalar parse_scalar(std::string_view text, const NumericMode& mode);

// What a literal needs, without committing to a mode: the radicand it mentions, and
// whether it is a decimal.
struct LiteralShape {
  std::optional<long> radicand;
  bool decimal = false;
};
LiteralShape inspect_literal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace twistcoh

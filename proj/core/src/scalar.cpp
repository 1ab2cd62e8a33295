#include "twistcoh/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cctype>
#include <sstream>

#include "twistcoh/errors.hpp"

namespace twistcoh {

bool is_square_free(long d) {
  if (d <= 0) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

NumericMode NumericMode::quadratic(long d) {
  if (d < 2 || !is_square_free(d))
    throw InvalidArgument("radicand must be a square-free integer > 1, got " + std::to_string(d));
  return {Field::Quadratic, d, 0.0};
}

NumericMode NumericMode::approx(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidArgument("tolerance must be a positive real");
  return {Field::Approx, 0, eps};
}

std::string NumericMode::describe() const {
  switch (field) {
    case Field::Rational:
      return "rational";
    case Field::Quadratic:
      return "quadratic(" + std::to_string(radicand) + ")";
    case Field::Approx: {
      std::ostringstream os;
      os << "approx(" << tolerance << ")";
      return os.str();
    }
  }
  return "?";
}

namespace {

void require_same_mode(const Scalar& x, const Scalar& y) {
  if (!(x.mode() == y.mode()))
    throw ModeMismatch("mode mismatch: " + x.mode().describe() + " vs " + y.mode().describe());
}

std::string shortest_decimal(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.a_ = q;
  s.a_.canonicalize();
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::quadratic(const mpq_class& a, const mpq_class& b, long d) {
  Scalar s;
  s.mode_ = NumericMode::quadratic(d);
  s.a_ = a;
  s.b_ = b;
  s.a_.canonicalize();
  s.b_.canonicalize();
  return s;
}

Scalar Scalar::approx(double x, double eps) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite approximate value");
  Scalar s;
  s.mode_ = NumericMode::approx(eps);
  s.x_ = x;
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q, const NumericMode& mode) {
  switch (mode.field) {
    case Field::Rational:
      return rational(q);
    case Field::Quadratic:
      return quadratic(q, 0, mode.radicand);
    case Field::Approx:
      return approx(q.get_d(), mode.tolerance);
  }
  return {};
}

double Scalar::to_double() const {
  switch (mode_.field) {
    case Field::Rational:
      return a_.get_d();
    case Field::Quadratic:
      return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(mode_.radicand));
    case Field::Approx:
      return x_;
  }
  return 0.0;
}

bool Scalar::is_zero() const {
  switch (mode_.field) {
    case Field::Rational:
      return sgn(a_) == 0;
    case Field::Quadratic:
      return sgn(a_) == 0 && sgn(b_) == 0;
    case Field::Approx:
      return std::abs(x_) <= mode_.tolerance;
  }
  return false;
}

int Scalar::sign() const {
  switch (mode_.field) {
    case Field::Rational:
      return sgn(a_);
    case Field::Quadratic: {
      int sa = sgn(a_);
      int sb = sgn(b_);
      if (sb == 0) return sa;
      if (sa == 0 || sa == sb) return sb;
      // Opposite signs: compare a^2 with d b^2; equality is impossible for square-free d > 1.
      mpq_class a2 = a_ * a_;
      mpq_class db2 = b_ * b_ * mode_.radicand;
      return a2 > db2 ? sa : sb;
    }
    case Field::Approx:
      if (std::abs(x_) <= mode_.tolerance) return 0;
      return x_ > 0 ? 1 : -1;
  }
  return 0;
}

bool Scalar::is_one() const { return (*this - one(mode_)).is_zero(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -a_;
  s.b_ = -b_;
  s.x_ = -x_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s = *this;
  switch (mode_.field) {
    case Field::Rational:
      s.a_ = 1 / a_;
      break;
    case Field::Quadratic: {
      mpq_class norm = a_ * a_ - b_ * b_ * mode_.radicand;
      s.a_ = a_ / norm;
      s.b_ = -b_ / norm;
      break;
    }
    case Field::Approx:
      s.x_ = 1.0 / x_;
      break;
  }
  return s;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result = one(mode_);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y);
  Scalar s = x;
  s.a_ = x.a_ + y.a_;
  s.b_ = x.b_ + y.b_;
  s.x_ = x.x_ + y.x_;
  return s;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y);
  Scalar s = x;
  s.a_ = x.a_ - y.a_;
  s.b_ = x.b_ - y.b_;
  s.x_ = x.x_ - y.x_;
  return s;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y);
  Scalar s = x;
  switch (x.mode_.field) {
    case Field::Rational:
      s.a_ = x.a_ * y.a_;
      break;
    case Field::Quadratic:
      s.a_ = x.a_ * y.a_ + x.b_ * y.b_ * x.mode_.radicand;
      s.b_ = x.a_ * y.b_ + x.b_ * y.a_;
      break;
    case Field::Approx:
      s.x_ = x.x_ * y.x_;
      break;
  }
  return s;
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  require_same_mode(x, y);
  return x * y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }

int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

std::string Scalar::to_string() const {
  switch (mode_.field) {
    case Field::Rational:
      return a_.get_str();
    case Field::Quadratic: {
      if (sgn(b_) == 0) return a_.get_str();
      std::string out = a_.get_str();
      out += sgn(b_) < 0 ? "-" : "+";
      mpq_class mag = ::abs(b_);
      out += mag.get_str();
      out += "*sqrt(" + std::to_string(mode_.radicand) + ")";
      return out;
    }
    case Field::Approx:
      return shortest_decimal(x_);
  }
  return {};
}

Scalar promote(const Scalar& x, const NumericMode& target) {
  const NumericMode& from = x.mode();
  if (from == target) return x;
  if (from.field == Field::Rational) {
    if (target.field == Field::Quadratic) return Scalar::quadratic(x.rational_part(), 0, target.radicand);
    if (target.field == Field::Approx) return Scalar::approx(x.to_double(), target.tolerance);
  }
  if (from.field == Field::Quadratic && target.field == Field::Approx)
    return Scalar::approx(x.to_double(), target.tolerance);
  throw ModeMismatch("cannot promote " + from.describe() + " to " + target.describe());
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Literal parsing

namespace {

struct Term {
  bool radical = false;
  long radicand = 0;
  bool decimal = false;
  mpq_class exact;
  double approx = 0.0;
};

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : s_(text) {}

  std::vector<Term> terms() {
    std::vector<Term> out;
    if (s_.empty()) fail("empty scalar literal");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      if (sign < 0) {
        t.exact = -t.exact;
        t.approx = -t.approx;
      }
      out.push_back(std::move(t));
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid scalar literal '" + std::string(s_) + "': " + why, 0, 0);
  }

  bool accept(std::string_view token) {
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  long radicand() {
    if (!accept("sqrt(")) fail("expected sqrt(");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected radicand digits");
    long d = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, d);
    if (ec != std::errc()) fail("radicand out of range");
    if (!accept(")")) fail("expected ')'");
    if (d < 2 || !is_square_free(d)) fail("radicand must be square-free and > 1");
    return d;
  }

  Term term() {
    Term t;
    if (peek() == 's') {
      t.radical = true;
      t.radicand = radicand();
      t.exact = 1;
      t.approx = 1.0;
      return t;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (peek() == '.' || peek() == 'e' || peek() == 'E') {
      t.decimal = true;
      if (accept(".")) {
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      if (peek() == 'e' || peek() == 'E') {
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        std::size_t exp_start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (exp_start == pos_) fail("malformed exponent");
      }
      auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, t.approx);
      if (ec != std::errc() || p != s_.data() + pos_) fail("malformed decimal");
    } else {
      mpz_class num(std::string(s_.substr(start, pos_ - start)));
      mpz_class den = 1;
      if (accept("/")) {
        std::size_t dstart = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        den = mpz_class(std::string(s_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
      }
      t.exact = mpq_class(num, den);
      t.exact.canonicalize();
      t.approx = t.exact.get_d();
    }
    if (accept("*")) {
      t.radical = true;
      t.radicand = radicand();
    }
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LiteralShape inspect_literal(std::string_view text) {
  LiteralShape shape;
  for (const Term& t : LiteralParser(trim(text)).terms()) {
    if (t.decimal) shape.decimal = true;
    if (t.radical) {
      if (shape.radicand && *shape.radicand != t.radicand)
        throw ModeMismatch("mixed radicals in literal '" + std::string(text) + "'");
      shape.radicand = t.radicand;
    }
  }
  return shape;
}

Scalar parse_scalar(std::string_view text, const NumericMode& mode) {
  text = trim(text);
  std::vector<Term> terms = LiteralParser(text).terms();

  if (mode.field == Field::Approx) {
    double sum = 0.0;
    for (const Term& t : terms)
      sum += t.radical ? t.approx * std::sqrt(static_cast<double>(t.radicand)) : t.approx;
    return Scalar::approx(sum, mode.tolerance);
  }

  mpq_class a = 0;
  mpq_class b = 0;
  for (const Term& t : terms) {
    if (t.decimal)
      throw ModeMismatch("decimal literal '" + std::string(text) + "' requires approx mode");
    if (!t.radical) {
      a += t.exact;
      continue;
    }
    if (mode.field != Field::Quadratic || t.radicand != mode.radicand)
      throw ModeMismatch("literal '" + std::string(text) + "' does not fit " + mode.describe() + " mode");
    b += t.exact;
  }
  if (mode.field == Field::Rational) return Scalar::rational(a);
  return Scalar::quadratic(a, b, mode.radicand);
}

}  // namespace twistcoh

#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace gkraw {

/// Thrown when an exact-mode value and a float-mode value meet in one expression.
class mode_mismatch_error : public std::logic_error {
 public:
  explicit mode_mismatch_error(const std::string& what) : std::logic_error(what) {}
};

/// Precondition violations: poles, out-of-range indices, invalid parameters.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Accepts "p/q", "p", and decimal/scientific forms ("0.8", "-1e-100"); all parsed exactly.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  Rational abs() const;
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  /// Integral part as long; requires an integer value that fits.
  long to_long() const;

  std::string str() const;
  std::string decimal(int digits) const;
  double to_double() const { return mpq_get_d(q_); }

  const __mpq_struct* raw() const { return q_; }
  __mpq_struct* raw() { return q_; }

 private:
  mpq_t q_;
};

/// Arbitrary-precision binary float, round-to-nearest at a fixed number of bits.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) {
    mpfr_init2(f_, prec);
    mpfr_set_zero(f_, 1);
  }
  BigFloat(long n, mpfr_prec_t prec) {
    mpfr_init2(f_, prec);
    mpfr_set_si(f_, n, MPFR_RNDN);
  }
  static BigFloat of(const Rational& q, mpfr_prec_t prec);
  static BigFloat parse(std::string_view text, mpfr_prec_t prec);
  BigFloat(const BigFloat& o) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_swap(f_, o.f_);
  }
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(f_, o.f_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(f_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(f_); }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.f_, b.f_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.f_, b.f_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.f_, b.f_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.f_, b.f_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.f_, b.f_) != 0; }

  bool is_zero() const { return mpfr_zero_p(f_) != 0; }
  bool is_finite() const { return mpfr_number_p(f_) != 0; }
  int sign() const { return mpfr_sgn(f_); }
  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat exp() const;

  /// Scientific decimal form; digits <= 0 means "all digits the precision carries".
  std::string str(int digits = 0) const;
  double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }

  const __mpfr_struct* raw() const { return f_; }
  __mpfr_struct* raw() { return f_; }

 private:
  mpfr_t f_;
};

/// A value of the single arithmetic contract: exact rational or P-bit float,
/// tagged by mode. Arithmetic between the two modes throws; integers coerce
/// into either mode.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(int n) : v_(Rational(static_cast<long>(n))) {}
  Scalar(Rational q) : v_(std::move(q)) {}
  Scalar(BigFloat f) : v_(std::move(f)) {}

  static Scalar exact(long num, long den = 1) { return Scalar(Rational(num, den)); }
  static Scalar parse_exact(std::string_view text) { return Scalar(Rational::parse(text)); }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  /// Bits of the float payload; 0 in exact mode.
  mpfr_prec_t precision() const { return is_exact() ? 0 : flt().precision(); }

  const Rational& rat() const;
  const BigFloat& flt() const;

  /// The integer n carried into this value's mode (and precision).
  Scalar make(long n) const;
  Scalar zero() const { return make(0); }
  Scalar one() const { return make(1); }
  Scalar to_float(mpfr_prec_t prec) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  bool is_zero() const;
  int sign() const;
  Scalar abs() const;
  /// Float mode only (exact square roots are not provided).
  Scalar sqrt() const;

  std::string str() const;
  /// str() plus "@P" precision annotation in float mode.
  std::string annotated() const;
  /// Decimal rendering at a fixed digit count, either mode.
  std::string decimal(int digits) const;
  double to_double() const;

 private:
  std::variant<Rational, BigFloat> v_;
};

// Integer coercions: an integer adopts the other operand's mode.
inline Scalar operator+(const Scalar& a, long b) { return a + a.make(b); }
inline Scalar operator+(long a, const Scalar& b) { return b.make(a) + b; }
inline Scalar operator-(const Scalar& a, long b) { return a - a.make(b); }
inline Scalar operator-(long a, const Scalar& b) { return b.make(a) - b; }
inline Scalar operator*(const Scalar& a, long b) { return a * a.make(b); }
inline Scalar operator*(long a, const Scalar& b) { return b.make(a) * b; }
inline Scalar operator/(const Scalar& a, long b) { return a / a.make(b); }
inline Scalar operator/(long a, const Scalar& b) { return b.make(a) / b; }
inline bool operator==(const Scalar& a, long b) { return a == a.make(b); }
inline bool operator==(long a, const Scalar& b) { return b.make(a) == b; }
inline bool operator<(const Scalar& a, long b) { return a < a.make(b); }
inline bool operator<(long a, const Scalar& b) { return b.make(a) < b; }
inline bool operator>(const Scalar& a, long b) { return a > a.make(b); }
inline bool operator>(long a, const Scalar& b) { return b.make(a) > b; }
inline bool operator<=(const Scalar& a, long b) { return a <= a.make(b); }
inline bool operator>=(const Scalar& a, long b) { return a >= a.make(b); }

Scalar pow_ui(const Scalar& base, unsigned long e);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gkraw

#include "gkraw/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <ostream>

namespace gkraw {

namespace {

void gmp_free_string(char* s) {
  void (*freefunc)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::strlen(s) + 1);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational Rational::parse(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw domain_error("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw domain_error("sign without digits in rational literal");

  auto slash = text.find('/');
  Rational out;
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw domain_error("malformed fraction literal: " + std::string(text));
    mpz_set_str(mpq_numref(out.q_), std::string(num).c_str(), 10);
    mpz_set_str(mpq_denref(out.q_), std::string(den).c_str(), 10);
    if (mpz_sgn(mpq_denref(out.q_)) == 0) throw domain_error("zero denominator: " + std::string(text));
    mpq_canonicalize(out.q_);
  } else {
    // decimal or scientific notation, parsed exactly
    std::string_view mant = text;
    long exp10 = 0;
    auto epos = text.find_first_of("eE");
    if (epos != std::string_view::npos) {
      mant = text.substr(0, epos);
      std::string_view es = text.substr(epos + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      if (!all_digits(es)) throw domain_error("malformed exponent: " + std::string(text));
      exp10 = std::stol(std::string(es));
      if (eneg) exp10 = -exp10;
    }
    std::string digits;
    long frac_len = 0;
    auto dot = mant.find('.');
    if (dot != std::string_view::npos) {
      std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
      if (ip.empty() && fp.empty()) throw domain_error("malformed decimal: " + std::string(text));
      if (!ip.empty() && !all_digits(ip)) throw domain_error("malformed decimal: " + std::string(text));
      if (!fp.empty() && !all_digits(fp)) throw domain_error("malformed decimal: " + std::string(text));
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mant)) throw domain_error("malformed number: " + std::string(text));
      digits = std::string(mant);
    }
    if (digits.empty()) throw domain_error("no digits in literal: " + std::string(text));
    mpz_set_str(mpq_numref(out.q_), digits.c_str(), 10);
    mpz_set_ui(mpq_denref(out.q_), 1);
    long shift = exp10 - frac_len;
    mpz_t p10;
    mpz_init(p10);
    mpz_ui_pow_ui(p10, 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    if (shift >= 0)
      mpz_mul(mpq_numref(out.q_), mpq_numref(out.q_), p10);
    else
      mpz_set(mpq_denref(out.q_), p10);
    mpz_clear(p10);
    mpq_canonicalize(out.q_);
  }
  if (negative) mpq_neg(out.q_, out.q_);
  return out;
}

Rational Rational::operator-() const {
  Rational r(*this);
  mpq_neg(r.q_, r.q_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("rational division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::abs() const {
  Rational r(*this);
  mpq_abs(r.q_, r.q_);
  return r;
}

long Rational::to_long() const {
  if (!is_integer()) throw domain_error("rational is not an integer: " + str());
  if (!mpz_fits_slong_p(mpq_numref(q_))) throw domain_error("integer does not fit in long: " + str());
  return mpz_get_si(mpq_numref(q_));
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  gmp_free_string(s);
  return out;
}

std::string Rational::decimal(int digits) const {
  if (digits < 1) digits = 1;
  auto prec = static_cast<mpfr_prec_t>(digits * 4 + 64);
  return BigFloat::of(*this, prec).str(digits);
}

BigFloat BigFloat::of(const Rational& q, mpfr_prec_t prec) {
  BigFloat f(prec);
  mpfr_set_q(f.f_, q.raw(), MPFR_RNDN);
  return f;
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec) {
  BigFloat f(prec);
  std::string s(text);
  if (auto at = s.find('@'); at != std::string::npos) s.resize(at);
  if (mpfr_set_str(f.f_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw domain_error("malformed float literal: " + std::string(text));
  return f;
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.f_, r.f_, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_prec(a, b));
  mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_prec(a, b));
  mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_prec(a, b));
  mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw domain_error("float division by zero");
  BigFloat r(join_prec(a, b));
  mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(*this);
  mpfr_abs(r.f_, r.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw domain_error("sqrt of negative float");
  BigFloat r(precision());
  mpfr_sqrt(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.f_, f_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  if (mpfr_nan_p(f_)) return "nan";
  if (mpfr_inf_p(f_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  if (digits <= 0) digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 1;
  if (digits < 2) digits = 2;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), f_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  std::string digs = neg ? m.substr(1) : m;
  auto last = digs.find_last_not_of('0');
  if (last == std::string::npos) last = 0;
  digs = digs.substr(0, last + 1);
  std::string out = neg ? "-" : "";
  out += digs.substr(0, 1);
  if (digs.size() > 1) out += "." + digs.substr(1);
  out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

const Rational& Scalar::rat() const {
  if (!is_exact()) throw mode_mismatch_error("float-mode scalar used where exact required");
  return std::get<Rational>(v_);
}

const BigFloat& Scalar::flt() const {
  if (is_exact()) throw mode_mismatch_error("exact-mode scalar used where float required");
  return std::get<BigFloat>(v_);
}

Scalar Scalar::make(long n) const {
  if (is_exact()) return Scalar(Rational(n));
  return Scalar(BigFloat(n, flt().precision()));
}

Scalar Scalar::to_float(mpfr_prec_t prec) const {
  if (is_exact()) return Scalar(BigFloat::of(rat(), prec));
  BigFloat r(prec);
  mpfr_set(r.raw(), flt().raw(), MPFR_RNDN);
  return Scalar(std::move(r));
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-rat());
  return Scalar(-flt());
}

namespace {
[[noreturn]] void mixed() { throw mode_mismatch_error("exact and float scalars mixed in one expression"); }
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return Scalar(a.rat() + b.rat());
  return Scalar(a.flt() + b.flt());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return Scalar(a.rat() - b.rat());
  return Scalar(a.flt() - b.flt());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return Scalar(a.rat() * b.rat());
  return Scalar(a.flt() * b.flt());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return Scalar(a.rat() / b.rat());
  return Scalar(a.flt() / b.flt());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return a.rat() == b.rat();
  return a.flt() == b.flt();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return a.rat() < b.rat();
  return a.flt() < b.flt();
}

bool operator<=(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed();
  if (a.is_exact()) return a.rat() <= b.rat();
  return a.flt() <= b.flt();
}

bool Scalar::is_zero() const { return is_exact() ? rat().is_zero() : flt().is_zero(); }

int Scalar::sign() const { return is_exact() ? rat().sign() : flt().sign(); }

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(rat().abs());
  return Scalar(flt().abs());
}

Scalar Scalar::sqrt() const {
  if (is_exact()) throw mode_mismatch_error("sqrt is float-mode only; convert with to_float first");
  return Scalar(flt().sqrt());
}

std::string Scalar::str() const { return is_exact() ? rat().str() : flt().str(); }

std::string Scalar::annotated() const {
  if (is_exact()) return str();
  return str() + "@" + std::to_string(static_cast<long>(flt().precision()));
}

std::string Scalar::decimal(int digits) const {
  return is_exact() ? rat().decimal(digits) : flt().str(digits);
}

double Scalar::to_double() const { return is_exact() ? rat().to_double() : flt().to_double(); }

Scalar pow_ui(const Scalar& base, unsigned long e) {
  Scalar result = base.one();
  Scalar b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace gkraw

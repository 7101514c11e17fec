#include "g2eds/scalar.hpp"

#include <cmath>
#include <sstream>

namespace g2eds {

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar::fraction: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

const mpq_class& Scalar::rat() const {
  if (!is_exact()) throw ModeError("Scalar: rational value requested from float mode");
  return std::get<mpq_class>(v_);
}

const mpf_class& Scalar::flt() const {
  if (is_exact()) throw ModeError("Scalar: float value requested from exact mode");
  return std::get<mpf_class>(v_);
}

Scalar Scalar::to_floating(int precision_bits) const {
  if (is_exact()) return Scalar(mpf_class(rat(), precision_bits));
  return Scalar(mpf_class(flt(), precision_bits));
}

double Scalar::to_double() const {
  return is_exact() ? rat().get_d() : flt().get_d();
}

bool Scalar::is_zero() const {
  return is_exact() ? sgn(rat()) == 0 : sgn(flt()) == 0;
}

int Scalar::sign() const { return is_exact() ? sgn(rat()) : sgn(flt()); }

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(mpq_class(::abs(rat())));
  return Scalar(mpf_class(::abs(flt())));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  if (is_exact()) return Scalar(mpq_class(1 / rat()));
  mpf_class r(1, flt().get_prec());
  r /= flt();
  return Scalar(std::move(r));
}

void Scalar::check_same_mode(const Scalar& o) const {
  if (mode() != o.mode())
    throw ModeError("Scalar: mixed exact/float arithmetic");
  if (!is_exact() && flt().get_prec() != o.flt().get_prec())
    throw ModeError("Scalar: mixed float precisions");
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-rat()));
  return Scalar(mpf_class(-flt()));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_mode(o);
  if (is_exact())
    std::get<mpq_class>(v_) += o.rat();
  else
    std::get<mpf_class>(v_) += o.flt();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_mode(o);
  if (is_exact())
    std::get<mpq_class>(v_) -= o.rat();
  else
    std::get<mpf_class>(v_) -= o.flt();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_mode(o);
  if (is_exact())
    std::get<mpq_class>(v_) *= o.rat();
  else
    std::get<mpf_class>(v_) *= o.flt();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_mode(o);
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_exact())
    std::get<mpq_class>(v_) /= o.rat();
  else
    std::get<mpf_class>(v_) /= o.flt();
  return *this;
}

Scalar& Scalar::operator*=(long k) {
  if (is_exact())
    std::get<mpq_class>(v_) *= k;
  else
    std::get<mpf_class>(v_) *= k;
  return *this;
}

Scalar& Scalar::operator/=(long k) {
  if (k == 0) throw std::domain_error("Scalar: division by zero");
  if (is_exact())
    std::get<mpq_class>(v_) /= k;
  else
    std::get<mpf_class>(v_) /= k;
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode() != o.mode()) return false;
  return is_exact() ? rat() == o.rat() : flt() == o.flt();
}

bool Scalar::operator<(const Scalar& o) const {
  check_same_mode(o);
  return is_exact() ? rat() < o.rat() : flt() < o.flt();
}

namespace {

// exact nth root of an integer, or failure
bool exact_mpz_root(const mpz_class& x, unsigned n, mpz_class* out) {
  if (sgn(x) == 0) {
    *out = 0;
    return true;
  }
  if (sgn(x) < 0) {
    if (n % 2 == 0) return false;
    mpz_class r;
    bool ok = exact_mpz_root(mpz_class(-x), n, &r);
    *out = -r;
    return ok;
  }
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
  *out = r;
  return exact != 0;
}

}  // namespace

Scalar Scalar::nth_root(unsigned n) const {
  if (n == 0) throw std::domain_error("Scalar: 0th root");
  if (n == 1) return *this;
  if (is_exact()) {
    const mpq_class& q = rat();
    if (sgn(q) < 0 && n % 2 == 0)
      throw std::domain_error("Scalar: even root of a negative value");
    mpz_class rn, rd;
    if (!exact_mpz_root(q.get_num(), n, &rn) || !exact_mpz_root(q.get_den(), n, &rd))
      throw NotRationalRoot("Scalar: " + q.get_str() + " has no exact " +
                            std::to_string(n) + "th root; use float mode");
    return Scalar(mpq_class(rn, rd));
  }

  const mpf_class& a = flt();
  int s = sgn(a);
  if (s == 0) return Scalar(mpf_class(0, a.get_prec()));
  if (s < 0 && n % 2 == 0)
    throw std::domain_error("Scalar: even root of a negative value");
  const mp_bitcnt_t prec = a.get_prec();
  mpf_class mag(s < 0 ? mpf_class(-a) : a, prec + 64);

  // Newton from a double seed; each step roughly doubles the correct bits.
  mpf_class x(std::pow(mag.get_d(), 1.0 / n), prec + 64);
  int steps = 2;
  for (mp_bitcnt_t got = 40; got < prec + 64; got *= 2) ++steps;
  for (int i = 0; i < steps; ++i) {
    mpf_class xn1(x, prec + 64);  // x^(n-1)
    for (unsigned k = 2; k < n; ++k) xn1 *= x;
    x -= (x * xn1 - mag) / (n * xn1);
  }
  mpf_class r(s < 0 ? mpf_class(-x) : x, prec);
  return Scalar(std::move(r));
}

std::string Scalar::str() const {
  if (is_exact()) return rat().get_str();
  const mpf_class& f = flt();
  // enough decimal digits to reproduce the binary value
  const int digits = static_cast<int>(f.get_prec() * 0.30103) + 3;
  mp_exp_t e;
  std::string mant = f.get_str(e, 10, digits);
  if (mant.empty()) return "0";
  std::string sign = mant[0] == '-' ? "-" : "";
  if (!sign.empty()) mant = mant.substr(1);
  std::ostringstream os;
  os << sign << "0." << mant << "e" << e;
  return os.str();
}

Scalar Scalar::parse_exact(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Scalar: cannot parse rational '" + s + "'");
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse_floating(const std::string& s, int precision_bits) {
  mpf_class f(0, precision_bits);
  if (f.set_str(s, 10) != 0)
    throw std::invalid_argument("Scalar: cannot parse float '" + s + "'");
  return Scalar(std::move(f));
}

}  // namespace g2eds

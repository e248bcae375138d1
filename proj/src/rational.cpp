#include "superint/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superint {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

static bool all_digits(const std::string& s, size_t from) {
  if (from >= s.size()) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational Rational::parse(const std::string& text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational");
  std::string s = text.substr(b, e - b + 1);
  size_t slash = s.find('/');
  std::string n = s.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  size_t start = (!n.empty() && (n[0] == '-' || n[0] == '+')) ? 1 : 0;
  if (!all_digits(n, start) || !all_digits(d, 0))
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(mpq_class(zn, zd));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::range_error("Rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(int e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_.is_one()) imag = "i";
  else if (im_ == Rational(-1)) imag = "-i";
  else if (im_.is_integer()) imag = im_.str() + "i";
  else {
    std::string n = im_.num().get_str();
    if (n == "1") n.clear();
    else if (n == "-1") n = "-";
    imag = n + "i/" + im_.den().get_str();
  }
  if (re_.is_zero()) return imag;
  if (imag[0] == '-') return re_.str() + imag;
  return re_.str() + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.str(); }

}  // namespace superint

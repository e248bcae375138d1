#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "superint/rational.hpp"

namespace superint {

enum class Var : int { H = 0, L2 = 1, Alpha = 2, Beta = 3, Gamma = 4 };
inline constexpr int kNumVars = 5;
using Exponents = std::array<int, kNumVars>;

const char* var_name(Var v);

// Monomials packed in one word: total degree in bits 40..63, then one byte per
// variable with H highest.  Integer comparison of keys is graded lex order with
// H > L2 > alpha > beta > gamma, and monomial product is key addition.
namespace mono {
inline constexpr uint64_t kDegUnit = uint64_t{1} << 40;
constexpr int shift(Var v) { return 8 * (4 - static_cast<int>(v)); }
constexpr uint64_t unit(Var v) { return kDegUnit | (uint64_t{1} << shift(v)); }
inline int exponent(uint64_t key, Var v) { return static_cast<int>((key >> shift(v)) & 0xff); }
inline int degree(uint64_t key) { return static_cast<int>(key >> 40); }
uint64_t pack(const Exponents& e);
Exponents unpack(uint64_t key);
uint64_t mul(uint64_t a, uint64_t b);  // throws on exponent overflow
bool divides(uint64_t d, uint64_t m);
uint64_t gcd(uint64_t a, uint64_t b);
}  // namespace mono

class ParamPoly {
 public:
  struct Term {
    uint64_t key;
    GaussRational c;
  };

  ParamPoly() = default;
  ParamPoly(GaussRational c);
  ParamPoly(const Rational& c) : ParamPoly(GaussRational(c)) {}
  template <std::integral I>
  ParamPoly(I n) : ParamPoly(GaussRational(n)) {}

  static ParamPoly var(Var v);
  static ParamPoly monomial(const Exponents& e, GaussRational c = 1);
  static ParamPoly from_key(uint64_t key, GaussRational c);
  // Terms in any order, duplicates summed.
  static ParamPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].key == 0); }
  bool is_one() const { return t_.size() == 1 && t_[0].key == 0 && t_[0].c.is_one(); }
  GaussRational constant_value() const;  // value of a constant polynomial
  GaussRational constant_term() const;
  const Term& lead() const { return t_.front(); }

  int total_degree() const { return t_.empty() ? -1 : mono::degree(t_.front().key); }
  int degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  unsigned var_mask() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const GaussRational& c);

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const GaussRational& c) { return a *= c; }
  friend ParamPoly operator*(const GaussRational& c, ParamPoly a) { return a *= c; }
  template <std::integral I>
  friend ParamPoly operator*(ParamPoly a, I n) { return a *= GaussRational(n); }
  template <std::integral I>
  friend ParamPoly operator*(I n, ParamPoly a) { return a *= GaussRational(n); }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  ParamPoly pow(unsigned e) const;
  ParamPoly mul_term(uint64_t key, const GaussRational& c) const;
  ParamPoly swap_vars(Var x, Var y) const;
  // Image under the Q(i)-automorphism i -> -i.
  ParamPoly conj() const;
  ParamPoly derivative(Var v) const;

  std::string str() const;
  size_t hash() const;

 private:
  std::vector<Term> t_;  // strictly descending keys, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace superint

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace chromagraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (k)_t = k (k-1) ... (k-t+1); zero when t > k.
Integer falling_factorial(std::int64_t k, std::size_t t);
Integer factorial(std::size_t t);
Integer binomial(std::size_t n, std::size_t r);

/// Polynomial in k written in the falling-factorial basis, sum_t N_t (k)_t.
///
/// Coefficients are exact rationals. Chromatic polynomials always have
/// integer N_t, but induced-copy counts of patterns on h >= 2 vertices need
/// not (edges of K_k are (k)_2 / 2); values at integer k are integral and
/// eval() enforces that.
class FFPoly {
 public:
  FFPoly() = default;

  /// The basis element (k)_t.
  static FFPoly falling(std::size_t t);
  static FFPoly constant(const Rational& c);

  const std::map<std::size_t, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t t) const;
  void set_coeff(std::size_t t, Rational value);

  /// Highest t with N_t != 0; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool has_integer_coeffs() const;

  /// Exact value at k >= 0. Throws Internal when the value is not an
  /// integer, which would mean the polynomial is not a counting function.
  Integer eval(std::int64_t k) const;
  Rational eval_rational(std::int64_t k) const;

  /// Coefficients of 1, k, k^2, ... via signed Stirling numbers of the first
  /// kind.
  std::vector<Rational> to_monomial() const;

  FFPoly& operator+=(const FFPoly& other);
  FFPoly& operator-=(const FFPoly& other);
  FFPoly& operator*=(const Rational& scalar);
  /// Product via (k)_a (k)_b = sum_j C(a,j) C(b,j) j! (k)_{a+b-j}.
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(FFPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const FFPoly& a, const FFPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// {"basis":"falling","coeffs":{"t":"N_t",...}} with decimal strings
  /// ("p/q" for non-integral coefficients).
  nlohmann::json to_json() const;
  static FFPoly from_json(const nlohmann::json& j);

 private:
  std::map<std::size_t, Rational> coeffs_;
};

/// Signed Stirling numbers of the first kind s(t, j).
Integer stirling_first_signed(std::size_t t, std::size_t j);

/// Evaluates monomial coefficients at k.
Rational eval_monomial(const std::vector<Rational>& coeffs, std::int64_t k);

std::string to_decimal(const Integer& v);
std::string to_decimal(const Rational& v);
Rational parse_rational(const std::string& text);

}  // namespace chromagraph

#include "chromagraph/ffpoly.hpp"

#include <algorithm>
#include <string>

#include "chromagraph/error.hpp"

namespace chromagraph {

Integer falling_factorial(std::int64_t k, std::size_t t) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "falling factorial needs k >= 0");
  if (t > static_cast<std::uint64_t>(k)) return 0;
  Integer out = 1;
  for (std::size_t i = 0; i < t; ++i) out *= (k - static_cast<std::int64_t>(i));
  return out;
}

Integer factorial(std::size_t t) {
  Integer out = 1;
  for (std::size_t i = 2; i <= t; ++i) out *= i;
  return out;
}

Integer binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  Integer out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    out *= (n - r + i);
    out /= i;
  }
  return out;
}

Integer stirling_first_signed(std::size_t t, std::size_t j) {
  // s(t+1, j) = s(t, j-1) - t s(t, j)
  std::vector<Integer> row{1};
  for (std::size_t m = 0; m < t; ++m) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i + 1] += row[i];
      next[i] -= row[i] * m;
    }
    row = std::move(next);
  }
  return j < row.size() ? row[j] : Integer{0};
}

FFPoly FFPoly::falling(std::size_t t) {
  FFPoly p;
  p.coeffs_[t] = 1;
  return p;
}

FFPoly FFPoly::constant(const Rational& c) {
  FFPoly p;
  p.set_coeff(0, c);
  return p;
}

Rational FFPoly::coeff(std::size_t t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rational{0} : it->second;
}

void FFPoly::set_coeff(std::size_t t, Rational value) {
  if (value == 0) coeffs_.erase(t);
  else coeffs_[t] = std::move(value);
}

int FFPoly::degree() const {
  return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
}

bool FFPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return denominator(kv.second) == 1; });
}

Rational FFPoly::eval_rational(std::int64_t k) const {
  if (k < 0) fail(ErrorKind::InvalidArgument, "evaluation needs k >= 0");
  Rational sum = 0;
  for (const auto& [t, c] : coeffs_) {
    if (t > static_cast<std::uint64_t>(k)) break;
    sum += c * Rational(falling_factorial(k, t));
  }
  return sum;
}

Integer FFPoly::eval(std::int64_t k) const {
  Rational v = eval_rational(k);
  if (denominator(v) != 1) {
    fail(ErrorKind::Internal, "polynomial takes non-integral value " + to_decimal(v) +
                                  " at k=" + std::to_string(k));
  }
  return numerator(v);
}

std::vector<Rational> FFPoly::to_monomial() const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree(), 0)) + 1, 0);
  for (const auto& [t, c] : coeffs_) {
    for (std::size_t j = 0; j <= t; ++j) out[j] += c * Rational(stirling_first_signed(t, j));
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

FFPoly& FFPoly::operator+=(const FFPoly& other) {
  for (const auto& [t, c] : other.coeffs_) set_coeff(t, coeff(t) + c);
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& other) {
  for (const auto& [t, c] : other.coeffs_) set_coeff(t, coeff(t) - c);
  return *this;
}

FFPoly& FFPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [t, c] : coeffs_) c *= scalar;
  return *this;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  FFPoly out;
  for (const auto& [s, cs] : a.coeffs_) {
    for (const auto& [t, ct] : b.coeffs_) {
      const Rational base = cs * ct;
      for (std::size_t j = 0; j <= std::min(s, t); ++j) {
        const Integer weight = binomial(s, j) * binomial(t, j) * factorial(j);
        out.set_coeff(s + t - j, out.coeff(s + t - j) + base * Rational(weight));
      }
    }
  }
  return out;
}

nlohmann::json FFPoly::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [t, c] : coeffs_) coeffs[std::to_string(t)] = to_decimal(c);
  return {{"basis", "falling"}, {"coeffs", coeffs}};
}

FFPoly FFPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("basis", "") != "falling" || !j.contains("coeffs")) {
    fail(ErrorKind::Parse, "expected {\"basis\":\"falling\",\"coeffs\":{...}}");
  }
  FFPoly p;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    std::size_t t = 0;
    try {
      t = std::stoul(key);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad coefficient index \"" + key + "\"");
    }
    if (!value.is_string()) fail(ErrorKind::Parse, "coefficients must be decimal strings");
    p.set_coeff(t, parse_rational(value.get<std::string>()));
  }
  return p;
}

Rational eval_monomial(const std::vector<Rational>& coeffs, std::int64_t k) {
  Rational sum = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * k + *it;
  return sum;
}

std::string to_decimal(const Integer& v) { return v.str(); }

std::string to_decimal(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "malformed integer \"" + text + "\"");
  }
}

}  // namespace chromagraph

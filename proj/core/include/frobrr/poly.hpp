#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobrr/rational.hpp"

namespace frobrr {

/// A monomial: product of named symbols with positive exponents. Factors are
/// kept sorted by symbol name, one entry per symbol.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::string symbol, std::uint32_t exponent = 1);
  Monomial(std::initializer_list<Factor> factors);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] std::uint64_t total_degree() const;
  [[nodiscard]] std::uint32_t exponent(std::string_view symbol) const;

  [[nodiscard]] std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded-lexicographic order, largest first: higher total degree precedes
/// lower; ties broken lexicographically with symbols ranked by their name
/// as strings (earlier name = more significant variable).
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class CyclicBindingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact multivariate polynomial over the rationals in open, string-named
/// symbols. The term map never holds a zero coefficient, so two polynomials
/// are equal exactly when their term maps are.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;
  using Bindings = std::map<std::string, Poly, std::less<>>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(std::int64_t constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly symbol(std::string name);
  static Poly term(const Rational& coefficient, Monomial monomial);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term (zero if absent).
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  [[nodiscard]] std::set<std::string> symbols() const;
  [[nodiscard]] std::uint64_t total_degree() const;

  /// Simultaneous substitution. A replacement may not mention any bound
  /// symbol; such bindings throw CyclicBindingError.
  [[nodiscard]] Poly substitute(const Bindings& bindings) const;

  [[nodiscard]] Poly pow(std::uint32_t exponent) const;

  /// Canonical rendering, e.g. "8*LL - 8*Lw + 16*lam". Zero renders as "0".
  [[nodiscard]] std::string to_string() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }
  friend Poly operator*(std::int64_t c, const Poly& p) { return Rational(c) * p; }
  friend Poly operator*(const Poly& p, std::int64_t c) { return Rational(c) * p; }
  friend Poly operator-(const Poly& p);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly substitute(const Poly& p, const Poly::Bindings& bindings);
bool is_zero(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace frobrr

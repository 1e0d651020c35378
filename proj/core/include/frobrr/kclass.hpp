#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "frobrr/poly.hpp"
#include "frobrr/rational.hpp"

namespace frobrr {

class NotPrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Trial division; adequate for the primes this library works with.
[[nodiscard]] bool is_prime(std::int64_t n);
/// Throws NotPrimeError unless `p` is prime.
void require_prime(std::int64_t p);

/// A line bundle class O(d), or a formal twist exponent.
struct LineClass {
  std::int64_t degree = 0;

  [[nodiscard]] LineClass dual() const { return {-degree}; }
  friend LineClass operator*(LineClass a, LineClass b) { return {a.degree + b.degree}; }
  friend auto operator<=>(const LineClass&, const LineClass&) = default;
};

/// Formal integer combination of line classes (a split K-theory class).
class KClass {
 public:
  using Terms = std::map<std::int64_t, std::int64_t>;  // degree -> multiplicity

  KClass() = default;
  KClass(LineClass line, std::int64_t multiplicity = 1);  // NOLINT(google-explicit-constructor)
  static KClass from_terms(const Terms& terms);
  /// The class n * O.
  static KClass trivial(std::int64_t n);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::int64_t rank() const;
  [[nodiscard]] std::int64_t multiplicity(std::int64_t degree) const;
  [[nodiscard]] bool is_effective() const;

  /// e.g. "O(0) + O(-2) + O(-4)"; zero renders as "0".
  [[nodiscard]] std::string to_string() const;

  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  /// Tensor product.
  friend KClass operator*(const KClass& a, const KClass& b);
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  void add(std::int64_t degree, std::int64_t multiplicity);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const KClass& c);

/// Adams operation: O(d) -> O(k*d), extended additively. Requires k >= 2.
[[nodiscard]] KClass adams(std::int64_t k, const KClass& c);

/// Bott class: theta^k(L) = 1 + L + ... + L^(k-1), multiplicative over sums.
/// Requires k >= 2 and an effective class.
[[nodiscard]] KClass bott(std::int64_t k, const KClass& c);

/// Rank of tau(E) for a rank-r bundle in characteristic p: the number of
/// exponent tuples (i_1..i_r) with 0 <= i_j < p.
[[nodiscard]] std::uint64_t tau_rank(std::int64_t r, std::int64_t p);

/// tau(omega) = 1 + omega + ... + omega^(p-1) with omega of the given degree.
[[nodiscard]] KClass tau_of_omega(std::int64_t p, std::int64_t omega_degree);

/// A class in K_0 of the projective line, condensed to (rank, degree).
/// The degree part squares to zero. `Degree` is Rational, or Poly when the
/// degree carries free symbols.
template <class Degree>
struct BasicCondensed {
  Rational rank{0};
  Degree degree{};

  static BasicCondensed one() { return {Rational(1), Degree(Rational(0))}; }

  friend BasicCondensed operator+(const BasicCondensed& a, const BasicCondensed& b) {
    return {a.rank + b.rank, a.degree + b.degree};
  }
  friend BasicCondensed operator*(const BasicCondensed& a, const BasicCondensed& b) {
    return {a.rank * b.rank, a.rank * b.degree + b.rank * a.degree};
  }
  friend bool operator==(const BasicCondensed&, const BasicCondensed&) = default;
};

using CondensedClass = BasicCondensed<Rational>;
using SymbolicCondensed = BasicCondensed<Poly>;

[[nodiscard]] CondensedClass condense(const KClass& c);

/// True when r = +-p^m for some m >= 0, i.e. r is a unit in Z[1/p].
[[nodiscard]] bool is_unit_after_inverting(const Rational& r, std::int64_t p);

/// Inverse in K_0[1/p]: (1/r, -e/r^2). Throws NotInvertibleError when the rank
/// is not a unit after inverting p.
template <class Degree>
[[nodiscard]] BasicCondensed<Degree> condensed_inverse(const BasicCondensed<Degree>& c,
                                                       std::int64_t p) {
  require_prime(p);
  if (!is_unit_after_inverting(c.rank, p)) {
    throw NotInvertibleError("condensed_inverse: rank " + c.rank.to_string() +
                             " is not a unit in Z[1/" + std::to_string(p) + "]");
  }
  const Rational inv = c.rank.inverse();
  return {inv, -(inv * inv) * c.degree};
}

/// chi = rank + degree (Riemann-Roch on the projective line).
template <class Degree>
[[nodiscard]] Degree euler_char(const BasicCondensed<Degree>& c) {
  return Degree(c.rank) + c.degree;
}

std::string to_string(const CondensedClass& c);

}  // namespace frobrr

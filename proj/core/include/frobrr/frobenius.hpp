#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobrr/kclass.hpp"
#include "frobrr/poly.hpp"

namespace frobrr::frob {

/// O(d) on the projective line over F_p.
class ProjLineBundle {
 public:
  /// Throws NotPrimeError for non-prime p.
  ProjLineBundle(std::int64_t d, std::int64_t p);

  [[nodiscard]] std::int64_t twist() const { return d_; }
  [[nodiscard]] std::int64_t prime() const { return p_; }

  friend ProjLineBundle operator*(const ProjLineBundle& a, const ProjLineBundle& b);
  friend bool operator==(const ProjLineBundle&, const ProjLineBundle&) = default;

 private:
  std::int64_t d_;
  std::int64_t p_;
};

/// F_* O(d) = O(e_0) + ... + O(e_{p-1}).
struct FrobeniusDecomposition {
  std::vector<std::int64_t> twists;

  [[nodiscard]] std::size_t rank() const { return twists.size(); }
  /// Sum of (e_i + 1).
  [[nodiscard]] std::int64_t euler_characteristic() const;
  [[nodiscard]] KClass to_kclass() const;
  [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] std::int64_t h0(const ProjLineBundle& b);
[[nodiscard]] std::int64_t h1(const ProjLineBundle& b);

/// e_i = floor((d - i) / p) for i = 0..p-1.
[[nodiscard]] FrobeniusDecomposition frobenius_pushforward(const ProjLineBundle& b);

/// F^* O(d) = O(p d).
[[nodiscard]] ProjLineBundle frobenius_pullback(const ProjLineBundle& b);

/// Condensed classes of F^* F_* O and of tau(omega) with deg omega = -2.
struct GrIdentitySides {
  CondensedClass pullback_of_pushforward;
  CondensedClass tau_omega;
};

[[nodiscard]] GrIdentitySides gr_identity_sides(std::int64_t p);
[[nodiscard]] bool check_gr_identity(std::int64_t p);

/// Both sides of psi^p(chi(O(d))) = chi(tau(omega)^{-1} (x) psi^p(O(d))) over a point.
struct ArrSides {
  Rational lhs;
  Rational rhs;
};

[[nodiscard]] ArrSides arr_sides(std::int64_t p, std::int64_t d);
[[nodiscard]] bool verify_arr(std::int64_t p, std::int64_t d);

/// Right side of the ARR check with the twist left as the free symbol `d`.
[[nodiscard]] Poly arr_symbolic_rhs(std::int64_t p, const std::string& twist_symbol = "d");

[[nodiscard]] std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace frobrr::frob

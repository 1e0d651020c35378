#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "frobrr/poly.hpp"

namespace frobrr::chow {

// Symbols of the free degree model.
inline constexpr std::string_view kLL = "LL";       // L.L
inline constexpr std::string_view kLw = "Lw";       // L.omega
inline constexpr std::string_view kww = "ww";       // omega.omega
inline constexpr std::string_view kLambda = "lam";  // deg det Rf_* O

/// a*L + b*omega in the rank-2 divisor lattice of the family.
struct DivisorClass {
  std::int64_t l = 0;
  std::int64_t w = 0;

  static constexpr DivisorClass trivial() { return {0, 0}; }
  static constexpr DivisorClass line() { return {1, 0}; }
  static constexpr DivisorClass omega() { return {0, 1}; }

  [[nodiscard]] bool is_zero() const { return l == 0 && w == 0; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr DivisorClass operator+(DivisorClass a, DivisorClass b) {
    return {a.l + b.l, a.w + b.w};
  }
  friend constexpr DivisorClass operator-(DivisorClass a, DivisorClass b) {
    return {a.l - b.l, a.w - b.w};
  }
  friend constexpr DivisorClass operator-(DivisorClass a) { return {-a.l, -a.w}; }
  friend constexpr DivisorClass operator*(std::int64_t k, DivisorClass a) {
    return {k * a.l, k * a.w};
  }
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

/// Symmetric bilinear intersection pairing into the symbols L.L, L.w, w.w.
struct IntersectionForm {
  std::string LL{kLL};
  std::string Lw{kLw};
  std::string ww{kww};

  [[nodiscard]] Poly pair(DivisorClass a, DivisorClass b) const;
};

/// Formal integer combination of divisor classes, e.g. L - O.
class VirtualCombo {
 public:
  using Terms = std::map<DivisorClass, std::int64_t>;

  VirtualCombo() = default;
  VirtualCombo(DivisorClass d, std::int64_t multiplicity = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::int64_t rank() const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  VirtualCombo& operator+=(const VirtualCombo& other);
  VirtualCombo& operator-=(const VirtualCombo& other);
  friend VirtualCombo operator+(VirtualCombo a, const VirtualCombo& b) { return a += b; }
  friend VirtualCombo operator-(VirtualCombo a, const VirtualCombo& b) { return a -= b; }
  friend VirtualCombo operator*(std::int64_t k, const VirtualCombo& v);
  /// Tensor product: divisor classes add.
  friend VirtualCombo operator*(const VirtualCombo& a, const VirtualCombo& b);
  friend bool operator==(const VirtualCombo&, const VirtualCombo&) = default;

 private:
  void add(DivisorClass d, std::int64_t m);

  Terms terms_;
};

/// Degree of det Rf_*M in the model D(M) = 1/2 M.(M - omega) + lambda.
[[nodiscard]] Poly det_degree(DivisorClass m, const IntersectionForm& form = {});

/// Degree of the Deligne pairing <A, B>, i.e. the intersection number A.B.
[[nodiscard]] Poly pairing_degree(DivisorClass a, DivisorClass b,
                                  const IntersectionForm& form = {});

/// Sum of multiplicity * det_degree over the combination.
[[nodiscard]] Poly virtual_det_degree(const VirtualCombo& v, const IntersectionForm& form = {});

/// Degree of det Rf_*((H0 - H1)^3 (x) H); identically zero in the model.
[[nodiscard]] Poly cube_triviality(DivisorClass h0, DivisorClass h1, DivisorClass h,
                                   const IntersectionForm& form = {});

/// lambda -> (w.w)/12.
[[nodiscard]] Poly::Bindings mumford_bindings(const IntersectionForm& form = {});

/// Numerical shadow of a graded line: (degree, grading).
struct GradedLine {
  Poly degree;
  std::int64_t grading = 0;

  [[nodiscard]] GradedLine dual() const { return {-degree, -grading}; }
  friend bool operator==(const GradedLine&, const GradedLine&) = default;
};

[[nodiscard]] GradedLine graded_tensor(const GradedLine& a, const GradedLine& b);

/// Sign of the commutativity constraint a (x) b -> b (x) a: (-1)^(grading_a * grading_b).
[[nodiscard]] int swap_sign(const GradedLine& a, const GradedLine& b);

}  // namespace frobrr::chow

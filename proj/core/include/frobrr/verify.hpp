#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobrr/poly.hpp"
#include "frobrr/rational.hpp"

namespace frobrr::verify {

/// Exponent c_a attached to det Rf_*(L^p (x) omega^a).
struct CoeffEntry {
  std::int64_t twist = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const CoeffEntry&, const CoeffEntry&) = default;
};

struct CoeffTable {
  std::int64_t p = 0;
  std::vector<CoeffEntry> entries;  // twists 0..2p-2 in order

  [[nodiscard]] std::string to_string() const;  // "[(0, 7), (1, -4), (2, 1)]"
};

/// Closed-form exponents: 3p^2-3p+1 at a=0, k+1-3p at a=k, p-1-k at a=p+k.
/// Checked against expansion_oracle(p) before returning; throws
/// std::logic_error on disagreement and NotPrimeError for non-prime p.
[[nodiscard]] CoeffTable coeff_table(std::int64_t p);

/// sum_a c_a * w^a.
[[nodiscard]] Poly table_poly(const CoeffTable& table, const std::string& symbol = "w");

/// 3p^2 - 3p*t + t^2 with t = 1 + w + ... + w^(p-1), expanded.
[[nodiscard]] Poly expansion_oracle(std::int64_t p, const std::string& symbol = "w");

struct MomentSums {
  Rational sum;          // sum c_a
  Rational first;        // sum c_a * a
  Rational second;       // sum c_a * a^2
  friend bool operator==(const MomentSums&, const MomentSums&) = default;
};

/// Brute-force moments of coeff_table(p); throws std::logic_error if they
/// differ from moment_closed_forms(p).
[[nodiscard]] MomentSums closed_form_sums(std::int64_t p);
/// (p^2, -p^2(p-1)/2, p^2(p-1)(p-2)/6).
[[nodiscard]] MomentSums moment_closed_forms(std::int64_t p);

/// p^3 + (t-p)^3 - t*(p^2 + p(p-t) + (p-t)^2) over free symbols t, p.
[[nodiscard]] Poly cube_identity_difference();
[[nodiscard]] bool verify_cube_identity();
/// Both sides of the cube identity at numeric t, p.
[[nodiscard]] std::pair<Rational, Rational> cube_identity_at(const Rational& t, const Rational& p);

/// p^4 * D(L), unsubstituted.
[[nodiscard]] Poly main_degree_lhs(std::int64_t p);
/// sum_a c_a * D(pL + a*omega), unsubstituted.
[[nodiscard]] Poly main_degree_rhs(std::int64_t p);
/// (p^4 - p^2) lam - p^2 (p^2 - 1)/12 ww.
[[nodiscard]] Poly main_degree_expected_residual(std::int64_t p);

/// sum_a c_a * chi(pL + a*omega) with chi(M) = deg M + 1 - g, deg L = d, deg omega = 2g - 2.
[[nodiscard]] Poly main_grading_rhs(std::int64_t p);

// --- Reports -------------------------------------------------------------

enum class Status { pass, fail };

using ParamValue = std::variant<std::int64_t, bool, std::string>;
using Params = std::map<std::string, ParamValue>;

struct VerificationReport {
  std::string identity;
  Params params;
  Status status = Status::fail;
  std::string lhs;
  std::string rhs;
  std::string residual;  // canonical lhs - rhs
  std::chrono::nanoseconds elapsed{0};

  [[nodiscard]] bool passed() const { return status == Status::pass; }
  [[nodiscard]] std::optional<std::int64_t> int_param(const std::string& key) const;
};

using Reports = std::vector<VerificationReport>;

[[nodiscard]] VerificationReport report_coeff_table(std::int64_t p);
[[nodiscard]] Reports report_coeff_moments(std::int64_t p);
[[nodiscard]] VerificationReport report_cube_identity();
[[nodiscard]] VerificationReport verify_main_degree(std::int64_t p, bool assume_mumford);
/// Polynomial grading identity plus the mod-2 parity of p^4 chi - p^3 chi.
[[nodiscard]] Reports verify_main_grading(std::int64_t p);
/// Form (10), the exponent-6 form, the printed exponent-1 negative control,
/// the exponent-18 form and, optionally, consistency with the p = 2 main identity.
[[nodiscard]] Reports verify_deligne(bool assume_mumford, bool p2_cross_check = true);
[[nodiscard]] VerificationReport verify_mumford(std::int64_t n, bool assume_mumford);
[[nodiscard]] VerificationReport verify_remark_lambda(std::int64_t n, std::int64_t p,
                                                      bool assume_mumford);
[[nodiscard]] VerificationReport report_gr_identity(std::int64_t p);
[[nodiscard]] VerificationReport report_arr(std::int64_t p, std::int64_t d);
[[nodiscard]] VerificationReport report_arr_symbolic(std::int64_t p);
/// Rank and Euler-characteristic checks for F_* O(d).
[[nodiscard]] Reports report_frobenius(std::int64_t p, std::int64_t d);

struct SweepOptions {
  std::int64_t p_max = 13;
  bool assume_mumford = true;
  std::int64_t d_range = 50;  // |d| <= d_range
  std::int64_t n_max = 5;
  bool parallel = true;
};

/// Every verification for all primes <= p_max, ordered by (identity, p, n, d).
[[nodiscard]] Reports sweep(const SweepOptions& options);

/// Ascending (identity, p, n, d) with absent parameters first.
void sort_reports(Reports& reports);

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};
[[nodiscard]] Tally tally(const Reports& reports);

}  // namespace frobrr::verify

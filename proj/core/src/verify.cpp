#include "frobrr/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "frobrr/chow.hpp"
#include "frobrr/frobenius.hpp"
#include "frobrr/kclass.hpp"

namespace frobrr::verify {

using chow::DivisorClass;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

VerificationReport make_report(std::string identity, Params params, const Poly& lhs,
                               const Poly& rhs, const Stopwatch& clock) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.residual = (lhs - rhs).to_string();
  r.status = r.lhs == r.rhs ? Status::pass : Status::fail;
  r.elapsed = clock.elapsed();
  return r;
}

Poly maybe_mumford(const Poly& p, bool assume_mumford) {
  return assume_mumford ? p.substitute(chow::mumford_bindings()) : p;
}

Poly D(DivisorClass m) { return chow::det_degree(m); }

std::string signed_term(std::int64_t c, const std::string& body, bool first) {
  std::string out;
  if (first) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  const std::int64_t mag = c < 0 ? -c : c;
  if (mag != 1) out += std::to_string(mag) + '*';
  return out + body;
}

// Human-readable form of the main identity, e.g.
// "16*D(L) = 7*D(2*L) - 4*D(2*L + w) + D(2*L + 2*w)".
std::string main_statement(const CoeffTable& table) {
  const std::int64_t p = table.p;
  std::string out = std::to_string(p * p * p * p) + "*D(L) =";
  bool first = true;
  for (const auto& e : table.entries) {
    const DivisorClass m{p, e.twist};
    out += first ? " " : "";
    out += signed_term(e.exponent, "D(" + m.to_string() + ")", first);
    first = false;
  }
  return out;
}

Poly chi_symbolic(DivisorClass m) {
  const Poly d = Poly::symbol("d");
  const Poly g = Poly::symbol("g");
  return m.l * d + m.w * (2 * g - Poly(2)) + Poly(1) - g;
}

}  // namespace

std::optional<std::int64_t> VerificationReport::int_param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  if (const auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
  return std::nullopt;
}

std::string CoeffTable::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) os << ", ";
    os << '(' << entries[i].twist << ", " << entries[i].exponent << ')';
  }
  os << ']';
  return os.str();
}

Poly table_poly(const CoeffTable& table, const std::string& symbol) {
  Poly out;
  for (const auto& e : table.entries) {
    out += Poly::term(Rational(e.exponent), Monomial(symbol, static_cast<std::uint32_t>(e.twist)));
  }
  return out;
}

Poly expansion_oracle(std::int64_t p, const std::string& symbol) {
  require_prime(p);
  Poly t;
  for (std::int64_t k = 0; k < p; ++k) {
    t += Poly::term(Rational(1), Monomial(symbol, static_cast<std::uint32_t>(k)));
  }
  return Poly(3 * p * p) - (3 * p) * t + t * t;
}

CoeffTable coeff_table(std::int64_t p) {
  require_prime(p);
  CoeffTable table;
  table.p = p;
  table.entries.push_back({0, 3 * p * p - 3 * p + 1});
  for (std::int64_t k = 1; k <= p - 1; ++k) table.entries.push_back({k, k + 1 - 3 * p});
  for (std::int64_t k = 0; k <= p - 2; ++k) table.entries.push_back({p + k, p - 1 - k});
  if (table_poly(table) != expansion_oracle(p)) {
    throw std::logic_error("coeff_table: closed form disagrees with expansion for p = " +
                           std::to_string(p));
  }
  return table;
}

MomentSums moment_closed_forms(std::int64_t p) {
  const Rational P(p);
  return {P * P, -(P * P * (P - 1)) / 2, P * P * (P - 1) * (P - 2) / 6};
}

MomentSums closed_form_sums(std::int64_t p) {
  const CoeffTable table = coeff_table(p);
  MomentSums s{Rational(0), Rational(0), Rational(0)};
  for (const auto& e : table.entries) {
    s.sum += e.exponent;
    s.first += Rational(e.exponent * e.twist);
    s.second += Rational(e.exponent * e.twist * e.twist);
  }
  if (s != moment_closed_forms(p)) {
    throw std::logic_error("closed_form_sums: moments disagree with closed forms for p = " +
                           std::to_string(p));
  }
  return s;
}

Poly cube_identity_difference() {
  const Poly t = Poly::symbol("t");
  const Poly p = Poly::symbol("p");
  const Poly lhs = p.pow(3) + (t - p).pow(3);
  const Poly rhs = t * (p * p + p * (p - t) + (p - t).pow(2));
  return lhs - rhs;
}

bool verify_cube_identity() { return cube_identity_difference().is_zero(); }

std::pair<Rational, Rational> cube_identity_at(const Rational& t, const Rational& p) {
  const Rational tp = t - p;
  return {p * p * p + tp * tp * tp, t * (p * p + p * (p - t) + (p - t) * (p - t))};
}

Poly main_degree_lhs(std::int64_t p) {
  require_prime(p);
  return (p * p * p * p) * D(DivisorClass::line());
}

Poly main_degree_rhs(std::int64_t p) {
  const CoeffTable table = coeff_table(p);
  Poly out;
  for (const auto& e : table.entries) out += e.exponent * D(DivisorClass{p, e.twist});
  return out;
}

Poly main_degree_expected_residual(std::int64_t p) {
  const Rational P(p);
  return (P * P * P * P - P * P) * Poly::symbol(std::string(chow::kLambda)) -
         (P * P * (P * P - 1) / 12) * Poly::symbol(std::string(chow::kww));
}

Poly main_grading_rhs(std::int64_t p) {
  const CoeffTable table = coeff_table(p);
  Poly out;
  for (const auto& e : table.entries) out += e.exponent * chi_symbolic(DivisorClass{p, e.twist});
  return out;
}

VerificationReport report_coeff_table(std::int64_t p) {
  Stopwatch clock;
  const CoeffTable table = coeff_table(p);
  return make_report("coeff_table", {{"p", p}, {"table", table.to_string()}}, table_poly(table),
                     expansion_oracle(p), clock);
}

Reports report_coeff_moments(std::int64_t p) {
  Stopwatch clock;
  const CoeffTable table = coeff_table(p);
  MomentSums brute{Rational(0), Rational(0), Rational(0)};
  for (const auto& e : table.entries) {
    brute.sum += e.exponent;
    brute.first += Rational(e.exponent * e.twist);
    brute.second += Rational(e.exponent * e.twist * e.twist);
  }
  const MomentSums closed = moment_closed_forms(p);
  Reports out;
  out.push_back(make_report("coeff_moment_0", {{"p", p}}, Poly(brute.sum), Poly(closed.sum), clock));
  out.push_back(
      make_report("coeff_moment_1", {{"p", p}}, Poly(brute.first), Poly(closed.first), clock));
  out.push_back(
      make_report("coeff_moment_2", {{"p", p}}, Poly(brute.second), Poly(closed.second), clock));
  return out;
}

VerificationReport report_cube_identity() {
  Stopwatch clock;
  const Poly t = Poly::symbol("t");
  const Poly p = Poly::symbol("p");
  const Poly lhs = p.pow(3) + (t - p).pow(3);
  const Poly rhs = t * (p * p + p * (p - t) + (p - t).pow(2));
  return make_report("cube_identity", {}, lhs, rhs, clock);
}

VerificationReport verify_main_degree(std::int64_t p, bool assume_mumford) {
  Stopwatch clock;
  const Poly lhs = maybe_mumford(main_degree_lhs(p), assume_mumford);
  const Poly rhs = maybe_mumford(main_degree_rhs(p), assume_mumford);
  Params params{{"p", p},
                {"assume_mumford", assume_mumford},
                {"statement", main_statement(coeff_table(p))}};
  return make_report("main_degree", std::move(params), lhs, rhs, clock);
}

Reports verify_main_grading(std::int64_t p) {
  Stopwatch clock;
  const Poly chi_line = chi_symbolic(DivisorClass::line());
  const Poly lhs = (p * p * p) * chi_line;
  Reports out;
  out.push_back(make_report("main_grading", {{"p", p}}, lhs, main_grading_rhs(p), clock));
  // p^4 chi - p^3 chi = p^3 (p - 1) chi is even for every integer chi.
  const std::int64_t factor = p * p * p * (p - 1);
  out.push_back(make_report("main_grading_parity", {{"p", p}, {"factor", factor}},
                            Poly(factor % 2), Poly(0), clock));
  return out;
}

Reports verify_deligne(bool assume_mumford, bool p2_cross_check) {
  const DivisorClass L = DivisorClass::line();
  const DivisorClass O = DivisorClass::trivial();
  const DivisorClass w = DivisorClass::omega();
  const Poly ww = Poly::symbol(std::string(chow::kww));
  const Poly pairing = chow::pairing_degree(L, L - w);
  Reports out;
  {
    Stopwatch clock;
    // lambda cancels; never substituted.
    out.push_back(make_report("deligne_form10", {}, 2 * (D(L) - D(O)), pairing, clock));
  }
  {
    Stopwatch clock;
    out.push_back(make_report("deligne_exp6", {{"assume_mumford", assume_mumford}},
                              maybe_mumford(12 * D(L), assume_mumford),
                              maybe_mumford(ww + 6 * pairing, assume_mumford), clock));
  }
  {
    Stopwatch clock;
    const Poly residual = maybe_mumford(12 * D(L) - (ww + pairing), assume_mumford);
    Params params{{"assume_mumford", assume_mumford},
                  {"note",
                   "negative control: pairing factor taken with exponent 1; lhs is the residual "
                   "12*D(L) - (ww + <L, L - w>), expected 5*(LL - Lw)"}};
    out.push_back(make_report("deligne_exp1_control", std::move(params), residual,
                              5 * chow::pairing_degree(L, L - w), clock));
  }
  {
    Stopwatch clock;
    const Poly rhs = 18 * D(O) + 6 * D(2 * L - w) - 6 * D(L - w);
    out.push_back(make_report("deligne_exp18", {{"assume_mumford", assume_mumford}},
                              maybe_mumford(18 * D(L), assume_mumford),
                              maybe_mumford(rhs, assume_mumford), clock));
  }
  if (p2_cross_check) {
    Stopwatch clock;
    const Poly main_residual = main_degree_lhs(2) - main_degree_rhs(2);
    const Poly exp6_residual = 12 * D(L) - (ww + 6 * pairing);
    Params params{{"p", std::int64_t{2}},
                  {"note", "lhs: residual of the p = 2 main identity; rhs: residual of the "
                           "exponent-6 form; both unsubstituted"}};
    out.push_back(make_report("deligne_main_p2_consistency", std::move(params), main_residual,
                              exp6_residual, clock));
  }
  return out;
}

VerificationReport verify_mumford(std::int64_t n, bool assume_mumford) {
  if (n < 0) throw std::invalid_argument("verify_mumford: n must be >= 0");
  Stopwatch clock;
  const DivisorClass w = DivisorClass::omega();
  const std::int64_t exponent = 6 * n * n - 6 * n + 1;
  return make_report("mumford", {{"n", n}, {"assume_mumford", assume_mumford}, {"exponent", exponent}},
                     maybe_mumford(D(n * w), assume_mumford),
                     maybe_mumford(exponent * D(w), assume_mumford), clock);
}

VerificationReport verify_remark_lambda(std::int64_t n, std::int64_t p, bool assume_mumford) {
  if (n < 0) throw std::invalid_argument("verify_remark_lambda: n must be >= 0");
  require_prime(p);
  Stopwatch clock;
  const CoeffTable table = coeff_table(p);
  const DivisorClass w = DivisorClass::omega();
  Poly rhs;
  for (const auto& e : table.entries) rhs += e.exponent * D((n * p + e.twist) * w);
  return make_report("remark_lambda", {{"n", n}, {"p", p}, {"assume_mumford", assume_mumford}},
                     maybe_mumford((p * p * p * p) * D(n * w), assume_mumford),
                     maybe_mumford(rhs, assume_mumford), clock);
}

namespace {

// rank + degree * pt, the class in K_0 of the projective line.
Poly condensed_poly(const CondensedClass& c) {
  return Poly(c.rank) + c.degree * Poly::symbol("pt");
}

}  // namespace

VerificationReport report_gr_identity(std::int64_t p) {
  Stopwatch clock;
  const auto sides = frob::gr_identity_sides(p);
  return make_report("gr_identity", {{"p", p}}, condensed_poly(sides.pullback_of_pushforward),
                     condensed_poly(sides.tau_omega), clock);
}

VerificationReport report_arr(std::int64_t p, std::int64_t d) {
  Stopwatch clock;
  const auto sides = frob::arr_sides(p, d);
  return make_report("arr", {{"p", p}, {"d", d}}, Poly(sides.lhs), Poly(sides.rhs), clock);
}

VerificationReport report_arr_symbolic(std::int64_t p) {
  Stopwatch clock;
  const Poly lhs = Poly::symbol("d") + Poly(1);
  return make_report("arr_symbolic", {{"p", p}}, lhs, frob::arr_symbolic_rhs(p), clock);
}

Reports report_frobenius(std::int64_t p, std::int64_t d) {
  Stopwatch clock;
  const frob::ProjLineBundle bundle(d, p);
  const auto decomposition = frob::frobenius_pushforward(bundle);
  const Params params{{"p", p}, {"d", d}, {"summands", decomposition.to_string()}};
  Reports out;
  out.push_back(make_report("frobenius_rank", params,
                            Poly(static_cast<std::int64_t>(decomposition.rank())), Poly(p), clock));
  out.push_back(make_report("frobenius_chi", params, Poly(decomposition.euler_characteristic()),
                            Poly(d + 1), clock));
  return out;
}

void sort_reports(Reports& reports) {
  static constexpr std::int64_t kAbsent = INT64_MIN;
  auto key = [](const VerificationReport& r) {
    return std::make_tuple(std::cref(r.identity), r.int_param("p").value_or(kAbsent),
                           r.int_param("n").value_or(kAbsent), r.int_param("d").value_or(kAbsent));
  };
  std::stable_sort(reports.begin(), reports.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

namespace {

Reports per_prime(std::int64_t p, const SweepOptions& o) {
  Reports out;
  auto append = [&out](Reports rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  out.push_back(report_coeff_table(p));
  append(report_coeff_moments(p));
  out.push_back(verify_main_degree(p, o.assume_mumford));
  append(verify_main_grading(p));
  for (std::int64_t n = 0; n <= o.n_max; ++n) {
    out.push_back(verify_remark_lambda(n, p, o.assume_mumford));
  }
  out.push_back(report_gr_identity(p));
  out.push_back(report_arr_symbolic(p));
  for (std::int64_t d = -o.d_range; d <= o.d_range; ++d) {
    out.push_back(report_arr(p, d));
    append(report_frobenius(p, d));
  }
  return out;
}

}  // namespace

Reports sweep(const SweepOptions& options) {
  if (options.p_max < 2) throw std::invalid_argument("sweep: p_max must be >= 2");
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= options.p_max; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }

  std::vector<Reports> chunks(primes.size());
  if (options.parallel) {
    std::vector<std::future<Reports>> jobs;
    jobs.reserve(primes.size());
    for (auto p : primes) {
      jobs.push_back(std::async(std::launch::async, [p, &options] { return per_prime(p, options); }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) chunks[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) chunks[i] = per_prime(primes[i], options);
  }

  Reports out;
  out.push_back(report_cube_identity());
  for (auto& r : verify_deligne(options.assume_mumford, true)) out.push_back(std::move(r));
  for (std::int64_t n = 0; n <= options.n_max; ++n) {
    out.push_back(verify_mumford(n, options.assume_mumford));
  }
  for (auto& chunk : chunks) {
    for (auto& r : chunk) out.push_back(std::move(r));
  }
  sort_reports(out);
  return out;
}

Tally tally(const Reports& reports) {
  Tally t;
  for (const auto& r : reports) (r.passed() ? t.passed : t.failed) += 1;
  return t;
}

}  // namespace frobrr::verify

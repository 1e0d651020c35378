#include "frobrr/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace frobrr::frob {

namespace {

constexpr std::int64_t kOmegaDegree = -2;

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

ProjLineBundle::ProjLineBundle(std::int64_t d, std::int64_t p) : d_(d), p_(p) { require_prime(p); }

ProjLineBundle operator*(const ProjLineBundle& a, const ProjLineBundle& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("ProjLineBundle: characteristics differ");
  return {a.d_ + b.d_, a.p_};
}

std::int64_t FrobeniusDecomposition::euler_characteristic() const {
  std::int64_t chi = 0;
  for (auto e : twists) chi += e + 1;
  return chi;
}

KClass FrobeniusDecomposition::to_kclass() const {
  KClass c;
  for (auto e : twists) c += KClass(LineClass{e});
  return c;
}

std::string FrobeniusDecomposition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (i > 0) os << " + ";
    os << "O(" << twists[i] << ')';
  }
  return os.str();
}

std::int64_t h0(const ProjLineBundle& b) { return std::max<std::int64_t>(b.twist() + 1, 0); }

std::int64_t h1(const ProjLineBundle& b) { return std::max<std::int64_t>(-b.twist() - 1, 0); }

FrobeniusDecomposition frobenius_pushforward(const ProjLineBundle& b) {
  FrobeniusDecomposition out;
  out.twists.reserve(static_cast<std::size_t>(b.prime()));
  for (std::int64_t i = 0; i < b.prime(); ++i) {
    out.twists.push_back(floor_div(b.twist() - i, b.prime()));
  }
  return out;
}

ProjLineBundle frobenius_pullback(const ProjLineBundle& b) {
  return {b.prime() * b.twist(), b.prime()};
}

GrIdentitySides gr_identity_sides(std::int64_t p) {
  const auto pushed = frobenius_pushforward(ProjLineBundle(0, p));
  KClass pulled;
  for (auto e : pushed.twists) {
    pulled += KClass(LineClass{frobenius_pullback(ProjLineBundle(e, p)).twist()});
  }
  return {condense(pulled), condense(tau_of_omega(p, kOmegaDegree))};
}

bool check_gr_identity(std::int64_t p) {
  const auto sides = gr_identity_sides(p);
  return sides.pullback_of_pushforward == sides.tau_omega;
}

ArrSides arr_sides(std::int64_t p, std::int64_t d) {
  require_prime(p);
  // Adams operations act trivially on K_0 of a point.
  const Rational lhs(d + 1);
  const CondensedClass tau_inv = condensed_inverse(condense(tau_of_omega(p, kOmegaDegree)), p);
  const CondensedClass adams_line = condense(adams(p, KClass(LineClass{d})));
  return {lhs, euler_char(tau_inv * adams_line)};
}

bool verify_arr(std::int64_t p, std::int64_t d) {
  const auto sides = arr_sides(p, d);
  return sides.lhs == sides.rhs;
}

Poly arr_symbolic_rhs(std::int64_t p, const std::string& twist_symbol) {
  require_prime(p);
  const CondensedClass tau = condense(tau_of_omega(p, kOmegaDegree));
  const SymbolicCondensed tau_sym{tau.rank, Poly(tau.degree)};
  const SymbolicCondensed adams_line{Rational(1), p * Poly::symbol(twist_symbol)};
  return euler_char(condensed_inverse(tau_sym, p) * adams_line);
}

}  // namespace frobrr::frob

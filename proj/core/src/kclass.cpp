#include "frobrr/kclass.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace frobrr {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
}

KClass::KClass(LineClass line, std::int64_t multiplicity) { add(line.degree, multiplicity); }

KClass KClass::from_terms(const Terms& terms) {
  KClass c;
  for (const auto& [d, m] : terms) c.add(d, m);
  return c;
}

KClass KClass::trivial(std::int64_t n) { return KClass(LineClass{0}, n); }

void KClass::add(std::int64_t degree, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t KClass::rank() const {
  std::int64_t r = 0;
  for (const auto& [d, m] : terms_) r += m;
  return r;
}

std::int64_t KClass::multiplicity(std::int64_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

bool KClass::is_effective() const {
  for (const auto& [d, m] : terms_) {
    if (m < 0) return false;
  }
  return true;
}

std::string KClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Listed by |degree|, O(d) before O(-d).
  std::vector<std::pair<std::int64_t, std::int64_t>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto aa = a.first < 0 ? -a.first : a.first;
    const auto bb = b.first < 0 ? -b.first : b.first;
    return aa != bb ? aa < bb : a.first > b.first;
  });
  for (const auto& [d, m] : ordered) {
    const bool negative = m < 0;
    const std::int64_t mag = negative ? -m : m;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << '*';
    os << "O(" << d << ')';
  }
  return os.str();
}

KClass& KClass::operator+=(const KClass& other) {
  for (const auto& [d, m] : other.terms_) add(d, m);
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  for (const auto& [d, m] : other.terms_) add(d, -m);
  return *this;
}

KClass operator*(const KClass& a, const KClass& b) {
  KClass out;
  for (const auto& [da, ma] : a.terms_) {
    for (const auto& [db, mb] : b.terms_) out.add(da + db, ma * mb);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const KClass& c) { return os << c.to_string(); }

KClass adams(std::int64_t k, const KClass& c) {
  if (k < 2) throw std::invalid_argument("adams: k must be >= 2, got " + std::to_string(k));
  KClass out;
  for (const auto& [d, m] : c.terms()) out += KClass(LineClass{k * d}, m);
  return out;
}

namespace {

KClass bott_of_line(std::int64_t k, LineClass line) {
  KClass out;
  for (std::int64_t i = 0; i < k; ++i) out += KClass(LineClass{i * line.degree});
  return out;
}

}  // namespace

KClass bott(std::int64_t k, const KClass& c) {
  if (k < 2) throw std::invalid_argument("bott: k must be >= 2, got " + std::to_string(k));
  if (!c.is_effective()) {
    throw std::invalid_argument("bott: class " + c.to_string() + " has a negative multiplicity");
  }
  KClass out = KClass::trivial(1);
  for (const auto& [d, m] : c.terms()) {
    const KClass factor = bott_of_line(k, LineClass{d});
    for (std::int64_t i = 0; i < m; ++i) out = out * factor;
  }
  return out;
}

std::uint64_t tau_rank(std::int64_t r, std::int64_t p) {
  require_prime(p);
  if (r < 0) throw std::invalid_argument("tau_rank: negative rank");
  const auto base = static_cast<std::uint64_t>(p);
  if (r <= 4) {
    // Odometer over (i_1, ..., i_r) with 0 <= i_j < p.
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(r), 0);
    std::uint64_t count = 0;
    for (;;) {
      ++count;
      std::size_t j = 0;
      while (j < digits.size() && ++digits[j] == base) digits[j++] = 0;
      if (j == digits.size()) break;
    }
    return count;
  }
  std::uint64_t result = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    if (result > UINT64_MAX / base) throw std::overflow_error("tau_rank: p^r overflows");
    result *= base;
  }
  return result;
}

KClass tau_of_omega(std::int64_t p, std::int64_t omega_degree) {
  require_prime(p);
  KClass out;
  for (std::int64_t k = 0; k < p; ++k) out += KClass(LineClass{k * omega_degree});
  return out;
}

CondensedClass condense(const KClass& c) {
  std::int64_t degree = 0;
  for (const auto& [d, m] : c.terms()) degree += d * m;
  return {Rational(c.rank()), Rational(degree)};
}

bool is_unit_after_inverting(const Rational& r, std::int64_t p) {
  if (!r.is_integer() || r.is_zero()) return false;
  mpz_class n = r.numerator();
  if (n < 0) n = -n;
  const mpz_class pz(static_cast<long>(p));
  while (n % pz == 0) n /= pz;
  return n == 1;
}

std::string to_string(const CondensedClass& c) {
  return "(" + c.rank.to_string() + ", " + c.degree.to_string() + ")";
}

}  // namespace frobrr

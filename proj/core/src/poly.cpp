#include "frobrr/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace frobrr {

Monomial::Monomial(std::string symbol, std::uint32_t exponent) {
  if (symbol.empty()) {
    throw std::invalid_argument("Monomial: empty symbol name");
  }
  if (exponent > 0) {
    factors_.emplace_back(std::move(symbol), exponent);
  }
}

Monomial::Monomial(std::initializer_list<Factor> factors) {
  for (const auto& [name, e] : factors) {
    *this = *this * Monomial(name, e);
  }
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(std::string_view symbol) const {
  for (const auto& [name, e] : factors_) {
    if (name == symbol) return e;
  }
  return 0;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      f.push_back(*i++);
    } else if (j->first < i->first) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  f.insert(f.end(), i, a.factors_.end());
  f.insert(f.end(), j, b.factors_.end());
  return out;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) {
      // The earlier name is present with positive exponent in one side only.
      return fa[k].first < fb[k].first;
    }
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size();
}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Poly Poly::symbol(std::string name) { return term(Rational(1), Monomial(std::move(name))); }

Poly Poly::term(const Rational& coefficient, Monomial monomial) {
  Poly p;
  p.add_term(monomial, coefficient);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Poly::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

std::uint64_t Poly::total_degree() const {
  // Leading term has the largest degree in graded order.
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * coeff);
  return out;
}

Poly operator-(const Poly& p) { return Rational(-1) * p; }

Poly Poly::pow(std::uint32_t exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(const Bindings& bindings) const {
  if (bindings.empty()) return *this;
  for (const auto& [name, replacement] : bindings) {
    for (const auto& s : replacement.symbols()) {
      if (bindings.contains(s)) {
        throw CyclicBindingError("substitute: replacement for '" + name +
                                 "' mentions bound symbol '" + s + "'");
      }
    }
  }
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly product(c);
    Monomial kept;
    for (const auto& [name, e] : m.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        kept = kept * Monomial(name, e);
      } else {
        product *= it->second.pow(e);
      }
    }
    out += product * term(Rational(1), kept);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (m.is_one()) {
      os << mag;
    } else if (mag == Rational(1)) {
      os << m.to_string();
    } else {
      os << mag << '*' << m.to_string();
    }
  }
  return os.str();
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly substitute(const Poly& p, const Poly::Bindings& bindings) { return p.substitute(bindings); }
bool is_zero(const Poly& p) { return p.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace frobrr

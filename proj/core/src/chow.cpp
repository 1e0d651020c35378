#include "frobrr/chow.hpp"

namespace frobrr::chow {

std::string DivisorClass::to_string() const {
  if (is_zero()) return "O";
  std::string out;
  auto part = [&out](std::int64_t k, const char* name) {
    if (k == 0) return;
    if (!out.empty()) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += '-';
    const std::int64_t mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + '*';
    out += name;
  };
  part(l, "L");
  part(w, "w");
  return out;
}

Poly IntersectionForm::pair(DivisorClass a, DivisorClass b) const {
  return Poly::symbol(LL) * (a.l * b.l) + Poly::symbol(Lw) * (a.l * b.w + a.w * b.l) +
         Poly::symbol(ww) * (a.w * b.w);
}

VirtualCombo::VirtualCombo(DivisorClass d, std::int64_t multiplicity) { add(d, multiplicity); }

void VirtualCombo::add(DivisorClass d, std::int64_t m) {
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t VirtualCombo::rank() const {
  std::int64_t r = 0;
  for (const auto& [d, m] : terms_) r += m;
  return r;
}

VirtualCombo& VirtualCombo::operator+=(const VirtualCombo& other) {
  for (const auto& [d, m] : other.terms_) add(d, m);
  return *this;
}

VirtualCombo& VirtualCombo::operator-=(const VirtualCombo& other) {
  for (const auto& [d, m] : other.terms_) add(d, -m);
  return *this;
}

VirtualCombo operator*(std::int64_t k, const VirtualCombo& v) {
  VirtualCombo out;
  for (const auto& [d, m] : v.terms_) out.add(d, k * m);
  return out;
}

VirtualCombo operator*(const VirtualCombo& a, const VirtualCombo& b) {
  VirtualCombo out;
  for (const auto& [da, ma] : a.terms_) {
    for (const auto& [db, mb] : b.terms_) out.add(da + db, ma * mb);
  }
  return out;
}

Poly det_degree(DivisorClass m, const IntersectionForm& form) {
  return Rational(1, 2) * form.pair(m, m - DivisorClass::omega()) +
         Poly::symbol(std::string(kLambda));
}

Poly pairing_degree(DivisorClass a, DivisorClass b, const IntersectionForm& form) {
  return form.pair(a, b);
}

Poly virtual_det_degree(const VirtualCombo& v, const IntersectionForm& form) {
  Poly out;
  for (const auto& [d, m] : v.terms()) out += m * det_degree(d, form);
  return out;
}

Poly cube_triviality(DivisorClass h0, DivisorClass h1, DivisorClass h,
                     const IntersectionForm& form) {
  const VirtualCombo diff = VirtualCombo(h0) - VirtualCombo(h1);
  return virtual_det_degree(diff * diff * diff * VirtualCombo(h), form);
}

Poly::Bindings mumford_bindings(const IntersectionForm& form) {
  Poly::Bindings b;
  b.emplace(std::string(kLambda), Rational(1, 12) * Poly::symbol(form.ww));
  return b;
}

GradedLine graded_tensor(const GradedLine& a, const GradedLine& b) {
  return {a.degree + b.degree, a.grading + b.grading};
}

int swap_sign(const GradedLine& a, const GradedLine& b) {
  return ((a.grading % 2 != 0) && (b.grading % 2 != 0)) ? -1 : 1;
}

}  // namespace frobrr::chow

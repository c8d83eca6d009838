#include "galdiff/polynomial.hpp"

#include <stdexcept>

namespace galdiff {

std::optional<int64_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int64_t>(coeffs_.size()) - 1;
}

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void PolyRing::check(const Polynomial& f) const {
  for (const FieldElement& c : f.coefficients())
    if (!k_.contains(c))
      throw std::invalid_argument("polynomial: coefficient does not belong to this field");
  if (!f.coefficients().empty() && f.coefficients().back().is_zero())
    throw std::invalid_argument("polynomial: representation not normalized");
}

Polynomial PolyRing::one() const { return constant(k_.one()); }

Polynomial PolyRing::x() const { return monomial(1, k_.one()); }

Polynomial PolyRing::constant(const FieldElement& c) const { return monomial(0, c); }

Polynomial PolyRing::monomial(uint64_t exponent, const FieldElement& c) const {
  if (!k_.contains(c)) throw std::invalid_argument("polynomial: coefficient does not belong to this field");
  if (c.is_zero()) return Polynomial();
  std::vector<FieldElement> coeffs(exponent + 1, k_.zero());
  coeffs[exponent] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial PolyRing::from_coeffs(std::vector<FieldElement> coeffs) const {
  for (const FieldElement& c : coeffs)
    if (!k_.contains(c))
      throw std::invalid_argument("polynomial: coefficient does not belong to this field");
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return Polynomial(std::move(coeffs));
}

Polynomial PolyRing::from_ints(const std::vector<int64_t>& coeffs) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs.size());
  for (int64_t v : coeffs) out.push_back(k_.from_int(v));
  return from_coeffs(std::move(out));
}

FieldElement PolyRing::coefficient(const Polynomial& f, uint64_t e) const {
  if (e >= f.coefficients().size()) return k_.zero();
  return f.coefficients()[e];
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  check(f);
  check(g);
  std::vector<FieldElement> out(std::max(f.coefficients().size(), g.coefficients().size()), k_.zero());
  for (size_t i = 0; i < f.coefficients().size(); ++i) out[i] = f.coefficients()[i];
  for (size_t i = 0; i < g.coefficients().size(); ++i) out[i] = k_.add(out[i], g.coefficients()[i]);
  return from_coeffs(std::move(out));
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  check(f);
  std::vector<FieldElement> out;
  out.reserve(f.coefficients().size());
  for (const FieldElement& c : f.coefficients()) out.push_back(k_.neg(c));
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return add(f, neg(g));
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  check(f);
  check(g);
  if (f.is_zero() || g.is_zero()) return Polynomial();
  std::vector<FieldElement> out(f.coefficients().size() + g.coefficients().size() - 1, k_.zero());
  for (size_t i = 0; i < f.coefficients().size(); ++i) {
    if (f.coefficients()[i].is_zero()) continue;
    for (size_t j = 0; j < g.coefficients().size(); ++j)
      out[i + j] = k_.add(out[i + j], k_.mul(f.coefficients()[i], g.coefficients()[j]));
  }
  return from_coeffs(std::move(out));
}

Polynomial PolyRing::scale(const Polynomial& f, const FieldElement& c) const {
  check(f);
  if (c.is_zero()) return Polynomial();
  std::vector<FieldElement> out;
  out.reserve(f.coefficients().size());
  for (const FieldElement& a : f.coefficients()) out.push_back(k_.mul(a, c));
  return from_coeffs(std::move(out));
}

Polynomial PolyRing::pow(const Polynomial& f, uint64_t e) const {
  check(f);
  Polynomial acc = one();
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> PolyRing::divmod(const Polynomial& f, const Polynomial& g) const {
  check(f);
  check(g);
  if (g.is_zero()) throw std::invalid_argument("polynomial: division by the zero polynomial");
  std::vector<FieldElement> r(f.coefficients());
  const size_t dg = g.coefficients().size() - 1;
  if (r.size() <= dg) return {Polynomial(), f};
  std::vector<FieldElement> q(r.size() - dg, k_.zero());
  const FieldElement lead_inv = k_.inv(g.leading());
  for (size_t i = r.size(); i-- > dg;) {
    if (r[i].is_zero()) continue;
    FieldElement c = k_.mul(r[i], lead_inv);
    q[i - dg] = c;
    for (size_t j = 0; j <= dg; ++j)
      r[i - dg + j] = k_.sub(r[i - dg + j], k_.mul(c, g.coefficients()[j]));
  }
  return {from_coeffs(std::move(q)), from_coeffs(std::move(r))};
}

Polynomial PolyRing::gcd(const Polynomial& f, const Polynomial& g) const {
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return scale(a, k_.inv(a.leading()));  // monic normal form
}

Polynomial PolyRing::derivative(const Polynomial& f) const {
  check(f);
  if (f.coefficients().size() <= 1) return Polynomial();
  std::vector<FieldElement> out(f.coefficients().size() - 1, k_.zero());
  for (size_t i = 1; i < f.coefficients().size(); ++i)
    out[i - 1] = k_.mul(f.coefficients()[i], k_.from_int(static_cast<int64_t>(i)));
  return from_coeffs(std::move(out));
}

FieldElement PolyRing::eval(const Polynomial& f, const FieldElement& a) const {
  check(f);
  FieldElement acc = k_.zero();
  for (size_t i = f.coefficients().size(); i-- > 0;)
    acc = k_.add(k_.mul(acc, a), f.coefficients()[i]);
  return acc;
}

bool PolyRing::is_squarefree(const Polynomial& f) const {
  if (f.is_zero()) return false;
  if (f.coefficients().size() == 1) return true;
  Polynomial g = gcd(f, derivative(f));
  return g.degree() == std::optional<int64_t>(0);
}

std::vector<int64_t> PolyRing::to_ints(const Polynomial& f) const {
  check(f);
  std::vector<int64_t> out;
  out.reserve(f.coefficients().size());
  for (const FieldElement& c : f.coefficients())
    out.push_back(static_cast<int64_t>(k_.index(c)));
  return out;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  check(f);
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = f.coefficients().size(); i-- > 0;) {
    const FieldElement& c = f.coefficients()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    uint64_t idx = k_.index(c);
    if (i == 0) {
      out += std::to_string(idx);
    } else {
      if (idx != 1) out += std::to_string(idx) + " ";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace galdiff

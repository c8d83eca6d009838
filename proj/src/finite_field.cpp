#include "galdiff/finite_field.hpp"

#include <stdexcept>

namespace galdiff {
namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Raw polynomials over F_p, little-endian coefficients, used only for the
// modulus search and for reduction inside mul.
using FpPoly = std::vector<uint32_t>;

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by a monic divisor g.
FpPoly fp_rem(FpPoly f, const FpPoly& g, uint64_t p) {
  trim(f);
  while (f.size() >= g.size()) {
    uint64_t c = f.back();
    size_t shift = f.size() - g.size();
    for (size_t k = 0; k + 1 < g.size(); ++k) {
      uint64_t t = g[k] * c % p;
      f[shift + k] = static_cast<uint32_t>((f[shift + k] + p - t) % p);
    }
    f.pop_back();  // leading term cancels, g is monic
    trim(f);
  }
  return f;
}

bool fp_irreducible(const FpPoly& f, uint64_t p) {
  size_t m = f.size() - 1;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2. Field sizes
  // here are tiny, so the exhaustive test is cheap and obviously exact.
  for (size_t d = 1; 2 * d <= m; ++d) {
    uint64_t count = 1;
    for (size_t k = 0; k < d; ++k) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      FpPoly g(d + 1, 0);
      uint64_t v = idx;
      for (size_t k = 0; k < d; ++k) {
        g[k] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (fp_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FpPoly find_modulus(uint64_t p, uint64_t m) {
  uint64_t count = 1;
  for (uint64_t k = 0; k < m; ++k) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    FpPoly f(m + 1, 0);
    uint64_t v = idx;
    for (uint64_t k = 0; k < m; ++k) {
      f[k] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (fp_irreducible(f, p)) return f;
  }
  throw std::logic_error("finite_field: no irreducible modulus found");
}

}  // namespace

bool FieldElement::is_zero() const {
  for (uint32_t d : digits_)
    if (d != 0) return false;
  return true;
}

FiniteField::FiniteField(int64_t p, int64_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("finite_field: characteristic must be prime");
  if (m < 1) throw std::invalid_argument("finite_field: extension degree must be >= 1");
  q_ = 1;
  for (int64_t k = 0; k < m; ++k) {
    q_ *= static_cast<uint64_t>(p);
    if (q_ > (uint64_t(1) << 31)) throw std::invalid_argument("finite_field: field too large");
  }
  modulus_ = find_modulus(static_cast<uint64_t>(p), static_cast<uint64_t>(m));
}

void FiniteField::check(const FieldElement& a) const {
  if (!contains(a))
    throw std::invalid_argument("finite_field: element does not belong to this field");
}

bool FiniteField::contains(const FieldElement& a) const {
  if (a.digits().size() != static_cast<size_t>(m_)) return false;
  for (uint32_t d : a.digits())
    if (d >= static_cast<uint64_t>(p_)) return false;
  return true;
}

FieldElement FiniteField::zero() const {
  return FieldElement(std::vector<uint32_t>(static_cast<size_t>(m_), 0));
}

FieldElement FiniteField::one() const {
  std::vector<uint32_t> d(static_cast<size_t>(m_), 0);
  d[0] = 1;
  return FieldElement(std::move(d));
}

FieldElement FiniteField::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  std::vector<uint32_t> d(static_cast<size_t>(m_), 0);
  d[0] = static_cast<uint32_t>(r);
  return FieldElement(std::move(d));
}

FieldElement FiniteField::from_digits(std::vector<uint32_t> digits) const {
  FieldElement a(std::move(digits));
  check(a);
  return a;
}

FieldElement FiniteField::element(uint64_t index) const {
  if (index >= q_) throw std::invalid_argument("finite_field: element index out of range");
  std::vector<uint32_t> d(static_cast<size_t>(m_), 0);
  for (int64_t k = 0; k < m_; ++k) {
    d[static_cast<size_t>(k)] = static_cast<uint32_t>(index % static_cast<uint64_t>(p_));
    index /= static_cast<uint64_t>(p_);
  }
  return FieldElement(std::move(d));
}

uint64_t FiniteField::index(const FieldElement& a) const {
  check(a);
  uint64_t idx = 0;
  for (size_t k = a.digits().size(); k-- > 0;)
    idx = idx * static_cast<uint64_t>(p_) + a.digits()[k];
  return idx;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<uint32_t> d(static_cast<size_t>(m_));
  for (size_t k = 0; k < d.size(); ++k)
    d[k] = static_cast<uint32_t>((uint64_t(a.digits()[k]) + b.digits()[k]) % uint64_t(p_));
  return FieldElement(std::move(d));
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<uint32_t> d(static_cast<size_t>(m_));
  for (size_t k = 0; k < d.size(); ++k)
    d[k] = static_cast<uint32_t>((uint64_t(a.digits()[k]) + uint64_t(p_) - b.digits()[k]) % uint64_t(p_));
  return FieldElement(std::move(d));
}

FieldElement FiniteField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const uint64_t p = static_cast<uint64_t>(p_);
  FpPoly conv(2 * static_cast<size_t>(m_), 0);
  for (size_t i = 0; i < a.digits().size(); ++i) {
    if (a.digits()[i] == 0) continue;
    for (size_t j = 0; j < b.digits().size(); ++j)
      conv[i + j] = static_cast<uint32_t>((conv[i + j] + uint64_t(a.digits()[i]) * b.digits()[j]) % p);
  }
  FpPoly r = fp_rem(std::move(conv), modulus_, p);
  r.resize(static_cast<size_t>(m_), 0);
  return FieldElement(std::move(r));
}

FieldElement FiniteField::pow(const FieldElement& a, uint64_t e) const {
  check(a);
  FieldElement acc = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw std::invalid_argument("finite_field: division by zero");
  return pow(a, q_ - 2);
}

FieldElement FiniteField::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement FiniteField::frobenius_root(const FieldElement& a) const {
  check(a);
  FieldElement d = a;
  for (int64_t k = 1; k < m_; ++k) d = pow(d, static_cast<uint64_t>(p_));
  return d;
}

uint64_t FiniteField::multiplicative_order(const FieldElement& a) const {
  check(a);
  if (a.is_zero())
    throw std::invalid_argument("finite_field: multiplicative order of zero is undefined");
  uint64_t t = 1;
  FieldElement acc = a;
  const FieldElement unit = one();
  while (!(acc == unit)) {
    acc = mul(acc, a);
    ++t;
  }
  return t;
}

FieldElement FiniteField::primitive_root_of_unity(uint64_t n) const {
  if (n == 0) throw std::invalid_argument("finite_field: root-of-unity order must be positive");
  if (n == 1) return one();
  if ((q_ - 1) % n != 0)
    throw std::invalid_argument(
        "finite_field: n does not divide q - 1; enlarge the extension degree m");
  for (uint64_t idx = 2; idx < q_; ++idx) {
    FieldElement a = element(idx);
    if (multiplicative_order(a) == n) return a;
  }
  throw std::logic_error("finite_field: cyclic group F_q* has an element of every dividing order");
}

std::string FiniteField::to_string(const FieldElement& a) const {
  return std::to_string(index(a));
}

}  // namespace galdiff

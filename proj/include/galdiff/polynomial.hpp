#ifndef GALDIFF_POLYNOMIAL_HPP
#define GALDIFF_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galdiff/finite_field.hpp"

namespace galdiff {

// Univariate polynomial over a finite field, little-endian coefficients.
// Normalized: the highest stored coefficient is nonzero, the zero polynomial
// stores nothing. degree() of the zero polynomial is nullopt, never an
// integer.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int64_t> degree() const;
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  const FieldElement& leading() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<FieldElement> coeffs_;
};

// The polynomial ring F_q[x] over a borrowed field context.
class PolyRing {
 public:
  explicit PolyRing(const FiniteField& field) : k_(field) {}

  const FiniteField& field() const { return k_; }

  Polynomial zero() const { return Polynomial(); }
  Polynomial one() const;
  Polynomial x() const;
  Polynomial constant(const FieldElement& c) const;
  Polynomial monomial(uint64_t exponent, const FieldElement& c) const;
  Polynomial from_coeffs(std::vector<FieldElement> coeffs) const;  // trims
  Polynomial from_ints(const std::vector<int64_t>& coeffs) const;

  // Coefficient of x^e, zero beyond the degree.
  FieldElement coefficient(const Polynomial& f, uint64_t e) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, const FieldElement& c) const;
  Polynomial pow(const Polynomial& f, uint64_t e) const;

  // Quotient and remainder with deg(rem) < deg(g). g must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) const;

  Polynomial gcd(const Polynomial& f, const Polynomial& g) const;  // monic
  Polynomial derivative(const Polynomial& f) const;
  FieldElement eval(const Polynomial& f, const FieldElement& a) const;
  bool is_squarefree(const Polynomial& f) const;

  std::vector<int64_t> to_ints(const Polynomial& f) const;  // element indices
  std::string to_string(const Polynomial& f) const;

 private:
  const FiniteField& k_;
  void check(const Polynomial& f) const;
};

}  // namespace galdiff

#endif

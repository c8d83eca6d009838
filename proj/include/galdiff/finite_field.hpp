#ifndef GALDIFF_FINITE_FIELD_HPP
#define GALDIFF_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace galdiff {

// Element of a finite field F_{p^m}, stored as the base-p digit vector
// (c_0, ..., c_{m-1}) of the residue c_0 + c_1 u + ... + c_{m-1} u^{m-1}
// modulo the field's irreducible modulus. The representation is canonical:
// two elements are equal iff their digit vectors are identical. Elements
// carry no reference to their field; a FiniteField validates membership on
// every operation.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<uint32_t> digits) : digits_(std::move(digits)) {}

  const std::vector<uint32_t>& digits() const { return digits_; }
  bool is_zero() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<uint32_t> digits_;
};

// Arithmetic context for F_{p^m}. Owns (p, m, modulus); all operations are
// pure and validate that their operands belong to this field.
//
// The modulus is the first monic irreducible polynomial of degree m over
// F_p, candidates enumerated by ascending base-p value of the coefficient
// vector, so element representations are reproducible across runs.
class FiniteField {
 public:
  explicit FiniteField(int64_t p, int64_t m = 1);

  int64_t characteristic() const { return p_; }
  int64_t degree() const { return m_; }
  uint64_t size() const { return q_; }

  // Monic irreducible modulus, little-endian F_p coefficients, length m+1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(int64_t v) const;  // image of v under Z -> F_q
  FieldElement from_digits(std::vector<uint32_t> digits) const;
  FieldElement element(uint64_t index) const;  // base-p digits of index
  uint64_t index(const FieldElement& a) const;
  bool contains(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, uint64_t e) const;

  // The unique d with d^p = a, computed as a^(p^(m-1)). The Frobenius is
  // bijective on a finite field, so this never fails.
  FieldElement frobenius_root(const FieldElement& a) const;

  uint64_t multiplicative_order(const FieldElement& a) const;

  // First element in enumeration order of exact multiplicative order n.
  // Requires n | q - 1.
  FieldElement primitive_root_of_unity(uint64_t n) const;

  std::string to_string(const FieldElement& a) const;

 private:
  int64_t p_;
  int64_t m_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;

  void check(const FieldElement& a) const;
};

}  // namespace galdiff

#endif

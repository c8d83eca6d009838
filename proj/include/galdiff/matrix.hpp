#ifndef GALDIFF_MATRIX_HPP
#define GALDIFF_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "galdiff/finite_field.hpp"

namespace galdiff {

// Dense square matrix over a finite field, row-major. The field is carried by
// value so a matrix stays usable independently of the context it was built
// from. A 0x0 matrix is the identity of the empty representation.
class SquareMatrix {
 public:
  SquareMatrix(const FiniteField& field, size_t n);  // zero matrix
  static SquareMatrix identity_matrix(const FiniteField& field, size_t n);

  const FiniteField& field() const { return field_; }
  size_t size() const { return n_; }
  const FieldElement& at(size_t row, size_t col) const;
  void set(size_t row, size_t col, FieldElement value);

 private:
  FiniteField field_;
  size_t n_;
  std::vector<FieldElement> entries_;
};

// Equality of sizes and entries; the representation is canonical, so this is
// mathematical equality for matrices over the same field.
bool operator==(const SquareMatrix& a, const SquareMatrix& b);
inline bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_pow(const SquareMatrix& m, uint64_t e);
size_t mat_rank(SquareMatrix m);  // exact Gaussian elimination on a copy
bool is_identity(const SquareMatrix& m);
bool is_diagonal(const SquareMatrix& m);

}  // namespace galdiff

#endif

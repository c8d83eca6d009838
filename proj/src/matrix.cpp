#include "galdiff/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace galdiff {

SquareMatrix::SquareMatrix(const FiniteField& field, size_t n)
    : field_(field), n_(n), entries_(n * n, field.zero()) {}

SquareMatrix SquareMatrix::identity_matrix(const FiniteField& field, size_t n) {
  SquareMatrix m(field, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

const FieldElement& SquareMatrix::at(size_t row, size_t col) const {
  if (row >= n_ || col >= n_) throw std::out_of_range("matrix index out of range");
  return entries_[row * n_ + col];
}

void SquareMatrix::set(size_t row, size_t col, FieldElement value) {
  if (row >= n_ || col >= n_) throw std::out_of_range("matrix index out of range");
  entries_[row * n_ + col] = std::move(value);
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix sizes differ");
  const FiniteField& field = a.field();
  SquareMatrix out(field, a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      FieldElement sum = field.zero();
      for (size_t k = 0; k < a.size(); ++k)
        sum = field.add(sum, field.mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, std::move(sum));
    }
  return out;
}

SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix sizes differ");
  SquareMatrix out(a.field(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) out.set(i, j, a.field().sub(a.at(i, j), b.at(i, j)));
  return out;
}

SquareMatrix mat_pow(const SquareMatrix& m, uint64_t e) {
  SquareMatrix result = SquareMatrix::identity_matrix(m.field(), m.size());
  SquareMatrix base = m;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return result;
}

size_t mat_rank(SquareMatrix m) {
  const FiniteField& field = m.field();
  size_t rank = 0;
  for (size_t col = 0; col < m.size() && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    if (pivot != rank)
      for (size_t j = 0; j < m.size(); ++j) {
        FieldElement tmp = m.at(rank, j);
        m.set(rank, j, m.at(pivot, j));
        m.set(pivot, j, std::move(tmp));
      }
    FieldElement inv_pivot = field.inv(m.at(rank, col));
    for (size_t i = rank + 1; i < m.size(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldElement factor = field.mul(m.at(i, col), inv_pivot);
      for (size_t j = col; j < m.size(); ++j)
        m.set(i, j, field.sub(m.at(i, j), field.mul(factor, m.at(rank, j))));
    }
    ++rank;
  }
  return rank;
}

bool is_identity(const SquareMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) {
      const FieldElement& want = i == j ? m.field().one() : m.field().zero();
      if (!(m.at(i, j) == want)) return false;
    }
  return true;
}

bool is_diagonal(const SquareMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace galdiff

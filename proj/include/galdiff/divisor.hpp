#ifndef GALDIFF_DIVISOR_HPP
#define GALDIFF_DIVISOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace galdiff {

// Divisor on a curve: a finite map from opaque place labels to nonzero
// integer coefficients. Places have residue degree 1 throughout, so the
// degree is the plain coefficient sum. Zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;

  int64_t coefficient(const std::string& label) const;
  void add_to(const std::string& label, int64_t c);  // drops entries that cancel
  int64_t degree() const;
  size_t support_size() const { return coeffs_.size(); }
  const std::map<std::string, int64_t>& coefficients() const { return coeffs_; }

  Divisor& operator+=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend bool operator==(const Divisor&, const Divisor&) = default;

  nlohmann::json to_json() const;  // sorted {label: coefficient} object

 private:
  std::map<std::string, int64_t> coeffs_;
};

// Fiber-level data for a G-invariant divisor on a cover: at the place below,
// every point above shares the ramification index e and the coefficient n_Q.
struct FiberDatum {
  std::string place;
  int64_t ram_index = 1;  // e_Q >= 1, must divide the group order
  int64_t coeff = 0;      // n_Q, coefficient at each point above
};

// Floor division with sign convention floor(a/b), b > 0.
int64_t floor_div(int64_t a, int64_t b);

// Divisor on the quotient curve whose coefficient at Q is floor(n_Q / e_Q),
// equivalently floor(m_Q / n) for the pushforward coefficient
// m_Q = (n / e_Q) * n_Q. Requires e_Q | n for every fiber.
Divisor equivariant_floor_pushforward(const std::vector<FiberDatum>& fibers, int64_t group_order);

// Dimension of the space of global sections of a degree-d invertible sheaf
// on the projective line: d + 1 for d >= 0, else 0.
int64_t rr_dimension_genus0(int64_t d);

}  // namespace galdiff

#endif

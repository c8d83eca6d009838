#include "galdiff/divisor.hpp"

#include <stdexcept>

namespace galdiff {

int64_t Divisor::coefficient(const std::string& label) const {
  auto it = coeffs_.find(label);
  return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::add_to(const std::string& label, int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(label, 0);
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

int64_t Divisor::degree() const {
  int64_t d = 0;
  for (const auto& [label, c] : coeffs_) d += c;
  return d;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [label, c] : other.coeffs_) add_to(label, c);
  return *this;
}

nlohmann::json Divisor::to_json() const {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [label, c] : coeffs_) obj[label] = c;
  return obj;
}

int64_t floor_div(int64_t a, int64_t b) {
  if (b <= 0) throw std::invalid_argument("floor_div requires a positive divisor");
  int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Divisor equivariant_floor_pushforward(const std::vector<FiberDatum>& fibers, int64_t group_order) {
  if (group_order < 1) throw std::invalid_argument("group order must be positive");
  Divisor result;
  for (const auto& fiber : fibers) {
    if (fiber.ram_index < 1 || group_order % fiber.ram_index != 0)
      throw std::invalid_argument("ramification index must divide the group order");
    result.add_to(fiber.place, floor_div(fiber.coeff, fiber.ram_index));
  }
  return result;
}

int64_t rr_dimension_genus0(int64_t d) { return d >= 0 ? d + 1 : 0; }

}  // namespace galdiff

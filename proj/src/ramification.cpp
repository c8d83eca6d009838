#include "galdiff/ramification.hpp"

#include <stdexcept>

namespace galdiff {
namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool tame_at(int64_t p, int64_t e) { return p == 0 || e % p != 0; }

}  // namespace

void RamificationProfile::validate() const {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or prime");
  if (g_y < 0) throw std::invalid_argument("quotient genus must be nonnegative");
  for (const auto& bp : branch) {
    if (bp.e < 2) throw std::invalid_argument("branch points need ramification index >= 2");
    if (n % bp.e != 0) throw std::invalid_argument("ramification index must divide the group order");
    if (tame_at(p, bp.e)) {
      if (bp.d != bp.e - 1)
        throw std::invalid_argument("tame branch point must have different exponent e - 1");
    } else if (bp.d < bp.e) {
      throw std::invalid_argument("wild branch point must have different exponent >= e");
    }
  }
}

bool RamificationProfile::tame() const {
  for (const auto& bp : branch)
    if (!tame_at(p, bp.e)) return false;
  return true;
}

int64_t RamificationProfile::deg_ramification() const {
  int64_t deg = 0;
  for (const auto& bp : branch) deg += (n / bp.e) * bp.d;
  return deg;
}

int64_t RamificationProfile::deg_floor_pushforward() const {
  std::vector<FiberDatum> fibers;
  fibers.reserve(branch.size());
  for (size_t i = 0; i < branch.size(); ++i)
    fibers.push_back({"Q" + std::to_string(i), branch[i].e, branch[i].d});
  return equivariant_floor_pushforward(fibers, n).degree();
}

RamificationProfile RamificationProfile::from_json(const nlohmann::json& j) {
  RamificationProfile profile;
  profile.n = j.at("n").get<int64_t>();
  profile.p = j.at("p").get<int64_t>();
  profile.g_y = j.at("gY").get<int64_t>();
  for (const auto& item : j.at("branch"))
    profile.branch.push_back({item.at("e").get<int64_t>(), item.at("d").get<int64_t>()});
  profile.validate();
  return profile;
}

void CyclicPJumps::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (jumps.empty()) throw std::invalid_argument("at least one ramification jump is required");
  for (int64_t jump : jumps) {
    if (jump < 1) throw std::invalid_argument("ramification jumps must be positive");
    if (jump % p == 0) throw std::invalid_argument("ramification jumps must be prime to p");
  }
}

int64_t CyclicPJumps::total() const {
  int64_t sum = 0;
  for (int64_t jump : jumps) sum += jump;
  return sum;
}

CyclicPJumps CyclicPJumps::from_json(const nlohmann::json& j) {
  CyclicPJumps data;
  data.p = j.at("p").get<int64_t>();
  data.jumps = j.at("jumps").get<std::vector<int64_t>>();
  data.validate();
  return data;
}

JumpDecomposition decompose_jumps(const CyclicPJumps& data) {
  data.validate();
  JumpDecomposition dec;
  for (int64_t jump : data.jumps) {
    dec.s.push_back(jump / data.p);
    dec.t.push_back(jump % data.p);
    dec.S += jump / data.p;
    dec.T += jump % data.p;
  }
  return dec;
}

Divisor ramification_divisor_tame(const std::vector<int64_t>& e_list, int64_t n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  Divisor divisor;
  for (size_t i = 0; i < e_list.size(); ++i) {
    int64_t e = e_list[i];
    if (e < 1 || n % e != 0)
      throw std::invalid_argument("ramification index must divide the group order");
    for (int64_t j = 0; j < n / e; ++j)
      divisor.add_to("P" + std::to_string(i) + "." + std::to_string(j), e - 1);
  }
  return divisor;
}

int64_t different_exponent_cyclic_p(int64_t jump, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (jump < 1) throw std::invalid_argument("ramification jump must be positive");
  if (jump % p == 0) throw std::invalid_argument("ramification jump must be prime to p");
  return (jump + 1) * (p - 1);
}

int64_t hurwitz_genus(int64_t n, int64_t g_y, int64_t deg_r) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (g_y < 0) throw std::invalid_argument("quotient genus must be nonnegative");
  if (deg_r < 0) throw std::invalid_argument("ramification degree must be nonnegative");
  int64_t rhs = 2 * n * (g_y - 1) + deg_r;
  if (rhs % 2 != 0) throw std::invalid_argument("ramification data violates Hurwitz parity");
  int64_t g_x = rhs / 2 + 1;
  if (g_x < 0) throw std::invalid_argument("ramification data gives negative genus");
  return g_x;
}

int64_t artin_schreier_genus(const CyclicPJumps& data) {
  data.validate();
  return (data.total() + data.r() - 2) * (data.p - 1) / 2;
}

int64_t invariant_dimension(int64_t g_y, int64_t deg_floor) {
  if (g_y < 0) throw std::invalid_argument("quotient genus must be nonnegative");
  if (deg_floor < 0) throw std::invalid_argument("floor pushforward degree must be nonnegative");
  return deg_floor == 0 ? g_y : g_y - 1 + deg_floor;
}

int64_t invariant_dimension_cyclic_p(const CyclicPJumps& data) {
  data.validate();
  int64_t dim = -1 + data.total() + data.r();
  int64_t deg_floor = 0;
  for (int64_t jump : data.jumps) {
    dim += floor_div(-(jump + 1), data.p);
    deg_floor += floor_div(different_exponent_cyclic_p(jump, data.p), data.p);
  }
  // Both expressions compute the same dimension; divergence means the
  // arithmetic above is broken.
  if (dim < 0 || dim != invariant_dimension(0, deg_floor))
    throw std::logic_error("invariant dimension routes disagree");
  return dim;
}

FaithfulnessVerdict classify_faithfulness(const RamificationProfile& profile, int64_t g_x) {
  profile.validate();
  if (g_x != hurwitz_genus(profile.n, profile.g_y, profile.deg_ramification()))
    throw std::invalid_argument("genus is inconsistent with the ramification profile");
  bool excluded_family = !profile.tame() && profile.g_y == 0 && profile.p == 2;
  if (g_x >= 2 && !excluded_family) return FaithfulnessVerdict::FaithfulGuaranteed;
  return FaithfulnessVerdict::PossiblyUnfaithful;
}

FaithfulnessVerdict classify_faithfulness(const RamificationProfile& profile) {
  profile.validate();
  return classify_faithfulness(
      profile, hurwitz_genus(profile.n, profile.g_y, profile.deg_ramification()));
}

ActionTriviality classify_cyclic_p_action(const CyclicPJumps& data) {
  int64_t g_x = artin_schreier_genus(data);
  if (data.p == 2 || g_x == 0 || (data.p == 3 && g_x == 1)) return ActionTriviality::TrivialAction;
  return ActionTriviality::NontrivialAction;
}

std::string to_string(FaithfulnessVerdict v) {
  return v == FaithfulnessVerdict::FaithfulGuaranteed ? "FaithfulGuaranteed" : "PossiblyUnfaithful";
}

std::string to_string(ActionTriviality t) {
  return t == ActionTriviality::TrivialAction ? "TrivialAction" : "NontrivialAction";
}

}  // namespace galdiff

#ifndef GALDIFF_RAMIFICATION_HPP
#define GALDIFF_RAMIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "galdiff/divisor.hpp"

namespace galdiff {

// One branch point of a degree-n Galois cover: the common ramification index
// e of the points above it and their common different exponent d.
struct BranchPoint {
  int64_t e = 1;
  int64_t d = 0;
  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

// Ramification data of a Galois cover X -> Y with group of order n over a
// field of characteristic p. p = 0 is allowed for formula-only use; then
// every point is tame.
struct RamificationProfile {
  int64_t n = 1;
  int64_t p = 0;
  int64_t g_y = 0;
  std::vector<BranchPoint> branch;

  // Checks e | n, e >= 2, and the tame/wild dichotomy: p does not divide e
  // forces d = e - 1, p | e forces d >= e.
  void validate() const;

  bool tame() const;  // no branch point has p | e
  int64_t deg_ramification() const;       // deg R = sum (n/e) d
  int64_t deg_floor_pushforward() const;  // deg of the divisor with coefficient floor(d/e) per branch point

  static RamificationProfile from_json(const nlohmann::json& j);
};

// Ramification jumps N_1..N_r of a cyclic cover of prime order p, each prime
// to p. The quotient curve is the projective line in every use below.
struct CyclicPJumps {
  int64_t p = 2;
  std::vector<int64_t> jumps;

  void validate() const;
  int64_t r() const { return static_cast<int64_t>(jumps.size()); }
  int64_t total() const;  // N = sum of the jumps

  static CyclicPJumps from_json(const nlohmann::json& j);
};

// Base-p split N_i = s_i p + t_i with t_i in 1..p-1, plus the sums S and T.
struct JumpDecomposition {
  std::vector<int64_t> s;
  std::vector<int64_t> t;
  int64_t S = 0;
  int64_t T = 0;
};

JumpDecomposition decompose_jumps(const CyclicPJumps& data);

// Ramification divisor of a tame cover of degree n: above branch point i sit
// n/e_i points, labelled "P<i>.<j>", each with coefficient e_i - 1.
Divisor ramification_divisor_tame(const std::vector<int64_t>& e_list, int64_t n);

// Different exponent (N + 1)(p - 1) at a point of a cyclic order-p cover with
// ramification jump N. Requires p not dividing N.
int64_t different_exponent_cyclic_p(int64_t jump, int64_t p);

// Genus of X from 2(g_X - 1) = 2n(g_Y - 1) + deg R. A parity violation or a
// negative genus means the data describe no cover and is reported, not
// clamped.
int64_t hurwitz_genus(int64_t n, int64_t g_y, int64_t deg_r);

// Genus (N + r - 2)(p - 1)/2 of a cyclic order-p cover of the line with the
// given jumps.
int64_t artin_schreier_genus(const CyclicPJumps& data);

// Dimension of the space of differentials fixed by the whole group: g_Y when
// the floor pushforward of the ramification divisor vanishes, otherwise
// g_Y - 1 + its degree.
int64_t invariant_dimension(int64_t g_y, int64_t deg_floor);

// The same dimension for a cyclic order-p cover of the line, computed as
// -1 + N + r + sum floor(-(N_i+1)/p). The two routes are algebraically equal;
// a mismatch is an internal defect, not bad input.
int64_t invariant_dimension_cyclic_p(const CyclicPJumps& data);

enum class FaithfulnessVerdict { FaithfulGuaranteed, PossiblyUnfaithful };

// Sufficient criterion only: FaithfulGuaranteed when g_X >= 2 and the cover
// is not simultaneously wild, over a genus-0 quotient, in characteristic 2.
// Everything else is PossiblyUnfaithful; no instance is ever declared
// unfaithful.
FaithfulnessVerdict classify_faithfulness(const RamificationProfile& profile, int64_t g_x);
FaithfulnessVerdict classify_faithfulness(const RamificationProfile& profile);

enum class ActionTriviality { TrivialAction, NontrivialAction };

// A cyclic order-p cover of the line acts trivially on differentials exactly
// when p = 2, or g_X = 0, or p = 3 with g_X = 1.
ActionTriviality classify_cyclic_p_action(const CyclicPJumps& data);

std::string to_string(FaithfulnessVerdict v);
std::string to_string(ActionTriviality t);

}  // namespace galdiff

#endif

#ifndef GALDIFF_COVERS_HPP
#define GALDIFF_COVERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galdiff/finite_field.hpp"
#include "galdiff/matrix.hpp"
#include "galdiff/polynomial.hpp"
#include "galdiff/ramification.hpp"

namespace galdiff {

// Explicit cyclic covers of the projective line, in two families:
//
//   ArtinSchreier   y^p - y = f(x)   group Z/p generated by sigma: y -> y+1,
//                                    wildly ramified at the one point over
//                                    infinity, jump N = deg f (f reduced,
//                                    gcd(N, p) = 1), unramified elsewhere.
//   Kummer          y^n = f(x)       group Z/n generated by sigma: y -> zeta y,
//                                    gcd(n, p) = 1, f squarefree with
//                                    gcd(n, deg f) = 1, tamely ramified over
//                                    each root of f and over infinity.
//
// Valuations of the coordinate functions at the ramified places, with
// m = deg f and N as above:
//
//             ord(x)            ord(y)   ord(dx)
//   AS, over infinity:     -p   -N       -2p + (N+1)(p-1)
//   Kummer, over infinity: -n   -m       -n - 1
//   Kummer, over root a:   n if a = 0, else 0
//                                1        n - 1
//
// Everything else (bases, matrices, dimensions) is derived from these rules.

enum class CoverKind { ArtinSchreier, Kummer };

struct CoverSpec {
  CoverKind kind;
  FiniteField field;
  Polynomial f;  // reduced for ArtinSchreier
  int64_t n;     // group order: p for ArtinSchreier

  // Builds y^p - y = f over F_p, applying Artin-Schreier reduction to f.
  static CoverSpec artin_schreier(int64_t p, const std::vector<int64_t>& f_coeffs);

  // Builds y^n = f over F_{p^m} with the smallest m such that n | p^m - 1.
  static CoverSpec kummer(int64_t p, int64_t n, const std::vector<int64_t>& f_coeffs);

  // {"kind":"as"|"kummer", "p":..., "f":[c0,c1,...], "n":...}; "n" is
  // ignored for "as" (the group order is p).
  static CoverSpec from_json(const nlohmann::json& j);

  void validate() const;
  int64_t f_degree() const;
};

// Result of removing every removable monomial x^e with p | e from f via
// f -> f - (h^p - h): reduced = f - (witness^p - witness). Constants cannot
// be removed (h^p - h kills constants), so a polynomial that reduces to a
// constant describes a split cover and is rejected.
struct ArtinSchreierReduction {
  Polynomial reduced;
  Polynomial witness;
};

ArtinSchreierReduction artin_schreier_reduce(const PolyRing& ring, const Polynomial& f);
bool is_artin_schreier_reduced(const PolyRing& ring, const Polynomial& f);

// For a reduced f the cover branches only over infinity, with jump deg f.
CyclicPJumps artin_schreier_jumps(const CoverSpec& spec);

// A modeled place of the cover: the single point over infinity, a point over
// a rational root of f (Kummer only), or any unramified finite place.
struct Place {
  enum class Kind { Infinity, BranchRoot, GenericFinite };

  Kind kind = Kind::GenericFinite;
  FieldElement root;  // meaningful only for BranchRoot

  static Place infinity() { return {Kind::Infinity, FieldElement()}; }
  static Place branch_root(FieldElement a) { return {Kind::BranchRoot, std::move(a)}; }
  static Place generic_finite() { return {Kind::GenericFinite, FieldElement()}; }
};

// Order of x^i y^j dx (ArtinSchreier) or x^i y^{-j} dx (Kummer) at the given
// place, by linearity from the table above. Requires 0 <= j < n and i >= 0.
int64_t monomial_valuation(const CoverSpec& spec, int64_t i, int64_t j, const Place& place);

struct BasisMonomial {
  int64_t i = 0;
  int64_t j = 0;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// Monomial basis of the global holomorphic differentials, sorted
// lexicographically by (j, i). Cardinality equals the genus; this is checked
// at construction, not assumed.
struct DifferentialBasis {
  CoverKind kind = CoverKind::ArtinSchreier;
  std::vector<BasisMonomial> monomials;

  size_t genus() const { return monomials.size(); }
  std::optional<size_t> find(int64_t i, int64_t j) const;
  std::string monomial_string(size_t index) const;  // "x^2 y dx", "x dx/y^3"
};

// All x^i y^j dx with 0 <= j <= p-2 holomorphic at infinity (the only
// possible pole). Throws logic_error if the search box touches its boundary
// or the count disagrees with the genus formula.
DifferentialBasis artin_schreier_basis(const CoverSpec& spec);

// All x^i y^{-j} dx with 1 <= j <= n-1 holomorphic at infinity and above
// every rational root of f. Count must equal (n-1)(deg f - 1)/2.
DifferentialBasis kummer_basis(const CoverSpec& spec);

// Matrix of sigma on the basis, columns holding images: column k lists the
// coefficients of sigma(basis[k]). Artin-Schreier expands
// x^i (y+1)^j dx by binomials mod p; Kummer is diagonal with entries
// zeta^{-j}.
SquareMatrix artin_schreier_action_matrix(const CoverSpec& spec, const DifferentialBasis& basis);
SquareMatrix kummer_action_matrix(const CoverSpec& spec, const DifferentialBasis& basis,
                                  const FieldElement& zeta);

// dim ker(M - I), the dimension of the subspace fixed by sigma (hence by the
// whole cyclic group).
int64_t fixed_subspace_dim(const SquareMatrix& m);

// Number of t in 0..ord_sigma-1 with M^t = I; the action is faithful iff the
// result is 1. Requires M^ord_sigma = I.
int64_t action_kernel_order(const SquareMatrix& m, int64_t ord_sigma);

}  // namespace galdiff

#endif

#include "galdiff/covers.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace galdiff {
namespace {

// Smallest m with n | p^m - 1, so that F_{p^m} contains the n-th roots of
// unity. Exists exactly when gcd(n, p) = 1.
int64_t kummer_field_degree(int64_t p, int64_t n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  if (std::gcd(p, n) != 1)
    throw std::invalid_argument("Kummer degree must be prime to the characteristic");
  int64_t val = 1 % n;
  for (int64_t m = 1; m <= n; ++m) {
    val = (val * p) % n;
    if (val == 1 % n) return m;
  }
  throw std::logic_error("order of p modulo n exceeds n");
}

}  // namespace

CoverSpec CoverSpec::artin_schreier(int64_t p, const std::vector<int64_t>& f_coeffs) {
  FiniteField field(p);
  PolyRing ring(field);
  ArtinSchreierReduction red = artin_schreier_reduce(ring, ring.from_ints(f_coeffs));
  CoverSpec spec{CoverKind::ArtinSchreier, std::move(field), std::move(red.reduced), p};
  spec.validate();
  return spec;
}

CoverSpec CoverSpec::kummer(int64_t p, int64_t n, const std::vector<int64_t>& f_coeffs) {
  FiniteField field(p, kummer_field_degree(p, n));
  PolyRing ring(field);
  Polynomial f = ring.from_ints(f_coeffs);
  CoverSpec spec{CoverKind::Kummer, std::move(field), std::move(f), n};
  spec.validate();
  return spec;
}

CoverSpec CoverSpec::from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int64_t p = j.at("p").get<int64_t>();
  std::vector<int64_t> f = j.at("f").get<std::vector<int64_t>>();
  if (kind == "as") return artin_schreier(p, f);
  if (kind == "kummer") return kummer(p, j.at("n").get<int64_t>(), f);
  throw std::invalid_argument("unknown cover kind: " + kind);
}

void CoverSpec::validate() const {
  PolyRing ring(field);
  if (f.is_zero() || *f.degree() < 1) throw std::invalid_argument("f must be nonconstant");
  int64_t m = *f.degree();
  if (kind == CoverKind::ArtinSchreier) {
    if (n != field.characteristic())
      throw std::invalid_argument("Artin-Schreier group order must equal the characteristic");
    if (field.degree() != 1)
      throw std::invalid_argument("Artin-Schreier covers live over the prime field");
    if (!is_artin_schreier_reduced(ring, f))
      throw std::invalid_argument("f must be in reduced form");
  } else {
    if (n < 1) throw std::invalid_argument("cover degree must be positive");
    if (std::gcd(n, field.characteristic()) != 1)
      throw std::invalid_argument("Kummer degree must be prime to the characteristic");
    if (std::gcd(n, m) != 1) throw std::invalid_argument("Kummer degree must be prime to deg f");
    if ((static_cast<int64_t>(field.size()) - 1) % n != 0)
      throw std::invalid_argument("the field lacks the required roots of unity");
    if (!ring.is_squarefree(f)) throw std::invalid_argument("f must be squarefree");
  }
}

int64_t CoverSpec::f_degree() const {
  if (f.is_zero()) throw std::invalid_argument("f must be nonconstant");
  return *f.degree();
}

ArtinSchreierReduction artin_schreier_reduce(const PolyRing& ring, const Polynomial& f) {
  const FiniteField& field = ring.field();
  int64_t p = field.characteristic();
  if (f.is_zero() || *f.degree() < 1)
    throw std::invalid_argument("split cover: f is constant");
  int64_t deg = *f.degree();
  std::vector<FieldElement> c = f.coefficients();
  std::vector<FieldElement> h(static_cast<size_t>(deg / p + 1), field.zero());
  // Descending pass: removing x^e deposits a term at e/p, which the pass
  // visits later, so cascades resolve in one sweep.
  for (int64_t e = deg; e >= p; --e) {
    if (e % p != 0 || c[e].is_zero()) continue;
    FieldElement b = field.frobenius_root(c[e]);
    h[e / p] = field.add(h[e / p], b);
    c[e / p] = field.add(c[e / p], b);
    c[e] = field.zero();
  }
  Polynomial reduced = ring.from_coeffs(std::move(c));
  if (reduced.is_zero() || *reduced.degree() < 1)
    throw std::invalid_argument("degenerate cover: f reduces to a constant");
  return {std::move(reduced), ring.from_coeffs(std::move(h))};
}

bool is_artin_schreier_reduced(const PolyRing& ring, const Polynomial& f) {
  if (f.is_zero() || *f.degree() < 1) return false;
  int64_t p = ring.field().characteristic();
  const auto& c = f.coefficients();
  for (int64_t e = p; e < static_cast<int64_t>(c.size()); e += p)
    if (!c[e].is_zero()) return false;
  return true;
}

CyclicPJumps artin_schreier_jumps(const CoverSpec& spec) {
  if (spec.kind != CoverKind::ArtinSchreier)
    throw std::invalid_argument("not an Artin-Schreier cover");
  CyclicPJumps data{spec.field.characteristic(), {spec.f_degree()}};
  data.validate();
  return data;
}

int64_t monomial_valuation(const CoverSpec& spec, int64_t i, int64_t j, const Place& place) {
  if (i < 0 || j < 0 || j >= spec.n) throw std::invalid_argument("exponents out of range");
  int64_t m = spec.f_degree();
  switch (place.kind) {
    case Place::Kind::GenericFinite:
      return 0;
    case Place::Kind::Infinity:
      if (spec.kind == CoverKind::ArtinSchreier) {
        int64_t p = spec.n;
        return -p * i - m * j - 2 * p + (m + 1) * (p - 1);
      }
      return -spec.n * i + m * j - spec.n - 1;
    case Place::Kind::BranchRoot: {
      if (spec.kind != CoverKind::Kummer)
        throw std::invalid_argument("Artin-Schreier covers have no finite branch points");
      PolyRing ring(spec.field);
      if (!ring.eval(spec.f, place.root).is_zero())
        throw std::invalid_argument("place is not a root of f");
      int64_t from_x = place.root.is_zero() ? spec.n * i : 0;
      return from_x - j + spec.n - 1;
    }
  }
  throw std::logic_error("unhandled place kind");
}

std::optional<size_t> DifferentialBasis::find(int64_t i, int64_t j) const {
  for (size_t k = 0; k < monomials.size(); ++k)
    if (monomials[k].i == i && monomials[k].j == j) return k;
  return std::nullopt;
}

std::string DifferentialBasis::monomial_string(size_t index) const {
  const BasisMonomial& mono = monomials.at(index);
  std::string s;
  if (mono.i == 1) s += "x ";
  else if (mono.i > 1) s += "x^" + std::to_string(mono.i) + " ";
  if (kind == CoverKind::ArtinSchreier) {
    if (mono.j == 1) s += "y ";
    else if (mono.j > 1) s += "y^" + std::to_string(mono.j) + " ";
    s += "dx";
  } else {
    s += "dx";
    if (mono.j == 1) s += "/y";
    else if (mono.j > 1) s += "/y^" + std::to_string(mono.j);
  }
  return s;
}

DifferentialBasis artin_schreier_basis(const CoverSpec& spec) {
  if (spec.kind != CoverKind::ArtinSchreier)
    throw std::invalid_argument("not an Artin-Schreier cover");
  spec.validate();
  int64_t p = spec.n;
  int64_t jump = spec.f_degree();
  int64_t box = (p - 1) * (jump - 1);
  DifferentialBasis basis{CoverKind::ArtinSchreier, {}};
  Place inf = Place::infinity();
  for (int64_t j = 0; j + 2 <= p; ++j)
    for (int64_t i = 0; i <= box; ++i) {
      if (monomial_valuation(spec, i, j, inf) < 0) continue;
      if (i == box) throw std::logic_error("basis search box touched its boundary");
      basis.monomials.push_back({i, j});
    }
  int64_t genus = artin_schreier_genus(artin_schreier_jumps(spec));
  if (static_cast<int64_t>(basis.monomials.size()) != genus)
    throw std::logic_error("basis count disagrees with the genus formula");
  return basis;
}

DifferentialBasis kummer_basis(const CoverSpec& spec) {
  if (spec.kind != CoverKind::Kummer) throw std::invalid_argument("not a Kummer cover");
  spec.validate();
  int64_t n = spec.n;
  int64_t m = spec.f_degree();
  // The infinity condition is the binding one, but every rational root of f
  // is checked too so the basis truly passes the valuation oracle.
  PolyRing ring(spec.field);
  std::vector<Place> places{Place::infinity()};
  for (uint64_t idx = 0; idx < spec.field.size(); ++idx) {
    FieldElement a = spec.field.element(idx);
    if (ring.eval(spec.f, a).is_zero()) places.push_back(Place::branch_root(std::move(a)));
  }
  int64_t box = m;
  DifferentialBasis basis{CoverKind::Kummer, {}};
  for (int64_t j = 1; j < n; ++j)
    for (int64_t i = 0; i <= box; ++i) {
      bool holomorphic = true;
      for (const Place& place : places)
        if (monomial_valuation(spec, i, j, place) < 0) {
          holomorphic = false;
          break;
        }
      if (!holomorphic) continue;
      if (i == box) throw std::logic_error("basis search box touched its boundary");
      basis.monomials.push_back({i, j});
    }
  if (static_cast<int64_t>(basis.monomials.size()) != (n - 1) * (m - 1) / 2)
    throw std::logic_error("basis count disagrees with the genus formula");
  return basis;
}

SquareMatrix artin_schreier_action_matrix(const CoverSpec& spec, const DifferentialBasis& basis) {
  if (spec.kind != CoverKind::ArtinSchreier || basis.kind != CoverKind::ArtinSchreier)
    throw std::invalid_argument("not an Artin-Schreier cover");
  const FiniteField& field = spec.field;
  int64_t p = spec.n;
  // Pascal's triangle mod p; row j holds C(j, 0..j) for expanding (y+1)^j.
  std::vector<std::vector<int64_t>> binom(static_cast<size_t>(p - 1));
  for (int64_t j = 0; j + 2 <= p; ++j) {
    binom[j].assign(static_cast<size_t>(j + 1), 1);
    for (int64_t b = 1; b < j; ++b) binom[j][b] = (binom[j - 1][b - 1] + binom[j - 1][b]) % p;
  }
  SquareMatrix mat(field, basis.monomials.size());
  for (size_t col = 0; col < basis.monomials.size(); ++col) {
    const BasisMonomial& mono = basis.monomials[col];
    for (int64_t b = 0; b <= mono.j; ++b) {
      auto row = basis.find(mono.i, b);
      // Lowering j preserves holomorphy, so the image stays inside the basis.
      if (!row) throw std::logic_error("sigma image leaves the basis");
      mat.set(*row, col, field.from_int(binom[mono.j][b]));
    }
  }
  return mat;
}

SquareMatrix kummer_action_matrix(const CoverSpec& spec, const DifferentialBasis& basis,
                                  const FieldElement& zeta) {
  if (spec.kind != CoverKind::Kummer || basis.kind != CoverKind::Kummer)
    throw std::invalid_argument("not a Kummer cover");
  const FiniteField& field = spec.field;
  uint64_t n = static_cast<uint64_t>(spec.n);
  if (field.multiplicative_order(zeta) != n)
    throw std::invalid_argument("zeta must have exact order n");
  SquareMatrix mat(field, basis.monomials.size());
  for (size_t k = 0; k < basis.monomials.size(); ++k) {
    uint64_t j = static_cast<uint64_t>(basis.monomials[k].j);
    mat.set(k, k, field.pow(zeta, (n - j % n) % n));
  }
  return mat;
}

int64_t fixed_subspace_dim(const SquareMatrix& m) {
  SquareMatrix diff = mat_sub(m, SquareMatrix::identity_matrix(m.field(), m.size()));
  return static_cast<int64_t>(m.size()) - static_cast<int64_t>(mat_rank(std::move(diff)));
}

int64_t action_kernel_order(const SquareMatrix& m, int64_t ord_sigma) {
  if (ord_sigma < 1) throw std::invalid_argument("group order must be positive");
  if (!is_identity(mat_pow(m, static_cast<uint64_t>(ord_sigma))))
    throw std::logic_error("matrix violates its representation law");
  int64_t count = 0;
  SquareMatrix power = SquareMatrix::identity_matrix(m.field(), m.size());
  for (int64_t t = 0; t < ord_sigma; ++t) {
    if (is_identity(power)) ++count;
    power = mat_mul(power, m);
  }
  return count;
}

}  // namespace galdiff

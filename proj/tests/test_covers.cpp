#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "galdiff/covers.hpp"
#include "galdiff/matrix.hpp"
#include "galdiff/ramification.hpp"

using namespace galdiff;

TEST_CASE("additive reduction of the right-hand side") {
  FiniteField f2(2);
  PolyRing r2(f2);
  ArtinSchreierReduction red = artin_schreier_reduce(r2, r2.from_ints({0, 0, 0, 1}));
  CHECK(red.reduced == r2.from_ints({0, 0, 0, 1}));  // x^3 untouched
  CHECK(red.witness.is_zero());

  FiniteField f3(3);
  PolyRing r3(f3);
  Polynomial f = r3.from_ints({0, 0, 0, 1, 0, 0, 1});  // x^6 + x^3
  ArtinSchreierReduction out = artin_schreier_reduce(r3, f);
  CHECK(out.reduced == r3.from_ints({0, 1, 1}));  // x^2 + x
  CHECK(out.witness == r3.from_ints({0, 1, 1}));
  // f = reduced + (h^p - h)
  Polynomial hp = r3.sub(r3.pow(out.witness, 3), out.witness);
  CHECK(r3.add(out.reduced, hp) == f);

  CHECK(is_artin_schreier_reduced(r3, out.reduced));
  CHECK(!is_artin_schreier_reduced(r3, f));

  // x^4 + x^2 = (x^2 + x)^2 - (x^2 + x) over F_2 reduces to zero.
  CHECK_THROWS_AS(artin_schreier_reduce(r2, r2.from_ints({0, 0, 1, 0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(artin_schreier_reduce(r2, r2.one()), std::invalid_argument);  // split cover
}

TEST_CASE("cover specs validate their defining data") {
  CoverSpec as = CoverSpec::artin_schreier(3, {0, 0, 0, 0, 1});
  as.validate();
  CHECK(as.f_degree() == 4);
  CHECK(artin_schreier_jumps(as).jumps == std::vector<int64_t>{4});

  CoverSpec squared = CoverSpec::artin_schreier(2, {0, 0, 1});  // x^2 reduces to x
  CHECK(squared.f_degree() == 1);

  // y^2 = x^5 + 1 over F_5: the right side is (x + 1)^5, not squarefree.
  CHECK_THROWS_AS(CoverSpec::kummer(5, 2, {1, 0, 0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CoverSpec::kummer(5, 5, {0, 1}), std::invalid_argument);  // p | n
  CHECK_THROWS_AS(CoverSpec::kummer(5, 2, {1, 0, 1}), std::invalid_argument);  // n | deg f
  CHECK_THROWS_AS(CoverSpec::kummer(7, 2, {0, 0, 0, 1}), std::invalid_argument);  // x^3 squared root

  CoverSpec km = CoverSpec::kummer(5, 2, {0, 1, 0, 0, 0, 1});  // x^5 + x
  km.validate();
  CHECK(km.field.size() == 5);
  CHECK(km.n == 2);
}

TEST_CASE("kummer covers pick the smallest field with enough roots of unity") {
  CHECK(CoverSpec::kummer(2, 3, {1, 1}).field.size() == 4);
  CHECK(CoverSpec::kummer(5, 3, {1, 1}).field.size() == 25);
  CHECK(CoverSpec::kummer(7, 3, {1, 1}).field.size() == 7);
  CHECK(CoverSpec::kummer(3, 2, {1, 1, 0, 1}).field.size() == 3);
}

TEST_CASE("cover specs parse from JSON") {
  CoverSpec as = CoverSpec::from_json(nlohmann::json::parse(R"({"kind":"as","p":2,"f":[0,0,0,1]})"));
  CHECK(as.kind == CoverKind::ArtinSchreier);
  CHECK(as.n == 2);
  CHECK(as.f_degree() == 3);

  CoverSpec km = CoverSpec::from_json(
      nlohmann::json::parse(R"({"kind":"kummer","n":2,"p":5,"f":[0,1,0,0,0,1]})"));
  CHECK(km.kind == CoverKind::Kummer);
  CHECK(km.field.size() == 5);

  CHECK_THROWS_AS(CoverSpec::from_json(nlohmann::json::parse(R"({"kind":"weil","p":2,"f":[0,1]})")),
                  std::invalid_argument);
}

TEST_CASE("monomial valuations at the distinguished places") {
  CoverSpec as = CoverSpec::artin_schreier(3, {0, 0, 0, 0, 1});  // p = 3, N = 4
  CHECK(monomial_valuation(as, 0, 0, Place::infinity()) == 4);   // ord(dx) at infinity
  CHECK(monomial_valuation(as, 1, 0, Place::infinity()) == 1);
  CHECK(monomial_valuation(as, 0, 1, Place::infinity()) == 0);
  CHECK(monomial_valuation(as, 2, 0, Place::infinity()) == -2);
  CHECK(monomial_valuation(as, 0, 0, Place::generic_finite()) == 0);
  CHECK_THROWS_AS(monomial_valuation(as, 0, 0, Place::branch_root(as.field.zero())),
                  std::invalid_argument);
  CHECK_THROWS_AS(monomial_valuation(as, -1, 0, Place::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(monomial_valuation(as, 0, 3, Place::infinity()), std::invalid_argument);

  CoverSpec e = CoverSpec::kummer(7, 2, {1, 0, 0, 1});  // y^2 = x^3 + 1
  CHECK(monomial_valuation(e, 0, 1, Place::infinity()) == 0);  // dx/y is holomorphic
  CHECK(monomial_valuation(e, 1, 1, Place::infinity()) == -2);
  CHECK(monomial_valuation(e, 0, 1, Place::branch_root(e.field.from_int(-1))) == 0);
  CHECK(monomial_valuation(e, 0, 1, Place::generic_finite()) == 0);
  CHECK_THROWS_AS(monomial_valuation(e, 0, 1, Place::branch_root(e.field.one())),
                  std::invalid_argument);  // 1 is not a root

  CoverSpec z = CoverSpec::kummer(5, 2, {0, 1, 0, 0, 0, 1});  // x^5 + x, root at 0
  CHECK(monomial_valuation(z, 1, 1, Place::branch_root(z.field.zero())) == 2);
}

TEST_CASE("holomorphic bases in lexicographic (j, i) order") {
  CoverSpec p2n3 = CoverSpec::artin_schreier(2, {0, 0, 0, 1});
  DifferentialBasis b1 = artin_schreier_basis(p2n3);
  REQUIRE(b1.monomials.size() == 1);
  CHECK((b1.monomials[0] == BasisMonomial{0, 0}));
  CHECK(b1.monomial_string(0) == "dx");

  CoverSpec p3n2 = CoverSpec::artin_schreier(3, {0, 0, 1});
  CHECK((artin_schreier_basis(p3n2).monomials == std::vector<BasisMonomial>{{0, 0}}));

  CoverSpec p3n4 = CoverSpec::artin_schreier(3, {0, 0, 0, 0, 1});
  DifferentialBasis b3 = artin_schreier_basis(p3n4);
  CHECK((b3.monomials == std::vector<BasisMonomial>{{0, 0}, {1, 0}, {0, 1}}));
  CHECK(b3.genus() == 3);
  CHECK(b3.find(1, 0) == size_t{1});
  CHECK(!b3.find(2, 0).has_value());
  CHECK(b3.monomial_string(1) == "x dx");
  CHECK(b3.monomial_string(2) == "y dx");

  CoverSpec n2m3 = CoverSpec::kummer(7, 2, {1, 0, 0, 1});
  DifferentialBasis k1 = kummer_basis(n2m3);
  CHECK((k1.monomials == std::vector<BasisMonomial>{{0, 1}}));
  CHECK(k1.monomial_string(0) == "dx/y");

  CoverSpec n2m5 = CoverSpec::kummer(5, 2, {0, 1, 0, 0, 0, 1});
  DifferentialBasis k2 = kummer_basis(n2m5);
  CHECK((k2.monomials == std::vector<BasisMonomial>{{0, 1}, {1, 1}}));
  CHECK(k2.monomial_string(1) == "x dx/y");

  CoverSpec n3m2 = CoverSpec::kummer(7, 3, {1, 1, 1});  // x^2 + x + 1 is squarefree over F_7
  DifferentialBasis k3 = kummer_basis(n3m2);
  CHECK((k3.monomials == std::vector<BasisMonomial>{{0, 2}}));
  CHECK(k3.monomial_string(0) == "dx/y^2");
}

TEST_CASE("basis membership matches the valuation oracle") {
  CoverSpec as = CoverSpec::artin_schreier(3, {0, 0, 0, 0, 1});
  DifferentialBasis basis = artin_schreier_basis(as);
  for (int64_t j = 0; j <= 1; ++j)
    for (int64_t i = 0; i <= 8; ++i) {
      bool in_basis = basis.find(i, j).has_value();
      bool holomorphic = monomial_valuation(as, i, j, Place::infinity()) >= 0;
      CHECK(in_basis == holomorphic);
    }

  CoverSpec km = CoverSpec::kummer(5, 2, {0, 1, 0, 0, 0, 1});
  DifferentialBasis kb = kummer_basis(km);
  PolyRing ring(km.field);
  for (int64_t i = 0; i <= 6; ++i) {
    bool in_basis = kb.find(i, 1).has_value();
    int64_t worst = monomial_valuation(km, i, 1, Place::infinity());
    for (uint64_t idx = 0; idx < km.field.size(); ++idx) {
      FieldElement pt = km.field.element(idx);
      if (!ring.eval(km.f, pt).is_zero()) continue;
      int64_t v = monomial_valuation(km, i, 1, Place::branch_root(pt));
      if (v < worst) worst = v;
    }
    CHECK(in_basis == (worst >= 0));
  }
}

TEST_CASE("generator action on an order-2 cover is the identity") {
  CoverSpec spec = CoverSpec::artin_schreier(2, {0, 0, 0, 0, 0, 1});  // r = 5, genus 2
  DifferentialBasis basis = artin_schreier_basis(spec);
  SquareMatrix mat = artin_schreier_action_matrix(spec, basis);
  CHECK(basis.genus() == 2);
  CHECK(is_identity(mat));
  CHECK(fixed_subspace_dim(mat) == 2);
  CHECK(action_kernel_order(mat, 2) == 2);
}

TEST_CASE("generator action in characteristic 3 is a transvection") {
  CoverSpec spec = CoverSpec::artin_schreier(3, {0, 0, 0, 0, 1});
  DifferentialBasis basis = artin_schreier_basis(spec);
  SquareMatrix mat = artin_schreier_action_matrix(spec, basis);
  // Basis (dx, x dx, y dx); sigma fixes the first two and sends y dx to y dx + dx.
  const FiniteField& fld = spec.field;
  CHECK(mat.at(0, 0) == fld.one());
  CHECK(mat.at(1, 1) == fld.one());
  CHECK(mat.at(2, 2) == fld.one());
  CHECK(mat.at(0, 2) == fld.one());
  CHECK(mat.at(1, 2) == fld.zero());
  CHECK(mat.at(2, 0) == fld.zero());
  CHECK(fixed_subspace_dim(mat) == 2);
  CHECK(action_kernel_order(mat, 3) == 1);
  CHECK(mat_pow(mat, 3) == SquareMatrix::identity_matrix(fld, 3));
}

TEST_CASE("kummer action is diagonal in the monomial basis") {
  CoverSpec spec = CoverSpec::kummer(5, 2, {0, 1, 0, 0, 0, 1});
  DifferentialBasis basis = kummer_basis(spec);
  FieldElement zeta = spec.field.primitive_root_of_unity(2);  // -1
  SquareMatrix mat = kummer_action_matrix(spec, basis, zeta);
  CHECK(is_diagonal(mat));
  CHECK(mat.at(0, 0) == spec.field.from_int(-1));
  CHECK(mat.at(1, 1) == spec.field.from_int(-1));
  CHECK(fixed_subspace_dim(mat) == 0);
  CHECK(action_kernel_order(mat, 2) == 1);

  CoverSpec cubic = CoverSpec::kummer(7, 3, {1, 1, 1});
  DifferentialBasis cb = kummer_basis(cubic);
  FieldElement zeta3 = cubic.field.primitive_root_of_unity(3);
  SquareMatrix cm = kummer_action_matrix(cubic, cb, zeta3);
  // Single basis element dx/y^2 scales by zeta^{-2} = zeta.
  CHECK(cm.at(0, 0) == zeta3);
  CHECK(mat_pow(cm, 3) == SquareMatrix::identity_matrix(cubic.field, 1));

  CHECK_THROWS_AS(kummer_action_matrix(spec, basis, spec.field.one()), std::invalid_argument);
}

TEST_CASE("kernel order needs the representation law") {
  FiniteField f7(7);
  SquareMatrix bad(f7, 1);
  bad.set(0, 0, f7.from_int(2));  // multiplicative order 3
  CHECK_THROWS_AS(action_kernel_order(bad, 2), std::logic_error);
  CHECK(action_kernel_order(SquareMatrix::identity_matrix(f7, 4), 5) == 5);
}

TEST_CASE("order-p sweep matches the closed-form dimensions") {
  for (int64_t p : {2, 3, 5}) {
    for (int64_t jump = 1; jump <= 9; ++jump) {
      if (jump % p == 0) continue;
      std::vector<int64_t> coeffs(static_cast<size_t>(jump + 1), 0);
      coeffs.back() = 1;
      CoverSpec spec = CoverSpec::artin_schreier(p, coeffs);
      DifferentialBasis basis = artin_schreier_basis(spec);
      SquareMatrix mat = artin_schreier_action_matrix(spec, basis);
      CyclicPJumps jumps = artin_schreier_jumps(spec);
      CHECK(static_cast<int64_t>(basis.genus()) == artin_schreier_genus(jumps));
      CHECK(fixed_subspace_dim(mat) == invariant_dimension_cyclic_p(jumps));
      CHECK(mat_pow(mat, static_cast<uint64_t>(p)) ==
            SquareMatrix::identity_matrix(spec.field, basis.genus()));
    }
  }
}

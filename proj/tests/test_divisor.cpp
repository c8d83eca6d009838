#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "galdiff/divisor.hpp"

using galdiff::Divisor;
using galdiff::FiberDatum;
using galdiff::equivariant_floor_pushforward;
using galdiff::floor_div;
using galdiff::rr_dimension_genus0;

TEST_CASE("divisors drop zero coefficients and sum degrees") {
  Divisor d;
  d.add_to("Q1", 3);
  d.add_to("Q2", -1);
  CHECK(d.degree() == 2);
  CHECK(d.support_size() == 2);
  d.add_to("Q1", -3);  // cancels entirely
  CHECK(d.support_size() == 1);
  CHECK(d.coefficient("Q1") == 0);
  CHECK(d.coefficient("missing") == 0);
}

TEST_CASE("degree is additive") {
  Divisor a;
  a.add_to("P", 4);
  a.add_to("Q", -2);
  Divisor b;
  b.add_to("Q", 7);
  b.add_to("R", 1);
  CHECK((a + b).degree() == a.degree() + b.degree());
  CHECK((a + b).coefficient("Q") == 5);
}

TEST_CASE("serialization is a sorted object") {
  Divisor d;
  d.add_to("Q2", -1);
  d.add_to("Q1", 3);
  CHECK(d.to_json().dump() == R"({"Q1":3,"Q2":-1})");
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor_div(0, 5) == 0);
  CHECK_THROWS_AS(floor_div(1, 0), std::invalid_argument);
}

TEST_CASE("floor pushforward coefficients") {
  // Tame fiber: coefficient e - 1 floors to zero.
  for (int64_t e : {2, 3, 5, 6}) {
    Divisor d = equivariant_floor_pushforward({{"Q", e, e - 1}}, 30);
    CHECK(d.degree() == 0);
    CHECK(d.support_size() == 0);
  }
  CHECK(equivariant_floor_pushforward({{"Q", 1, 5}}, 6).coefficient("Q") == 5);
  CHECK(equivariant_floor_pushforward({{"Q", 3, 8}}, 6).coefficient("Q") == 2);
  CHECK_THROWS_AS(equivariant_floor_pushforward({{"Q", 4, 1}}, 6), std::invalid_argument);
}

TEST_CASE("pushforward coefficient equals floor(m_Q/n) on random fibers") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int64_t> pick_n(1, 60);
  std::uniform_int_distribution<int64_t> pick_coeff(-100, 100);
  for (int trial = 0; trial < 10000; ++trial) {
    int64_t n = pick_n(rng);
    std::vector<int64_t> divisors;
    for (int64_t e = 1; e <= n; ++e)
      if (n % e == 0) divisors.push_back(e);
    int64_t e = divisors[static_cast<size_t>(rng() % divisors.size())];
    int64_t coeff = pick_coeff(rng);
    Divisor d = equivariant_floor_pushforward({{"Q", e, coeff}}, n);
    int64_t m_q = (n / e) * coeff;  // pushforward coefficient before division by n
    CHECK(d.coefficient("Q") == floor_div(m_q, n));
    CHECK(d.coefficient("Q") == floor_div(coeff, e));
  }
}

TEST_CASE("genus zero Riemann-Roch dimensions") {
  CHECK(rr_dimension_genus0(-2) == 0);
  CHECK(rr_dimension_genus0(0) == 1);
  CHECK(rr_dimension_genus0(1) == 2);
  for (int64_t d = -50; d <= 50; ++d)
    CHECK(rr_dimension_genus0(d) - rr_dimension_genus0(-2 - d) == d + 1);
}

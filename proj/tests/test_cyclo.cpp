#include <doctest.h>

#include <stdexcept>

#include <random>

#include "mcgorbit/cyclo.hpp"

using namespace mcgorbit;

namespace {

CycloElt rand_elt(std::mt19937_64& rng, const FieldPtr& f) {
  CycloElt e = CycloElt::zero(f);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 4);
  for (std::int64_t j = 0; j < f->degree(); ++j) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    e = e + CycloElt::from_rational(f, q) * CycloElt::zeta_pow(f, j);
  }
  return e;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(36) == 12);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("small field identities") {
  const FieldPtr f4 = make_field(4);
  CHECK(CycloElt::zeta_pow(f4, 1) * CycloElt::zeta_pow(f4, 1) == CycloElt::from_int(f4, -1));

  const FieldPtr f3 = make_field(3);
  const CycloElt sum = CycloElt::one(f3) + CycloElt::zeta_pow(f3, 1) + CycloElt::zeta_pow(f3, 2);
  CHECK(sum.is_zero());

  const FieldPtr f2 = make_field(2);
  CHECK(CycloElt::from_int(f2, -2).inverse() ==
        CycloElt::from_rational(f2, mpq_class("-1/2")));

  CHECK_THROWS_AS(make_field(0), std::invalid_argument);
  CHECK_THROWS_AS(CycloElt::zero(f2).inverse(), std::domain_error);
}

TEST_CASE("powers of zeta") {
  for (std::int64_t n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    const FieldPtr f = make_field(n);
    CHECK(CycloElt::zeta_pow(f, n).is_one());
    for (std::int64_t k = 1; k < n; ++k) {
      CHECK(!CycloElt::zeta_pow(f, k).is_one());
      CHECK(CycloElt::zeta_pow(f, k) * CycloElt::zeta_pow(f, n - k) == CycloElt::one(f));
    }
  }
}

TEST_CASE("root of unity detection") {
  const FieldPtr f4 = make_field(4);
  CHECK(CycloElt::zeta_pow(f4, 1).as_root_of_unity() == 4);
  CHECK(CycloElt::from_int(f4, -1).as_root_of_unity() == 2);
  CHECK(CycloElt::from_int(f4, 1).as_root_of_unity() == 1);
  CHECK(!CycloElt::from_int(f4, 2).as_root_of_unity().has_value());
  const FieldPtr f3 = make_field(3);
  CHECK((-CycloElt::zeta_pow(f3, 1)).as_root_of_unity() == 6);
  // 1 + zeta_3 = -zeta_3^2 is a sixth root of unity; 1 + i is not torsion
  CHECK((CycloElt::one(f3) + CycloElt::zeta_pow(f3, 1)).as_root_of_unity() == 6);
  CHECK(!(CycloElt::one(f4) + CycloElt::zeta_pow(f4, 1)).as_root_of_unity().has_value());
  CHECK(!(CycloElt::zeta_pow(f3, 1) * CycloElt::from_int(f3, 2)).as_root_of_unity().has_value());
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (std::int64_t n : {2, 3, 4, 5, 12}) {
    const FieldPtr f = make_field(n);
    for (int trial = 0; trial < 60; ++trial) {
      const CycloElt a = rand_elt(rng, f);
      const CycloElt b = rand_elt(rng, f);
      const CycloElt c = rand_elt(rng, f);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == CycloElt::zero(f));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycloElt::one(f));
        CHECK(a.pow(-2) == (a * a).inverse());
      }
    }
  }
}

TEST_CASE("mixed orders are rejected") {
  const FieldPtr f2 = make_field(2);
  const FieldPtr f3 = make_field(3);
  CHECK_THROWS_AS(CycloElt::one(f2) + CycloElt::one(f3), std::invalid_argument);
  CHECK(CycloElt::one(f2) != CycloElt::one(f3));
}

TEST_CASE("serialization round trips bit-exactly") {
  std::mt19937_64 rng(13);
  for (std::int64_t n : {1, 2, 4, 5, 12}) {
    const FieldPtr f = make_field(n);
    for (int trial = 0; trial < 40; ++trial) {
      const CycloElt a = rand_elt(rng, f);
      const auto strings = a.to_strings();
      CHECK(CycloElt::from_strings(f, strings) == a);
      CHECK(CycloElt::from_strings(f, strings).to_strings() == strings);
    }
  }
  const FieldPtr f2 = make_field(2);
  CHECK(CycloElt::from_strings(f2, {"-3/6"}).to_strings() == std::vector<std::string>{"-1/2"});
  CHECK_THROWS_AS(CycloElt::from_strings(f2, {"1", "0"}), std::invalid_argument);
  CHECK_THROWS_AS(CycloElt::from_strings(f2, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(CycloElt::from_strings(f2, {"1/0"}), std::invalid_argument);
}

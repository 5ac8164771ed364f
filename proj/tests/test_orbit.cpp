#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "mcgorbit/classify.hpp"
#include "mcgorbit/orbit.hpp"

using namespace mcgorbit;
using namespace mcgorbit::testing;

TEST_CASE("scalar orbit of (-1, 1) at genus one") {
  const FieldPtr f = make_field(2);
  ScalarRep rep = trivial_scalar(1, 0, f);
  rep.values[0] = CycloElt::from_int(f, -1);
  const OrbitResult res = orbit(rep, OrbitGroup::Pure, 1000);
  CHECK(res.status == OrbitStatus::Finite);
  CHECK(res.size == 3);
  CHECK(res.full_size == 3);
  CHECK(!res.witness.has_value());
  CHECK(count_scalar_orbit(rep) == 3);
}

TEST_CASE("genus-one mu-c orbit, order two, one puncture") {
  const FieldPtr f = make_field(2);
  const AffineRep rho =
      rho_mu_c_rational(1, f, CycloElt::from_int(f, -1), {mpq_class(1)});
  const OrbitResult res = orbit(rho, OrbitGroup::Pure, 1000);
  CHECK(res.status == OrbitStatus::Finite);
  CHECK(res.size == 3);
}

TEST_CASE("trivial representation is a fixed point") {
  const FieldPtr f = make_field(2);
  const OrbitResult res = orbit(trivial_scalar(2, 2, f), OrbitGroup::Full, 10);
  CHECK(res.status == OrbitStatus::Finite);
  CHECK(res.size == 1);
}

TEST_CASE("translation representation blows past any cap") {
  const FieldPtr f = make_field(2);
  const AffineRep tr = affine_rep(1, 0, f, {translation(f, 1), translation(f, 0)});
  REQUIRE(validate(tr));
  const OrbitResult res = orbit(tr, OrbitGroup::Full, 50);
  CHECK(res.status == OrbitStatus::CapExceeded);
  CHECK(res.full_size == 51);
  REQUIRE(res.witness.has_value());
  CHECK(!res.witness->word.empty());
  CHECK(res.witness->from_class != res.witness->to_class);

  CHECK(suborbit_probe(tr, tau(1), 100));
}

TEST_CASE("suborbit probe cycles on finite orbits") {
  const FieldPtr f = make_field(2);
  const AffineRep rho =
      rho_mu_c_rational(1, f, CycloElt::from_int(f, -1), {mpq_class(1)});
  CHECK(!suborbit_probe(rho, tau(1), 100));
  CHECK(!suborbit_probe(trivial_scalar(1, 2, f), sigma(1), 10));
}

TEST_CASE("orbit size is a class invariant") {
  const FieldPtr f = make_field(3);
  const AffineRep rho = rho_mu_c(1, f, CycloElt::zeta_pow(f, 1),
                                 {CycloElt::one(f)});
  const OrbitResult base = orbit(rho, OrbitGroup::Pure, 1000);
  CHECK(base.status == OrbitStatus::Finite);
  CHECK(base.size == 8);

  // conjugating the start point changes nothing
  const AffElt by{CycloElt::from_int(f, 7), CycloElt::from_rational(f, mpq_class("2/5"))};
  const OrbitResult conj = orbit(conjugate_rep(rho, by), OrbitGroup::Pure, 1000);
  CHECK(conj.size == base.size);
  CHECK(conj.status == base.status);
  CHECK(orbit(conjugate_rep(rho, by), OrbitGroup::Full, 1000).size ==
        orbit(rho, OrbitGroup::Full, 1000).size);

  // neither does moving it along the action first
  const AutTable table(1, 1);
  const OrbitResult moved =
      orbit(act_word(parse_mcg_word("t1 t2^-1 t1"), AnyRep(rho), table), OrbitGroup::Pure, 1000);
  CHECK(moved.size == base.size);

  // finiteness is stable under raising the cap
  const OrbitResult higher = orbit(rho, OrbitGroup::Pure, 100000);
  CHECK(higher.size == base.size);
  CHECK(higher.status == OrbitStatus::Finite);
}

TEST_CASE("pure and full orbits nest with index n!") {
  // distinguishable punctures: gamma values (zeta, zeta^2), product 1
  const FieldPtr f = make_field(3);
  ScalarRep rep = trivial_scalar(1, 2, f);
  rep.values[2] = CycloElt::zeta_pow(f, 1);
  rep.values[3] = CycloElt::zeta_pow(f, 2);
  REQUIRE(validate(rep));
  const OrbitResult pure = orbit(rep, OrbitGroup::Pure, 10000);
  const OrbitResult full = orbit(rep, OrbitGroup::Full, 10000);
  CHECK(pure.status == OrbitStatus::Finite);
  CHECK(full.status == OrbitStatus::Finite);
  CHECK(pure.size < full.size);  // swapping the punctures reaches new classes
  CHECK(full.size <= 2 * pure.size);
  CHECK(pure.full_size == full.size);

  // the pure count matches the exponent-tuple enumeration
  CHECK(mpz_class(pure.size) == count_scalar_orbit(rep));

  // symmetric puncture data collapses the gap
  ScalarRep sym = trivial_scalar(1, 2, make_field(2));
  sym.values[0] = CycloElt::from_int(sym.field, -1);
  sym.values[2] = CycloElt::from_int(sym.field, -1);
  sym.values[3] = CycloElt::from_int(sym.field, -1);
  REQUIRE(validate(sym));
  const OrbitResult p2 = orbit(sym, OrbitGroup::Pure, 10000);
  const OrbitResult f2 = orbit(sym, OrbitGroup::Full, 10000);
  CHECK(p2.size == f2.size);
  CHECK(mpz_class(p2.size) == count_scalar_orbit(sym));
}

TEST_CASE("genus three scalar orbit agrees with the enumeration") {
  const FieldPtr f = make_field(2);
  ScalarRep rep = trivial_scalar(3, 0, f);
  rep.values[0] = CycloElt::from_int(f, -1);
  CHECK(count_scalar_orbit(rep) == 63);  // nonzero vectors of (Z/2)^6
  const OrbitResult r = orbit(rep, OrbitGroup::Pure, 10000);
  CHECK(r.status == OrbitStatus::Finite);
  CHECK(r.size == 63);
}

TEST_CASE("asymmetric puncture translations split pure from full") {
  // rho_{-1,(2,-1)}: swapping the punctures genuinely moves the class
  const FieldPtr f = make_field(2);
  const CycloElt m1 = CycloElt::from_int(f, -1);
  const AffineRep rep = affine_rep(1, 2, f,
                                   {{m1, CycloElt::zero(f)},
                                    translation(f, mpq_class("1/2")),
                                    translation(f, 2),
                                    translation(f, -1)});
  REQUIRE(validate(rep));
  const OrbitResult pure = orbit(rep, OrbitGroup::Pure, 10000);
  const OrbitResult full = orbit(rep, OrbitGroup::Full, 10000);
  CHECK(pure.size == 6);
  CHECK(full.size == 12);
  CHECK(pure.full_size == full.size);
  CHECK(mpz_class(pure.size) == expected_affine_count(2, 2));
}

TEST_CASE("orbit rejects invalid input") {
  const FieldPtr f = make_field(2);
  ScalarRep bad = trivial_scalar(1, 1, f);
  bad.values[2] = CycloElt::from_int(f, -1);
  CHECK_THROWS_AS(orbit(bad, OrbitGroup::Pure, 10), std::invalid_argument);
  CHECK_THROWS_AS(orbit(trivial_scalar(1, 0, f), OrbitGroup::Pure, 0), std::invalid_argument);
}

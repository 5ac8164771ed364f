#ifndef MCGORBIT_TESTS_HELPERS_HPP_
#define MCGORBIT_TESTS_HELPERS_HPP_

// Builders for the representation families the suites keep reaching for.

#include <vector>

#include "mcgorbit/cyclo.hpp"
#include "mcgorbit/reps.hpp"
#include "mcgorbit/surface.hpp"

namespace mcgorbit::testing {

inline AffElt aff(const CycloElt& lin, const CycloElt& trans) { return {lin, trans}; }

inline AffElt translation(const FieldPtr& f, const mpq_class& c) {
  return {CycloElt::one(f), CycloElt::from_rational(f, c)};
}

// alpha_1 -> mu z, beta_1 -> z - 1/(mu - 1), gamma_i -> z + c_i. Valid iff
// the c_i sum to 1.
inline AffineRep rho_mu_c(int n, const FieldPtr& f, const CycloElt& mu,
                          const std::vector<CycloElt>& c) {
  AffineRep rep{1, n, f, {}};
  const CycloElt one = CycloElt::one(f);
  rep.values.resize(static_cast<std::size_t>(generator_count(1, n)), aff_identity(f));
  rep.values[0] = {mu, CycloElt::zero(f)};
  rep.values[1] = {one, -(mu - one).inverse()};
  for (int i = 0; i < n; ++i) rep.values[static_cast<std::size_t>(2 + i)] = {one, c[static_cast<std::size_t>(i)]};
  return rep;
}

inline AffineRep rho_mu_c_rational(int n, const FieldPtr& f, const CycloElt& mu,
                                   const std::vector<mpq_class>& c) {
  std::vector<CycloElt> cc;
  for (const mpq_class& q : c) cc.push_back(CycloElt::from_rational(f, q));
  return rho_mu_c(n, f, mu, cc);
}

// Scalar representation from explicit values (alpha_1, beta_1, ..., gammas).
inline ScalarRep scalar_rep(int g, int n, const FieldPtr& f, const std::vector<CycloElt>& values) {
  return {g, n, f, values};
}

// Affine representation from explicit values in slot order.
inline AffineRep affine_rep(int g, int n, const FieldPtr& f, const std::vector<AffElt>& values) {
  return {g, n, f, values};
}

// The trivial scalar representation.
inline ScalarRep trivial_scalar(int g, int n, const FieldPtr& f) {
  return {g, n, f,
          std::vector<CycloElt>(static_cast<std::size_t>(generator_count(g, n)),
                                CycloElt::one(f))};
}

}  // namespace mcgorbit::testing

#endif  // MCGORBIT_TESTS_HELPERS_HPP_

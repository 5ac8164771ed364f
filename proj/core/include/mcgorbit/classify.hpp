#ifndef MCGORBIT_CLASSIFY_HPP_
#define MCGORBIT_CLASSIFY_HPP_

// Finiteness decision procedure for orbits of reducible rank-2 (and scalar /
// affine) conjugacy classes, with exact counting formulas and cardinality
// bounds. Infinite verdicts always rest on a structural argument;
// breadth-first cap exhaustion alone never produces one.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mcgorbit/mcg.hpp"
#include "mcgorbit/reps.hpp"

namespace mcgorbit {

enum class Verdict { Finite, Infinite };

enum class Reason {
  AbelianFiniteImage,
  AbelianInfiniteImage,
  Genus1MuC,
  HigherGenusNonAbelian,
  NonTorsionLinearPart,
  TranslationGroup,
  // The genus-1 preparation ended with a puncture whose image is not a
  // translation; the twist suborbit through it grows without bound.
  Genus1NonTranslationPuncture,
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct Bounds {
  mpz_class lower;
  mpz_class upper;
};

// Recognized member of the genus-1 finite family: linear part mu on the
// handle, translation vector c with sum 1.
struct Genus1Data {
  CycloElt mu;
  std::int64_t mu_order = 0;  // N
  std::vector<CycloElt> c;
  int n_prime = 0;  // nonzero entries of c
};

struct Classification {
  Verdict verdict = Verdict::Finite;
  Reason reason = Reason::AbelianFiniteImage;
  std::optional<Bounds> bounds;  // attached to finite verdicts
  std::optional<Genus1Data> genus1;
  // Mapping class group word the preparation applied, when one ran.
  std::optional<std::vector<GenName>> prepared_word;
  std::string note;  // one-line algebraizability label
};

// Normalized shape of a non-abelian affine representation:
//   alpha_g -> mu^{m_g} z  (mu^{m_g} != 1),  beta_g -> z + 1,
//   alpha_i -> mu^{m_i} z + a_i,  beta_i -> z + b_i   (i < g),
//   gamma_j -> z + c_j.
// representative == conjugate_rep(act_word(word_applied, input), conjugator).
struct PreparedForm {
  int g = 0;
  int n = 0;
  std::vector<GenName> word_applied;
  AffElt conjugator;
  AffineRep representative;
  CycloElt mu;                 // generator of the linear-part image
  std::int64_t mu_order = 0;   // card of the linear-part image
  std::int64_t m_g = 0;
  std::vector<std::int64_t> m;  // m_i, i = 1 .. g-1
  std::vector<CycloElt> a, b;   // a_i, b_i, i = 1 .. g-1
  std::vector<CycloElt> c;      // c_j, j = 1 .. n
};

struct PrepFailure {
  enum class Code {
    AbelianImage,            // precondition violation
    NonTorsionLinearPart,    // precondition violation
    SearchCapExhausted,      // the non-abelian-handle search ran out of budget
    NonTranslationPuncture,  // infinite-orbit evidence
  };
  Code code;
  std::string detail;
};

using PrepOutcome = std::variant<PreparedForm, PrepFailure>;

// Normalization to the prepared shape: (i) search the orbit for a
// representative whose g-th handle does not commute, (ii) reduce the handle
// exponent pairs (m_i, n_i) to (gcd, 0) by twist words realizing the
// Euclidean algorithm, (iii) conjugate alpha_g to mu^{m_g} z and beta_g to
// z + 1, (iv) require every puncture image to be a translation.
PrepOutcome prepare(const AffineRep& rep, std::int64_t search_cap);

// For g >= 2: mu^{m_{g-1}} = mu^{-m_g}, a_{g-1} = 0, b_{g-1} = 0. A prepared
// representation failing any of these has infinite orbit.
bool elimination_check(const PreparedForm& p);

// Thrown when the preparation search exhausts its budget; distinct from any
// verdict because the search has no a-priori depth bound.
struct SearchCapExhausted : std::runtime_error {
  explicit SearchCapExhausted(const std::string& what) : std::runtime_error(what) {}
};

Classification classify(const AnyRep& rep, std::int64_t search_cap = 100000);

// Exact enumeration of the scalar orbit over (Z/N)^{2g} exponent tuples,
// N = card of the image. Throws std::domain_error on infinite image.
mpz_class count_scalar_orbit(const ScalarRep& rep);

// (N^{2g-1}, N^{2g})
Bounds bounds_scalar(std::int64_t n_img, int g);
// (ceil(max(N1, N2)^{2g-1} / 2), N_rho^{2g})
Bounds bounds_b1(std::int64_t n1, std::int64_t n2, std::int64_t n_rho, int g);
// (max(N2, phi(N)(2N - phi(N)) N^{n'-1}), (N^2 - 1) N^{n'-1} N2^2)
Bounds bounds_b2(std::int64_t n, int n_prime, std::int64_t n2);

// card(K_N) * N^{n'-1}, K_N = {(k1, k2) in [1,N]^2 : gcd(k1, k2, N) = 1}:
// the expected orbit size when the final scaling normalization is free
// (always exact for prime N).
mpz_class expected_affine_count(std::int64_t n, int n_prime);

}  // namespace mcgorbit

#endif  // MCGORBIT_CLASSIFY_HPP_

#ifndef MCGORBIT_CYCLO_HPP_
#define MCGORBIT_CYCLO_HPP_

// Exact arithmetic in the cyclotomic field Q(zeta_N): elements are rational
// coefficient vectors on the power basis zeta^0 .. zeta^{phi(N)-1}, reduced
// modulo the N-th cyclotomic polynomial. Coefficients are arbitrary-precision
// rationals; equality is canonical-form equality, so elements can serve as
// exact hash keys.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mcgorbit {

std::int64_t euler_phi(std::int64_t n);

// Coefficients of the N-th cyclotomic polynomial, monic, degree phi(N),
// little-endian. Computed by the recursive exact division
// x^N - 1 = prod_{d | N} Phi_d.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t n);

class Field {
 public:
  explicit Field(std::int64_t n);

  std::int64_t order() const { return n_; }    // N
  std::int64_t degree() const { return phi_; }  // phi(N)
  const std::vector<mpz_class>& modulus() const { return modulus_; }

  // x^{degree + k} mod Phi_N, for 0 <= k <= degree - 2.
  const std::vector<mpq_class>& high_power(std::int64_t k) const {
    return high_power_[static_cast<std::size_t>(k)];
  }

 private:
  std::int64_t n_;
  std::int64_t phi_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpq_class>> high_power_;
};

using FieldPtr = std::shared_ptr<const Field>;
FieldPtr make_field(std::int64_t n);

class CycloElt {
 public:
  CycloElt() = default;  // detached null element; usable only as a container placeholder

  static CycloElt zero(const FieldPtr& field);
  static CycloElt one(const FieldPtr& field);
  static CycloElt from_rational(const FieldPtr& field, const mpq_class& q);
  static CycloElt from_int(const FieldPtr& field, long v);
  static CycloElt zeta_pow(const FieldPtr& field, std::int64_t k);  // k taken mod N

  const FieldPtr& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  friend CycloElt operator+(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator-(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  CycloElt operator-() const;
  CycloElt inverse() const;  // throws std::domain_error on zero
  CycloElt pow(std::int64_t e) const;

  friend bool operator==(const CycloElt& a, const CycloElt& b);
  friend bool operator!=(const CycloElt& a, const CycloElt& b) { return !(a == b); }

  // Total order for deterministic canonical forms: lexicographic on the
  // coefficient vector.
  static int compare(const CycloElt& a, const CycloElt& b);

  // Multiplicative order if this is a root of unity in Q(zeta_N), else
  // nullopt. The torsion of the field is finite, so the scan is bounded.
  std::optional<std::int64_t> as_root_of_unity() const;

  // Wire format: one "p/q" string per coefficient, lowest terms, positive
  // denominator, "p" when the denominator is 1. Bit-exact round trip.
  std::vector<std::string> to_strings() const;
  static CycloElt from_strings(const FieldPtr& field, const std::vector<std::string>& coeffs);
  std::string serialize() const;  // comma-joined, for hash keys

 private:
  CycloElt(FieldPtr field, std::vector<mpq_class> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  static void check_same_field(const CycloElt& a, const CycloElt& b);

  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
};

}  // namespace mcgorbit

#endif  // MCGORBIT_CYCLO_HPP_

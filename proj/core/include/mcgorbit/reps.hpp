#ifndef MCGORBIT_REPS_HPP_
#define MCGORBIT_REPS_HPP_

// Scalar, affine, and upper-triangular rank-2 representations of the surface
// group: evaluation, relator validation, the mapping class group action on
// conjugacy classes, canonical forms, and the tensor decomposition of
// reducible rank-2 representations into scalar and affine parts.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcgorbit/cyclo.hpp"
#include "mcgorbit/mcg.hpp"
#include "mcgorbit/surface.hpp"
#include "mcgorbit/words.hpp"

namespace mcgorbit {

// z -> lin*z + trans, lin != 0.
struct AffElt {
  CycloElt lin;
  CycloElt trans;
  friend bool operator==(const AffElt&, const AffElt&) = default;
};

AffElt aff_identity(const FieldPtr& field);
AffElt aff_compose(const AffElt& f, const AffElt& h);  // (f o h)(z) = f(h(z))
AffElt aff_inv(const AffElt& f);
AffElt aff_conj(const AffElt& f, const AffElt& by);  // by o f o by^-1
bool aff_is_identity(const AffElt& f);
// Conjugacy of single elements inside Aff(C).
bool aff_elements_conjugate(const AffElt& x, const AffElt& y);

// Invertible upper-triangular 2x2 matrix (top corner; 0 bottom).
struct UppElt {
  CycloElt top;
  CycloElt corner;
  CycloElt bottom;
  friend bool operator==(const UppElt&, const UppElt&) = default;
};

UppElt upp_identity(const FieldPtr& field);
UppElt upp_mul(const UppElt& a, const UppElt& b);
UppElt upp_inv(const UppElt& a);
bool upp_is_identity(const UppElt& a);
bool upp_is_scalar(const UppElt& a);  // top == bottom, corner == 0
bool upp_elements_conjugate(const UppElt& x, const UppElt& y);

template <class G>
struct RepT {
  int g = 0;
  int n = 0;
  FieldPtr field;
  std::vector<G> values;  // one per generator slot
};

using ScalarRep = RepT<CycloElt>;
using AffineRep = RepT<AffElt>;
using Gl2Rep = RepT<UppElt>;
using AnyRep = std::variant<ScalarRep, AffineRep, Gl2Rep>;

enum class RepKind { Scalar, Affine, Gl2Upper };
RepKind kind_of(const AnyRep& rep);
std::string kind_name(RepKind kind);

// --- group-element glue for the generic evaluation templates ---

inline CycloElt group_mul(const CycloElt& a, const CycloElt& b) { return a * b; }
inline CycloElt group_inv(const CycloElt& a) { return a.inverse(); }
inline bool group_is_identity(const CycloElt& a) { return a.is_one(); }
inline AffElt group_mul(const AffElt& a, const AffElt& b) { return aff_compose(a, b); }
inline AffElt group_inv(const AffElt& a) { return aff_inv(a); }
inline bool group_is_identity(const AffElt& a) { return aff_is_identity(a); }
inline UppElt group_mul(const UppElt& a, const UppElt& b) { return upp_mul(a, b); }
inline UppElt group_inv(const UppElt& a) { return upp_inv(a); }
inline bool group_is_identity(const UppElt& a) { return upp_is_identity(a); }

template <class G>
G group_identity(const FieldPtr& field);
template <>
inline CycloElt group_identity<CycloElt>(const FieldPtr& field) { return CycloElt::one(field); }
template <>
inline AffElt group_identity<AffElt>(const FieldPtr& field) { return aff_identity(field); }
template <>
inline UppElt group_identity<UppElt>(const FieldPtr& field) { return upp_identity(field); }

// Homomorphism extension: eval(rep, uv) = eval(rep, u) * eval(rep, v).
template <class G>
G eval(const RepT<G>& rep, const Word& w) {
  if (w.empty()) return group_identity<G>(rep.field);
  const auto& letters = w.letters();
  auto value_of = [&](Letter l) -> G {
    const G& v = rep.values[static_cast<std::size_t>(slot_of(l, rep.g, rep.n))];
    return l.sign() > 0 ? v : group_inv(v);
  };
  G acc = value_of(letters[0]);
  for (std::size_t i = 1; i < letters.size(); ++i) {
    acc = group_mul(acc, value_of(letters[i]));
  }
  return acc;
}

// True iff the relator evaluates to the identity.
template <class G>
bool validate(const RepT<G>& rep) {
  return group_is_identity(eval(rep, presentation(rep.g, rep.n).relator));
}

// The action of one mapping class group generator on representations:
// (act(h, rep))(x) = eval(rep, a(h^-1)(x)). Preserves validity.
template <class G>
RepT<G> act(const GenName& gen, const RepT<G>& rep, const AutTable& table) {
  const Automorphism& a = table.acting(gen);
  RepT<G> out = rep;
  for (std::size_t s = 0; s < rep.values.size(); ++s) {
    out.values[s] = eval(rep, a.images[s]);
  }
  return out;
}

// Tokens act left to right: the first word element acts first.
template <class G>
RepT<G> act_word(const std::vector<GenName>& word, RepT<G> rep, const AutTable& table) {
  for (const GenName& gen : word) rep = act(gen, rep, table);
  return rep;
}

template <class G>
bool is_abelian(const RepT<G>& rep) {
  for (std::size_t i = 0; i < rep.values.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.values.size(); ++j) {
      if (group_mul(rep.values[i], rep.values[j]) != group_mul(rep.values[j], rep.values[i])) {
        return false;
      }
    }
  }
  return true;
}

// --- canonical conjugacy classes ---

struct CanonClass {
  RepKind kind = RepKind::Scalar;
  std::string bytes;  // deterministic serialization; equal classes <=> equal bytes
  friend bool operator==(const CanonClass&, const CanonClass&) = default;
};

// Scalar classes are the representations themselves (C* is abelian).
CanonClass canon_scalar(const ScalarRep& rep);

struct AffineCanonical {
  CanonClass cls;
  AffineRep representative;
  AffElt conjugator;  // representative = conjugator . rep . conjugator^-1
};

// Canonical representative under simultaneous Aff(C) conjugation: kill the
// translation of the first generator with lin != 1, then scale the first
// remaining nonzero translation to 1; translation-only representations are
// scaled directly; the all-identity representation gets a trivial marker.
AffineCanonical canon_affine(const AffineRep& rep);

// Exact conjugator search: some f = lambda*z + s with f r1 f^-1 = r2, solved
// as a linear system in (lambda, s). Independent oracle for canon_affine.
std::optional<AffElt> conjugacy_equal(const AffineRep& r1, const AffineRep& r2);

AffineRep conjugate_rep(const AffineRep& rep, const AffElt& by);

// rho = scalar_part (x) affine_part, entrywise.
ScalarRep scalar_part(const Gl2Rep& rep);
AffineRep affine_part(const Gl2Rep& rep);
Gl2Rep tensor(const ScalarRep& scalar, const AffineRep& aff);

// True iff the representation is conjugate to a direct sum of two scalar
// representations (the affine part has a common fixed point).
bool is_totally_reducible(const Gl2Rep& rep);

struct Gl2Canonical {
  CanonClass cls;
  Gl2Rep representative;
  bool split = false;
};

// Split: sorted pair of the diagonal scalar representations. Nonsplit:
// (scalar part, affine canonical class), which determines the class uniquely.
Gl2Canonical canon_gl2(const Gl2Rep& rep);

struct Canonicalized {
  CanonClass cls;
  AnyRep representative;
};
Canonicalized canonicalize(const AnyRep& rep);

bool validate(const AnyRep& rep);
AnyRep act(const GenName& gen, const AnyRep& rep, const AutTable& table);
AnyRep act_word(const std::vector<GenName>& word, AnyRep rep, const AutTable& table);
bool is_abelian(const AnyRep& rep);
int genus_of(const AnyRep& rep);
int punctures_of(const AnyRep& rep);
FieldPtr field_of(const AnyRep& rep);

// Order of the image subgroup, nullopt for infinite. Exact: scalar images by
// root-of-unity orders, affine images by the fixed-point reduction (a finite
// affine group is conjugate to a finite linear group), rank-2 images by
// closure enumeration once both parts are known finite.
std::optional<std::int64_t> image_order(const ScalarRep& rep);
std::optional<std::int64_t> image_order(const AffineRep& rep);
std::optional<std::int64_t> image_order(const Gl2Rep& rep);
std::optional<std::int64_t> image_order(const AnyRep& rep);

}  // namespace mcgorbit

#endif  // MCGORBIT_REPS_HPP_

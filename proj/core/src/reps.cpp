#include "mcgorbit/reps.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace mcgorbit {

AffElt aff_identity(const FieldPtr& field) {
  return {CycloElt::one(field), CycloElt::zero(field)};
}

AffElt aff_compose(const AffElt& f, const AffElt& h) {
  return {f.lin * h.lin, f.lin * h.trans + f.trans};
}

AffElt aff_inv(const AffElt& f) {
  CycloElt li = f.lin.inverse();
  return {li, -(li * f.trans)};
}

AffElt aff_conj(const AffElt& f, const AffElt& by) {
  // (lambda z + s) o (a z + b) o (lambda z + s)^-1 = a z + lambda b - s (a - 1)
  const CycloElt one = CycloElt::one(f.lin.field());
  return {f.lin, by.lin * f.trans - by.trans * (f.lin - one)};
}

bool aff_is_identity(const AffElt& f) { return f.lin.is_one() && f.trans.is_zero(); }

bool aff_elements_conjugate(const AffElt& x, const AffElt& y) {
  if (x.lin != y.lin) return false;
  if (!x.lin.is_one()) return true;  // translation part adjustable through the fixed point
  return x.trans.is_zero() == y.trans.is_zero();
}

UppElt upp_identity(const FieldPtr& field) {
  return {CycloElt::one(field), CycloElt::zero(field), CycloElt::one(field)};
}

UppElt upp_mul(const UppElt& a, const UppElt& b) {
  return {a.top * b.top, a.top * b.corner + a.corner * b.bottom, a.bottom * b.bottom};
}

UppElt upp_inv(const UppElt& a) {
  CycloElt ti = a.top.inverse();
  CycloElt bi = a.bottom.inverse();
  return {ti, -(ti * a.corner * bi), bi};
}

bool upp_is_identity(const UppElt& a) {
  return a.top.is_one() && a.corner.is_zero() && a.bottom.is_one();
}

bool upp_is_scalar(const UppElt& a) { return a.top == a.bottom && a.corner.is_zero(); }

bool upp_elements_conjugate(const UppElt& x, const UppElt& y) {
  if (x.top != y.top || x.bottom != y.bottom) return false;
  if (x.top != x.bottom) return true;  // distinct diagonal: corner adjustable
  return x.corner.is_zero() == y.corner.is_zero();
}

RepKind kind_of(const AnyRep& rep) {
  return std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ScalarRep>) return RepKind::Scalar;
        if constexpr (std::is_same_v<T, AffineRep>) return RepKind::Affine;
        if constexpr (std::is_same_v<T, Gl2Rep>) return RepKind::Gl2Upper;
      },
      rep);
}

std::string kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::Scalar: return "scalar";
    case RepKind::Affine: return "affine";
    case RepKind::Gl2Upper: return "gl2_upper";
  }
  return "?";
}

namespace {

std::string header(const char* tag, int g, int n) {
  return std::string(tag) + "[" + std::to_string(g) + "," + std::to_string(n) + "]{";
}

std::string serialize_aff(const AffElt& f) {
  return f.lin.serialize() + "|" + f.trans.serialize();
}

}  // namespace

CanonClass canon_scalar(const ScalarRep& rep) {
  std::string bytes = header("scalar", rep.g, rep.n);
  for (std::size_t i = 0; i < rep.values.size(); ++i) {
    if (i > 0) bytes += ';';
    bytes += rep.values[i].serialize();
  }
  bytes += '}';
  return {RepKind::Scalar, std::move(bytes)};
}

AffineRep conjugate_rep(const AffineRep& rep, const AffElt& by) {
  AffineRep out = rep;
  for (auto& v : out.values) v = aff_conj(v, by);
  return out;
}

AffineCanonical canon_affine(const AffineRep& rep) {
  const FieldPtr& field = rep.field;
  const CycloElt one = CycloElt::one(field);
  AffElt conj = aff_identity(field);

  bool all_identity = true;
  for (const AffElt& v : rep.values) {
    if (!aff_is_identity(v)) {
      all_identity = false;
      break;
    }
  }
  if (all_identity) {
    return {{RepKind::Affine, header("affine", rep.g, rep.n) + "trivial}"}, rep, conj};
  }

  AffineRep cur = rep;
  std::ptrdiff_t pivot = -1;
  for (std::size_t i = 0; i < cur.values.size(); ++i) {
    if (!cur.values[i].lin.is_one()) {
      pivot = static_cast<std::ptrdiff_t>(i);
      break;
    }
  }
  if (pivot >= 0) {
    // Translation s = trans/(lin - 1) moves the pivot's fixed point to 0.
    const AffElt& p = cur.values[static_cast<std::size_t>(pivot)];
    AffElt shift{one, p.trans * (p.lin - one).inverse()};
    cur = conjugate_rep(cur, shift);
    conj = aff_compose(shift, conj);
  }
  for (const AffElt& v : cur.values) {
    if (!v.trans.is_zero()) {
      AffElt scale{v.trans.inverse(), CycloElt::zero(field)};
      cur = conjugate_rep(cur, scale);
      conj = aff_compose(scale, conj);
      break;
    }
  }

  std::string bytes = header("affine", rep.g, rep.n);
  for (std::size_t i = 0; i < cur.values.size(); ++i) {
    if (i > 0) bytes += ';';
    bytes += serialize_aff(cur.values[i]);
  }
  bytes += '}';
  return {{RepKind::Affine, std::move(bytes)}, std::move(cur), conj};
}

std::optional<AffElt> conjugacy_equal(const AffineRep& r1, const AffineRep& r2) {
  if (r1.g != r2.g || r1.n != r2.n) return std::nullopt;
  const FieldPtr& field = r1.field;
  const CycloElt zero = CycloElt::zero(field);
  const CycloElt one = CycloElt::one(field);

  // Per generator: lin parts must agree and
  //   lambda * trans1 - s * (lin1 - 1) = trans2.
  struct Row {
    CycloElt a, b, c;  // a*lambda + b*s = c
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < r1.values.size(); ++i) {
    if (r1.values[i].lin != r2.values[i].lin) return std::nullopt;
    rows.push_back({r1.values[i].trans, one - r1.values[i].lin, r2.values[i].trans});
  }

  // Two-unknown Gaussian elimination.
  std::ptrdiff_t p0 = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].a.is_zero()) {
      p0 = static_cast<std::ptrdiff_t>(i);
      break;
    }
  }
  if (p0 >= 0) {
    const Row piv = rows[static_cast<std::size_t>(p0)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<std::ptrdiff_t>(i) == p0 || rows[i].a.is_zero()) continue;
      CycloElt f = rows[i].a * piv.a.inverse();
      rows[i].a = zero;
      rows[i].b = rows[i].b - f * piv.b;
      rows[i].c = rows[i].c - f * piv.c;
    }
  }
  std::ptrdiff_t p1 = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == p0) continue;
    if (!rows[i].b.is_zero()) {
      p1 = static_cast<std::ptrdiff_t>(i);
      break;
    }
  }
  if (p1 >= 0) {
    const Row piv = rows[static_cast<std::size_t>(p1)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<std::ptrdiff_t>(i) == p0 || static_cast<std::ptrdiff_t>(i) == p1) continue;
      if (rows[i].b.is_zero()) continue;
      CycloElt f = rows[i].b * piv.b.inverse();
      rows[i].b = zero;
      rows[i].c = rows[i].c - f * piv.c;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == p0 || static_cast<std::ptrdiff_t>(i) == p1) continue;
    if (!rows[i].c.is_zero()) return std::nullopt;  // inconsistent
  }

  CycloElt s = zero;
  CycloElt lambda = one;
  if (p1 >= 0) {
    const Row& r = rows[static_cast<std::size_t>(p1)];
    s = r.c * r.b.inverse();
  }
  if (p0 >= 0) {
    const Row& r = rows[static_cast<std::size_t>(p0)];
    lambda = (r.c - r.b * s) * r.a.inverse();
    if (p1 < 0) {
      // s is free; lambda(s) vanishes for at most one choice when b != 0.
      if (lambda.is_zero()) {
        if (r.b.is_zero()) return std::nullopt;
        s = one;
        lambda = (r.c - r.b) * r.a.inverse();
      }
    } else if (lambda.is_zero()) {
      return std::nullopt;  // the unique solution is degenerate
    }
  }
  AffElt f{lambda, s};
  // Exactness check over every generator.
  for (std::size_t i = 0; i < r1.values.size(); ++i) {
    if (aff_conj(r1.values[i], f) != r2.values[i]) return std::nullopt;
  }
  return f;
}

ScalarRep scalar_part(const Gl2Rep& rep) {
  ScalarRep out{rep.g, rep.n, rep.field, {}};
  out.values.reserve(rep.values.size());
  for (const UppElt& v : rep.values) out.values.push_back(v.bottom);
  return out;
}

AffineRep affine_part(const Gl2Rep& rep) {
  AffineRep out{rep.g, rep.n, rep.field, {}};
  out.values.reserve(rep.values.size());
  for (const UppElt& v : rep.values) {
    CycloElt bi = v.bottom.inverse();
    out.values.push_back({v.top * bi, v.corner * bi});
  }
  return out;
}

Gl2Rep tensor(const ScalarRep& scalar, const AffineRep& aff) {
  if (scalar.g != aff.g || scalar.n != aff.n) {
    throw std::invalid_argument("tensor requires matching (g,n)");
  }
  Gl2Rep out{scalar.g, scalar.n, scalar.field, {}};
  out.values.reserve(scalar.values.size());
  for (std::size_t i = 0; i < scalar.values.size(); ++i) {
    const CycloElt& s = scalar.values[i];
    out.values.push_back({s * aff.values[i].lin, s * aff.values[i].trans, s});
  }
  return out;
}

namespace {

// Common fixed point of the affine part, if any: a translation c with
// trans_i = c (lin_i - 1) at every generator.
std::optional<CycloElt> common_fixed_shift(const AffineRep& aff) {
  const CycloElt one = CycloElt::one(aff.field);
  std::ptrdiff_t pivot = -1;
  for (std::size_t i = 0; i < aff.values.size(); ++i) {
    if (!aff.values[i].lin.is_one()) {
      pivot = static_cast<std::ptrdiff_t>(i);
      break;
    }
  }
  CycloElt c = CycloElt::zero(aff.field);
  if (pivot >= 0) {
    const AffElt& p = aff.values[static_cast<std::size_t>(pivot)];
    c = p.trans * (p.lin - one).inverse();
  }
  for (const AffElt& v : aff.values) {
    if (v.trans != c * (v.lin - one)) return std::nullopt;
  }
  return c;
}

}  // namespace

bool is_totally_reducible(const Gl2Rep& rep) {
  return common_fixed_shift(affine_part(rep)).has_value();
}

Gl2Canonical canon_gl2(const Gl2Rep& rep) {
  if (is_totally_reducible(rep)) {
    ScalarRep l1{rep.g, rep.n, rep.field, {}};
    ScalarRep l2{rep.g, rep.n, rep.field, {}};
    for (const UppElt& v : rep.values) {
      l1.values.push_back(v.top);
      l2.values.push_back(v.bottom);
    }
    std::string s1 = canon_scalar(l1).bytes;
    std::string s2 = canon_scalar(l2).bytes;
    if (s2 < s1) {
      std::swap(l1, l2);
      std::swap(s1, s2);
    }
    Gl2Rep repr{rep.g, rep.n, rep.field, {}};
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
      repr.values.push_back({l1.values[i], CycloElt::zero(rep.field), l2.values[i]});
    }
    std::string bytes = header("gl2_split", rep.g, rep.n) + s1 + "||" + s2 + "}";
    return {{RepKind::Gl2Upper, std::move(bytes)}, std::move(repr), true};
  }
  ScalarRep sc = scalar_part(rep);
  AffineCanonical ac = canon_affine(affine_part(rep));
  std::string bytes =
      header("gl2_nonsplit", rep.g, rep.n) + canon_scalar(sc).bytes + "||" + ac.cls.bytes + "}";
  return {{RepKind::Gl2Upper, std::move(bytes)}, tensor(sc, ac.representative), false};
}

Canonicalized canonicalize(const AnyRep& rep) {
  return std::visit(
      [](const auto& r) -> Canonicalized {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ScalarRep>) {
          return {canon_scalar(r), r};
        } else if constexpr (std::is_same_v<T, AffineRep>) {
          AffineCanonical c = canon_affine(r);
          return {c.cls, std::move(c.representative)};
        } else {
          Gl2Canonical c = canon_gl2(r);
          return {c.cls, std::move(c.representative)};
        }
      },
      rep);
}

bool validate(const AnyRep& rep) {
  return std::visit([](const auto& r) { return validate(r); }, rep);
}

AnyRep act(const GenName& gen, const AnyRep& rep, const AutTable& table) {
  return std::visit([&](const auto& r) -> AnyRep { return act(gen, r, table); }, rep);
}

AnyRep act_word(const std::vector<GenName>& word, AnyRep rep, const AutTable& table) {
  for (const GenName& gen : word) rep = act(gen, rep, table);
  return rep;
}

bool is_abelian(const AnyRep& rep) {
  return std::visit([](const auto& r) { return is_abelian(r); }, rep);
}

int genus_of(const AnyRep& rep) {
  return std::visit([](const auto& r) { return r.g; }, rep);
}

int punctures_of(const AnyRep& rep) {
  return std::visit([](const auto& r) { return r.n; }, rep);
}

FieldPtr field_of(const AnyRep& rep) {
  return std::visit([](const auto& r) { return r.field; }, rep);
}

std::optional<std::int64_t> image_order(const ScalarRep& rep) {
  std::int64_t order = 1;
  for (const CycloElt& v : rep.values) {
    auto o = v.as_root_of_unity();
    if (!o) return std::nullopt;
    order = std::lcm(order, *o);
  }
  return order;
}

std::optional<std::int64_t> image_order(const AffineRep& rep) {
  // A finite subgroup of Aff(C) fixes the barycenter of any orbit, so it is
  // conjugate to a finite linear (hence cyclic) group. Non-abelian or
  // nontrivially translating images are infinite.
  if (!is_abelian(rep)) return std::nullopt;
  bool all_linear_part_trivial = true;
  for (const AffElt& v : rep.values) {
    if (!v.lin.is_one()) {
      all_linear_part_trivial = false;
      break;
    }
  }
  if (all_linear_part_trivial) {
    for (const AffElt& v : rep.values) {
      if (!v.trans.is_zero()) return std::nullopt;  // nontrivial translation group
    }
    return 1;
  }
  auto shift = common_fixed_shift(rep);
  if (!shift) return std::nullopt;  // abelian images always share a fixed point; unreachable
  std::int64_t order = 1;
  for (const AffElt& v : rep.values) {
    if (v.lin.is_one()) continue;
    auto o = v.lin.as_root_of_unity();
    if (!o) return std::nullopt;
    order = std::lcm(order, *o);
  }
  return order;
}

std::optional<std::int64_t> image_order(const Gl2Rep& rep) {
  auto ns = image_order(scalar_part(rep));
  auto na = image_order(affine_part(rep));
  if (!ns || !na) return std::nullopt;
  // Both parts finite: enumerate the closure; the image embeds in the
  // product of the two part-images, so this terminates within ns*na steps.
  std::vector<UppElt> gens;
  for (const UppElt& v : rep.values) gens.push_back(v);
  auto key = [](const UppElt& m) {
    return m.top.serialize() + "|" + m.corner.serialize() + "|" + m.bottom.serialize();
  };
  std::unordered_set<std::string> seen;
  std::vector<UppElt> frontier{upp_identity(rep.field)};
  seen.insert(key(frontier[0]));
  const std::int64_t guard = *ns * *na;
  while (!frontier.empty()) {
    std::vector<UppElt> next;
    for (const UppElt& m : frontier) {
      for (const UppElt& gen : gens) {
        UppElt prod = upp_mul(m, gen);
        if (seen.insert(key(prod)).second) {
          next.push_back(std::move(prod));
          if (static_cast<std::int64_t>(seen.size()) > guard) {
            throw std::logic_error("image closure exceeded its product bound");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

std::optional<std::int64_t> image_order(const AnyRep& rep) {
  return std::visit([](const auto& r) { return image_order(r); }, rep);
}

}  // namespace mcgorbit

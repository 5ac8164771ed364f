#include "mcgorbit/selftest.hpp"

#include <random>

#include "mcgorbit/classify.hpp"
#include "mcgorbit/mcg.hpp"
#include "mcgorbit/reps.hpp"
#include "mcgorbit/surface.hpp"
#include "mcgorbit/words.hpp"

namespace mcgorbit {

namespace {

struct Ctx {
  SelftestReport* report;
  std::mt19937_64 rng;

  void check(bool ok, const std::string& what) {
    ++report->checks;
    if (!ok) report->failures.push_back(what);
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }
};

std::string tag(int g, int n, const std::string& what) {
  return "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + "): " + what;
}

void relation_suite(Ctx& ctx, int g, int n) {
  const Automorphism id = identity_automorphism(g, n);

  for (const GenName& gen : generator_set(g, n)) {
    const Automorphism fwd = auto_of(gen, g, n);
    const Automorphism inv = inverse_auto(gen, g, n);
    ctx.check(compose(fwd, inv) == id, tag(g, n, to_string(gen) + " o inverse != id"));
    ctx.check(compose(inv, fwd) == id, tag(g, n, "inverse o " + to_string(gen) + " != id"));
    ctx.check(relator_conjugator(fwd, g, n).has_value(),
              tag(g, n, to_string(gen) + " does not preserve the relator class"));
    // Puncture permutation: transposition for half-twists, identity for twists.
    std::vector<int> expect(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) expect[static_cast<std::size_t>(i)] = i;
    if (gen.family == GenName::Family::Sigma) {
      std::swap(expect[static_cast<std::size_t>(gen.index - 1)],
                expect[static_cast<std::size_t>(gen.index)]);
    }
    ctx.check(fwd.perm == expect, tag(g, n, to_string(gen) + " has wrong puncture permutation"));
  }

  // Braid relations.
  for (int i = 1; i + 1 <= n - 1; ++i) {
    const Automorphism si = auto_of(sigma(i), g, n);
    const Automorphism sj = auto_of(sigma(i + 1), g, n);
    ctx.check(compose(si, compose(sj, si)) == compose(sj, compose(si, sj)),
              tag(g, n, "braid relation fails at s" + std::to_string(i)));
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      const Automorphism si = auto_of(sigma(i), g, n);
      const Automorphism sj = auto_of(sigma(j), g, n);
      ctx.check(compose(si, sj) == compose(sj, si),
                tag(g, n, "distant half-twists fail to commute"));
    }
  }
  // Twists with handle support commute with every half-twist.
  for (int t = 1; t <= 3 * g - 1; ++t) {
    for (int j = 1; j <= n - 1; ++j) {
      const Automorphism a = auto_of(tau(t), g, n);
      const Automorphism b = auto_of(sigma(j), g, n);
      ctx.check(compose(a, b) == compose(b, a),
                tag(g, n, "t" + std::to_string(t) + " and s" + std::to_string(j) +
                              " fail to commute"));
    }
  }

  // Fixed elements of the handle and mixing twists.
  for (int k = 1; k <= g - 1; ++k) {
    const Word th = theta_word(g, k);
    ctx.check(apply_auto(auto_of(tau(2 * g + k), g, n), th) == th,
              tag(g, n, "Theta_" + std::to_string(k) + " not fixed"));
  }
  if (n >= 2) {
    const Word d = delta_word(g, n);
    for (int k = 1; k <= n - 1; ++k) {
      const Word xi = xi_word(g, n, k);
      const Automorphism mix = auto_of(tau(3 * g - 1 + k), g, n);
      ctx.check(apply_auto(mix, xi) == xi, tag(g, n, "Xi_" + std::to_string(k) + " not fixed"));
      // delta image: [Xi_k^-1, beta_g] delta
      const Word expect = concat(commutator(invert(xi), word_of({beta(g)})), d);
      ctx.check(apply_auto(mix, d) == expect,
                tag(g, n, "mixing twist delta image mismatch at k=" + std::to_string(k)));
    }
    // Closed form of powers of s_cycl against the composed power.
    Automorphism cyc = auto_of(sigma(1), g, n);
    for (int i = 2; i <= n - 1; ++i) cyc = compose(auto_of(sigma(i), g, n), cyc);
    Automorphism acc = identity_automorphism(g, n);
    for (int k = 1; k <= n; ++k) {
      acc = compose(cyc, acc);
      ctx.check(acc == sigma_cycl_power(g, n, k),
                tag(g, n, "sigma_cycl^" + std::to_string(k) + " closed form mismatch"));
    }
  }
}

Word random_word(Ctx& ctx, int g, int n, int len) {
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i) {
    const int sign = ctx.uniform(0, 1) == 0 ? 1 : -1;
    switch (ctx.uniform(0, n > 0 ? 2 : 1)) {
      case 0: raw.push_back(alpha(static_cast<int>(ctx.uniform(1, g)), sign)); break;
      case 1: raw.push_back(beta(static_cast<int>(ctx.uniform(1, g)), sign)); break;
      default: raw.push_back(gamma(static_cast<int>(ctx.uniform(1, n)), sign)); break;
    }
  }
  return reduce(raw);
}

void word_suite(Ctx& ctx, int g, int n) {
  const Word u = random_word(ctx, g, n, static_cast<int>(ctx.uniform(0, 12)));
  const Word v = random_word(ctx, g, n, static_cast<int>(ctx.uniform(0, 12)));
  ctx.check(reduce(u.letters()) == u, "reduce not idempotent");
  ctx.check(concat(u, invert(u)).empty(), "u u^-1 does not cancel");
  ctx.check(concat(u, v).size() <= u.size() + v.size(), "concat grew beyond |u|+|v|");
  const Word conj = concat(concat(u, v), invert(u));
  auto w = conjugate_in_free(conj, v);
  ctx.check(w.has_value(), "conjugate_in_free missed an explicit conjugate");
  if (w) {
    ctx.check(concat(concat(*w, v), invert(*w)) == conj, "conjugator does not conjugate");
  }
}

CycloElt random_elt(Ctx& ctx, const FieldPtr& field) {
  CycloElt e = CycloElt::from_rational(field, mpq_class(ctx.uniform(-3, 3), ctx.uniform(1, 3)));
  e = e + CycloElt::zeta_pow(field, ctx.uniform(0, field->order() - 1)) *
              CycloElt::from_int(field, static_cast<long>(ctx.uniform(-2, 2)));
  return e;
}

CycloElt random_root_of_unity(Ctx& ctx, const FieldPtr& field, bool nontrivial) {
  while (true) {
    const CycloElt z = CycloElt::zeta_pow(field, ctx.uniform(0, field->order() - 1));
    const CycloElt v = ctx.uniform(0, 1) == 0 ? z : -z;
    if (!nontrivial || !v.is_one()) return v;
  }
}

// Random valid affine representation: free values everywhere except one
// generator solved from the relator. alpha_g gets a nontrivial linear part
// so the correction is always solvable.
AffineRep random_affine(Ctx& ctx, int g, int n, const FieldPtr& field) {
  AffineRep rep{g, n, field, {}};
  rep.values.assign(static_cast<std::size_t>(generator_count(g, n)), aff_identity(field));
  for (int i = 1; i <= g; ++i) {
    const bool pin = i == g && n == 0;
    CycloElt lin = random_root_of_unity(ctx, field, pin);
    rep.values[static_cast<std::size_t>(slot_of(alpha(i), g, n))] = {lin, random_elt(ctx, field)};
    if (!(pin)) {
      rep.values[static_cast<std::size_t>(slot_of(beta(i), g, n))] = {
          random_root_of_unity(ctx, field, false), random_elt(ctx, field)};
    }
  }
  for (int j = 1; j + 1 <= n; ++j) {
    rep.values[static_cast<std::size_t>(slot_of(gamma(j), g, n))] = {
        random_root_of_unity(ctx, field, false), random_elt(ctx, field)};
  }
  if (n > 0) {
    // gamma_n := (eval of everything before it)^-1
    Word before;
    for (int i = 1; i <= g; ++i) {
      before = concat(before, commutator(word_of({alpha(i)}), word_of({beta(i)})));
    }
    for (int j = 1; j + 1 <= n; ++j) before = concat(before, word_of({gamma(j)}));
    rep.values[static_cast<std::size_t>(slot_of(gamma(n), g, n))] = aff_inv(eval(rep, before));
  } else {
    // Solve [alpha_g, beta_g] = T for beta_g, T the inverse of the other
    // handles' contribution (a translation).
    Word others;
    for (int i = 1; i <= g - 1; ++i) {
      others = concat(others, commutator(word_of({alpha(i)}), word_of({beta(i)})));
    }
    const AffElt target = aff_inv(eval(rep, others));
    const AffElt& ag = rep.values[static_cast<std::size_t>(slot_of(alpha(g), g, n))];
    const CycloElt one = CycloElt::one(field);
    // [mu z + c, a z + b] = z - c(a-1) + (mu-1) b
    const CycloElt a = random_root_of_unity(ctx, field, false);
    const CycloElt b =
        (target.trans + ag.trans * (a - one)) * (ag.lin - one).inverse();
    rep.values[static_cast<std::size_t>(slot_of(beta(g), g, n))] = {a, b};
  }
  return rep;
}

ScalarRep random_scalar(Ctx& ctx, int g, int n, const FieldPtr& field) {
  ScalarRep rep{g, n, field, {}};
  rep.values.assign(static_cast<std::size_t>(generator_count(g, n)), CycloElt::one(field));
  for (int i = 1; i <= g; ++i) {
    rep.values[static_cast<std::size_t>(slot_of(alpha(i), g, n))] =
        random_root_of_unity(ctx, field, false);
    rep.values[static_cast<std::size_t>(slot_of(beta(i), g, n))] =
        random_root_of_unity(ctx, field, false);
  }
  CycloElt prod = CycloElt::one(field);
  for (int j = 1; j + 1 <= n; ++j) {
    CycloElt v = random_root_of_unity(ctx, field, false);
    prod = prod * v;
    rep.values[static_cast<std::size_t>(slot_of(gamma(j), g, n))] = v;
  }
  if (n > 0) {
    rep.values[static_cast<std::size_t>(slot_of(gamma(n), g, n))] = prod.inverse();
  }
  return rep;
}

GenName random_gen(Ctx& ctx, int g, int n) {
  const std::vector<GenName> gens = generator_set(g, n);
  GenName gen = gens[static_cast<std::size_t>(ctx.uniform(0, static_cast<std::int64_t>(gens.size()) - 1))];
  gen.power = ctx.uniform(0, 1) == 0 ? 1 : -1;
  return gen;
}

void action_suite(Ctx& ctx, int g, int n, const FieldPtr& field) {
  const AutTable table(g, n);
  const AffineRep rep = random_affine(ctx, g, n, field);
  ctx.check(validate(rep), tag(g, n, "random affine representation is invalid"));

  const ScalarRep srep = random_scalar(ctx, g, n, field);
  ctx.check(validate(srep), tag(g, n, "random scalar representation is invalid"));

  const Gl2Rep trep = tensor(srep, rep);
  ctx.check(validate(trep), tag(g, n, "tensor of valid parts is invalid"));
  ctx.check(scalar_part(trep).values == srep.values && affine_part(trep).values == rep.values,
            tag(g, n, "tensor does not round-trip through its parts"));

  // delta evaluates inverse to the product of handle commutators
  Word handles;
  for (int i = 1; i <= g; ++i) {
    handles = concat(handles, commutator(word_of({alpha(i)}), word_of({beta(i)})));
  }
  ctx.check(eval(rep, delta_word(g, n)) == aff_inv(eval(rep, handles)),
            tag(g, n, "delta does not invert the handle part"));
  ctx.check(eval(srep, delta_word(g, n)) == eval(srep, handles).inverse(),
            tag(g, n, "scalar delta does not invert the handle part"));

  const GenName h1 = random_gen(ctx, g, n);
  const GenName h2 = random_gen(ctx, g, n);

  // Left action law: evaluating through the composed acting automorphism
  // agrees with acting step by step.
  const Automorphism composed = compose(table.acting(h1), table.acting(h2));
  const AffineRep stepwise = act(h2, act(h1, rep, table), table);
  bool action_ok = true;
  for (std::size_t s = 0; s < rep.values.size(); ++s) {
    if (eval(rep, composed.images[s]) != stepwise.values[s]) action_ok = false;
  }
  ctx.check(action_ok, tag(g, n, "action law fails on " + to_string(h1) + " " + to_string(h2)));
  ctx.check(validate(stepwise), tag(g, n, "action broke validity"));

  // Canonical form vs conjugator oracle.
  AffElt f{random_root_of_unity(ctx, field, false), random_elt(ctx, field)};
  const AffineRep conj = conjugate_rep(rep, f);
  ctx.check(canon_affine(rep).cls == canon_affine(conj).cls,
            tag(g, n, "conjugate representations canonicalize apart"));
  auto back = conjugacy_equal(rep, conj);
  ctx.check(back.has_value(), tag(g, n, "conjugacy oracle missed an explicit conjugate"));
  const AffineRep other = random_affine(ctx, g, n, field);
  const bool same_class = canon_affine(rep).cls == canon_affine(other).cls;
  ctx.check(conjugacy_equal(rep, other).has_value() == same_class,
            tag(g, n, "canonical classes disagree with the conjugacy oracle"));

  // Pure words move each puncture image inside its conjugacy class.
  std::vector<GenName> word;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int len = static_cast<int>(ctx.uniform(1, 6)); len > 0; --len) {
    const GenName gen = random_gen(ctx, g, n);
    word.push_back(gen);
    const std::vector<int>& p = table.forward({gen.family, gen.index, 1}).perm;
    std::vector<int> next(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      next[i] = p[static_cast<std::size_t>(perm[i])];
    }
    perm = next;
  }
  bool pure = true;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i)) pure = false;
  }
  if (pure) {
    const AffineRep moved = act_word(word, rep, table);
    for (int j = 1; j <= n; ++j) {
      const auto s = static_cast<std::size_t>(slot_of(gamma(j), g, n));
      ctx.check(aff_elements_conjugate(rep.values[s], moved.values[s]),
                tag(g, n, "pure word moved gamma_" + std::to_string(j) +
                              " outside its conjugacy class"));
    }
  }
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, int rounds) {
  SelftestReport report;
  Ctx ctx{&report, std::mt19937_64(seed)};

  const std::pair<int, int> shapes[] = {{1, 0}, {1, 1}, {1, 2}, {1, 3},
                                        {2, 0}, {2, 1}, {2, 2}, {3, 3}};
  for (auto [g, n] : shapes) relation_suite(ctx, g, n);

  const std::int64_t orders[] = {2, 3, 4};
  std::vector<FieldPtr> fields;
  for (std::int64_t n : orders) fields.push_back(make_field(n));

  for (int round = 0; round < rounds; ++round) {
    const int g = static_cast<int>(ctx.uniform(1, 2));
    const int n = static_cast<int>(ctx.uniform(0, 2));
    const FieldPtr& field = fields[static_cast<std::size_t>(ctx.uniform(0, 2))];
    word_suite(ctx, g, std::max(n, 1));
    action_suite(ctx, g, n, field);
  }
  return report;
}

}  // namespace mcgorbit

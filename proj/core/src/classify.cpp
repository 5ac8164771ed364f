#include "mcgorbit/classify.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

namespace mcgorbit {

std::string to_string(Verdict v) { return v == Verdict::Finite ? "finite" : "infinite"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::AbelianFiniteImage: return "abelian_finite_image";
    case Reason::AbelianInfiniteImage: return "abelian_infinite_image";
    case Reason::Genus1MuC: return "genus1_mu_c";
    case Reason::HigherGenusNonAbelian: return "higher_genus_non_abelian";
    case Reason::NonTorsionLinearPart: return "non_torsion_linear_part";
    case Reason::TranslationGroup: return "translation_group";
    case Reason::Genus1NonTranslationPuncture: return "genus1_non_translation_puncture";
  }
  return "?";
}

namespace {

const char kNote[] =
    "finite orbit is equivalent to the existence of a universal algebraic "
    "isomonodromic deformation with this monodromy (stable pointed base curve, "
    "mild transversal models)";

mpz_class pow_int(std::int64_t base, std::int64_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

// Exponent of x in the cyclic group generated by base (order known), if any.
std::optional<std::int64_t> dlog(const CycloElt& base, std::int64_t order, const CycloElt& x) {
  CycloElt acc = CycloElt::one(base.field());
  for (std::int64_t e = 0; e < order; ++e) {
    if (acc == x) return e;
    acc = acc * base;
  }
  return std::nullopt;
}

// Generator of the unique order-L subgroup of the torsion of Q(zeta_N)^*.
// That torsion is cyclic of order lcm(2, N): generated by zeta_N for even N
// and by -zeta_N for odd N.
CycloElt torsion_generator(const FieldPtr& field, std::int64_t l) {
  const std::int64_t n = field->order();
  const std::int64_t m = std::lcm<std::int64_t>(2, n);
  if (m % l != 0) throw std::logic_error("torsion subgroup order must divide lcm(2, N)");
  CycloElt root = CycloElt::zeta_pow(field, 1);
  if (n % 2 == 1) root = -root;
  return root.pow(m / l);
}

// Image of the linear-part character: (generator, order), or nullopt when
// some linear part is not a root of unity.
std::optional<std::pair<CycloElt, std::int64_t>> linear_image(const AffineRep& rep) {
  std::int64_t l = 1;
  for (const AffElt& v : rep.values) {
    auto o = v.lin.as_root_of_unity();
    if (!o) return std::nullopt;
    l = std::lcm(l, *o);
  }
  return std::make_pair(torsion_generator(rep.field, l), l);
}

std::int64_t lin_exponent(const AffElt& v, const CycloElt& mu, std::int64_t order) {
  auto e = dlog(mu, order, v.lin);
  if (!e) throw std::logic_error("linear part escaped its own image group");
  return *e;
}

bool handle_commutes(const AffineRep& rep) {
  const int g = rep.g;
  const AffElt& ag = rep.values[static_cast<std::size_t>(slot_of(alpha(g), g, rep.n))];
  const AffElt& bg = rep.values[static_cast<std::size_t>(slot_of(beta(g), g, rep.n))];
  return aff_compose(ag, bg) == aff_compose(bg, ag);
}

// Breadth-first search through canonical classes for a representative whose
// g-th handle does not commute. Existence is guaranteed for non-abelian
// images, but with no effective depth bound; the cap guards the search.
std::optional<std::vector<GenName>> find_noncommuting_handle(const AffineRep& rep,
                                                             std::int64_t search_cap,
                                                             const AutTable& table) {
  if (!handle_commutes(rep)) return std::vector<GenName>{};
  struct Node {
    AffineRep rep;
    std::int64_t parent;
    GenName via;
  };
  std::vector<GenName> moves;
  for (const GenName& gen : table.generators()) {
    moves.push_back(gen);
    moves.push_back(gen.inverse());
  }
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  nodes.push_back({canon_affine(rep).representative, -1, tau(1)});
  seen.insert(canon_affine(rep).cls.bytes);
  std::deque<std::int64_t> queue{0};
  while (!queue.empty()) {
    const std::int64_t cur = queue.front();
    queue.pop_front();
    for (const GenName& mv : moves) {
      AffineRep moved = act(mv, nodes[static_cast<std::size_t>(cur)].rep, table);
      AffineCanonical canon = canon_affine(moved);
      if (!seen.insert(canon.cls.bytes).second) continue;
      nodes.push_back({std::move(canon.representative), cur, mv});
      const std::int64_t sid = static_cast<std::int64_t>(nodes.size()) - 1;
      if (!handle_commutes(nodes[static_cast<std::size_t>(sid)].rep)) {
        std::vector<GenName> word;
        for (std::int64_t s = sid; s > 0; s = nodes[static_cast<std::size_t>(s)].parent) {
          word.push_back(nodes[static_cast<std::size_t>(s)].via);
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      if (static_cast<std::int64_t>(seen.size()) > search_cap) return std::nullopt;
      queue.push_back(sid);
    }
  }
  return std::nullopt;  // orbit closed without a non-commuting handle
}

}  // namespace

PrepOutcome prepare(const AffineRep& rep, std::int64_t search_cap) {
  if (!validate(rep)) throw std::invalid_argument("prepare requires a valid representation");
  if (is_abelian(rep)) {
    return PrepFailure{PrepFailure::Code::AbelianImage, "image is abelian"};
  }
  auto img = linear_image(rep);
  if (!img) {
    return PrepFailure{PrepFailure::Code::NonTorsionLinearPart,
                       "some linear part is not a root of unity"};
  }
  const auto& [mu, mu_order] = *img;
  const int g = rep.g;
  const int n = rep.n;
  const AutTable table(g, n);

  auto search = find_noncommuting_handle(rep, search_cap, table);
  if (!search) {
    return PrepFailure{PrepFailure::Code::SearchCapExhausted,
                       "no representative with non-commuting handle found within " +
                           std::to_string(search_cap) + " classes"};
  }
  std::vector<GenName> word = *search;
  AffineRep cur = act_word(word, rep, table);

  // Euclidean reduction of each handle's exponent pair (m_i, n_i) to
  // (gcd, 0): act(t_{2i}) sends m to m - n, act(t_{2i-1}) sends n to n - m,
  // inverses add instead.
  for (int i = 1; i <= g; ++i) {
    const auto a_slot = static_cast<std::size_t>(slot_of(alpha(i), g, n));
    const auto b_slot = static_cast<std::size_t>(slot_of(beta(i), g, n));
    while (true) {
      const std::int64_t mi = lin_exponent(cur.values[a_slot], mu, mu_order);
      const std::int64_t ni = lin_exponent(cur.values[b_slot], mu, mu_order);
      if (ni == 0) break;
      std::vector<GenName> step;
      if (mi == 0) {
        step.assign(1, tau(2 * i, -1));  // (0, n) -> (n, n)
      } else if (ni >= mi) {
        step.assign(static_cast<std::size_t>(ni / mi), tau(2 * i - 1));
      } else {
        step.assign(static_cast<std::size_t>(mi / ni), tau(2 * i));
      }
      cur = act_word(step, cur, table);
      word.insert(word.end(), step.begin(), step.end());
    }
  }

  // Conjugate: kill the translation of alpha_g, then scale beta_g to z + 1.
  const auto ag_slot = static_cast<std::size_t>(slot_of(alpha(g), g, n));
  const auto bg_slot = static_cast<std::size_t>(slot_of(beta(g), g, n));
  const CycloElt one = CycloElt::one(rep.field);
  const CycloElt lin_ag = cur.values[ag_slot].lin;
  if (lin_ag.is_one()) throw std::logic_error("prepared alpha_g has trivial linear part");
  AffElt shift{one, cur.values[ag_slot].trans * (lin_ag - one).inverse()};
  cur = conjugate_rep(cur, shift);
  const CycloElt trans_bg = cur.values[bg_slot].trans;
  if (trans_bg.is_zero()) throw std::logic_error("prepared beta_g degenerated to the identity");
  AffElt scale{trans_bg.inverse(), CycloElt::zero(rep.field)};
  cur = conjugate_rep(cur, scale);
  AffElt conjugator = aff_compose(scale, shift);

  PreparedForm p;
  p.g = g;
  p.n = n;
  p.word_applied = std::move(word);
  p.conjugator = conjugator;
  p.mu = mu;
  p.mu_order = mu_order;
  p.m_g = lin_exponent(cur.values[ag_slot], mu, mu_order);
  for (int i = 1; i <= g - 1; ++i) {
    const auto ai = static_cast<std::size_t>(slot_of(alpha(i), g, n));
    const auto bi = static_cast<std::size_t>(slot_of(beta(i), g, n));
    p.m.push_back(lin_exponent(cur.values[ai], mu, mu_order));
    p.a.push_back(cur.values[ai].trans);
    p.b.push_back(cur.values[bi].trans);
  }
  for (int j = 1; j <= n; ++j) {
    const auto gj = static_cast<std::size_t>(slot_of(gamma(j), g, n));
    if (!cur.values[gj].lin.is_one()) {
      return PrepFailure{PrepFailure::Code::NonTranslationPuncture,
                         "gamma_" + std::to_string(j) + " has non-trivial linear part " +
                             "after preparation"};
    }
    p.c.push_back(cur.values[gj].trans);
  }
  p.representative = std::move(cur);
  return p;
}

bool elimination_check(const PreparedForm& p) {
  if (p.g < 2) throw std::invalid_argument("elimination criterion needs g >= 2");
  const CycloElt mu_mg = p.mu.pow(p.m_g);
  const CycloElt mu_mg1 = p.mu.pow(p.m.back());
  return mu_mg1 == mu_mg.inverse() && p.a.back().is_zero() && p.b.back().is_zero();
}

namespace {

Classification classify_affine(const AffineRep& rep, std::int64_t search_cap) {
  Classification out;
  out.note = kNote;
  if (is_abelian(rep)) {
    if (auto order = image_order(rep)) {
      out.verdict = Verdict::Finite;
      out.reason = Reason::AbelianFiniteImage;
      out.bounds = bounds_scalar(*order, rep.g);
      return out;
    }
    bool translations_only = true;
    for (const AffElt& v : rep.values) {
      if (!v.lin.is_one()) {
        translations_only = false;
        break;
      }
    }
    out.verdict = Verdict::Infinite;
    out.reason = translations_only ? Reason::TranslationGroup : Reason::AbelianInfiniteImage;
    return out;
  }
  if (!linear_image(rep)) {
    out.verdict = Verdict::Infinite;
    out.reason = Reason::NonTorsionLinearPart;
    return out;
  }
  if (rep.g >= 2) {
    out.verdict = Verdict::Infinite;
    out.reason = Reason::HigherGenusNonAbelian;
    return out;
  }
  PrepOutcome prep = prepare(rep, search_cap);
  if (auto* fail = std::get_if<PrepFailure>(&prep)) {
    if (fail->code == PrepFailure::Code::SearchCapExhausted) {
      throw SearchCapExhausted(fail->detail);
    }
    if (fail->code == PrepFailure::Code::NonTranslationPuncture) {
      out.verdict = Verdict::Infinite;
      out.reason = Reason::Genus1NonTranslationPuncture;
      return out;
    }
    throw std::logic_error("preparation failed after precondition checks: " + fail->detail);
  }
  const PreparedForm& p = std::get<PreparedForm>(prep);

  // Scaling by 1/(sum of c) lands exactly on the mu-c family member:
  // alpha -> mu~ z, beta -> z - 1/(mu~ - 1), gamma_j -> z + c_j / d.
  const CycloElt one = CycloElt::one(rep.field);
  const CycloElt mu_tilde = p.mu.pow(p.m_g);
  CycloElt d = CycloElt::zero(rep.field);
  for (const CycloElt& cj : p.c) d = d + cj;
  if (d != one - mu_tilde) {
    throw std::logic_error("prepared translations violate the relator identity");
  }
  Genus1Data data;
  data.mu = mu_tilde;
  auto n_order = mu_tilde.as_root_of_unity();
  if (!n_order || *n_order < 2) throw std::logic_error("prepared mu must have order >= 2");
  data.mu_order = *n_order;
  const CycloElt d_inv = d.inverse();
  for (const CycloElt& cj : p.c) {
    CycloElt scaled = cj * d_inv;
    if (!scaled.is_zero()) ++data.n_prime;
    data.c.push_back(std::move(scaled));
  }
  out.verdict = Verdict::Finite;
  out.reason = Reason::Genus1MuC;
  out.bounds = bounds_b2(data.mu_order, data.n_prime, 1);
  out.genus1 = std::move(data);
  out.prepared_word = p.word_applied;
  return out;
}

}  // namespace

Classification classify(const AnyRep& rep, std::int64_t search_cap) {
  if (!validate(rep)) throw std::invalid_argument("classify requires a valid representation");
  Classification out;
  out.note = kNote;
  if (const auto* scalar = std::get_if<ScalarRep>(&rep)) {
    if (auto order = image_order(*scalar)) {
      out.verdict = Verdict::Finite;
      out.reason = Reason::AbelianFiniteImage;
      out.bounds = bounds_scalar(*order, scalar->g);
    } else {
      out.verdict = Verdict::Infinite;
      out.reason = Reason::AbelianInfiniteImage;
    }
    return out;
  }
  if (const auto* aff = std::get_if<AffineRep>(&rep)) {
    return classify_affine(*aff, search_cap);
  }
  const Gl2Rep& gl2 = std::get<Gl2Rep>(rep);
  if (is_totally_reducible(gl2)) {
    ScalarRep l1{gl2.g, gl2.n, gl2.field, {}};
    ScalarRep l2{gl2.g, gl2.n, gl2.field, {}};
    for (const UppElt& v : gl2.values) {
      l1.values.push_back(v.top);
      l2.values.push_back(v.bottom);
    }
    auto n1 = image_order(l1);
    auto n2 = image_order(l2);
    if (n1 && n2) {
      auto n_rho = image_order(gl2);
      if (!n_rho) throw std::logic_error("split image with finite parts must be finite");
      out.verdict = Verdict::Finite;
      out.reason = Reason::AbelianFiniteImage;
      out.bounds = bounds_b1(*n1, *n2, *n_rho, gl2.g);
    } else {
      out.verdict = Verdict::Infinite;
      out.reason = Reason::AbelianInfiniteImage;
    }
    return out;
  }
  auto n2 = image_order(scalar_part(gl2));
  Classification aff_cls = classify_affine(affine_part(gl2), search_cap);
  if (!n2) {
    out.verdict = Verdict::Infinite;
    out.reason = Reason::AbelianInfiniteImage;
    return out;
  }
  if (aff_cls.verdict == Verdict::Infinite) return aff_cls;
  if (aff_cls.reason != Reason::Genus1MuC || !aff_cls.genus1) {
    // A finite abelian affine part is conjugate to a linear one, which would
    // make the representation totally reducible.
    throw std::logic_error("non-split representation with abelian finite affine part");
  }
  out.verdict = Verdict::Finite;
  out.reason = Reason::Genus1MuC;
  out.genus1 = aff_cls.genus1;
  out.prepared_word = aff_cls.prepared_word;
  out.bounds = bounds_b2(aff_cls.genus1->mu_order, aff_cls.genus1->n_prime, *n2);
  return out;
}

mpz_class count_scalar_orbit(const ScalarRep& rep) {
  auto order = image_order(rep);
  if (!order) throw std::domain_error("count_scalar_orbit requires a finite image");
  const std::int64_t l = *order;
  const int g = rep.g;
  const CycloElt mu = torsion_generator(rep.field, l);

  std::int64_t fixed_gcd = l;
  for (int j = 1; j <= rep.n; ++j) {
    const auto slot = static_cast<std::size_t>(slot_of(gamma(j), g, rep.n));
    auto e = dlog(mu, l, rep.values[slot]);
    if (!e) throw std::logic_error("gamma value escaped the image group");
    fixed_gcd = std::gcd(fixed_gcd, *e);
  }

  const mpz_class total = pow_int(l, 2 * g);
  if (total > mpz_class(100000000)) {
    throw std::domain_error("scalar orbit enumeration over " + total.get_str() +
                            " exponent tuples is too large");
  }
  // Odometer over (Z/l)^{2g}.
  std::vector<std::int64_t> e(static_cast<std::size_t>(2 * g), 0);
  mpz_class count = 0;
  while (true) {
    std::int64_t d = fixed_gcd;
    for (std::int64_t v : e) d = std::gcd(d, v);
    if (d == 1) ++count;
    std::size_t pos = 0;
    while (pos < e.size()) {
      if (++e[pos] < l) break;
      e[pos] = 0;
      ++pos;
    }
    if (pos == e.size()) break;
  }
  return count;
}

Bounds bounds_scalar(std::int64_t n_img, int g) {
  if (n_img < 1 || g < 1) throw std::invalid_argument("bounds_scalar requires N >= 1, g >= 1");
  return {pow_int(n_img, 2 * g - 1), pow_int(n_img, 2 * g)};
}

Bounds bounds_b1(std::int64_t n1, std::int64_t n2, std::int64_t n_rho, int g) {
  if (n1 < 1 || n2 < 1 || n_rho < 1 || g < 1) {
    throw std::invalid_argument("bounds_b1 requires positive parameters");
  }
  const mpz_class m = pow_int(std::max(n1, n2), 2 * g - 1);
  return {(m + 1) / 2, pow_int(n_rho, 2 * g)};
}

Bounds bounds_b2(std::int64_t n, int n_prime, std::int64_t n2) {
  if (n < 2 || n_prime < 1 || n2 < 1) {
    throw std::invalid_argument("bounds_b2 requires N >= 2, n' >= 1, N2 >= 1");
  }
  const std::int64_t phi = euler_phi(n);
  const mpz_class n_pow = pow_int(n, n_prime - 1);
  mpz_class lower = mpz_class(phi) * (2 * n - phi) * n_pow;
  if (lower < n2) lower = n2;
  const mpz_class upper = (mpz_class(n) * n - 1) * n_pow * n2 * n2;
  return {lower, upper};
}

mpz_class expected_affine_count(std::int64_t n, int n_prime) {
  if (n < 2 || n_prime < 1) {
    throw std::invalid_argument("expected_affine_count requires N >= 2, n' >= 1");
  }
  std::int64_t k = 0;
  for (std::int64_t k1 = 1; k1 <= n; ++k1) {
    for (std::int64_t k2 = 1; k2 <= n; ++k2) {
      if (std::gcd(std::gcd(k1, k2), n) == 1) ++k;
    }
  }
  return mpz_class(k) * pow_int(n, n_prime - 1);
}

}  // namespace mcgorbit

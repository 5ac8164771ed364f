#include <doctest.h>

#include <stdexcept>

#include "mcgorbit/mcg.hpp"
#include "mcgorbit/surface.hpp"

using namespace mcgorbit;

namespace {

const Word& image_of(const Automorphism& a, Letter l) {
  return a.images[static_cast<std::size_t>(slot_of(l, a.g, a.n))];
}

}  // namespace

TEST_CASE("twist images per the action table") {
  // t2 (k=1): alpha_1 -> alpha_1 beta_1, everything else fixed
  const Automorphism t2 = auto_of(tau(2), 2, 2);
  CHECK(image_of(t2, alpha(1)) == word_of({alpha(1), beta(1)}));
  Automorphism expect = identity_automorphism(2, 2);
  expect.images[static_cast<std::size_t>(slot_of(alpha(1), 2, 2))] =
      word_of({alpha(1), beta(1)});
  CHECK(t2 == expect);

  // s1: g1 -> g1 g2 g1^-1, g2 -> g1
  const Automorphism s1 = auto_of(sigma(1), 2, 2);
  CHECK(image_of(s1, gamma(1)) == word_of({gamma(1), gamma(2), gamma(1, -1)}));
  CHECK(image_of(s1, gamma(2)) == word_of({gamma(1)}));

  // handle twist t5 = t_{2g+1} at g=2: Theta_1 conjugations
  const Automorphism t5 = auto_of(tau(5), 2, 2);
  const Word th = theta_word(2, 1);
  CHECK(image_of(t5, alpha(2)) == concat(invert(th), word_of({alpha(2)})));
  CHECK(image_of(t5, alpha(1)) == concat(word_of({alpha(1)}), th));
  CHECK(image_of(t5, beta(1)) == concat(concat(invert(th), word_of({beta(1)})), th));
  CHECK(image_of(t5, beta(2)) == word_of({beta(2)}));

  // mixing twist t3 = t_{3g} at g=1, n=2
  const Automorphism t3 = auto_of(tau(3), 1, 2);
  const Word xi = xi_word(1, 2, 1);
  CHECK(image_of(t3, alpha(1)) == concat(word_of({alpha(1)}), xi));
  CHECK(image_of(t3, beta(1)) == concat(concat(invert(xi), word_of({beta(1)})), xi));
  CHECK(image_of(t3, gamma(1)) == concat(concat(invert(xi), word_of({gamma(1)})), xi));
  CHECK(image_of(t3, gamma(2)) == word_of({gamma(2)}));
}

TEST_CASE("closed-form inverses compose to the identity") {
  const Automorphism t2i = inverse_auto(tau(2), 1, 1);
  CHECK(image_of(t2i, alpha(1)) == word_of({alpha(1), beta(1, -1)}));

  const Automorphism s1i = inverse_auto(sigma(1), 1, 2);
  CHECK(image_of(s1i, gamma(1)) == word_of({gamma(2)}));
  CHECK(image_of(s1i, gamma(2)) == word_of({gamma(2, -1), gamma(1), gamma(2)}));

  // mixing inverse: alpha_g -> alpha_g Xi^-1, beta_g -> Xi beta_g Xi^-1,
  // gamma_i -> Xi gamma_i Xi^-1
  const Automorphism mi = inverse_auto(tau(4), 1, 3);  // k=2 at g=1
  const Word xi = xi_word(1, 3, 2);
  CHECK(image_of(mi, alpha(1)) == concat(word_of({alpha(1)}), invert(xi)));
  CHECK(image_of(mi, beta(1)) == concat(concat(xi, word_of({beta(1)})), invert(xi)));
  CHECK(image_of(mi, gamma(2)) == concat(concat(xi, word_of({gamma(2)})), invert(xi)));

  // oracle: forward o inverse fixes every generator, both orders, all (g,n)
  for (auto [g, n] : {std::pair{1, 0}, {1, 2}, {2, 0}, {2, 3}, {3, 1}}) {
    const Automorphism id = identity_automorphism(g, n);
    for (const GenName& gen : generator_set(g, n)) {
      CHECK(compose(auto_of(gen, g, n), inverse_auto(gen, g, n)) == id);
      CHECK(compose(inverse_auto(gen, g, n), auto_of(gen, g, n)) == id);
    }
  }
}

TEST_CASE("apply_auto extends multiplicatively") {
  const Automorphism t2 = auto_of(tau(2), 1, 0);
  CHECK(apply_auto(t2, word_of({alpha(1), beta(1)})) ==
        word_of({alpha(1), beta(1), beta(1)}));
  const Automorphism id = identity_automorphism(2, 2);
  const Word w = parse_word("a1 g2 b2^-1 a2", 2, 2);
  CHECK(apply_auto(id, w) == w);
  const Automorphism s1 = auto_of(sigma(1), 1, 2);
  CHECK(apply_auto(s1, word_of({gamma(1), gamma(2)})) == word_of({gamma(1), gamma(2)}));
}

TEST_CASE("composition conventions") {
  // sigma_cycl for n=2 is s1 itself with the printed images
  const Automorphism cyc = auto_of(sigma(1), 1, 2);
  const Word d = delta_word(1, 2);
  CHECK(image_of(cyc, gamma(1)) == concat(concat(d, word_of({gamma(2)})), invert(d)));
  CHECK(image_of(cyc, gamma(2)) == word_of({gamma(1)}));

  // disjoint supports commute exactly
  const Automorphism a = auto_of(tau(1), 1, 3);
  const Automorphism b = auto_of(sigma(2), 1, 3);
  CHECK(compose(a, b) == compose(b, a));
}

TEST_CASE("braid relations hold exactly") {
  for (int n : {3, 4}) {
    const Automorphism s1 = auto_of(sigma(1), 1, n);
    const Automorphism s2 = auto_of(sigma(2), 1, n);
    CHECK(compose(s1, compose(s2, s1)) == compose(s2, compose(s1, s2)));
  }
  const Automorphism s1 = auto_of(sigma(1), 1, 4);
  const Automorphism s3 = auto_of(sigma(3), 1, 4);
  CHECK(compose(s1, s3) == compose(s3, s1));
}

TEST_CASE("sigma_cycl powers match the closed form") {
  // (3, 1): g1 -> d g3 d^-1, g2 -> g1, g3 -> g2
  const Automorphism p1 = sigma_cycl_power(1, 3, 1);
  const Word d = delta_word(1, 3);
  CHECK(image_of(p1, gamma(1)) == concat(concat(d, word_of({gamma(3)})), invert(d)));
  CHECK(image_of(p1, gamma(2)) == word_of({gamma(1)}));
  CHECK(image_of(p1, gamma(3)) == word_of({gamma(2)}));

  // (3, 3): full turn conjugates everything by delta
  const Automorphism p3 = sigma_cycl_power(1, 3, 3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(image_of(p3, gamma(i)) == concat(concat(d, word_of({gamma(i)})), invert(d)));
  }

  // (2, 2): equals the square of s1's automorphism
  const Automorphism s1 = auto_of(sigma(1), 1, 2);
  CHECK(sigma_cycl_power(1, 2, 2) == compose(s1, s1));

  // composed powers agree in general
  for (auto [g, n] : {std::pair{1, 2}, {1, 3}, {2, 4}}) {
    Automorphism cyc = auto_of(sigma(1), g, n);
    for (int i = 2; i <= n - 1; ++i) cyc = compose(auto_of(sigma(i), g, n), cyc);
    Automorphism acc = identity_automorphism(g, n);
    for (int k = 1; k <= n; ++k) {
      acc = compose(cyc, acc);
      CHECK(acc == sigma_cycl_power(g, n, k));
    }
  }
}

TEST_CASE("relator class is preserved by every generator") {
  CHECK(relator_conjugator(identity_automorphism(2, 2), 2, 2) == Word{});
  for (auto [g, n] : {std::pair{1, 1}, {1, 3}, {2, 0}, {2, 2}}) {
    for (const GenName& gen : generator_set(g, n)) {
      CHECK(relator_conjugator(auto_of(gen, g, n), g, n).has_value());
      CHECK(relator_conjugator(inverse_auto(gen, g, n), g, n).has_value());
    }
  }
}

TEST_CASE("mixing twists move delta by the commutator factor") {
  for (auto [g, n] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const Word d = delta_word(g, n);
    for (int k = 1; k <= n - 1; ++k) {
      const Automorphism mix = auto_of(tau(3 * g - 1 + k), g, n);
      const Word xi = xi_word(g, n, k);
      CHECK(apply_auto(mix, d) ==
            concat(commutator(invert(xi), word_of({beta(g)})), d));
      CHECK(apply_auto(mix, xi) == xi);
    }
    for (int k = 1; k <= g - 1; ++k) {
      CHECK(apply_auto(auto_of(tau(2 * g + k), g, n), theta_word(g, k)) == theta_word(g, k));
    }
  }
}

TEST_CASE("puncture permutations") {
  const Automorphism s2 = auto_of(sigma(2), 1, 4);
  CHECK(s2.perm == std::vector<int>{0, 2, 1, 3});
  for (int t = 1; t <= tau_count(2, 3); ++t) {
    CHECK(auto_of(tau(t), 2, 3).perm == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("generator validity and token syntax") {
  CHECK(tau_count(1, 0) == 2);
  CHECK(tau_count(1, 1) == 2);   // no mixing twists for n < 2
  CHECK(tau_count(1, 2) == 3);
  CHECK(tau_count(2, 3) == 7);
  CHECK(valid_generator(tau(2), 1, 1));
  CHECK(!valid_generator(tau(3), 1, 1));
  CHECK(!valid_generator(sigma(1), 1, 1));
  CHECK(valid_generator(sigma(1), 1, 2));

  const std::string text = "t1 s2 t5^-1";
  CHECK(to_string(parse_mcg_word(text)) == text);
  CHECK_THROWS_AS(parse_mcg_word("q1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mcg_word("t3", 1, 1), std::out_of_range);
  CHECK_THROWS_AS(auto_of(tau(3), 1, 1), std::out_of_range);
}

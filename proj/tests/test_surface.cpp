#include <doctest.h>

#include <stdexcept>

#include "mcgorbit/surface.hpp"

using namespace mcgorbit;

TEST_CASE("presentation relators") {
  CHECK(presentation(1, 0).relator ==
        word_of({alpha(1), beta(1), alpha(1, -1), beta(1, -1)}));
  CHECK(presentation(1, 2).relator ==
        word_of({alpha(1), beta(1), alpha(1, -1), beta(1, -1), gamma(1), gamma(2)}));
  CHECK(presentation(2, 1).relator ==
        concat(concat(commutator(word_of({alpha(1)}), word_of({beta(1)})),
                      commutator(word_of({alpha(2)}), word_of({beta(2)}))),
               word_of({gamma(1)})));
}

TEST_CASE("relator length is 4g + n") {
  for (int g = 1; g <= 3; ++g) {
    for (int n = 0; n <= 4; ++n) {
      const Presentation p = presentation(g, n);
      CHECK(p.relator.size() == static_cast<std::size_t>(4 * g + n));
      CHECK(p.generators.size() == static_cast<std::size_t>(2 * g + n));
    }
  }
}

TEST_CASE("genus zero and negative punctures are rejected") {
  CHECK_THROWS_AS(presentation(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(presentation(1, -1), std::invalid_argument);
}

TEST_CASE("generator slots") {
  CHECK(slot_of(alpha(1), 2, 1) == 0);
  CHECK(slot_of(beta(1), 2, 1) == 1);
  CHECK(slot_of(alpha(2), 2, 1) == 2);
  CHECK(slot_of(gamma(1), 2, 1) == 4);
  for (int s = 0; s < generator_count(2, 3); ++s) {
    CHECK(slot_of(letter_at(s, 2, 3), 2, 3) == s);
  }
  CHECK_THROWS_AS(slot_of(gamma(2), 2, 1), std::out_of_range);
}

TEST_CASE("delta") {
  CHECK(delta_word(1, 2) == word_of({gamma(1), gamma(2)}));
  CHECK(delta_word(2, 0).empty());
  CHECK(delta_word(1, 1) == word_of({gamma(1)}));
}

TEST_CASE("theta and xi") {
  CHECK(theta_word(2, 1) == word_of({alpha(2), beta(2, -1), alpha(2, -1), beta(1)}));
  CHECK(xi_word(1, 2, 1) == word_of({gamma(1, -1), beta(1)}));
  CHECK(xi_word(2, 3, 2) == word_of({gamma(2, -1), gamma(1, -1), beta(2)}));
  CHECK_THROWS_AS(theta_word(1, 1), std::out_of_range);
  CHECK_THROWS_AS(xi_word(1, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(xi_word(2, 3, 3), std::out_of_range);
}

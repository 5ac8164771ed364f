#include "mcgorbit/surface.hpp"

#include <stdexcept>
#include <string>

namespace mcgorbit {

namespace {

void check_gn(int g, int n) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  if (n < 0) throw std::invalid_argument("puncture count must be >= 0");
}

}  // namespace

Presentation presentation(int g, int n) {
  check_gn(g, n);
  Presentation p;
  p.g = g;
  p.n = n;
  p.generators.reserve(static_cast<std::size_t>(generator_count(g, n)));
  for (int i = 1; i <= g; ++i) {
    p.generators.push_back(alpha(i));
    p.generators.push_back(beta(i));
  }
  for (int j = 1; j <= n; ++j) p.generators.push_back(gamma(j));

  Word rel;
  for (int i = 1; i <= g; ++i) {
    rel = concat(rel, commutator(word_of({alpha(i)}), word_of({beta(i)})));
  }
  rel = concat(rel, delta_word(g, n));
  p.relator = rel;
  return p;
}

int slot_of(Letter l, int g, int n) {
  const int i = l.index();
  switch (l.kind()) {
    case Kind::Alpha:
      if (i > g) throw std::out_of_range("alpha index out of range");
      return 2 * (i - 1);
    case Kind::Beta:
      if (i > g) throw std::out_of_range("beta index out of range");
      return 2 * (i - 1) + 1;
    case Kind::Gamma:
      if (i > n) throw std::out_of_range("gamma index out of range");
      return 2 * g + (i - 1);
  }
  throw std::logic_error("unreachable");
}

Letter letter_at(int slot, int g, int n) {
  if (slot < 0 || slot >= generator_count(g, n)) throw std::out_of_range("generator slot");
  if (slot < 2 * g) {
    const int i = slot / 2 + 1;
    return slot % 2 == 0 ? alpha(i) : beta(i);
  }
  return gamma(slot - 2 * g + 1);
}

Word delta_word(int g, int n) {
  check_gn(g, n);
  std::vector<Letter> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) raw.push_back(gamma(j));
  return reduce(raw);
}

Word theta_word(int g, int k) {
  if (k < 1 || k > g - 1) throw std::out_of_range("theta index must be in [1, g-1]");
  return word_of({alpha(k + 1), beta(k + 1, -1), alpha(k + 1, -1), beta(k)});
}

Word xi_word(int g, int n, int k) {
  check_gn(g, n);
  if (k < 1 || k > n - 1) throw std::out_of_range("xi index must be in [1, n-1]");
  std::vector<Letter> raw;
  for (int j = k; j >= 1; --j) raw.push_back(gamma(j, -1));
  raw.push_back(beta(g));
  return reduce(raw);
}

}  // namespace mcgorbit

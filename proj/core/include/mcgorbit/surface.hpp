#ifndef MCGORBIT_SURFACE_HPP_
#define MCGORBIT_SURFACE_HPP_

// The one-relator presentation of the fundamental group of an n-punctured
// genus-g surface, on generators a_1, b_1, ..., a_g, b_g, g_1, ..., g_n with
// relator [a_1,b_1]...[a_g,b_g] g_1...g_n, plus its named special elements.

#include <vector>

#include "mcgorbit/words.hpp"

namespace mcgorbit {

struct Presentation {
  int g = 0;
  int n = 0;
  std::vector<Letter> generators;  // a_1, b_1, ..., a_g, b_g, g_1, ..., g_n
  Word relator;                    // length 4g + n, freely reduced
};

// Requires g >= 1 (genus zero is handled elsewhere in the literature) and
// n >= 0; throws std::invalid_argument otherwise.
Presentation presentation(int g, int n);

inline int generator_count(int g, int n) { return 2 * g + n; }

// Dense generator slot in presentation order.
int slot_of(Letter l, int g, int n);
Letter letter_at(int slot, int g, int n);

// delta = g_1 ... g_n, the boundary word of the puncture disk.
Word delta_word(int g, int n);

// Theta_k = a_{k+1} b_{k+1}^-1 a_{k+1}^-1 b_k, for 1 <= k <= g-1.
Word theta_word(int g, int k);

// Xi_k = (g_1 ... g_k)^-1 b_g, for 1 <= k <= n-1.
Word xi_word(int g, int n, int k);

}  // namespace mcgorbit

#endif  // MCGORBIT_SURFACE_HPP_

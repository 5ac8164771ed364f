#ifndef MCGORBIT_MCG_HPP_
#define MCGORBIT_MCG_HPP_

// Generator automorphisms of the mapping class group of an n-punctured
// genus-g surface: t_1 .. t_{3g+n-2} (Dehn twists; t_{3g} .. t_{3g+n-2} are
// the mixing twists, present only for n >= 2) and s_1 .. s_{n-1}
// (half-twists). Each automorphism stores the image of every surface-group
// generator plus the induced puncture permutation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgorbit/surface.hpp"
#include "mcgorbit/words.hpp"

namespace mcgorbit {

struct GenName {
  enum class Family { Tau, Sigma };
  Family family = Family::Tau;
  int index = 1;
  int power = 1;  // +1 or -1

  GenName inverse() const { return {family, index, -power}; }
  friend bool operator==(const GenName&, const GenName&) = default;
};

inline GenName tau(int index, int power = 1) { return {GenName::Family::Tau, index, power}; }
inline GenName sigma(int index, int power = 1) { return {GenName::Family::Sigma, index, power}; }

// Highest valid twist index: 3g-1, plus the n-1 mixing twists when n >= 2.
inline int tau_count(int g, int n) { return 3 * g - 1 + (n >= 2 ? n - 1 : 0); }

bool valid_generator(const GenName& gen, int g, int n);

// All positive generators for (g, n), twists first.
std::vector<GenName> generator_set(int g, int n);

struct Automorphism {
  int g = 0;
  int n = 0;
  std::vector<Word> images;  // indexed by generator slot
  std::vector<int> perm;     // 0-based: image of g_{i+1} is a conjugate of g_{perm[i]+1}

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

Automorphism identity_automorphism(int g, int n);

// Images exactly per the twist/half-twist tables; generators not listed map
// to themselves. Requires power == +1.
Automorphism auto_of(const GenName& gen, int g, int n);

// Closed-form inverse, using that Theta_k and Xi_k are fixed elements of
// their twists. compose(auto_of(gen), inverse_auto(gen)) fixes every
// generator as a free word, in both orders.
Automorphism inverse_auto(const GenName& gen, int g, int n);

// Multiplicative extension to words, reduced output.
Word apply_auto(const Automorphism& a, const Word& w);

// (a o b)(x) = a(b(x)); perm composed accordingly.
Automorphism compose(const Automorphism& a, const Automorphism& b);

// Closed form of the k-th power of s_cycl = s_{n-1} o ... o s_1:
// g_i -> delta g_{n+i-k} delta^-1 for i <= k, g_j -> g_{j-k} for j > k.
Automorphism sigma_cycl_power(int g, int n, int k);

// w with a(relator) freely equal to w relator w^-1, if any.
std::optional<Word> relator_conjugator(const Automorphism& a, int g, int n);

// Read-only table of the forward and inverse automorphisms of every
// generator of a fixed (g, n); built once, shareable across threads.
class AutTable {
 public:
  AutTable(int g, int n);

  int g() const { return g_; }
  int n() const { return n_; }
  const std::vector<GenName>& generators() const { return generators_; }

  const Automorphism& forward(const GenName& gen) const;
  const Automorphism& inverse(const GenName& gen) const;
  // The automorphism whose evaluation realizes the action of gen on
  // representations: a(gen^-1), honoring gen.power.
  const Automorphism& acting(const GenName& gen) const;

 private:
  int g_, n_;
  std::vector<GenName> generators_;
  std::vector<Automorphism> forward_, inverse_;
  int slot(const GenName& gen) const;
};

// Token syntax "t1 s2 t5^-1"; tokens act left to right (first token first).
std::string to_string(const GenName& gen);
std::string to_string(const std::vector<GenName>& word);
std::vector<GenName> parse_mcg_word(std::string_view text);
std::vector<GenName> parse_mcg_word(std::string_view text, int g, int n);

}  // namespace mcgorbit

#endif  // MCGORBIT_MCG_HPP_

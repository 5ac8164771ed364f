#include "mcgorbit/mcg.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mcgorbit {

bool valid_generator(const GenName& gen, int g, int n) {
  if (gen.power != 1 && gen.power != -1) return false;
  if (gen.family == GenName::Family::Tau) {
    return gen.index >= 1 && gen.index <= tau_count(g, n);
  }
  return gen.index >= 1 && gen.index <= n - 1;
}

std::vector<GenName> generator_set(int g, int n) {
  std::vector<GenName> gens;
  for (int i = 1; i <= tau_count(g, n); ++i) gens.push_back(tau(i));
  for (int j = 1; j <= n - 1; ++j) gens.push_back(sigma(j));
  return gens;
}

Automorphism identity_automorphism(int g, int n) {
  Automorphism a;
  a.g = g;
  a.n = n;
  const int m = generator_count(g, n);
  a.images.reserve(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) a.images.push_back(word_of({letter_at(s, g, n)}));
  a.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a.perm[static_cast<std::size_t>(i)] = i;
  return a;
}

namespace {

void require_valid(const GenName& gen, int g, int n) {
  if (!valid_generator(gen, g, n)) {
    throw std::out_of_range("generator " + to_string(gen) + " invalid for (g,n)=(" +
                            std::to_string(g) + "," + std::to_string(n) + ")");
  }
}

void set_image(Automorphism& a, Letter gen, const Word& w) {
  a.images[static_cast<std::size_t>(slot_of(gen, a.g, a.n))] = w;
}

Word conj(const Word& by, const Word& w) { return concat(concat(by, w), invert(by)); }

}  // namespace

Automorphism auto_of(const GenName& gen, int g, int n) {
  require_valid(gen, g, n);
  if (gen.power != 1) throw std::invalid_argument("auto_of requires power +1");
  Automorphism a = identity_automorphism(g, n);
  if (gen.family == GenName::Family::Sigma) {
    const int k = gen.index;
    set_image(a, gamma(k), word_of({gamma(k), gamma(k + 1), gamma(k, -1)}));
    set_image(a, gamma(k + 1), word_of({gamma(k)}));
    std::swap(a.perm[static_cast<std::size_t>(k - 1)], a.perm[static_cast<std::size_t>(k)]);
    return a;
  }
  const int t = gen.index;
  if (t <= 2 * g) {
    const int k = (t + 1) / 2;
    if (t % 2 == 0) {
      set_image(a, alpha(k), word_of({alpha(k), beta(k)}));
    } else {
      set_image(a, beta(k), word_of({beta(k), alpha(k)}));
    }
    return a;
  }
  if (t <= 3 * g - 1) {
    const int k = t - 2 * g;  // 1 <= k <= g-1
    const Word th = theta_word(g, k);
    set_image(a, alpha(k + 1), concat(invert(th), word_of({alpha(k + 1)})));
    set_image(a, alpha(k), concat(word_of({alpha(k)}), th));
    set_image(a, beta(k), conj(invert(th), word_of({beta(k)})));
    return a;
  }
  const int k = t - (3 * g - 1);  // mixing twist, 1 <= k <= n-1, n >= 2
  const Word xi = xi_word(g, n, k);
  set_image(a, alpha(g), concat(word_of({alpha(g)}), xi));
  set_image(a, beta(g), conj(invert(xi), word_of({beta(g)})));
  for (int i = 1; i <= k; ++i) {
    set_image(a, gamma(i), conj(invert(xi), word_of({gamma(i)})));
  }
  return a;
}

Automorphism inverse_auto(const GenName& gen, int g, int n) {
  require_valid(gen, g, n);
  if (gen.power != 1) throw std::invalid_argument("inverse_auto requires power +1");
  Automorphism a = identity_automorphism(g, n);
  if (gen.family == GenName::Family::Sigma) {
    const int k = gen.index;
    set_image(a, gamma(k), word_of({gamma(k + 1)}));
    set_image(a, gamma(k + 1), word_of({gamma(k + 1, -1), gamma(k), gamma(k + 1)}));
    std::swap(a.perm[static_cast<std::size_t>(k - 1)], a.perm[static_cast<std::size_t>(k)]);
    return a;
  }
  const int t = gen.index;
  if (t <= 2 * g) {
    const int k = (t + 1) / 2;
    if (t % 2 == 0) {
      set_image(a, alpha(k), word_of({alpha(k), beta(k, -1)}));
    } else {
      set_image(a, beta(k), word_of({beta(k), alpha(k, -1)}));
    }
    return a;
  }
  if (t <= 3 * g - 1) {
    const int k = t - 2 * g;
    const Word th = theta_word(g, k);
    set_image(a, alpha(k + 1), concat(th, word_of({alpha(k + 1)})));
    set_image(a, alpha(k), concat(word_of({alpha(k)}), invert(th)));
    set_image(a, beta(k), conj(th, word_of({beta(k)})));
    return a;
  }
  const int k = t - (3 * g - 1);
  const Word xi = xi_word(g, n, k);
  set_image(a, alpha(g), concat(word_of({alpha(g)}), invert(xi)));
  set_image(a, beta(g), conj(xi, word_of({beta(g)})));
  for (int i = 1; i <= k; ++i) {
    set_image(a, gamma(i), conj(xi, word_of({gamma(i)})));
  }
  return a;
}

Word apply_auto(const Automorphism& a, const Word& w) {
  Word out;
  for (Letter l : w.letters()) {
    const Word& img = a.images[static_cast<std::size_t>(slot_of(l, a.g, a.n))];
    out = concat(out, l.sign() > 0 ? img : invert(img));
  }
  return out;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.g != b.g || a.n != b.n) throw std::invalid_argument("mismatched (g,n) in compose");
  Automorphism c;
  c.g = a.g;
  c.n = a.n;
  c.images.reserve(b.images.size());
  for (const Word& w : b.images) c.images.push_back(apply_auto(a, w));
  c.perm.resize(b.perm.size());
  for (std::size_t i = 0; i < b.perm.size(); ++i) {
    c.perm[i] = a.perm[static_cast<std::size_t>(b.perm[i])];
  }
  return c;
}

Automorphism sigma_cycl_power(int g, int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("sigma_cycl power must be in [1, n]");
  Automorphism a = identity_automorphism(g, n);
  const Word d = delta_word(g, n);
  for (int i = 1; i <= k; ++i) {
    set_image(a, gamma(i), conj(d, word_of({gamma(n + i - k)})));
    a.perm[static_cast<std::size_t>(i - 1)] = n + i - k - 1;
  }
  for (int j = k + 1; j <= n; ++j) {
    set_image(a, gamma(j), word_of({gamma(j - k)}));
    a.perm[static_cast<std::size_t>(j - 1)] = j - k - 1;
  }
  return a;
}

std::optional<Word> relator_conjugator(const Automorphism& a, int g, int n) {
  const Word rel = presentation(g, n).relator;
  return conjugate_in_free(apply_auto(a, rel), rel);
}

AutTable::AutTable(int g, int n) : g_(g), n_(n), generators_(generator_set(g, n)) {
  forward_.reserve(generators_.size());
  inverse_.reserve(generators_.size());
  for (const GenName& gen : generators_) {
    forward_.push_back(auto_of(gen, g, n));
    inverse_.push_back(inverse_auto(gen, g, n));
  }
}

int AutTable::slot(const GenName& gen) const {
  require_valid(gen, g_, n_);
  if (gen.family == GenName::Family::Tau) return gen.index - 1;
  return tau_count(g_, n_) + gen.index - 1;
}

const Automorphism& AutTable::forward(const GenName& gen) const {
  return forward_[static_cast<std::size_t>(slot(gen))];
}

const Automorphism& AutTable::inverse(const GenName& gen) const {
  return inverse_[static_cast<std::size_t>(slot(gen))];
}

const Automorphism& AutTable::acting(const GenName& gen) const {
  return gen.power > 0 ? inverse(gen) : forward(gen);
}

std::string to_string(const GenName& gen) {
  std::string s = gen.family == GenName::Family::Tau ? "t" : "s";
  s += std::to_string(gen.index);
  if (gen.power < 0) s += "^-1";
  return s;
}

std::string to_string(const std::vector<GenName>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) s += ' ';
    s += to_string(word[i]);
  }
  return s;
}

std::vector<GenName> parse_mcg_word(std::string_view text) {
  std::vector<GenName> out;
  std::istringstream iss{std::string(text)};
  std::string tok;
  while (iss >> tok) {
    if (tok.size() < 2) throw std::invalid_argument("bad mcg token '" + tok + "'");
    GenName::Family fam;
    switch (tok[0]) {
      case 't': fam = GenName::Family::Tau; break;
      case 's': fam = GenName::Family::Sigma; break;
      default:
        throw std::invalid_argument("bad mcg token '" + tok + "'");
    }
    int power = 1;
    std::string_view rest = std::string_view(tok).substr(1);
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "^-1") {
      power = -1;
      rest = rest.substr(0, rest.size() - 3);
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || index < 1) {
      throw std::invalid_argument("bad mcg token '" + tok + "'");
    }
    out.push_back({fam, index, power});
  }
  return out;
}

std::vector<GenName> parse_mcg_word(std::string_view text, int g, int n) {
  std::vector<GenName> out = parse_mcg_word(text);
  for (const GenName& gen : out) require_valid(gen, g, n);
  return out;
}

}  // namespace mcgorbit

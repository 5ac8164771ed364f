#include "mcgorbit/words.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mcgorbit {

Letter::Letter(Kind kind, int index, int sign) {
  if (index < 1) {
    throw std::invalid_argument("letter index must be >= 1");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("letter sign must be +1 or -1");
  }
  code_ = static_cast<std::int32_t>((index << 2) | static_cast<int>(kind));
  if (sign < 0) code_ = -code_;
}

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().code() == -l.code()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word word_of(std::initializer_list<Letter> raw) {
  return reduce(std::span<const Letter>(raw.begin(), raw.size()));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.reserve(u.size() + v.size());
  for (Letter l : v.letters()) {
    if (!out.empty() && out.back().code() == -l.code()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return reduce(out);  // already reduced; reduce() is a cheap no-op pass
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return reduce(out);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

namespace {

// u = prefix . core . prefix^-1 with core cyclically reduced.
void cyclic_reduce(const Word& u, Word& prefix, std::vector<Letter>& core) {
  core = u.letters();
  std::vector<Letter> pref;
  while (core.size() >= 2 && core.front().code() == -core.back().code()) {
    pref.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  prefix = reduce(pref);
}

}  // namespace

std::optional<Word> conjugate_in_free(const Word& u, const Word& v) {
  Word pu, pv;
  std::vector<Letter> cu, cv;
  cyclic_reduce(u, pu, cu);
  cyclic_reduce(v, pv, cv);
  if (cu.size() != cv.size()) return std::nullopt;
  const std::size_t m = cu.size();
  if (m == 0) return Word{};
  // cu == rotate_left(cv, k) means cu = a^-1 cv a for a = cv[0..k), hence
  // u = (pu a^-1 pv^-1) v (pu a^-1 pv^-1)^-1.
  for (std::size_t k = 0; k < m; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (cu[i] != cv[(i + k) % m]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    std::vector<Letter> a(cv.begin(), cv.begin() + static_cast<std::ptrdiff_t>(k));
    Word w = concat(concat(pu, invert(reduce(a))), invert(pv));
    return w;
  }
  return std::nullopt;
}

std::string to_string(Letter l) {
  static const char kKindChar[3] = {'a', 'b', 'g'};
  std::string s;
  s += kKindChar[static_cast<int>(l.kind())];
  s += std::to_string(l.index());
  if (l.sign() < 0) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ' ';
    s += to_string(w.letters()[i]);
  }
  return s;
}

namespace {

Letter parse_letter(std::string_view tok) {
  if (tok.empty()) throw std::invalid_argument("empty word token");
  Kind kind;
  switch (tok[0]) {
    case 'a': kind = Kind::Alpha; break;
    case 'b': kind = Kind::Beta; break;
    case 'g': kind = Kind::Gamma; break;
    default:
      throw std::invalid_argument("bad generator letter in token '" + std::string(tok) + "'");
  }
  int sign = 1;
  std::string_view rest = tok.substr(1);
  if (rest.size() > 3 && rest.substr(rest.size() - 3) == "^-1") {
    sign = -1;
    rest = rest.substr(0, rest.size() - 3);
  }
  int index = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || index < 1) {
    throw std::invalid_argument("bad generator index in token '" + std::string(tok) + "'");
  }
  return Letter(kind, index, sign);
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::istringstream iss{std::string(text)};
  std::string tok;
  while (iss >> tok) raw.push_back(parse_letter(tok));
  return reduce(raw);
}

Word parse_word(std::string_view text, int g, int n) {
  Word w = parse_word(text);
  for (Letter l : w.letters()) {
    const int bound = l.kind() == Kind::Gamma ? n : g;
    if (l.index() > bound) {
      throw std::invalid_argument("generator " + to_string(l) + " out of range for (g,n)=(" +
                                  std::to_string(g) + "," + std::to_string(n) + ")");
    }
  }
  return w;
}

}  // namespace mcgorbit

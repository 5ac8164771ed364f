#ifndef MCGORBIT_WORDS_HPP_
#define MCGORBIT_WORDS_HPP_

// Free-group word calculus over the indexed alphabet a_i, b_i, g_j of a
// punctured-surface group. Words are stored freely reduced at all times, so
// equality is plain sequence equality.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcgorbit {

enum class Kind : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

// One generator or its inverse, packed into a single int32 so that word
// operations reduce to integer compares: |code| = (index << 2) | kind,
// sign(code) = exponent sign. index >= 1.
class Letter {
 public:
  Letter(Kind kind, int index, int sign);

  Kind kind() const { return static_cast<Kind>((code_ < 0 ? -code_ : code_) & 3); }
  int index() const { return static_cast<int>((code_ < 0 ? -code_ : code_) >> 2); }
  int sign() const { return code_ < 0 ? -1 : 1; }
  Letter inverse() const { return Letter(-code_); }

  std::int32_t code() const { return code_; }

  friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }
  friend bool operator<(Letter a, Letter b) { return a.code_ < b.code_; }

 private:
  explicit Letter(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

inline Letter alpha(int i, int sign = 1) { return Letter(Kind::Alpha, i, sign); }
inline Letter beta(int i, int sign = 1) { return Letter(Kind::Beta, i, sign); }
inline Letter gamma(int i, int sign = 1) { return Letter(Kind::Gamma, i, sign); }

// Freely reduced word. Construction through reduce() maintains the no
// adjacent x x^-1 invariant; all operations below preserve it.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  friend Word reduce(std::span<const Letter>);
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

// Unique freely reduced form of a raw letter sequence. Idempotent.
Word reduce(std::span<const Letter> raw);
Word word_of(std::initializer_list<Letter> raw);

// Reduced concatenation u v.
Word concat(const Word& u, const Word& v);

Word invert(const Word& u);

// reduce(u v u^-1 v^-1).
Word commutator(const Word& u, const Word& v);

// Some w with reduce(w v w^-1) == u when u and v are conjugate in the free
// group, found by rotation matching on the cyclically reduced cores.
std::optional<Word> conjugate_in_free(const Word& u, const Word& v);

// Text syntax: whitespace-separated tokens like "a1 b1 g2 a1^-1".
// parse_word throws std::invalid_argument on malformed tokens; when g, n are
// given, indices are range-checked as well. Round trips bit-exactly.
std::string to_string(Letter l);
std::string to_string(const Word& w);
Word parse_word(std::string_view text);
Word parse_word(std::string_view text, int g, int n);

}  // namespace mcgorbit

#endif  // MCGORBIT_WORDS_HPP_

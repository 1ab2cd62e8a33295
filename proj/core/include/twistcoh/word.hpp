#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistcoh/int_matrix.hpp"

namespace twistcoh {

// One run a^k of a single generator, k != 0.
struct Syllable {
  std::size_t generator = 0;
  long exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in a free group. Adjacent syllables never share a generator and
// no exponent is zero; the empty word is the identity.
class Word {
 public:
  Word() = default;
  // Freely reduces the given syllable sequence.
  explicit Word(std::span<const Syllable> syllables);
  Word(std::initializer_list<Syllable> syllables);

  static Word letter(std::size_t generator, long exponent = 1);

  std::span<const Syllable> syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  // Number of letters, counted with multiplicity.
  std::size_t length() const;

  Word inverse() const;
  Word pow(long n) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Syllable s);

  std::vector<Syllable> syllables_;
};

// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);

// A finitely presented group: distinct generator names and reduced relators.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  // Throws InvalidArgument on duplicate names or out-of-range generator indices.
  void validate() const;
  // Index of a generator name, or generators.size() when absent.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Parses the line-oriented presentation grammar:
//
//   # comment
//   gens: a b t
//   rel: [a,b] t a t^-1 b^-2
//
// Commutator groups [x,y] expand to x y x^-1 y^-1 and nest. `^-` abbreviates `^-1`,
// `1` denotes the identity word. Errors carry 1-based line/column positions.
Presentation parse_presentation(std::string_view text);

// Parses a single word over the given generator names.
Word parse_word(std::string_view text, std::span<const std::string> generators);

// Canonical printer; parse_presentation(to_text(p)) == p.
std::string to_text(const Presentation& p);
std::string format_word(const Word& w, std::span<const std::string> generators);

// Entry (i, j) is the exponent sum of generator j in relator i.
IntMatrix abelianized_exponent_matrix(const Presentation& p);

}  // namespace twistcoh

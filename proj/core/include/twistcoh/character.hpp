#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistcoh/scalar.hpp"
#include "twistcoh/word.hpp"

namespace twistcoh {

// A homomorphism from the free group on the generators to the positive reals under
// multiplication, given by its value on each generator. Values are stored
// multiplicatively (e^c, never c) and are all strictly positive and in one mode.
class Character {
 public:
  explicit Character(std::vector<Scalar> values);
  // The empty character on zero generators still needs a mode.
  Character(std::vector<Scalar> values, const NumericMode& mode);

  static Character trivial(std::size_t generators, const NumericMode& mode);

  std::size_t size() const { return values_.size(); }
  const NumericMode& mode() const { return mode_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t generator) const { return values_[generator]; }

 private:
  std::vector<Scalar> values_;
  NumericMode mode_;
};

// Product of value^exponent along the word; the identity maps to 1.
Scalar evaluate_character(const Character& rho, const Word& w);

// True iff the character sends every relator to 1, i.e. descends to the group.
bool check_admissible(const Character& rho, const Presentation& p);

bool is_trivial(const Character& rho);

// Parses `char: a=2 b=1 t=3/2+1/2*sqrt(5)` (the `char:` prefix is optional).
// Generators not mentioned default to 1.
Character parse_character(std::string_view spec, const Presentation& p, const NumericMode& mode);

// Extracts every `char:` line of a character file, skipping comments and blanks.
std::vector<std::string> character_lines(std::string_view file_text);

// Picks the narrowest exact mode able to hold every literal in the given specs:
// Quadratic(d) if a radical appears, Rational otherwise. Throws ModeMismatch on mixed
// radicals or decimal literals.
NumericMode infer_exact_mode(std::span<const std::string> specs);

// Canonical `char:` line.
std::string format_character(const Character& rho, const Presentation& p);

}  // namespace twistcoh

#include "twistcoh/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "twistcoh/errors.hpp"

namespace twistcoh {

Word::Word(std::span<const Syllable> syllables) {
  for (const Syllable& s : syllables) push(s);
}

Word::Word(std::initializer_list<Syllable> syllables)
    : Word(std::span<const Syllable>(syllables.begin(), syllables.size())) {}

Word Word::letter(std::size_t generator, long exponent) {
  Word w;
  w.push({generator, exponent});
  return w;
}

void Word::push(Syllable s) {
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::size_t>(std::labs(s.exponent));
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.push({it->generator, -it->exponent});
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  for (const Syllable& s : rhs.syllables_) out.push(s);
  return out;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

void Presentation::validate() const {
  std::set<std::string_view> seen;
  for (const std::string& g : generators) {
    if (!seen.insert(g).second) throw InvalidArgument("duplicate generator name '" + g + "'");
  }
  for (const Word& r : relators) {
    for (const Syllable& s : r.syllables()) {
      if (s.generator >= generators.size())
        throw InvalidArgument("relator mentions generator index " + std::to_string(s.generator) +
                              " but only " + std::to_string(generators.size()) + " generators exist");
    }
  }
}

std::size_t Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  return generators.size();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Parses one word from a single line. `column0` is the column of text[0].
class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> generators, std::size_t line,
             std::size_t column0)
      : text_(text), gens_(generators), line_(line), column0_(column0) {}

  Word parse_all() {
    Word w = word();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, line_, column0_ + pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  Word word() {
    Word w;
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '\0' || c == ',' || c == ']') return w;
      w = w * item();
    }
  }

  Word item() {
    char c = peek();
    Word base;
    if (c == '[') {
      ++pos_;
      Word x = word();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      Word y = word();
      if (peek() != ']') fail("expected ']' closing commutator");
      ++pos_;
      base = commutator(x, y);
    } else if (c == '1' && !is_name_char(pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0')) {
      ++pos_;
      return Word();
    } else if (is_name_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = gens_.size();
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) index = i;
      if (index == gens_.size()) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      base = Word::letter(index);
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (peek() == '^') {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  long exponent() {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      if (sign < 0 && !std::isdigit(static_cast<unsigned char>(peek()))) return -1;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long k = 0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
    if (ec != std::errc()) {
      pos_ = start;
      fail("exponent out of range");
    }
    if (k == 0) {
      pos_ = start;
      fail("exponent must be non-zero");
    }
    return sign * k;
  }

  std::string_view text_;
  std::span<const std::string> gens_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

bool valid_name(std::string_view name) {
  if (name.empty() || !is_name_start(name.front())) return false;
  for (char c : name)
    if (!is_name_char(c)) return false;
  return true;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  return WordParser(text, generators, 1, 1).parse_all();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) {
      if (end == text.size()) break;
      continue;
    }

    std::string_view body = line.substr(first);
    if (body.starts_with("gens:")) {
      if (have_gens) throw ParseError("second 'gens:' line", line_no, first + 1);
      have_gens = true;
      std::size_t pos = first + 5;
      while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos])) ++pos;
        if (pos == line.size()) break;
        std::size_t name_start = pos;
        while (pos < line.size() && !is_space(line[pos])) ++pos;
        std::string_view name = line.substr(name_start, pos - name_start);
        if (!valid_name(name))
          throw ParseError("invalid generator name '" + std::string(name) + "'", line_no, name_start + 1);
        if (p.index_of(name) != p.generators.size())
          throw ParseError("duplicate generator name '" + std::string(name) + "'", line_no, name_start + 1);
        p.generators.emplace_back(name);
      }
    } else if (body.starts_with("rel:")) {
      if (!have_gens) throw ParseError("'rel:' before 'gens:' line", line_no, first + 1);
      std::size_t offset = first + 4;
      p.relators.push_back(WordParser(line.substr(offset), p.generators, line_no, offset + 1).parse_all());
    } else {
      throw ParseError("expected 'gens:' or 'rel:'", line_no, first + 1);
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", line_no == 0 ? 1 : line_no, 1);
  return p;
}

std::string format_word(const Word& w, std::span<const std::string> generators) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generators[s.generator];
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

std::string to_text(const Presentation& p) {
  std::string out = "gens:";
  for (const std::string& g : p.generators) out += " " + g;
  out += '\n';
  for (const Word& r : p.relators) out += "rel: " + format_word(r, p.generators) + "\n";
  return out;
}

IntMatrix abelianized_exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const Syllable& s : p.relators[i].syllables()) m(i, s.generator) += s.exponent;
  return m;
}

}  // namespace twistcoh

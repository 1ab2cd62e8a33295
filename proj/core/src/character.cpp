#include "twistcoh/character.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "twistcoh/errors.hpp"

namespace twistcoh {

Character::Character(std::vector<Scalar> values)
    : Character(values, values.empty() ? NumericMode::rational() : values.front().mode()) {}

Character::Character(std::vector<Scalar> values, const NumericMode& mode) : values_(std::move(values)), mode_(mode) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i].mode() == mode_))
      throw ModeMismatch("character value " + std::to_string(i) + " is " + values_[i].mode().describe() +
                         ", expected " + mode_.describe());
    if (!values_[i].is_positive())
      throw InvalidArgument("character value " + values_[i].to_string() + " is not strictly positive");
  }
}

Character Character::trivial(std::size_t generators, const NumericMode& mode) {
  return Character(std::vector<Scalar>(generators, Scalar::one(mode)), mode);
}

Scalar evaluate_character(const Character& rho, const Word& w) {
  Scalar out = Scalar::one(rho.mode());
  for (const Syllable& s : w.syllables()) out *= rho[s.generator].pow(s.exponent);
  return out;
}

bool check_admissible(const Character& rho, const Presentation& p) {
  if (rho.size() != p.generators.size()) return false;
  for (const Word& r : p.relators)
    if (!evaluate_character(rho, r).is_one()) return false;
  return true;
}

bool is_trivial(const Character& rho) {
  for (const Scalar& v : rho.values())
    if (!v.is_one()) return false;
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view strip_prefix(std::string_view spec) {
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
  if (spec.starts_with("char:")) spec.remove_prefix(5);
  if (std::size_t hash = spec.find('#'); hash != std::string_view::npos) spec = spec.substr(0, hash);
  return spec;
}

}  // namespace

Character parse_character(std::string_view spec, const Presentation& p, const NumericMode& mode) {
  std::vector<Scalar> values(p.generators.size(), Scalar::one(mode));
  std::vector<bool> assigned(p.generators.size(), false);
  for (std::string_view token : split_ws(strip_prefix(spec))) {
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value, got '" + std::string(token) + "'");
    const std::string_view name = token.substr(0, eq);
    const std::size_t g = p.index_of(name);
    if (g == p.generators.size()) throw ParseError("unknown generator '" + std::string(name) + "' in character");
    if (assigned[g]) throw ParseError("generator '" + std::string(name) + "' assigned twice in character");
    assigned[g] = true;
    values[g] = parse_scalar(token.substr(eq + 1), mode);
    if (!values[g].is_positive())
      throw InvalidArgument("character value for '" + std::string(name) + "' is not strictly positive");
  }
  return Character(std::move(values), mode);
}

std::vector<std::string> character_lines(std::string_view file_text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(file_text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (std::size_t hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) continue;
    if (!body.starts_with("char:")) throw ParseError("expected 'char:' line", line_no, 1);
    out.emplace_back(body);
  }
  return out;
}

NumericMode infer_exact_mode(std::span<const std::string> specs) {
  std::optional<long> radicand;
  for (const std::string& spec : specs) {
    for (std::string_view token : split_ws(strip_prefix(spec))) {
      const std::size_t eq = token.find('=');
      if (eq == std::string_view::npos) continue;
      LiteralShape shape = inspect_literal(token.substr(eq + 1));
      if (shape.decimal)
        throw ModeMismatch("decimal literal '" + std::string(token.substr(eq + 1)) + "' requires approx mode");
      if (shape.radicand) {
        if (radicand && *radicand != *shape.radicand)
          throw ModeMismatch("mixed radicals sqrt(" + std::to_string(*radicand) + ") and sqrt(" +
                             std::to_string(*shape.radicand) + ")");
        radicand = shape.radicand;
      }
    }
  }
  return radicand ? NumericMode::quadratic(*radicand) : NumericMode::rational();
}

std::string format_character(const Character& rho, const Presentation& p) {
  std::string out = "char:";
  for (std::size_t i = 0; i < rho.size(); ++i) out += " " + p.generators[i] + "=" + rho[i].to_string();
  return out;
}

}  // namespace twistcoh

#include "twistcoh/enumerator.hpp"

#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

#include "twistcoh/errors.hpp"
#include "twistcoh/linear.hpp"

namespace twistcoh {

void ConjugationData::validate() const {
  if (outer < 1 || comm < 1) throw InvalidArgument("conjugation data needs m >= 1 and k >= 1");
  if (actions.size() != outer)
    throw InvalidArgument("expected " + std::to_string(outer) + " conjugation matrices, got " +
                          std::to_string(actions.size()));
  for (const IntMatrix& n : actions)
    if (n.rows != comm || n.cols != comm)
      throw InvalidArgument("conjugation matrix is not " + std::to_string(comm) + "x" + std::to_string(comm));
}

namespace {

std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    out.emplace_back(line_no, line.substr(first, last - first + 1));
  }
  return out;
}

std::size_t header_value(const std::pair<std::size_t, std::string>& line, std::string_view key) {
  const std::string& s = line.second;
  if (!std::string_view(s).starts_with(key)) throw ParseError("expected '" + std::string(key) + "'", line.first, 1);
  std::string_view rest = std::string_view(s).substr(key.size());
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  std::size_t value = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || p != rest.data() + rest.size())
    throw ParseError("expected a non-negative integer after '" + std::string(key) + "'", line.first, key.size() + 1);
  return value;
}

}  // namespace

ConjugationData parse_conjugation_data(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t at = 0;
  auto next = [&]() -> const std::pair<std::size_t, std::string>& {
    if (at == lines.size()) throw ParseError("unexpected end of conjugation data", lines.empty() ? 1 : lines.back().first, 1);
    return lines[at++];
  };

  ConjugationData data;
  data.outer = header_value(next(), "outer:");
  data.comm = header_value(next(), "comm:");
  for (std::size_t j = 0; j < data.outer; ++j) {
    const auto& label = next();
    const std::string& s = label.second;
    if (!s.starts_with("N") || !s.ends_with(":")) throw ParseError("expected 'N_" + std::to_string(j + 1) + ":'", label.first, 1);
    IntMatrix n(data.comm, data.comm);
    for (std::size_t i = 0; i < data.comm; ++i) {
      const auto& row = next();
      std::istringstream in(row.second);
      for (std::size_t l = 0; l < data.comm; ++l) {
        if (!(in >> n(i, l))) throw ParseError("expected " + std::to_string(data.comm) + " integers", row.first, 1);
      }
      std::string extra;
      if (in >> extra) throw ParseError("too many entries in matrix row", row.first, 1);
    }
    data.actions.push_back(std::move(n));
  }
  if (at != lines.size()) throw ParseError("trailing content after conjugation matrices", lines[at].first, 1);
  try {
    data.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return data;
}

std::string to_text(const ConjugationData& data) {
  std::ostringstream os;
  os << "outer: " << data.outer << "\ncomm: " << data.comm << "\n";
  for (std::size_t j = 0; j < data.actions.size(); ++j) {
    os << "N_" << j + 1 << ":\n";
    const IntMatrix& n = data.actions[j];
    for (std::size_t i = 0; i < n.rows; ++i) {
      for (std::size_t l = 0; l < n.cols; ++l) os << (l ? " " : "") << n(i, l);
      os << "\n";
    }
  }
  return os.str();
}

namespace {

NumericMode common_mode(const std::vector<Scalar>& tuple, double eps) {
  std::set<long> radicands;
  for (const Scalar& s : tuple) {
    if (s.mode().field == Field::Approx) return NumericMode::approx(eps);
    if (s.mode().field == Field::Quadratic) radicands.insert(s.mode().radicand);
  }
  if (radicands.size() > 1) return NumericMode::approx(eps);
  if (radicands.size() == 1) return NumericMode::quadratic(*radicands.begin());
  return NumericMode::rational();
}

std::size_t saturating_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > SIZE_MAX / base) return SIZE_MAX;
    out *= base;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Scalar>> candidate_characters(const ConjugationData& data, double eps) {
  data.validate();
  std::vector<std::vector<Scalar>> spectra;
  for (const IntMatrix& n : data.actions) {
    spectra.push_back(positive_real_eigenvalues(n, eps));
    if (spectra.back().empty()) return {};
  }

  std::vector<std::vector<Scalar>> out;
  std::vector<std::size_t> index(spectra.size(), 0);
  for (;;) {
    std::vector<Scalar> tuple;
    for (std::size_t j = 0; j < spectra.size(); ++j) tuple.push_back(spectra[j][index[j]]);
    const NumericMode mode = common_mode(tuple, eps);
    for (Scalar& s : tuple) s = promote(s, mode);
    out.push_back(std::move(tuple));

    // Odometer, last position fastest: lexicographic order.
    std::size_t j = spectra.size();
    while (j > 0) {
      --j;
      if (++index[j] < spectra[j].size()) break;
      index[j] = 0;
      if (j == 0) return out;
    }
  }
}

Enumeration enumerate_nonvanishing(const Presentation& p, const ConjugationData& data,
                                   const std::vector<std::size_t>& outer_generators, double eps) {
  data.validate();
  if (outer_generators.size() != data.outer)
    throw InvalidArgument("mapping assigns " + std::to_string(outer_generators.size()) + " generators to " +
                          std::to_string(data.outer) + " outer generators");
  std::set<std::size_t> seen;
  for (std::size_t g : outer_generators) {
    if (g >= p.generators.size()) throw InvalidArgument("mapping refers to a generator outside the presentation");
    if (!seen.insert(g).second) throw InvalidArgument("mapping uses generator '" + p.generators[g] + "' twice");
  }

  Enumeration result;
  result.bound = saturating_power(data.comm, data.outer);
  const auto tuples = candidate_characters(data, eps);
  result.candidates = tuples.size();
  Diagnostics diag;
  for (const auto& tuple : tuples) {
    const NumericMode mode = tuple.front().mode();
    if (!mode.exact() && data.comm <= 2) diag.warn("candidate mixes radicals; evaluated in approx mode");
    std::vector<Scalar> values(p.generators.size(), Scalar::one(mode));
    for (std::size_t j = 0; j < tuple.size(); ++j) values[outer_generators[j]] = tuple[j];
    Character rho(std::move(values), mode);
    if (!check_admissible(rho, p) || is_trivial(rho)) continue;
    CohomologyReport report = twisted_h1_dimension(p, rho);
    for (const std::string& w : report.warnings) diag.warn(w);
    if (report.h1_dim > 0) result.nonvanishing.push_back({std::move(rho), std::move(report)});
  }
  result.warnings = std::move(diag.warnings);
  return result;
}

}  // namespace twistcoh

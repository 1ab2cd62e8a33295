#include "twistcoh/cocycle.hpp"

#include <cmath>
#include <cstdlib>

#include "twistcoh/errors.hpp"

namespace twistcoh {

Cocycle::Cocycle(Vector values, Character rho) : values_(std::move(values)), rho_(std::move(rho)) {
  if (values_.size() != rho_.size())
    throw InvalidArgument("cocycle has " + std::to_string(values_.size()) + " values, character has " +
                          std::to_string(rho_.size()));
  for (const Scalar& v : values_)
    if (!(v.mode() == rho_.mode())) throw ModeMismatch("cocycle value mode differs from its character");
}

namespace {

// Single right-to-left pass over the letters s_1 ... s_L of w (exponents expanded to
// +-1), calling visit(generator, sign, rho(s_{i+1} ... s_L)).
template <class Visit>
void right_to_left(const Character& rho, const Word& w, Visit&& visit) {
  Scalar suffix = Scalar::one(rho.mode());
  const auto syllables = w.syllables();
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    const int step = it->exponent > 0 ? 1 : -1;
    const Scalar factor = step > 0 ? rho[it->generator] : rho[it->generator].inverse();
    for (long k = 0; k < std::labs(it->exponent); ++k) {
      visit(it->generator, step, suffix);
      suffix = factor * suffix;
    }
  }
}

}  // namespace

Scalar evaluate_cocycle(const Cocycle& mu, const Word& w) {
  const Character& rho = mu.character();
  Scalar total = Scalar::zero(rho.mode());
  right_to_left(rho, w, [&](std::size_t g, int sign, const Scalar& suffix) {
    // mu(a^-1) = -mu(a) / rho(a)
    total += sign > 0 ? mu[g] * suffix : -(mu[g] / rho[g]) * suffix;
  });
  return total;
}

Vector relator_constraint_row(const Presentation& p, const Character& rho, const Word& r) {
  if (rho.size() != p.generators.size())
    throw InvalidArgument("character has " + std::to_string(rho.size()) + " values for " +
                          std::to_string(p.generators.size()) + " generators");
  if (!evaluate_character(rho, r).is_one())
    throw InadmissibleCharacter("character does not kill relator " + format_word(r, p.generators));
  Vector row(p.generators.size(), Scalar::zero(rho.mode()));
  right_to_left(rho, r, [&](std::size_t g, int sign, const Scalar& suffix) {
    row[g] += sign > 0 ? suffix : -(suffix / rho[g]);
  });
  return row;
}

Matrix constraint_matrix(const Presentation& p, const Character& rho) {
  std::vector<Vector> rows;
  rows.reserve(p.relators.size());
  for (const Word& r : p.relators) rows.push_back(relator_constraint_row(p, rho, r));
  return Matrix::from_rows(rows, p.generators.size(), rho.mode());
}

std::vector<Cocycle> cocycle_space(const Presentation& p, const Character& rho, Diagnostics* diag) {
  std::vector<Cocycle> out;
  for (Vector& v : kernel_basis(constraint_matrix(p, rho), diag)) out.emplace_back(std::move(v), rho);
  return out;
}

Vector coboundary_vector(const Character& rho) {
  Vector out;
  out.reserve(rho.size());
  for (const Scalar& v : rho.values()) out.push_back(v - Scalar::one(rho.mode()));
  return out;
}

CohomologyReport twisted_h1_dimension(const Presentation& p, const Character& rho) {
  if (rho.size() != p.generators.size())
    throw InvalidArgument("character has " + std::to_string(rho.size()) + " values for " +
                          std::to_string(p.generators.size()) + " generators");
  if (!check_admissible(rho, p)) throw InadmissibleCharacter("character does not descend to the presented group");

  CohomologyReport report;
  if (p.generators.empty()) return report;

  Diagnostics diag;
  report.z1_basis = cocycle_space(p, rho, &diag);
  report.z1_dim = report.z1_basis.size();

  const bool trivial = is_trivial(rho);
  report.b1_dim = trivial ? 0 : 1;
  if (!trivial) report.coboundary_generator = coboundary_vector(rho);

  if (!rho.mode().exact() && !trivial) {
    const double eps = rho.mode().tolerance;
    bool near_trivial = true;
    for (const Scalar& v : rho.values())
      if (std::abs(v.approx_value() - 1.0) > 1000.0 * eps) near_trivial = false;
    if (near_trivial) diag.warn("character is within 1000*eps of trivial; b1_dim = 1 may be unreliable");
  }

  if (report.z1_dim < report.b1_dim) {
    diag.warn("numerical rank lost the coboundary direction; h1_dim clamped to 0");
    report.h1_dim = 0;
  } else {
    report.h1_dim = report.z1_dim - report.b1_dim;
  }
  report.warnings = std::move(diag.warnings);
  return report;
}

std::size_t betti_one(const Presentation& p) {
  return p.generators.size() - rational_rank(abelianized_exponent_matrix(p));
}

}  // namespace twistcoh

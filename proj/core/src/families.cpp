#include "twistcoh/families.hpp"

#include "twistcoh/certificate.hpp"
#include "twistcoh/errors.hpp"
#include "twistcoh/linear.hpp"

namespace twistcoh {

void require_sl2z(const IntMatrix& a) {
  if (a.rows != 2 || a.cols != 2) throw InvalidArgument("mapping torus matrix must be 2x2");
  if (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) != 1) throw InvalidArgument("mapping torus matrix must have det 1");
}

Presentation mapping_torus_presentation(const IntMatrix& a) {
  require_sl2z(a);
  const Word u = Word::letter(0), v = Word::letter(1), t = Word::letter(2);
  Presentation p;
  p.generators = {"u", "v", "t"};
  // t x t^-1 (u^{x1} v^{x2})^-1 for x = A e_i
  p.relators.push_back(commutator(u, v));
  p.relators.push_back(t * u * t.inverse() * v.pow(-a(1, 0)) * u.pow(-a(0, 0)));
  p.relators.push_back(t * v * t.inverse() * v.pow(-a(1, 1)) * u.pow(-a(0, 1)));
  return p;
}

Character mapping_torus_character(const IntMatrix& a, const Scalar& y) {
  require_sl2z(a);
  const Scalar one = Scalar::one(y.mode());
  return Character({one, one, y}, y.mode());
}

bool mapping_torus_h1_nonzero(const IntMatrix& a, const Scalar& y) {
  require_sl2z(a);
  if (!y.is_positive()) throw InvalidArgument("y must be positive");
  const Scalar trace = Scalar::from_rational(a(0, 0) + a(1, 1), y.mode());
  return (y + y.inverse()) == trace;
}

Cocycle mapping_torus_cocycle(const IntMatrix& a, const Scalar& y) {
  if (!mapping_torus_h1_nonzero(a, y)) throw InvalidArgument("y = " + y.to_string() + " is not an eigenvalue of A");
  if (y.is_one()) throw InvalidArgument("trivial character has no distinguished eigencocycle");
  const NumericMode& mode = y.mode();
  const Scalar s = y.inverse();
  auto entry = [&](long x) { return Scalar::from_rational(x, mode); };

  // Rows of A^T - s I; any non-zero row (alpha, beta) has kernel (-beta, alpha).
  Scalar alpha = entry(a(0, 0)) - s, beta = entry(a(1, 0));
  if (alpha.is_zero() && beta.is_zero()) {
    alpha = entry(a(0, 1));
    beta = entry(a(1, 1)) - s;
  }
  Vector lambda;
  if (alpha.is_zero() && beta.is_zero())
    lambda = {Scalar::one(mode), Scalar::zero(mode)};
  else
    lambda = {-beta, alpha};
  const Scalar lead = lambda[0].is_zero() ? lambda[1] : lambda[0];
  return Cocycle({lambda[0] / lead, lambda[1] / lead, Scalar::zero(mode)}, mapping_torus_character(a, y));
}

std::vector<Scalar> mapping_torus_eigenvalues(const IntMatrix& a) {
  require_sl2z(a);
  return positive_real_eigenvalues(a);
}

ConjugationData mapping_torus_conjugation_data(const IntMatrix& a) {
  require_sl2z(a);
  ConjugationData data;
  data.outer = 1;
  data.comm = 2;
  // t^-1 b_i t = A^-1 e_i; row i lists the exponents of (u, v).
  data.actions.push_back(IntMatrix{{a(1, 1), -a(1, 0)}, {-a(0, 1), a(0, 0)}});
  return data;
}

Presentation surface_presentation(int genus) {
  if (genus < 1) throw InvalidArgument("surface genus must be >= 1");
  Presentation p;
  Word relator;
  for (int j = 1; j <= genus; ++j) {
    p.generators.push_back("a" + std::to_string(j));
    p.generators.push_back("b" + std::to_string(j));
    relator = relator * commutator(Word::letter(2 * (j - 1)), Word::letter(2 * (j - 1) + 1));
  }
  p.relators.push_back(relator);
  return p;
}

std::optional<Cocycle> surface_solve(int genus, const std::vector<Scalar>& y) {
  const Presentation p = surface_presentation(genus);
  if (y.size() != p.generators.size())
    throw InvalidArgument("surface of genus " + std::to_string(genus) + " needs " +
                          std::to_string(p.generators.size()) + " character values");
  const Character rho(y);
  for (Cocycle& mu : cocycle_space(p, rho)) {
    if (build_representation(p, rho, mu).indecomposable) return std::move(mu);
  }
  return std::nullopt;
}

Presentation free_group(std::size_t rank) {
  Presentation p;
  for (std::size_t i = 1; i <= rank; ++i) p.generators.push_back("x" + std::to_string(i));
  return p;
}

Presentation free_abelian(std::size_t rank) {
  Presentation p = free_group(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) p.relators.push_back(commutator(Word::letter(i), Word::letter(j)));
  return p;
}

Presentation heisenberg() {
  const Word x = Word::letter(0), y = Word::letter(1), z = Word::letter(2);
  Presentation p;
  p.generators = {"x", "y", "z"};
  p.relators = {commutator(x, y) * z.inverse(), commutator(x, z), commutator(y, z)};
  return p;
}

ConjugationData heisenberg_conjugation_data() {
  ConjugationData data;
  data.outer = 3;
  data.comm = 1;
  data.actions.assign(3, IntMatrix{{1}});
  return data;
}

std::vector<std::pair<std::string, Presentation>> control_groups() {
  std::vector<std::pair<std::string, Presentation>> out;
  for (std::size_t m = 1; m <= 3; ++m) out.emplace_back("free" + std::to_string(m), free_group(m));
  for (std::size_t n = 1; n <= 4; ++n) out.emplace_back("abelian" + std::to_string(n), free_abelian(n));
  out.emplace_back("heisenberg", heisenberg());
  return out;
}

}  // namespace twistcoh

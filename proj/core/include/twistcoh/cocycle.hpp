#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/character.hpp"
#include "twistcoh/linear.hpp"
#include "twistcoh/word.hpp"

namespace twistcoh {

// A twisted (crossed-homomorphism) cocycle for the character rho, given by its values on
// the generators. Convention: mu(gh) = mu(h) + rho(h) mu(g), so that
//
//   xi(g) = [[1, mu(g)], [0, rho(g)]]
//
// is multiplicative: xi(g) xi(h) = xi(gh). The cocycle lambda of the matrix form
// [[1, lambda(g^-1)], [0, rho(g)]] is recovered as lambda(g) = mu(g^-1).
class Cocycle {
 public:
  Cocycle(Vector values, Character rho);

  const Vector& values() const { return values_; }
  const Character& character() const { return rho_; }
  const Scalar& operator[](std::size_t generator) const { return values_[generator]; }
  std::size_t size() const { return values_.size(); }

 private:
  Vector values_;
  Character rho_;
};

Scalar evaluate_cocycle(const Cocycle& mu, const Word& w);

// Coefficients c with mu(r) = sum_j c_j mu(a_j) for every assignment of generator
// values: the rho-evaluated Fox derivative of r. Throws InadmissibleCharacter when
// rho(r) != 1.
Vector relator_constraint_row(const Presentation& p, const Character& rho, const Word& r);

// One constraint row per relator.
Matrix constraint_matrix(const Presentation& p, const Character& rho);

// Basis of Z^1: the kernel of the constraint matrix.
std::vector<Cocycle> cocycle_space(const Presentation& p, const Character& rho, Diagnostics* diag = nullptr);

// (rho(a_j) - 1)_j, spanning the coboundaries B^1.
Vector coboundary_vector(const Character& rho);

struct CohomologyReport {
  std::size_t z1_dim = 0;
  std::size_t b1_dim = 0;
  // Group-cohomology dimension dim Z^1 - dim B^1. Positive exactly when an
  // indecomposable representation of the form above exists.
  std::size_t h1_dim = 0;
  std::vector<Cocycle> z1_basis;
  std::optional<Vector> coboundary_generator;
  std::vector<std::string> warnings;
};

// Throws InadmissibleCharacter when rho does not descend to the presented group.
CohomologyReport twisted_h1_dimension(const Presentation& p, const Character& rho);

// Number of generators minus the rational rank of the abelianized exponent matrix.
std::size_t betti_one(const Presentation& p);

}  // namespace twistcoh

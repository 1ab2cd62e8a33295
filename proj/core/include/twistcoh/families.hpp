#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/character.hpp"
#include "twistcoh/cocycle.hpp"
#include "twistcoh/enumerator.hpp"
#include "twistcoh/int_matrix.hpp"
#include "twistcoh/word.hpp"

namespace twistcoh {

// Mapping tori of A in SL2(Z): Z^2 x|_A Z on generators (u, v, t) with t acting on
// column vectors as A, i.e. t u t^-1 = u^A11 v^A21 and t v t^-1 = u^A12 v^A22.

// Throws InvalidArgument unless A is 2x2 with det 1.
void require_sl2z(const IntMatrix& a);

Presentation mapping_torus_presentation(const IntMatrix& a);

// rho(u) = rho(v) = 1, rho(t) = y.
Character mapping_torus_character(const IntMatrix& a, const Scalar& y);

// y + 1/y == tr A, i.e. y is an eigenvalue of A.
bool mapping_torus_h1_nonzero(const IntMatrix& a, const Scalar& y);

// Non-trivial cocycle (mu(u), mu(v), 0) with (mu(u), mu(v)) solving A^T x = x / y, first
// non-zero entry normalized to 1. Requires y != 1 and y an eigenvalue of A.
Cocycle mapping_torus_cocycle(const IntMatrix& a, const Scalar& y);

// Positive real eigenvalues of A, exact (Quadratic(tr^2 - 4) when irrational).
std::vector<Scalar> mapping_torus_eigenvalues(const IntMatrix& a);

// Conjugation of [G, G] = <u, v> by the single outer generator t: N = (A^-1)^T.
ConjugationData mapping_torus_conjugation_data(const IntMatrix& a);

// Surface group of genus g: generators a1 b1 ... ag bg, one relator [a1,b1]...[ag,bg].
Presentation surface_presentation(int genus);

// Indecomposable cocycle for the character with values y (2g of them), found in the
// generic cocycle space; nullopt when every cocycle is a coboundary. Guaranteed to
// succeed for g >= 2.
std::optional<Cocycle> surface_solve(int genus, const std::vector<Scalar>& y);

Presentation free_group(std::size_t rank);
// All pairwise commutators of rank generators.
Presentation free_abelian(std::size_t rank);
// <x, y, z | [x,y] z^-1, [x,z], [y,z]>
Presentation heisenberg();
// [H, H] = <z> with x, y, z acting trivially on z.
ConjugationData heisenberg_conjugation_data();

// Named small nilpotent, free and abelian groups used as controls.
std::vector<std::pair<std::string, Presentation>> control_groups();

}  // namespace twistcoh

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistcoh/character.hpp"
#include "twistcoh/cocycle.hpp"
#include "twistcoh/word.hpp"

namespace twistcoh {

// 2x2 matrix [[a, b], [c, d]]. Deliberately separate from the solver's Matrix: the
// certificate check multiplies these directly and never touches elimination code.
struct Matrix2 {
  Scalar a, b, c, d;

  static Matrix2 identity(const NumericMode& mode);
  Scalar det() const { return a * d - b * c; }
  // Adjugate over the determinant; throws DivisionByZero for singular matrices.
  Matrix2 inverse() const;
  bool is_identity() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
};

// Explicit representation g -> [[1, mu(g)], [0, rho(g)]] of a presented group,
// checkable by multiplying matrices along the relators.
struct RepCertificate {
  std::vector<std::string> generators;
  NumericMode mode;
  Vector rho;
  Vector mu;
  std::vector<Matrix2> matrices;

  bool verified = false;
  bool indecomposable = false;
  // Parameter c of the invariant line through (c, 1) when decomposable.
  std::optional<Scalar> fixed_line;
};

// Throws VerificationFailure if mu violates a relator constraint, InadmissibleCharacter
// if rho does not descend. Fills in the verification and decomposability flags.
RepCertificate build_representation(const Presentation& p, const Character& rho, const Cocycle& mu);

// Product of generator matrices along w.
Matrix2 matrix_of_word(const RepCertificate& cert, const Word& w);

// Every relator maps to the identity matrix.
bool verify_homomorphism(const RepCertificate& cert, const Presentation& p);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Full independent check: generator names, shape [[1, *], [0, *]], det = rho,
// recorded rho/mu agree with the matrices, positivity, and the relator products.
CertificateCheck check_certificate(const RepCertificate& cert, const Presentation& p);

// Returns c when every matrix preserves the line through (c, 1), i.e.
// mu(a_j) = c (rho(a_j) - 1) for all j; nullopt when indecomposable. With trivial rho the
// representation is decomposable only when mu vanishes (then c = 0).
std::optional<Scalar> is_decomposable(const RepCertificate& cert);

nlohmann::json mode_to_json(const NumericMode& mode);
NumericMode mode_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RepCertificate& cert);
// Throws ParseError on schema violations.
RepCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace twistcoh

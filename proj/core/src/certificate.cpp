#include "twistcoh/certificate.hpp"

#include "twistcoh/errors.hpp"

namespace twistcoh {

Matrix2 Matrix2::identity(const NumericMode& mode) {
  return {Scalar::one(mode), Scalar::zero(mode), Scalar::zero(mode), Scalar::one(mode)};
}

Matrix2 Matrix2::inverse() const {
  const Scalar det_inv = det().inverse();
  return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

bool Matrix2::is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

RepCertificate build_representation(const Presentation& p, const Character& rho, const Cocycle& mu) {
  if (rho.size() != p.generators.size() || mu.size() != p.generators.size())
    throw InvalidArgument("certificate inputs do not match the generator count");
  if (!check_admissible(rho, p)) throw InadmissibleCharacter("character does not descend to the presented group");
  for (const Word& r : p.relators) {
    if (!evaluate_cocycle(mu, r).is_zero())
      throw VerificationFailure("cocycle violates relator " + format_word(r, p.generators));
  }

  RepCertificate cert;
  cert.generators = p.generators;
  cert.mode = rho.mode();
  cert.rho = rho.values();
  cert.mu = mu.values();
  for (std::size_t j = 0; j < p.generators.size(); ++j)
    cert.matrices.push_back({Scalar::one(cert.mode), mu[j], Scalar::zero(cert.mode), rho[j]});

  cert.verified = check_certificate(cert, p).ok;
  cert.fixed_line = is_decomposable(cert);
  cert.indecomposable = !cert.fixed_line.has_value();
  return cert;
}

Matrix2 matrix_of_word(const RepCertificate& cert, const Word& w) {
  Matrix2 out = Matrix2::identity(cert.mode);
  for (const Syllable& s : w.syllables()) {
    const Matrix2 step = s.exponent > 0 ? cert.matrices[s.generator] : cert.matrices[s.generator].inverse();
    for (long k = 0; k < (s.exponent > 0 ? s.exponent : -s.exponent); ++k) out = out * step;
  }
  return out;
}

bool verify_homomorphism(const RepCertificate& cert, const Presentation& p) {
  if (cert.matrices.size() != p.generators.size()) return false;
  try {
    for (const Word& r : p.relators)
      if (!matrix_of_word(cert, r).is_identity()) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

CertificateCheck check_certificate(const RepCertificate& cert, const Presentation& p) {
  CertificateCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.failures.push_back(std::move(why));
  };
  if (cert.generators != p.generators) fail("generator names differ from the presentation");
  const std::size_t n = p.generators.size();
  if (cert.matrices.size() != n || cert.rho.size() != n || cert.mu.size() != n) {
    fail("certificate has the wrong number of entries");
    return check;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix2& m = cert.matrices[j];
    const std::string& name = p.generators[j];
    if (!m.a.is_one() || !m.c.is_zero()) fail("matrix of " + name + " does not fix (1,0)");
    if (!(m.det() == cert.rho[j])) fail("det of matrix of " + name + " differs from rho");
    if (!(m.b == cert.mu[j])) fail("top-right entry of " + name + " differs from mu");
    if (!cert.rho[j].is_positive()) fail("rho(" + name + ") is not positive");
  }
  if (!check.ok) return check;
  for (const Word& r : p.relators) {
    bool identity = false;
    try {
      identity = matrix_of_word(cert, r).is_identity();
    } catch (const Error&) {
    }
    if (!identity) fail("relator " + format_word(r, p.generators) + " does not map to the identity");
  }
  return check;
}

std::optional<Scalar> is_decomposable(const RepCertificate& cert) {
  const NumericMode& mode = cert.mode;
  const Scalar one = Scalar::one(mode);
  std::optional<Scalar> c;
  for (const Matrix2& m : cert.matrices) {
    if (!m.d.is_one()) {
      c = m.b / (m.d - one);
      break;
    }
  }
  if (!c) {
    for (const Matrix2& m : cert.matrices)
      if (!m.b.is_zero()) return std::nullopt;
    return Scalar::zero(mode);
  }
  for (const Matrix2& m : cert.matrices)
    if (!(m.b == *c * (m.d - one))) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json mode_to_json(const NumericMode& mode) {
  switch (mode.field) {
    case Field::Rational:
      return {{"field", "rational"}};
    case Field::Quadratic:
      return {{"field", "quadratic"}, {"d", mode.radicand}};
    case Field::Approx:
      return {{"field", "approx"}, {"eps", mode.tolerance}};
  }
  return {};
}

NumericMode mode_from_json(const nlohmann::json& j) {
  try {
    const std::string field = j.at("field").get<std::string>();
    if (field == "rational") return NumericMode::rational();
    if (field == "quadratic") return NumericMode::quadratic(j.at("d").get<long>());
    if (field == "approx") return NumericMode::approx(j.at("eps").get<double>());
    throw ParseError("unknown numeric field '" + field + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed mode: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed mode: ") + e.what());
  }
}

namespace {

nlohmann::json scalars_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Scalar& x : v) out.push_back(x.to_string());
  return out;
}

Vector scalars_from_json(const nlohmann::json& j, const NumericMode& mode) {
  Vector out;
  for (const auto& x : j) out.push_back(parse_scalar(x.get<std::string>(), mode));
  return out;
}

}  // namespace

nlohmann::json to_json(const RepCertificate& cert) {
  nlohmann::json matrices = nlohmann::json::array();
  for (const Matrix2& m : cert.matrices)
    matrices.push_back(nlohmann::json::array({nlohmann::json::array({m.a.to_string(), m.b.to_string()}),
                                              nlohmann::json::array({m.c.to_string(), m.d.to_string()})}));
  return {
      {"generators", cert.generators},
      {"mode", mode_to_json(cert.mode)},
      {"rho", scalars_to_json(cert.rho)},
      {"mu", scalars_to_json(cert.mu)},
      {"matrices", matrices},
      {"verified", cert.verified},
      {"indecomposable", cert.indecomposable},
      {"fixed_line_c", cert.fixed_line ? nlohmann::json(cert.fixed_line->to_string()) : nlohmann::json(nullptr)},
  };
}

RepCertificate certificate_from_json(const nlohmann::json& j) {
  RepCertificate cert;
  try {
    cert.generators = j.at("generators").get<std::vector<std::string>>();
    cert.mode = mode_from_json(j.at("mode"));
    cert.rho = scalars_from_json(j.at("rho"), cert.mode);
    cert.mu = scalars_from_json(j.at("mu"), cert.mode);
    for (const auto& m : j.at("matrices")) {
      if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
          m[1].size() != 2)
        throw ParseError("matrix is not 2x2");
      cert.matrices.push_back({parse_scalar(m[0][0].get<std::string>(), cert.mode),
                               parse_scalar(m[0][1].get<std::string>(), cert.mode),
                               parse_scalar(m[1][0].get<std::string>(), cert.mode),
                               parse_scalar(m[1][1].get<std::string>(), cert.mode)});
    }
    cert.verified = j.value("verified", false);
    cert.indecomposable = j.value("indecomposable", false);
    if (j.contains("fixed_line_c") && !j["fixed_line_c"].is_null())
      cert.fixed_line = parse_scalar(j["fixed_line_c"].get<std::string>(), cert.mode);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

}  // namespace twistcoh

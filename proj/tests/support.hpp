#pragma once

// Test-only oracles and random generators. Nothing here calls into the cocycle solver
// or the linear-core elimination: constraint rows come from multiplying 2x2 matrices and
// ranks from a naive Gauss-Jordan pass.

#include <cstddef>
#include <random>
#include <vector>

#include "twistcoh/twistcoh.hpp"

namespace testsupport {

using namespace twistcoh;

struct Mat {
  Scalar a, b, c, d;
};

inline Mat mul(const Mat& x, const Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Upper-triangular inverse written out by hand: [[1, m], [0, r]]^-1 = [[1, -m/r], [0, 1/r]].
inline Mat generator_matrix(const Scalar& m, const Scalar& r, int sign) {
  const NumericMode& mode = r.mode();
  if (sign > 0) return {Scalar::one(mode), m, Scalar::zero(mode), r};
  return {Scalar::one(mode), -m / r, Scalar::zero(mode), r.inverse()};
}

// Top-right entry of prod xi(s_i) with xi(a_j) = [[1, mu_j], [0, rho_j]].
inline Scalar top_right_of_word(const Word& w, const Vector& mu, const Vector& rho) {
  const NumericMode& mode = rho.front().mode();
  Mat acc{Scalar::one(mode), Scalar::zero(mode), Scalar::zero(mode), Scalar::one(mode)};
  for (const Syllable& s : w.syllables()) {
    const int sign = s.exponent > 0 ? 1 : -1;
    const Mat g = generator_matrix(mu[s.generator], rho[s.generator], sign);
    for (long k = 0; k < (s.exponent > 0 ? s.exponent : -s.exponent); ++k) acc = mul(acc, g);
  }
  return acc.b;
}

// Constraint row by evaluating the (linear) top-right entry at each unit cocycle.
inline Vector matrix_route_row(const Word& r, const Vector& rho) {
  const NumericMode& mode = rho.front().mode();
  Vector row;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    Vector unit(rho.size(), Scalar::zero(mode));
    unit[j] = Scalar::one(mode);
    row.push_back(top_right_of_word(r, unit, rho));
  }
  return row;
}

// Naive Gauss-Jordan rank over the scalar field.
inline std::size_t naive_rank(std::vector<Vector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Scalar pivot = rows[rank][c];
    for (auto& x : rows[rank]) x = x / pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// dim Z^1 by brute force: generators minus the rank of the matrix-route rows.
inline std::size_t brute_force_z1(const Presentation& p, const Vector& rho) {
  if (p.generators.empty()) return 0;
  std::vector<Vector> rows;
  for (const Word& r : p.relators) rows.push_back(matrix_route_row(r, rho));
  return p.generators.size() - naive_rank(rows);
}

inline Word random_word(std::mt19937_64& rng, std::size_t generators, std::size_t max_letters) {
  std::uniform_int_distribution<std::size_t> len(0, max_letters);
  std::uniform_int_distribution<std::size_t> gen(0, generators - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Syllable> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) letters.push_back({gen(rng), inv(rng) ? -1L : 1L});
  return Word(letters);
}

// Unreduced letter sequence, for free-reduction invariance checks.
inline std::vector<Syllable> random_letters(std::mt19937_64& rng, std::size_t generators, std::size_t n) {
  std::uniform_int_distribution<std::size_t> gen(0, generators - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Syllable> letters;
  for (std::size_t i = 0; i < n; ++i) letters.push_back({gen(rng), inv(rng) ? -1L : 1L});
  return letters;
}

inline Scalar random_positive_rational(std::mt19937_64& rng, long max = 9) {
  std::uniform_int_distribution<long> d(1, max);
  return Scalar::rational(d(rng), d(rng));
}

inline Scalar random_rational(std::mt19937_64& rng, long max = 9) {
  std::uniform_int_distribution<long> n(-max, max);
  std::uniform_int_distribution<long> d(1, max);
  return Scalar::rational(n(rng), d(rng));
}

inline Scalar random_quadratic(std::mt19937_64& rng, long d) {
  std::uniform_int_distribution<long> n(-9, 9);
  std::uniform_int_distribution<long> q(1, 9);
  return Scalar::quadratic(mpq_class(n(rng), q(rng)), mpq_class(n(rng), q(rng)), d);
}

inline Character random_character(std::mt19937_64& rng, std::size_t generators) {
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < generators; ++i) values.push_back(random_positive_rational(rng));
  return Character(values, NumericMode::rational());
}

inline IntMatrix mul2(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return out;
}

// Random element of SL2(Z) as a word of length <= max_len in the elementary matrices
// [[1,1],[0,1]], [[1,0],[1,1]] and their inverses.
inline IntMatrix random_sl2z(std::mt19937_64& rng, std::size_t max_len = 10) {
  static const IntMatrix gens[4] = {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}, {{1, -1}, {0, 1}}, {{1, 0}, {-1, 1}}};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  IntMatrix a{{1, 0}, {0, 1}};
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) a = mul2(a, gens[pick(rng)]);
  return a;
}

// Random presentation with at most `gens` generators and `rels` relators.
inline Presentation random_presentation(std::mt19937_64& rng, std::size_t gens = 4, std::size_t rels = 4,
                                        std::size_t max_len = 12) {
  std::uniform_int_distribution<std::size_t> ng(1, gens);
  std::uniform_int_distribution<std::size_t> nr(0, rels);
  Presentation p;
  const std::size_t n = ng(rng);
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back("g" + std::to_string(i));
  const std::size_t m = nr(rng);
  for (std::size_t i = 0; i < m; ++i) p.relators.push_back(random_word(rng, n, max_len));
  return p;
}

// Every relator is a product of conjugated commutators, so every character is admissible.
inline Presentation random_commutator_presentation(std::mt19937_64& rng, std::size_t gens = 4,
                                                   std::size_t rels = 3) {
  std::uniform_int_distribution<std::size_t> ng(1, gens);
  std::uniform_int_distribution<std::size_t> nr(1, rels);
  std::uniform_int_distribution<int> factors(1, 2);
  Presentation p;
  const std::size_t n = ng(rng);
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back("g" + std::to_string(i));
  const std::size_t m = nr(rng);
  for (std::size_t i = 0; i < m; ++i) {
    Word r;
    for (int f = factors(rng); f > 0; --f) {
      const Word c = random_word(rng, n, 2);
      r = r * c * commutator(random_word(rng, n, 3), random_word(rng, n, 3)) * c.inverse();
    }
    p.relators.push_back(r);
  }
  return p;
}

}  // namespace testsupport

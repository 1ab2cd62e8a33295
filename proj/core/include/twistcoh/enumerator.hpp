#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twistcoh/character.hpp"
#include "twistcoh/cocycle.hpp"
#include "twistcoh/int_matrix.hpp"
#include "twistcoh/word.hpp"

namespace twistcoh {

// How the outer generators a_1..a_m act by conjugation on generators b_1..b_k of the
// commutator subgroup: a_j^-1 b_i a_j = prod_l b_l^{N_j(i, l)}.
struct ConjugationData {
  std::size_t outer = 0;  // m
  std::size_t comm = 0;   // k
  std::vector<IntMatrix> actions;  // m matrices, each k x k

  // Throws InvalidArgument unless m, k >= 1 and every N_j is k x k.
  void validate() const;
};

// Grammar:
//   outer: m
//   comm: k
//   N_1:
//   <k rows of k integers>
//   ...
// `#` starts a comment.
ConjugationData parse_conjugation_data(std::string_view text);
std::string to_text(const ConjugationData& data);

// Cartesian product over j of the positive real eigenvalues of N_j, in lexicographic
// order. Every tuple shares one numeric mode: rationals are promoted to the tuple's
// radicand, and tuples mixing two radicands or containing size > 2 eigenvalues are
// carried in Approx mode with tolerance `eps`. At most k^m tuples.
std::vector<std::vector<Scalar>> candidate_characters(const ConjugationData& data,
                                                      double eps = kDefaultTolerance);

struct NonVanishing {
  Character character;
  CohomologyReport report;
};

struct Enumeration {
  std::size_t bound = 0;       // k^m
  std::size_t candidates = 0;  // tuples tried
  std::vector<NonVanishing> nonvanishing;
  std::vector<std::string> warnings;
};

// `outer_generators[j]` is the index in p of the generator playing a_j; the remaining
// generators get value 1. Keeps admissible, non-trivial candidates with h1_dim > 0.
Enumeration enumerate_nonvanishing(const Presentation& p, const ConjugationData& data,
                                   const std::vector<std::size_t>& outer_generators,
                                   double eps = kDefaultTolerance);

}  // namespace twistcoh

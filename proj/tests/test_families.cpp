#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace twistcoh;

namespace {

const NumericMode Q = NumericMode::rational();
const IntMatrix kA{{2, 1}, {1, 1}};

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }
Scalar golden(int sign = 1) { return Scalar::quadratic(mpq_class(3, 2), mpq_class(sign, 2), 5); }

}  // namespace

TEST_CASE("mapping torus presentations") {
  const Presentation ex = mapping_torus_presentation(kA);
  CHECK(to_text(ex) == "gens: u v t\nrel: u v u^-1 v^-1\nrel: t u t^-1 v^-1 u^-2\nrel: t v t^-1 v^-1 u^-1\n");

  const Word u = Word::letter(0), v = Word::letter(1), t = Word::letter(2);
  const Presentation torus3 = mapping_torus_presentation(IntMatrix{{1, 0}, {0, 1}});
  CHECK(torus3.relators[1] == commutator(t, u));
  CHECK(torus3.relators[2] == commutator(t, v));

  const Presentation unipotent = mapping_torus_presentation(IntMatrix{{1, 1}, {0, 1}});
  CHECK(unipotent.relators[1] == t * u * t.inverse() * u.inverse());
  CHECK(unipotent.relators[2] == t * v * t.inverse() * v.inverse() * u.inverse());

  CHECK_THROWS_AS(mapping_torus_presentation(IntMatrix{{2, 0}, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(mapping_torus_presentation(IntMatrix{{1, 0, 0}}), InvalidArgument);
}

TEST_CASE("mapping torus characters") {
  const Presentation ex = mapping_torus_presentation(kA);
  CHECK(check_admissible(mapping_torus_character(kA, golden()), ex));
  CHECK(is_trivial(mapping_torus_character(kA, q(1))));
  const Character two = mapping_torus_character(kA, q(2));
  CHECK(check_admissible(two, ex));
  CHECK_FALSE(is_trivial(two));
}

TEST_CASE("eigenvalue test") {
  CHECK(mapping_torus_h1_nonzero(kA, golden()));
  CHECK(mapping_torus_h1_nonzero(kA, golden(-1)));
  CHECK_FALSE(mapping_torus_h1_nonzero(kA, q(2)));
  CHECK_FALSE(mapping_torus_h1_nonzero(IntMatrix{{1, 1}, {0, 1}}, q(2)));
  CHECK(mapping_torus_h1_nonzero(IntMatrix{{1, 1}, {0, 1}}, q(1)));
  CHECK_THROWS_AS(mapping_torus_h1_nonzero(kA, q(0)), InvalidArgument);
}

TEST_CASE("closed-form eigencocycle") {
  const Cocycle mu = mapping_torus_cocycle(kA, golden());
  CHECK(mu[0] == Scalar::one(mu[0].mode()));
  CHECK(mu[1].to_string() == "-1/2-1/2*sqrt(5)");
  CHECK(mu[2].is_zero());
  const Presentation ex = mapping_torus_presentation(kA);
  for (const Word& r : ex.relators) CHECK(evaluate_cocycle(mu, r).is_zero());
  CHECK_THROWS_AS(mapping_torus_cocycle(IntMatrix{{1, 1}, {0, 1}}, q(1)), InvalidArgument);
  CHECK_THROWS_AS(mapping_torus_cocycle(kA, q(2)), InvalidArgument);
}

// The closed form is derived from the action convention; the generic solver only sees the
// relators. Agreement on random A locks the two together (a transposed convention fails).
TEST_CASE("closed-form cocycle solves the generic system on random SL2(Z)") {
  std::mt19937_64 rng(67);
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    const IntMatrix a = testsupport::random_sl2z(rng);
    const Presentation p = mapping_torus_presentation(a);
    for (const Scalar& y : mapping_torus_eigenvalues(a)) {
      if (y.is_one()) continue;
      const Cocycle mu = mapping_torus_cocycle(a, y);
      for (const Word& r : p.relators) {
        CHECK(evaluate_cocycle(mu, r).is_zero());
        CHECK(testsupport::top_right_of_word(r, mu.values(), mu.character().values()).is_zero());
      }
      CHECK(build_representation(p, mu.character(), mu).indecomposable);
      ++nontrivial;
    }
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("mapping torus eigenvalues and conjugation data") {
  const auto ys = mapping_torus_eigenvalues(kA);
  REQUIRE(ys.size() == 2);
  CHECK(ys[0] == golden(-1));
  CHECK(ys[1] == golden(1));
  CHECK(mapping_torus_eigenvalues(IntMatrix{{0, -1}, {1, 0}}).empty());

  const ConjugationData data = mapping_torus_conjugation_data(kA);
  CHECK(data.outer == 1);
  CHECK(data.comm == 2);
  CHECK(data.actions[0] == IntMatrix{{1, -1}, {-1, 2}});
  const auto spectrum = positive_real_eigenvalues(data.actions[0]);
  REQUIRE(spectrum.size() == 2);
  CHECK(spectrum[0] == ys[0]);
  CHECK(spectrum[1] == ys[1]);

  // N is the inverse transpose of A.
  const IntMatrix n = data.actions[0];
  const IntMatrix product = testsupport::mul2(n, IntMatrix{{kA(0, 0), kA(1, 0)}, {kA(0, 1), kA(1, 1)}});
  CHECK(product == IntMatrix{{1, 0}, {0, 1}});
}

TEST_CASE("surface groups") {
  const Presentation torus = surface_presentation(1);
  CHECK(torus.generators == std::vector<std::string>{"a1", "b1"});
  CHECK(torus.relators[0] == commutator(Word::letter(0), Word::letter(1)));
  const Presentation s2 = surface_presentation(2);
  CHECK(s2.generators.size() == 4);
  REQUIRE(s2.relators.size() == 1);
  CHECK(s2.relators[0].length() == 8);
  CHECK_THROWS_AS(surface_presentation(0), InvalidArgument);
}

TEST_CASE("surface witnesses") {
  const auto x = surface_solve(2, {q(2), q(1), q(1), q(1)});
  REQUIRE(x.has_value());
  CHECK(x->values() == Vector{q(0), q(0), q(1), q(0)});

  const auto trivial = surface_solve(2, {q(1), q(1), q(1), q(1)});
  REQUIRE(trivial.has_value());
  CHECK(trivial->values() == Vector{q(1), q(0), q(0), q(0)});

  const Presentation torus = surface_presentation(1);
  const bool vanishes = twisted_h1_dimension(torus, Character({q(2), q(1)})).h1_dim == 0;
  CHECK(vanishes);
  CHECK(surface_solve(1, {q(2), q(1)}).has_value() == !vanishes);
  CHECK_THROWS_AS(surface_solve(2, {q(2)}), InvalidArgument);
}

TEST_CASE("control groups") {
  CHECK(free_group(2).relators.empty());
  CHECK(free_group(2).generators.size() == 2);
  CHECK(free_abelian(3).relators.size() == 3);
  const Presentation h = heisenberg();
  CHECK(to_text(h) == "gens: x y z\nrel: x y x^-1 y^-1 z^-1\nrel: x z x^-1 z^-1\nrel: y z y^-1 z^-1\n");
  CHECK(control_groups().size() == 8);
  for (const auto& [name, p] : control_groups()) {
    CHECK_FALSE(name.empty());
    CHECK_NOTHROW(p.validate());
  }
  const ConjugationData hd = heisenberg_conjugation_data();
  CHECK(hd.outer == 3);
  CHECK(hd.comm == 1);
}

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testing;

namespace {

const std::vector<std::string> kXmods = {"sl2-as-2alg", "heis3-as-2alg", "abelian2-as-2alg", "zero-2alg", "idsl2",
                                         "heis3-center", "tuple-heis3", "classic-sl2", "glphi-proj"};

}  // namespace

TEST_CASE("crossed module fixtures satisfy the axioms", "[xmod]") {
  for (const auto& name : kXmods) {
    INFO(name);
    CHECK(check_crossed_module(xmod(name)).empty());
  }
  Report bad = check_crossed_module(xmod("bad-mu"));
  REQUIRE(!bad.empty());
  CHECK(bad[0].family == "equivariance");
}

TEST_CASE("a broken Peiffer identity is reported", "[xmod]") {
  CrossedModule X = xmod("idsl2");
  X.mu *= Rat(2);  // equivariance survives scaling, Peiffer does not
  Report r = check_crossed_module(X);
  REQUIRE(!r.empty());
  bool peiffer = false;
  for (const auto& v : r) peiffer = peiffer || v.family == "peiffer";
  CHECK(peiffer);
}

TEST_CASE("semidirect sums", "[xmod]") {
  LieAlgebra ab = semidirect_sum(xmod("abelian2-as-2alg"));
  CHECK(ab == LieAlgebra(2));
  CHECK(semidirect_sum(xmod("sl2-as-2alg")) == algebra("sl2"));
  for (const auto& name : kXmods) {
    INFO(name);
    CHECK(check_lie_algebra(semidirect_sum(xmod(name))).empty());
  }
  CHECK(semidirect_sum(xmod("idsl2")).dim() == 6);
}

TEST_CASE("structural maps form a groupoid", "[xmod]") {
  std::mt19937_64 rng(3);
  for (const auto& name : kXmods) {
    INFO(name);
    CrossedModule X = xmod(name);
    StructuralMaps S = structural_maps(X);
    LieAlgebra A = semidirect_sum(X);
    const Index n = X.g.dim(), m = X.h.dim();
    CHECK(RatMatrix(S.s * S.u) == RatMatrix::Identity(m, m));
    CHECK(RatMatrix(S.t * S.u) == RatMatrix::Identity(m, m));
    CHECK(RatMatrix(S.t * S.i) == S.s);
    CHECK(RatMatrix(S.s * S.i) == S.t);
    CHECK(is_homomorphism(A, X.h, S.s));
    CHECK(is_homomorphism(A, X.h, S.t));
    CHECK(is_homomorphism(X.h, A, S.u));
    for (int t = 0; t < 5; ++t) {
      RatVector x = random_matrix(rng, n, 1), xp = random_matrix(rng, n, 1), y = random_matrix(rng, m, 1);
      RatVector a(n + m), ap(n + m), want(n + m);
      a << x, y;
      ap << xp, RatVector(y + X.mu * x);
      want << RatVector(x + xp), y;
      CHECK(S.compose(ap, a) == want);
      if (n > 0 && !is_zero(X.mu)) {
        RatVector off = ap;
        off.tail(m) += RatVector(X.mu * unit(n, 0));
        if (RatVector(S.s * off) != RatVector(S.t * a)) CHECK_THROWS_AS(S.compose(off, a), ComposabilityError);
      }
    }
  }
}

TEST_CASE("from_groupoid inverts the groupoid construction", "[xmod]") {
  for (const auto& name : kXmods) {
    INFO(name);
    CrossedModule X = xmod(name);
    StructuralMaps S = structural_maps(X);
    CrossedModule Y = from_groupoid(semidirect_sum(X), S.s, S.t, S.u);
    CHECK(check_crossed_module(Y).empty());
    CHECK(Y == X);
  }
  LieAlgebra sl2 = algebra("sl2");
  CHECK_THROWS_AS(from_groupoid(sl2, RatMatrix::Zero(3, 3), RatMatrix::Zero(3, 3), RatMatrix::Identity(3, 3)),
                  DomainError);
}

TEST_CASE("nerve spaces and face maps", "[xmod]") {
  for (const auto& name : kXmods) {
    INFO(name);
    CrossedModule X = xmod(name);
    const Index n = X.g.dim(), m = X.h.dim();
    StructuralMaps S = structural_maps(X);
    CHECK(face_map(X, 0, 0) == S.s);
    CHECK(face_map(X, 0, 1) == S.t);
    for (Index p = 0; p <= 4; ++p) CHECK(nerve_space(X, p).dim() == p * n + m);
    for (Index p = 0; p <= 3; ++p) {
      NerveSpace up = nerve_space(X, p + 1), down = nerve_space(X, p);
      CHECK(check_lie_algebra(up.algebra).empty());
      for (Index k = 0; k <= p + 1; ++k) CHECK(is_homomorphism(up.algebra, down.algebra, face_map(X, p, k)));
    }
    // simplicial identities d_k d_l = d_l d_{k+1}, l <= k
    for (Index p = 0; p <= 2; ++p)
      for (Index k = 0; k <= p + 1; ++k)
        for (Index l = 0; l <= k; ++l)
          CHECK(RatMatrix(face_map(X, p, k) * face_map(X, p + 1, l)) ==
                RatMatrix(face_map(X, p, l) * face_map(X, p + 1, k + 1)));
    CHECK(RatMatrix(face_map(X, 0, 0) * face_map(X, 1, 0)) == RatMatrix(face_map(X, 0, 0) * face_map(X, 1, 1)));
  }
  CHECK_THROWS_AS(face_map(xmod("idsl2"), 1, 3), InputError);
}

TEST_CASE("final target", "[xmod]") {
  for (const auto& name : kXmods) {
    INFO(name);
    CrossedModule X = xmod(name);
    const Index m = X.h.dim();
    CHECK(final_target(X, 0) == RatMatrix(RatMatrix::Identity(m, m)));
    CHECK(final_target(X, 1) == structural_maps(X).t);
    for (Index p = 0; p <= 3; ++p) CHECK(is_homomorphism(nerve_space(X, p).algebra, X.h, final_target(X, p)));
  }
  // center of heis3: t_2(z1, z2; y) = y + z1 + z2 on the z coordinate
  RatMatrix t2 = final_target(xmod("heis3-center"), 2);
  RatMatrix want(3, 5);
  want << 0, 0, 1, 0, 0,
          0, 0, 0, 1, 0,
          1, 1, 0, 0, 1;
  CHECK(t2 == want);
}

TEST_CASE("orbits and isotropy", "[xmod]") {
  GroupoidInvariants a = groupoid_invariants(xmod("sl2-as-2alg"));
  CHECK(a.orbit_space_dim == 3);
  CHECK(a.isotropy.dim() == 0);
  GroupoidInvariants b = groupoid_invariants(xmod("idsl2"));
  CHECK(b.orbit_space_dim == 0);
  CHECK(b.isotropy.dim() == 0);

  CrossedModule classic = xmod("classic-sl2");
  GroupoidInvariants c = groupoid_invariants(classic);
  CHECK(c.orbit_space_dim == 3);
  CHECK(c.isotropy.dim() == 2);
  REQUIRE(c.quotient_rep.mats.size() == 3);
  for (Index i = 0; i < 3; ++i) CHECK(c.quotient_rep.mats[i] == classic.action[i]);

  for (const auto& name : kXmods) {
    INFO(name);
    CrossedModule X = xmod(name);
    GroupoidInvariants g = groupoid_invariants(X);
    CHECK(g.orbit_space_dim == X.h.dim() - rank(X.mu));
    const RatMatrix& K = g.isotropy.basis;
    CHECK(is_zero(RatMatrix(X.mu * K)));
    for (Index i = 0; i < K.cols(); ++i)
      for (Index j = 0; j < X.g.dim(); ++j) CHECK(is_zero(RatMatrix(X.g.bracket(K.col(i), unit(X.g.dim(), j)))));
    CHECK(check_rep(g.quotient_rep).empty());
  }
}

TEST_CASE("crossed modules from 4-tuples", "[xmod]") {
  LieAlgebra heis = algebra("heis3"), sl2 = algebra("sl2");
  CHECK(xmod("heis3-center") == xmod("heis3-center"));
  CrossedModule center = xmod("heis3-center");
  RatMatrix incl(3, 1);
  incl << 0, 0, 1;
  CHECK(center.mu == incl);

  CrossedModule triv = from_tuple(sl2, Subspace::zero(3), 1, trivial_rep(sl2, 1));
  CHECK(check_crossed_module(triv).empty());
  CHECK(is_zero(triv.mu));
  for (const auto& a : triv.action) CHECK(is_zero(a));

  CrossedModule whole = from_tuple(sl2, Subspace::full(3), 0, trivial_rep(LieAlgebra(0), 0));
  CHECK(whole.g == sl2);
  CHECK(whole.mu == RatMatrix(RatMatrix::Identity(3, 3)));
  for (Index i = 0; i < 3; ++i) CHECK(whole.action[i] == sl2.ad(i));

  CrossedModule tup = xmod("tuple-heis3");
  GroupoidInvariants g = groupoid_invariants(tup);
  CHECK(g.orbit_space_dim == 2);
  CHECK(g.isotropy.dim() == 1);

  RatMatrix notideal(3, 1);
  notideal << 1, 0, 0;
  CHECK_THROWS_AS(from_tuple(heis, Subspace(3, notideal), 0, trivial_rep(LieAlgebra(2), 0)), DomainError);
}

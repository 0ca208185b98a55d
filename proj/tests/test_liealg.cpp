#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testing;

namespace {

// brute-force Jacobi residue on basis triples
bool jacobi_fails(const LieAlgebra& L, Index i, Index j, Index k) {
  auto e = [&](Index a) { return unit(L.dim(), a); };
  RatVector s = L.bracket(e(i), L.bracket(e(j), e(k))) + L.bracket(e(j), L.bracket(e(k), e(i))) +
                L.bracket(e(k), L.bracket(e(i), e(j)));
  return !is_zero(RatMatrix(s));
}

LieAlgebra random_constants(std::mt19937_64& rng, Index n) {
  LieAlgebra L(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) L.set_bracket(i, j, random_matrix(rng, n, 1, -1, 1));
  return L;
}

}  // namespace

TEST_CASE("brackets of the fixtures", "[liealg]") {
  LieAlgebra sl2 = algebra("sl2"), heis = algebra("heis3");
  CHECK(sl2.bracket(unit(3, 0), unit(3, 1)) == RatVector(2 * unit(3, 1)));
  CHECK(heis.bracket(unit(3, 0), unit(3, 2)) == RatVector::Zero(3));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    RatVector u = random_matrix(rng, 3, 1);
    CHECK(is_zero(RatMatrix(sl2.bracket(u, u))));
  }
  CHECK_THROWS_AS(sl2.bracket(unit(2, 0), unit(3, 0)), InputError);
}

TEST_CASE("check_lie_algebra examples", "[liealg]") {
  CHECK(check_lie_algebra(algebra("sl2")).empty());
  CHECK(check_lie_algebra(algebra("heis3")).empty());

  LieAlgebra bad(2);
  bad.set_constant(0, 1, 0, 1);
  bad.set_constant(1, 0, 0, 1);
  Report r = check_lie_algebra(bad);
  REQUIRE(!r.empty());
  CHECK(r[0].family == "antisymmetry");
  CHECK(r[0].where == std::vector<Index>{0, 1});

  Report j = check_lie_algebra(algebra("bad-jacobi"));
  REQUIRE(j.size() == 1);
  CHECK(j[0].family == "jacobi");
  CHECK(j[0].where == std::vector<Index>{0, 1, 2});
}

TEST_CASE("Jacobi failures are located exactly", "[liealg][property]") {
  std::mt19937_64 rng(42);
  int failing = 0;
  for (int t = 0; t < 60; ++t) {
    const Index n = 3 + t % 2;
    LieAlgebra L = random_constants(rng, n);
    std::set<std::vector<Index>> expected, reported;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        for (Index k = j + 1; k < n; ++k)
          if (jacobi_fails(L, i, j, k)) expected.insert({i, j, k});
    for (const auto& v : check_lie_algebra(L)) {
      CHECK(v.family == "jacobi");
      reported.insert(v.where);
    }
    CHECK(reported == expected);
    failing += !expected.empty();
  }
  CHECK(failing > 0);
}

TEST_CASE("homomorphism examples", "[liealg]") {
  LieAlgebra sl2 = algebra("sl2");
  RatMatrix id = RatMatrix::Identity(3, 3);
  CHECK(is_homomorphism(sl2, sl2, id));
  CHECK(is_homomorphism(sl2, sl2, RatMatrix::Zero(3, 3)));
  RatMatrix swap = RatMatrix::Zero(3, 3);
  swap(0, 0) = 1, swap(1, 2) = 1, swap(2, 1) = 1;
  CHECK_FALSE(is_homomorphism(sl2, sl2, swap));
  swap(0, 0) = -1;  // the Chevalley involution
  CHECK(is_homomorphism(sl2, sl2, swap));
  CHECK(dga_pullback_check(sl2, sl2, id));
  CHECK(dga_pullback_check(sl2, sl2, RatMatrix::Zero(3, 3)));
  CHECK_THROWS_AS(is_homomorphism(sl2, sl2, RatMatrix::Zero(2, 3)), InputError);
}

TEST_CASE("DG pullback check agrees with is_homomorphism", "[liealg][property]") {
  std::vector<LieAlgebra> algs = {algebra("sl2"), algebra("heis3"), algebra("abelian2"), LieAlgebra(1), LieAlgebra(4)};
  // 4-dim: sl2 (+) Q
  LieAlgebra gl2(4);
  {
    LieAlgebra s = algebra("sl2");
    for (Index i = 0; i < 3; ++i)
      for (Index j = i + 1; j < 3; ++j) {
        RatVector v = RatVector::Zero(4);
        v.head(3) = s.bracket_basis(i, j);
        gl2.set_bracket(i, j, v);
      }
  }
  algs.push_back(gl2);
  std::mt19937_64 rng(7);
  int total = 0, homs = 0;
  for (const auto& a : algs)
    for (const auto& b : algs)
      for (int t = 0; t < 8; ++t) {
        RatMatrix m = random_matrix(rng, b.dim(), a.dim(), -1, 1);
        if (t % 2 == 0 && b.dim() > 0) {
          // rank one maps onto a line are homomorphisms iff they kill [a, a]
          RatMatrix line = random_matrix(rng, b.dim(), 1, -1, 1);
          RatMatrix f = random_matrix(rng, 1, a.dim(), -1, 1);
          m = line * f;
        }
        if (t == 7 && a.dim() == b.dim()) m = RatMatrix::Identity(a.dim(), a.dim()) * Rat(t % 3);
        const bool h = is_homomorphism(a, b, m);
        CHECK(dga_pullback_check(a, b, m) == h);
        ++total;
        homs += h;
      }
  CHECK(total >= 100);
  CHECK(homs > 10);
  CHECK(total - homs > 10);
}

TEST_CASE("Chevalley-Eilenberg differential", "[liealg]") {
  // abelian 1-dim algebra, trivial coefficients: all zero
  LinRep triv1 = trivial_rep(LieAlgebra(1), 1);
  for (Index q = 0; q <= 2; ++q) CHECK(is_zero(ce_matrix(triv1, q)));

  LieAlgebra sl2 = algebra("sl2");
  RatMatrix d1 = ce_matrix(trivial_rep(sl2, 1), 1);
  REQUIRE(d1.rows() == 3);
  REQUIRE(d1.cols() == 3);
  CHECK(naive_rank(d1) == 3);
  CHECK(kernel_basis(d1).dim() == 0);
  CHECK(ce_matrix(trivial_rep(sl2, 1), 4).cols() == 0);

  for (const char* name : {"sl2", "heis3", "abelian2"}) {
    LieAlgebra L = algebra(name);
    for (const LinRep& rep : {adjoint(L), trivial_rep(L, 2)}) {
      REQUIRE(check_rep(rep).empty());
      for (Index q = 0; q <= L.dim(); ++q)
        CHECK(is_zero(RatMatrix(ce_matrix(rep, q + 1) * ce_matrix(rep, q))));
    }
  }
}

TEST_CASE("CE differential in low degree matches the formula", "[liealg]") {
  // (d w)(x_a, x_b) = rho(x_a) w(x_b) - rho(x_b) w(x_a) - w([x_a, x_b])
  for (const char* name : {"sl2", "heis3"}) {
    LieAlgebra L = algebra(name);
    LinRep rep = adjoint(L);
    const Index n = L.dim(), V = rep.space_dim;
    RatMatrix d0 = ce_matrix(rep, 0), d1 = ce_matrix(rep, 1);
    for (Index v = 0; v < V; ++v)
      for (Index a = 0; a < n; ++a)
        for (Index c = 0; c < V; ++c) CHECK(d0(a * V + c, v) == rep.mats[a](c, v));
    TupleIndex pairs(n, 2);
    for (Index col = 0; col < n * V; ++col) {
      const Index b0 = col / V, comp = col % V;  // w = e_comp on x_b0
      auto w = [&](Index x) { return x == b0 ? unit(V, comp) : RatVector(RatVector::Zero(V)); };
      for (Index t = 0; t < pairs.size(); ++t) {
        const Index a = pairs.tuple(t)[0], b = pairs.tuple(t)[1];
        RatVector expect = rep.mats[a] * w(b) - rep.mats[b] * w(a);
        RatVector br = L.bracket_basis(a, b);
        expect -= br(b0) * unit(V, comp);
        for (Index c = 0; c < V; ++c) CHECK(d1(t * V + c, col) == expect(c));
      }
    }
  }
}

TEST_CASE("alternating expansion", "[liealg][tuples]") {
  // w(e1, e0) = -w(e0, e1); repeated arguments vanish
  TupleIndex idx(3, 2);
  std::vector<LinComb> args = {{{1, Rat(1)}}, {{0, Rat(1)}}};
  std::map<Index, Rat> got;
  expand_alternating(idx, args, [&](Index r, const Rat& c) { got[r] += c; });
  CHECK(got[idx.rank(std::vector<Index>{0, 1})] == -1);
  args = {{{2, Rat(1)}}, {{2, Rat(3)}}};
  got.clear();
  expand_alternating(idx, args, [&](Index r, const Rat& c) { got[r] += c; });
  for (auto& [r, c] : got) CHECK(c == 0);
}

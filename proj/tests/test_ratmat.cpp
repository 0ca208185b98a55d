#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testing;

namespace {

RatMatrix mat(Index r, Index c, std::initializer_list<int> xs) {
  RatMatrix m(r, c);
  Index k = 0;
  for (int x : xs) m(k / c, k % c) = x, ++k;
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms", "[ratmat]") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(format_rat(parse_rat("10/-4")) == "-5/2");
  CHECK(format_rat(Rat(0)) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("x"), InputError);
  Rat big = parse_rat("123456789012345678901234567890/3");
  CHECK(format_rat(big) == "41152263004115226300411522630");
}

TEST_CASE("rank examples", "[ratmat]") {
  CHECK(rank(RatMatrix(0, 0)) == 0);
  CHECK(rank(RatMatrix::Identity(3, 3)) == 3);
  CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel examples", "[ratmat]") {
  CHECK(kernel_basis(RatMatrix::Identity(2, 2)).dim() == 0);
  Subspace k = kernel_basis(mat(1, 2, {1, 1}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis(0, 0) == -k.basis(1, 0));
  CHECK(k.basis(0, 0) != 0);
  CHECK(kernel_basis(RatMatrix::Zero(3, 3)).dim() == 3);
}

TEST_CASE("solve examples", "[ratmat]") {
  RatVector b(3);
  b << 1, -2, Rat(1, 3);
  CHECK(*solve(RatMatrix(RatMatrix::Identity(3, 3)), b) == b);
  RatVector two(1);
  two << 2;
  auto x = solve(mat(1, 2, {1, 1}), two);
  REQUIRE(x);
  CHECK((*x)(0) + (*x)(1) == 2);
  RatVector e(2);
  e << 0, 1;
  CHECK_FALSE(solve(mat(2, 1, {1, 0}), e));
  CHECK_THROWS_AS(solve(mat(2, 1, {1, 0}), two), InputError);
}

TEST_CASE("quotient dimension examples", "[ratmat]") {
  Subspace ker = Subspace::full(3);
  Subspace img(3, mat(3, 1, {1, 1, 0}));
  CHECK(quotient_dim(ker, img) == 2);
  CHECK(quotient_dim(img, img) == 0);
  Subspace other(3, mat(3, 1, {0, 0, 1}));
  CHECK_THROWS_AS(quotient_dim(img, other), NotSubcomplexError);
}

TEST_CASE("random rank properties against a naive eliminator", "[ratmat][property]") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> shape(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = shape(rng), c = shape(rng);
    RatMatrix m = random_matrix(rng, r, c, -2, 2);
    // sometimes force a dependency
    if (r > 1 && trial % 3 == 0) m.row(r - 1) = m.row(0) * Rat(3, 7) - m.row(1);
    const Index expected = naive_rank(m);
    CHECK(bareiss_rank(m) == expected);
    SparseRatMatrix s = m.sparseView();
    CHECK(rank(s) == expected);
    CHECK(rank(RatMatrix(m.transpose())) == expected);

    // invariance under permutations and row scaling
    std::vector<Index> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMatrix pm(r, c);
    for (Index i = 0; i < r; ++i) pm.row(i) = m.row(perm[i]) * Rat(i + 2, 5);
    CHECK(rank(pm) == expected);

    Subspace k = kernel_basis(m);
    CHECK(k.dim() == c - expected);
    CHECK(is_zero(RatMatrix(m * k.basis)));
    CHECK(naive_rank(k.basis) == k.dim());
    CHECK(kernel_basis(s).dim() == k.dim());
    CHECK(column_space(m).dim() == expected);

    if (c > 0) {
      RatVector x = random_matrix(rng, c, 1);
      RatVector b = m * x;
      auto y = solve(m, b);
      REQUIRE(y);
      CHECK(m * *y == b);
      auto z = solve(s, b);
      REQUIRE(z);
      CHECK(m * *z == b);
    }
  }
}

TEST_CASE("complements and coordinates", "[ratmat]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix k = random_matrix(rng, 5, 3);
    Subspace ker = column_space(k);
    RatMatrix imgbasis = ker.basis * random_matrix(rng, ker.dim(), 1);
    Subspace img = column_space(imgbasis);
    RatMatrix comp = complement_in(ker, img);
    CHECK(comp.cols() == quotient_dim(ker, img));
    RatMatrix both(5, img.dim() + comp.cols());
    both << img.basis, comp;
    CHECK(naive_rank(both) == ker.dim());
    for (Index j = 0; j < comp.cols(); ++j) CHECK(in_span(ker, comp.col(j)));
    RatVector coeff = random_matrix(rng, ker.dim(), 1);
    auto c = coordinates(ker.basis, ker.basis * coeff);
    REQUIRE(c);
    CHECK(*c == coeff);
  }
}

TEST_CASE("exterior powers are multiplicative", "[ratmat]") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    for (Index q = 0; q <= 4; ++q) {
      RatMatrix lhs = exterior_power(a * b, q);
      RatMatrix rhs = exterior_power(a, q) * exterior_power(b, q);
      CHECK(lhs == rhs);
    }
    CHECK(exterior_power(a, 4)(0, 0) == a.determinant());
  }
}

TEST_CASE("tuple ranks are lexicographic", "[tuples]") {
  for (Index n = 0; n <= 6; ++n)
    for (Index k = 0; k <= n + 1; ++k) {
      TupleIndex idx(n, k);
      CHECK(idx.size() == binomial(n, k));
      for (Index r = 0; r < idx.size(); ++r) {
        CHECK(idx.rank(idx.tuple(r)) == r);
        if (r > 0) {
          auto a = idx.tuple(r - 1), b = idx.tuple(r);
          CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
        }
      }
    }
  std::vector<Index> s = {2, 0, 1};
  CHECK(sort_sign(s) == 1);
  s = {1, 0, 2};
  CHECK(sort_sign(s) == -1);
  s = {1, 1};
  CHECK(sort_sign(s) == 0);
}

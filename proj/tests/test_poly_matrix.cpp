#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "cb/poly_matrix.hpp"

using cb::LaurentPoly;
using cb::Permutation;
using cb::PolyMatrix;

namespace {

LaurentPoly t(int nvars, int i) { return LaurentPoly::variable(nvars, i); }
LaurentPoly c(int nvars, long v) { return LaurentPoly::constant(nvars, v); }

PolyMatrix random_matrix(std::mt19937_64& rng, int n, int nvars) {
    PolyMatrix m(n, nvars);
    for (int r = 1; r <= n; ++r)
        for (int col = 1; col <= n; ++col) {
            // Sparse: most entries zero, some monomials.
            if (rng() % 3 == 0) {
                LaurentPoly::ExponentVec exps(nvars);
                for (int& e : exps) e = static_cast<int>(rng() % 3) - 1;
                long coeff = static_cast<long>(rng() % 7) - 3;
                m.set(r, col, LaurentPoly::monomial(std::move(exps), coeff));
            }
        }
    return m;
}

// Independent determinant: the full signed sum over permutations.
LaurentPoly det_by_permutation_sum(const PolyMatrix& m) {
    const int n = m.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    LaurentPoly total(m.nvars());
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        LaurentPoly prod = c(m.nvars(), sign);
        for (int r = 1; r <= n; ++r) prod *= m.at(r, perm[r - 1]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_CASE("column vector fills the half-open row range") {
    LaurentPoly v = c(3, 7);
    auto col = cb::col_vector(v, 1, 3, 3);
    REQUIRE(col.size() == 3);
    CHECK(col[0] == v);
    CHECK(col[1] == v);
    CHECK(col[2].is_zero());

    // j = n+1 fills through the last row.
    auto full = cb::col_vector(v, 2, 4, 3);
    CHECK(full[0].is_zero());
    CHECK(full[1] == v);
    CHECK(full[2] == v);

    CHECK_THROWS_AS(cb::col_vector(v, 0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::col_vector(v, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::col_vector(v, 1, 5, 3), std::invalid_argument);
}

TEST_CASE("column embedding reproduces the worked example") {
    std::vector<LaurentPoly> v{c(3, 1), c(3, 2), c(3, 3)};
    PolyMatrix m = cb::col_embed(2, v);
    for (int r = 1; r <= 3; ++r)
        for (int col = 1; col <= 3; ++col) {
            if (col == 2)
                CHECK(m.at(r, col) == c(3, r));
            else
                CHECK(m.at(r, col).is_zero());
        }
    CHECK_THROWS_AS(cb::col_embed(4, v), std::invalid_argument);
    CHECK_THROWS_AS(cb::col_embed(0, v), std::invalid_argument);
    CHECK_THROWS_AS(cb::col_embed(1, std::vector<LaurentPoly>{}), std::invalid_argument);
}

TEST_CASE("matrix shape and entry validation") {
    PolyMatrix m(2, 3);
    CHECK_THROWS_AS(m.set(1, 1, LaurentPoly(2)), std::invalid_argument);
    CHECK_THROWS_AS(m.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(m.at(1, 3), std::out_of_range);
    CHECK_THROWS_AS(PolyMatrix(2, 2) + PolyMatrix(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(PolyMatrix(2, 2) * PolyMatrix(2, 3), std::invalid_argument);
    CHECK(PolyMatrix::identity(3, 2).is_identity());
    CHECK_FALSE(PolyMatrix(3, 2).is_identity());
}

TEST_CASE("determinant matches the permutation-sum oracle") {
    // Known upper triangular case first.
    PolyMatrix u(2, 2);
    u.set(1, 1, t(2, 1) * t(2, 2));
    u.set(1, 2, c(2, 1) - t(2, 1));
    u.set(2, 2, c(2, 1));
    CHECK(u.det() == t(2, 1) * t(2, 2));

    CHECK(PolyMatrix::identity(4, 2).det().is_one());
    CHECK(PolyMatrix(3, 2).det().is_zero());

    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng() % 3); // 2..4
        PolyMatrix m = random_matrix(rng, n, 2);
        CHECK(m.det() == det_by_permutation_sum(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(556);
    for (int iter = 0; iter < 10; ++iter) {
        PolyMatrix a = random_matrix(rng, 3, 2);
        PolyMatrix b = random_matrix(rng, 3, 2);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("variable permutation acts entrywise and multiplicatively") {
    Permutation s = Permutation::from_images({2, 3, 1});
    std::mt19937_64 rng(557);
    for (int iter = 0; iter < 10; ++iter) {
        PolyMatrix a = random_matrix(rng, 3, 3);
        PolyMatrix b = random_matrix(rng, 3, 3);
        CHECK((a * b).permuted(s) == a.permuted(s) * b.permuted(s));
        CHECK(a.permuted(s).at(1, 1) == a.at(1, 1).permuted(s));
    }
    CHECK(PolyMatrix::identity(3, 3).permuted(s).is_identity());
}

TEST_CASE("evaluation commutes with matrix products") {
    std::mt19937_64 rng(558);
    std::vector<mpq_class> pt{mpq_class(2), mpq_class(-1, 3)};
    for (int iter = 0; iter < 10; ++iter) {
        PolyMatrix a = random_matrix(rng, 3, 2);
        PolyMatrix b = random_matrix(rng, 3, 2);
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("single-variable specialization is entrywise") {
    PolyMatrix m(2, 3);
    m.set(1, 1, LaurentPoly::monomial({1, 1, 0}, 1)); // t1*t2 -> t^2
    m.set(2, 1, LaurentPoly::monomial({0, 1, 0}, 1) - LaurentPoly::monomial({0, 0, 1}, 1));
    PolyMatrix s = cb::burau_specialize(m);
    CHECK(s.nvars() == 1);
    CHECK(s.at(1, 1) == LaurentPoly::monomial({2}, 1));
    CHECK(s.at(2, 1).is_zero()); // t2 - t3 collapses
}

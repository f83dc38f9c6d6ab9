#include <doctest.h>

#include <random>

#include "oracle_utils.hpp"
#include "pfh/pfaffian.hpp"

using namespace pfh;

namespace {

LinearForm form(std::vector<long> coeffs) {
    LinearForm f;
    for (long c : coeffs) f.coeffs.emplace_back(c);
    return f;
}

// rho = [X Y] with X = [[0, x], [-x, 0]] in the variables (x, y1, y2, ...).
AlmostAlternatingMatrix small_instance(long t, int dim) {
    std::vector<std::vector<LinearForm>> entries(2);
    std::vector<long> zero(static_cast<size_t>(dim), 0);
    std::vector<long> x = zero;
    x[0] = 1;
    entries[0].push_back(form(zero));
    entries[0].push_back(form(x));
    std::vector<long> neg_x = zero;
    neg_x[0] = -1;
    entries[1].push_back(form(neg_x));
    entries[1].push_back(form(zero));
    for (long j = 0; j < t; ++j) {
        std::vector<long> y0 = zero, y1 = zero;
        y0[static_cast<size_t>(1 + 2 * j) % static_cast<size_t>(dim)] = 1;
        y1[static_cast<size_t>(2 + 2 * j) % static_cast<size_t>(dim)] = 1;
        entries[0].push_back(form(y0));
        entries[1].push_back(form(y1));
    }
    return AlmostAlternatingMatrix({2, t}, dim, std::move(entries));
}

}  // namespace

TEST_CASE("pfaffian base cases") {
    MultiPoly a = MultiPoly::variable(1, 0);
    std::vector<std::vector<MultiPoly>> m2{{MultiPoly(1), a}, {-a, MultiPoly(1)}};
    CHECK(pfaffian(m2) == a);

    std::vector<std::vector<MultiPoly>> zero6(6, std::vector<MultiPoly>(6, MultiPoly(1)));
    CHECK(pfaffian(zero6).is_zero());

    CHECK(pfaffian({}) == MultiPoly::constant(0, 1));
}

TEST_CASE("pfaffian of the generic 4x4") {
    // Entries m12..m34 as six independent variables.
    int dim = 6;
    auto var = [&](int k) { return MultiPoly::variable(dim, k); };
    std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(4, MultiPoly(dim)));
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = var(k);
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = -var(k);
            ++k;
        }
    // m12*m34 - m13*m24 + m14*m23 with variable order (m12,m13,m14,m23,m24,m34).
    MultiPoly expected = var(0) * var(5) - var(1) * var(4) + var(2) * var(3);
    CHECK(pfaffian(m) == expected);
}

TEST_CASE("pfaffian rejects bad input") {
    MultiPoly a = MultiPoly::variable(1, 0);
    std::vector<std::vector<MultiPoly>> odd(3, std::vector<MultiPoly>(3, MultiPoly(1)));
    CHECK_THROWS(pfaffian(odd));
    std::vector<std::vector<MultiPoly>> not_alt{{MultiPoly(1), a}, {a, MultiPoly(1)}};
    CHECK_THROWS(pfaffian(not_alt));
    std::vector<std::vector<MultiPoly>> diag{{a, a}, {-a, MultiPoly(1)}};
    CHECK_THROWS(pfaffian(diag));
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937_64 rng(11);
    for (size_t size : {2u, 4u, 6u, 8u}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto m = testing::random_alternating(size, rng);
            MultiPoly pf = pfaffian(testing::to_constant_matrix(m));
            Int value = pf.is_zero() ? Int(0) : Int(pf.leading_coeff().get_num());
            CHECK(value * value == testing::bareiss_det(m));
        }
    }
}

TEST_CASE("expansion along row 1 and along the last row agree") {
    std::mt19937_64 rng(13);
    for (size_t size : {2u, 4u, 6u}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto m = testing::to_constant_matrix(testing::random_alternating(size, rng));
            CHECK(pfaffian(m) == testing::pfaffian_last_row(m));
        }
    }
    // Also on polynomial entries.
    auto T = build_T(small_instance(2, 5));
    CHECK(pfaffian(T) == testing::pfaffian_last_row(T));
}

TEST_CASE("build_T block structure") {
    auto rho = small_instance(1, 3);
    auto T = build_T(rho);
    REQUIRE(T.size() == 3);
    CHECK(T[0][2] == rho.entry(0, 2).to_poly());
    CHECK(T[1][2] == rho.entry(1, 2).to_poly());
    CHECK(T[2][2].is_zero());
    CHECK(T[2][0] == -rho.entry(0, 2).to_poly());
    for (size_t i = 0; i < 3; ++i) {
        CHECK(T[i][i].is_zero());
        for (size_t j = 0; j < 3; ++j) CHECK(T[i][j] == -T[j][i]);
    }
}

TEST_CASE("X block invariants are validated") {
    std::vector<std::vector<LinearForm>> bad(2);
    bad[0] = {form({1, 0}), form({0, 1}), form({1, 1})};
    bad[1] = {form({0, 1}), form({0, 0}), form({1, 1})};
    CHECK_THROWS(AlmostAlternatingMatrix({2, 1}, 2, std::move(bad)));
}

TEST_CASE("ideal generators for small shapes") {
    // n=2, t=1: the only even principal submatrix containing X is X itself.
    auto g21 = ideal_generators(small_instance(1, 3));
    REQUIRE(g21.records.size() == 1);
    CHECK(g21.records[0].column_subset.empty());
    CHECK(g21.records[0].pfaffian == MultiPoly::variable(3, 0));
    CHECK(g21.records[0].degree == 1);

    // n=2, t=2: Pf(X) = x and the 4x4 Pfaffian y12*y21 - y11*y22.
    auto rho = small_instance(2, 5);
    auto g22 = ideal_generators(rho);
    REQUIRE(g22.records.size() == 2);
    CHECK(g22.records[0].degree == 1);
    CHECK(g22.records[1].degree == 2);
    CHECK(g22.records[1].column_subset == std::vector<long>{3, 4});
    MultiPoly expected = rho.entry(0, 3).to_poly() * rho.entry(1, 2).to_poly() -
                         rho.entry(0, 2).to_poly() * rho.entry(1, 3).to_poly();
    CHECK(g22.records[1].pfaffian == expected);

    // n=3, t=3: three generators of degree 2 and one of degree 3.
    auto g33 = ideal_generators(random_generic_instance({3, 3}, 5, 42));
    REQUIRE(g33.records.size() == 4);
    long deg2 = 0, deg3 = 0;
    for (const auto& r : g33.records) {
        if (r.degree == 2) ++deg2;
        if (r.degree == 3) ++deg3;
    }
    CHECK(deg2 == 3);
    CHECK(deg3 == 1);
}

TEST_CASE("random instances are deterministic and well formed") {
    auto a = random_generic_instance({3, 2}, 4, 99);
    auto b = random_generic_instance({3, 2}, 4, 99);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 5; ++j) CHECK(a.entry(i, j) == b.entry(i, j));
    auto c = random_generic_instance({3, 2}, 4, 100);
    bool all_equal = true;
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 5; ++j)
            if (!(a.entry(i, j) == c.entry(i, j))) all_equal = false;
    CHECK(!all_equal);
}

TEST_CASE("generators are bihomogeneous: |S| factors from Y") {
    // Tag variables: X entries use x1..x3, Y entries use x4..x6.
    const int dim = 6;
    std::mt19937_64 rng(5);
    auto rand_form = [&](int lo, int hi) {
        LinearForm f;
        f.coeffs.assign(dim, Rat(0));
        for (int j = lo; j < hi; ++j)
            f.coeffs[static_cast<size_t>(j)] = static_cast<long>(rng() % 7) - 3;
        return f;
    };
    const long n = 3, t = 3;
    std::vector<std::vector<LinearForm>> entries(
        static_cast<size_t>(n),
        std::vector<LinearForm>(static_cast<size_t>(n + t), LinearForm{std::vector<Rat>(dim, Rat(0))}));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            entries[i][j] = rand_form(0, 3);
            entries[j][i] = -entries[i][j];
        }
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 3; j < 6; ++j) entries[i][j] = rand_form(3, 6);
    AlmostAlternatingMatrix rho({n, t}, dim, std::move(entries));

    for (const auto& rec : ideal_generators(rho).records) {
        const long s_size = static_cast<long>(rec.column_subset.size());
        for (const auto& [e, c] : rec.pfaffian.terms()) {
            long ydeg = e[3] + e[4] + e[5];
            CHECK(ydeg == s_size);
            CHECK(total_degree(e) == rec.degree);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vbs/linalg.hpp"

#include <Eigen/Dense>

#include <random>

using namespace vbs;

namespace {

SparseVec row(std::initializer_list<std::pair<int, Rational>> entries) {
    SparseVec v;
    for (const auto& [i, x] : entries)
        if (x != 0) v[{i}] = x;
    return v;
}

}  // namespace

TEST_CASE("ranks of hand-built matrices") {
    CHECK(rank_fraction_free({}) == 0);
    CHECK(rank_fraction_free({SparseVec{}}) == 0);

    std::vector<SparseVec> rows = {
        row({{0, 1}, {1, 2}}),
        row({{0, 2}, {1, 4}}),  // scalar multiple
        row({{2, 1}}),
    };
    CHECK(rank_fraction_free(rows) == 2);

    rows = {
        row({{0, Rational(1) / 2}, {1, Rational(1) / 3}}),
        row({{1, Rational(2) / 7}, {2, 1}}),
        row({{0, Rational(3) / 2}, {1, Rational(1) + Rational(2) / 7 * 3}, {2, 3}}),  // r0*3 + r1*3
        row({{3, Rational(-5)}}),
    };
    CHECK(rank_fraction_free(rows) == 3);

    // identity plus a dense rank-1 tail
    rows.clear();
    for (int i = 0; i < 5; ++i) rows.push_back(row({{i, 1}}));
    rows.push_back(row({{0, 7}, {1, 7}, {2, 7}, {3, 7}, {4, 7}}));
    CHECK(rank_fraction_free(rows) == 5);
}

TEST_CASE("random matrices agree with a float LU oracle") {
    std::mt19937 gen(20240817);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> rk(0, 4);

    for (int trial = 0; trial < 40; ++trial) {
        int m = 4 + trial % 3, n = 4 + (trial / 3) % 3, r = std::min({rk(gen), m, n});
        // build an m x n matrix of rank exactly r as a product of random factors
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
        std::vector<SparseVec> rows(m);
        for (int k = 0; k < r; ++k) {
            std::vector<Rational> u(m), v(n);
            for (int i = 0; i < m; ++i) u[i] = Rational(num(gen)) / den(gen);
            for (int j = 0; j < n; ++j) v[j] = Rational(num(gen)) / den(gen);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational add = u[i] * v[j];
                    if (add == 0) continue;
                    rows[i][{j}] += add;
                    if (rows[i][{j}] == 0) rows[i].erase({j});
                    a(i, j) += to_double(add);
                }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        lu.setThreshold(1e-10);
        CHECK(rank_fraction_free(rows) == lu.rank());
    }
}

TEST_CASE("nullspace vectors really annihilate the columns") {
    std::vector<SparseVec> cols = {
        row({{0, 1}, {1, 1}}),
        row({{0, 2}, {1, 2}}),
        row({{0, 1}, {2, 1}}),
        row({{1, Rational(1) / 3}, {2, Rational(-1) / 3}}),
    };
    // col1 = 2*col0, col3 = (col0 - col2)/3: two relations
    auto basis = nullspace_of_columns(cols);
    REQUIRE(basis.size() == 2);
    for (const auto& x : basis) {
        REQUIRE(x.size() == cols.size());
        SparseVec combo;
        for (size_t i = 0; i < cols.size(); ++i)
            for (const auto& [key, val] : cols[i]) {
                combo[key] += x[i] * val;
                if (combo[key] == 0) combo.erase(key);
            }
        CHECK(combo.empty());
    }
    // the two basis vectors must be independent
    std::vector<SparseVec> as_rows;
    for (const auto& x : basis) {
        SparseVec r;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) r[{static_cast<int>(i)}] = x[i];
        as_rows.push_back(std::move(r));
    }
    CHECK(rank_fraction_free(as_rows) == 2);

    CHECK(nullspace_of_columns({row({{0, 1}}), row({{1, 1}})}).empty());
}

TEST_CASE("span membership") {
    SparseVec c0 = row({{0, 1}, {1, 1}});
    SparseVec c1 = row({{1, 1}, {2, 1}});
    SparseVec inside = row({{0, Rational(2) / 3}, {1, Rational(1) / 6}, {2, Rational(-1) / 2}});
    SparseVec outside = row({{0, 1}, {2, 1}, {3, 1}});
    SparseVec zero;

    std::vector<const SparseVec*> cols = {&c0, &c1};
    CHECK(in_span(cols, inside));   // (2/3) c0 - (1/2) c1
    CHECK(in_span(cols, zero));
    CHECK(!in_span(cols, outside));
    CHECK(!in_span({}, c0));
    CHECK(in_span({}, zero));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vbs/density.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace vbs;

namespace {

HalfInt h(long t) { return HalfInt::from_twice(t); }

using Spectrum = std::map<long, Rational>;  // twice J -> eigenvalue

Spectrum as_map(const BlockSpectrum& s) {
    Spectrum out;
    for (const auto& [J, lam] : s.eigenvalues) out[J.twice()] = lam;
    return out;
}

Rational trace_of_square(const BlockOperator& rho) {
    // tr rho^2 = sum_{P,P'} rho(P,P') w(P') rho(P',P) w(P), straight from the
    // metric convention; written out here independently of BlockSpectrum
    Rational s = 0;
    for (const auto& [key, val] : rho.entries()) {
        Rational w1 = Rational(config_weight(rho.space(), key.first));
        Rational w2 = Rational(config_weight(rho.space(), key.second));
        s += val * w2 * rho.entry(key.second, key.first) * w1;
    }
    return s;
}

}  // namespace

TEST_CASE("reduced density matrix basics") {
    ChainSpec c = chain_from_bonds({1, 1, 1, 1, 1});
    BlockSpec b = block(c, 2, 2);
    BlockOperator rho = reduced_density_matrix(c, b);

    CHECK(rho.space().full());
    CHECK(rho.trace() == 1);
    for (const auto& [key, val] : rho.entries()) {
        CHECK(rho.entry(key.second, key.first) == val);  // symmetric
        CHECK(rho.space().sz_twice(key.first) == rho.space().sz_twice(key.second));
    }
}

TEST_CASE("environment summation shortcut agrees with the honest partial trace") {
    std::vector<std::pair<std::vector<long>, std::pair<int, int>>> cases = {
        {{1, 1, 1, 1, 1}, {1, 2}}, {{1, 1, 1, 1, 1}, {2, 3}}, {{1, 2, 2, 1}, {2, 2}},
        {{1, 2, 2, 1}, {1, 3}},    {{1, 2, 2, 2, 1}, {1, 4}}, {{2, 2, 2, 2, 2}, {2, 2}},
        {{1, 1, 1, 1, 1}, {2, 1}}};
    for (const auto& [bonds, kl] : cases) {
        CAPTURE(bonds);
        CAPTURE(kl.first);
        ChainSpec c = chain_from_bonds(bonds);
        BlockSpec b = block(c, kl.first, kl.second);
        CHECK(reduced_density_matrix(c, b) == density_from_boundary_sum(c, b));
    }
}

TEST_CASE("the block operator ignores everything outside the block") {
    ChainSpec c8 = chain_from_bonds({1, 1, 1, 1, 1, 1, 1});  // six bulk spin-1 sites
    BlockOperator left = density_from_boundary_sum(c8, block(c8, 1, 2));
    BlockOperator mid = density_from_boundary_sum(c8, block(c8, 3, 2));
    CHECK(left == mid);

    // same profile inside a different chain entirely
    ChainSpec c5 = chain_from_bonds({1, 1, 1, 1});
    CHECK(left == density_from_boundary_sum(c5, block(c5, 2, 2)));
}

TEST_CASE("peeled spectra match the frozen values") {
    ChainSpec c = chain_from_bonds({1, 1, 1, 1, 1, 1, 1});
    auto peel = [&](const ChainSpec& ch, int k, int l) {
        BlockSpec b = block(ch, k, l);
        return as_map(spectrum_by_peeling(reduced_density_matrix(ch, b), b));
    };

    CHECK(peel(c, 1, 2) == Spectrum{{0, Rational(1) / 3}, {2, Rational(2) / 9}});
    CHECK(peel(c, 1, 3) == Spectrum{{0, Rational(2) / 9}, {2, Rational(7) / 27}});
    CHECK(peel(c, 2, 4) == Spectrum{{0, Rational(7) / 27}, {2, Rational(20) / 81}});
    CHECK(peel(c, 1, 1) == Spectrum{{0, 0}, {2, Rational(1) / 3}});

    ChainSpec c5 = chain_from_bonds({1, 2, 2, 1});
    CHECK(peel(c5, 2, 2) == Spectrum{{1, Rational(1) / 4}, {3, Rational(1) / 8}});
    CHECK(peel(c5, 1, 2) == Spectrum{{1, Rational(1) / 4}, {3, Rational(1) / 8}});
    CHECK(peel(c5, 1, 3) == Spectrum{{0, Rational(3) / 16}, {2, Rational(13) / 48}});

    ChainSpec c6 = chain_from_bonds({1, 2, 2, 2, 1});
    CHECK(peel(c6, 1, 4) == Spectrum{{0, Rational(9) / 32}, {2, Rational(23) / 96}});
    CHECK(peel(c6, 2, 2) ==
          Spectrum{{0, Rational(1) / 5}, {2, Rational(3) / 20}, {4, Rational(7) / 100}});

    ChainSpec s2 = chain_from_bonds({2, 2, 2, 2, 2});
    CHECK(peel(s2, 1, 2) ==
          Spectrum{{0, Rational(1) / 5}, {2, Rational(3) / 20}, {4, Rational(7) / 100}});
    CHECK(peel(s2, 2, 3) ==
          Spectrum{{0, Rational(7) / 100}, {2, Rational(9) / 100}, {4, Rational(33) / 250}});
}

TEST_CASE("peeling agrees with a float eigensolver") {
    std::vector<std::pair<std::vector<long>, std::pair<int, int>>> cases = {
        {{1, 1, 1, 1, 1}, {2, 2}}, {{1, 1, 1, 1, 1}, {1, 4}}, {{1, 2, 2, 1}, {2, 2}},
        {{2, 2, 2, 2, 2}, {2, 2}}};
    for (const auto& [bonds, kl] : cases) {
        CAPTURE(bonds);
        ChainSpec c = chain_from_bonds(bonds);
        BlockSpec b = block(c, kl.first, kl.second);
        BlockOperator rho = reduced_density_matrix(c, b);

        std::vector<double> want;
        for (const auto& [J, lam] : spectrum_by_peeling(rho, b).eigenvalues)
            want.insert(want.end(), static_cast<size_t>(J.multiplicity()), to_double(lam));
        std::sort(want.begin(), want.end());

        std::vector<double> got = oracle::sym_eigenvalues(oracle::orthonormal_dense(rho));
        // the dense matrix also has its null directions; keep the top entries
        REQUIRE(got.size() >= want.size());
        got.erase(got.begin(), got.end() - static_cast<long>(want.size()));
        for (size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i] <= got[i + 1]);
        for (size_t i = 0; i < want.size(); ++i)
            CHECK(std::abs(got[i] - want[i]) < 1e-10);
        // and everything below the kept tail is numerically zero
        auto all = oracle::sym_eigenvalues(oracle::orthonormal_dense(rho));
        for (size_t i = 0; i + want.size() < all.size(); ++i) CHECK(std::abs(all[i]) < 1e-10);
    }
}

TEST_CASE("sector traces stack the eigenvalues from the top") {
    ChainSpec c5 = chain_from_bonds({1, 2, 2, 1});
    BlockSpec b = block(c5, 2, 2);
    BlockOperator rho = reduced_density_matrix(c5, b);
    // sector M holds sum_{J >= |M|} Lambda(J)
    CHECK(sector_trace(rho, h(3)) == Rational(1) / 8);
    CHECK(sector_trace(rho, h(-3)) == Rational(1) / 8);
    CHECK(sector_trace(rho, h(1)) == Rational(1) / 8 + Rational(1) / 4);
    CHECK(sector_trace(rho, h(5)) == 0);
}

TEST_CASE("purity equals the trace of the square") {
    for (auto [bonds, kl] : std::vector<std::pair<std::vector<long>, std::pair<int, int>>>{
             {{1, 1, 1, 1, 1}, {2, 2}}, {{1, 2, 2, 1}, {2, 2}}}) {
        ChainSpec c = chain_from_bonds(bonds);
        BlockSpec b = block(c, kl.first, kl.second);
        BlockOperator rho = reduced_density_matrix(c, b);
        CHECK(spectrum_by_peeling(rho, b).purity() == trace_of_square(rho));
    }
}

TEST_CASE("projector structure of the density matrix") {
    std::vector<std::pair<std::vector<long>, std::pair<int, int>>> cases = {
        {{1, 1, 1, 1, 1}, {2, 2}}, {{1, 2, 2, 1}, {2, 2}}, {{1, 2, 2, 1}, {1, 3}},
        {{1, 2, 2, 2, 1}, {2, 2}}, {{2, 2, 2, 2, 2}, {2, 2}}};
    for (const auto& [bonds, kl] : cases) {
        CAPTURE(bonds);
        CAPTURE(kl.first);
        ChainSpec c = chain_from_bonds(bonds);
        BlockSpec b = block(c, kl.first, kl.second);
        BlockOperator rho = reduced_density_matrix(c, b);
        ProjectorReport rep = verify_projector_structure(rho, c, b);
        CHECK(rep.ok());
        CHECK(rep.rank == b.degeneracy());
    }
}

TEST_CASE("a single site keeps the top multiplet only") {
    ChainSpec c = chain_from_bonds({1, 1, 1, 1, 1});
    BlockSpec b = block(c, 2, 1);
    BlockOperator rho = reduced_density_matrix(c, b);
    auto spec = spectrum_by_peeling(rho, b);
    CHECK(as_map(spec) == Spectrum{{0, 0}, {2, Rational(1) / 3}});

    // rank 3 < (M+1)(M+1) = 4: the dressings are not independent on one site
    ProjectorReport rep = verify_projector_structure(rho, c, b);
    CHECK(rep.rank == 3);
    CHECK(rep.expected_rank == 4);
    CHECK(!rep.ok());
}

TEST_CASE("everything orthogonal to the boundary span is annihilated") {
    ChainSpec c5 = chain_from_bonds({1, 2, 2, 1});
    BlockSpec b = block(c5, 2, 2);
    BlockOperator rho = reduced_density_matrix(c5, b);
    auto states = boundary_states(c5, b);

    // constraint columns: u_perp must satisfy <u_i, v>_w = 0 for every dressing
    auto cfgs = rho.space().all_configs();
    std::vector<SparseVec> cols(cfgs.size());
    for (size_t i = 0; i < cfgs.size(); ++i)
        for (size_t s = 0; s < states.size(); ++s) {
            auto it = states[s].terms().find(cfgs[i]);
            if (it == states[s].terms().end()) continue;
            cols[i][{static_cast<int>(s)}] =
                it->second * Rational(config_weight(rho.space(), cfgs[i]));
        }
    auto basis = nullspace_of_columns(cols);
    CHECK(basis.size() == cfgs.size() - static_cast<size_t>(b.degeneracy()));
    for (const auto& x : basis) {
        FockVector u(rho.space());
        for (size_t i = 0; i < cfgs.size(); ++i) u.add_term(cfgs[i], x[i]);
        CHECK(rho.apply(u).is_zero());
    }
}

TEST_CASE("tampering trips the peeling cross-checks") {
    ChainSpec c = chain_from_bonds({1, 1, 1, 1, 1});
    BlockSpec b = block(c, 2, 2);
    BlockOperator good = reduced_density_matrix(c, b);

    BlockOperator bad = good;                   // occupy a sector above the top spin
    bad.add_entry({2, 2}, {2, 2}, Rational(1) / 100);
    CHECK_THROWS_AS(spectrum_by_peeling(bad, b), ConsistencyError);

    BlockOperator skew = good;                  // break the Sz -> -Sz symmetry
    skew.add_entry({2, 1}, {2, 1}, Rational(1) / 100);
    CHECK_THROWS_AS(spectrum_by_peeling(skew, b), ConsistencyError);

    BlockOperator neg = good;                   // push a peeled difference negative
    neg.add_entry({2, 1}, {2, 1}, Rational(1) / 2);
    neg.add_entry({0, 1}, {0, 1}, Rational(1) / 2);
    CHECK_THROWS_AS(spectrum_by_peeling(neg, b), ConsistencyError);
}

TEST_CASE("entropy pair") {
    ChainSpec c = chain_from_bonds({1, 1, 1, 1, 1});
    BlockSpec b = block(c, 1, 2);
    auto spec = spectrum_by_peeling(reduced_density_matrix(c, b), b);

    auto [svn, s2] = entropies(spec, 2.0);
    // -(1/3) ln(1/3) - 3 * (2/9) ln(2/9)
    double want_vn = -std::log(1.0 / 3) / 3 - 2.0 / 3 * std::log(2.0 / 9);
    CHECK(svn == doctest::Approx(want_vn).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(-std::log(to_double(spec.purity()))).epsilon(1e-14));

    auto [svn2, shalf] = entropies(spec, 0.5);
    CHECK(svn2 == doctest::Approx(want_vn).epsilon(1e-14));
    double sum_half = std::sqrt(1.0 / 3) + 3 * std::sqrt(2.0 / 9);
    CHECK(shalf == doctest::Approx(2 * std::log(sum_half)).epsilon(1e-14));

    CHECK_THROWS_AS(spec.renyi_entropy(1.0), std::invalid_argument);
    CHECK_THROWS_AS(spec.renyi_entropy(0.0), std::invalid_argument);
    CHECK_THROWS_AS(spec.renyi_entropy(-2.0), std::invalid_argument);
}

#include <doctest.h>

#include <chrono>
#include <random>

#include "carry/classify.hpp"

using namespace carry;

TEST_CASE("sigma and witnesses") {
    CHECK(sigma(1) == 2);
    CHECK(sigma(7) == 8);
    CHECK(sigma(12) == 7);
    CHECK_THROWS(sigma(0));
    const auto w = achievable_witness(9, 14);
    REQUIRE(w.has_value());
    CHECK(w->first * w->second == 14);
    CHECK(w->first + w->second <= 9);
    CHECK_FALSE(achievable_witness(6, 7).has_value());
}

TEST_CASE("classify points") {
    CHECK(classify_point(6, 7).status == ModuliStatus::AMGMOnlyExcluded);
    CHECK(classify_point(5, 5).status == ModuliStatus::AMGMOnlyExcluded);
    CHECK(classify_point(6, 9).status == ModuliStatus::Achievable);
    CHECK(classify_point(3, 5).status == ModuliStatus::BelowAMGM);
    CHECK(classify_point(4, 0).status == ModuliStatus::Achievable);
    CHECK(to_string(ModuliStatus::AMGMOnlyExcluded) == "AMGMOnlyExcluded");
}

TEST_CASE("moduli rows") {
    const auto grid = moduli_space(12, 21);
    auto achievable_row = [&](long n) {
        std::vector<long> out;
        for (const auto& p : grid)
            if (p.base == n && p.status == ModuliStatus::Achievable) out.push_back(p.det);
        return out;
    };
    CHECK(achievable_row(5) == std::vector<long>{0, 1, 2, 3, 4, 6});
    CHECK(achievable_row(6) == std::vector<long>{0, 1, 2, 3, 4, 5, 6, 8, 9});
    CHECK(achievable_row(8) == std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16});
    for (const auto& p : grid) {
        if (p.status == ModuliStatus::Achievable) {
            REQUIRE(p.witness.has_value());
            CHECK(p.witness->first * p.witness->second == p.det);
        }
        CHECK((p.status == ModuliStatus::BelowAMGM) == (4 * p.det > p.base * p.base));
        if (p.det >= 1) CHECK((p.status == ModuliStatus::Achievable) == (sigma(p.det) <= p.base));
    }
}

TEST_CASE("Markov carry systems") {
    CHECK_THROWS(MarkovCarrySystem(Matrix::from_rows({{1, 1}, {1, 0}})));
    CHECK_THROWS(MarkovCarrySystem(Matrix::from_rows({{Rational(3, 2), 0}, {Rational(-1, 2), 1}})));
    CHECK_THROWS(MarkovCarrySystem::gen_prop_kill({1, 2}, {1, 2}, {1, 2}));
    const auto u = MarkovCarrySystem::uniform(3, 2);
    CHECK(u.states() == 3);
    CHECK(stochasticity_check(u));
    CHECK_FALSE(stochasticity_check(Matrix::from_rows({{2, 0}, {0, 3}})));
}

TEST_CASE("GEN/PROP/KILL example systems") {
    const auto a = MarkovCarrySystem::gen_prop_kill({1, 3}, {1, 3}, {1, 3});
    const auto b = MarkovCarrySystem::gen_prop_kill({1, 2}, {1, 4}, {1, 4});
    const auto c = MarkovCarrySystem::gen_prop_kill({1, 4}, {1, 2}, {1, 4});
    const auto d = MarkovCarrySystem::gen_prop_kill({1, 6}, {1, 2}, {1, 3});
    CHECK(a.charpoly() == Polynomial({Rational(1, 3), Rational(-4, 3), 1}));
    CHECK(c.charpoly() == Polynomial({Rational(1, 2), Rational(-3, 2), 1}));
    CHECK(classify_general(c, d));
    CHECK(shadow_equivalent_binary(c, d));
    CHECK_FALSE(classify_general(a, b));
    CHECK_FALSE(classify_general(a, c));
    CHECK_FALSE(shadow_equivalent_binary(a, c));
    const auto m = similarity_witness(c.matrix(), d.matrix());
    REQUIRE(m.has_value());
    CHECK(*m * c.matrix() == d.matrix() * *m);
    CHECK(determinant(*m) != Rational(0));
}

TEST_CASE("simple-spectrum hypothesis") {
    const MarkovCarrySystem id(Matrix::identity(2));
    CHECK_THROWS_AS(classify_general(id, id), HypothesisViolated);
}

TEST_CASE("shadow equivalence is an equivalence relation on binary chains") {
    std::vector<BinaryChain> chains;
    for (long n = 1; n <= 6; ++n)
        for (long g = 0; g <= n; ++g)
            for (long t = 0; t + g <= n; ++t) chains.push_back(BinaryChain::make(n, g, t, n - g - t));
    for (const auto& x : chains) {
        CHECK(shadow_equivalent_binary(x, x));
        for (const auto& y : chains) {
            const bool xy = shadow_equivalent_binary(x, y);
            CHECK(xy == shadow_equivalent_binary(y, x));
            if (!xy) continue;
            for (const auto& z : chains)
                if (shadow_equivalent_binary(y, z)) CHECK(shadow_equivalent_binary(x, z));
        }
    }
}

TEST_CASE("classify_general is an equivalence relation on random chains") {
    std::mt19937_64 rng(5);
    std::vector<MarkovCarrySystem> systems;
    for (int i = 0; i < 30; ++i) {
        const long q = std::uniform_int_distribution<long>(3, 6)(rng);
        const long g = std::uniform_int_distribution<long>(1, q - 2)(rng);
        const long t = std::uniform_int_distribution<long>(1, q - g - 1)(rng);
        systems.push_back(MarkovCarrySystem::gen_prop_kill({g, q}, {t, q}, {q - g - t, q}));
    }
    for (const auto& x : systems) {
        CHECK(classify_general(x, x));
        for (const auto& y : systems) {
            CHECK(classify_general(x, y) == classify_general(y, x));
            for (const auto& z : systems)
                if (classify_general(x, y) && classify_general(y, z)) CHECK(classify_general(x, z));
        }
    }
}

TEST_CASE("multiplicative shadow search") {
    const auto start = std::chrono::steady_clock::now();
    CHECK(mult_shadow_search(2, 2).empty());
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
    CHECK_FALSE(mult_shadow_search(2, 1).empty());
    CHECK_THROWS(mult_shadow_search(3, 2));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "niho/theory.hpp"

using namespace niho;

namespace {

BigInt bp(uint64_t b, unsigned e) {
    BigInt acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= b;
    return acc;
}

std::map<uint64_t, BigInt> freq_of(const WeightDistribution& d) { return d.freq; }

}  // namespace

TEST_CASE("N_k base cases and closed forms on a grid") {
    for (uint64_t r : {4, 8, 9, 16, 25, 27}) {
        for (uint64_t e = 1; e <= r + 1; ++e) {
            if ((r + 1) % e) continue;
            INFO("r=", r, " e=", e);
            BigInt R = r, E = e;
            CHECK(N_k(r, e, 0) == 1);
            CHECK(N_k(r, e, 1) == 0);
            CHECK(N_k(r, e, 2) == E * (R * R - 1));
            CHECK(N_k(r, e, 3) == E * E * (R - 2) * (R * R - 1));
            CHECK(N_k(r, e, 4) == E * E * (R * R - 1) * ((E + 3) * R * R - 6 * E * R + 6 * E - 3));
        }
    }
}

TEST_CASE("theoretical weights") {
    CodeSpec s{1, 2, 2, 2, 1, 3, 1};
    DerivedParams d = derive(s);
    CHECK(theoretical_weights(s, d) == std::vector<uint64_t>{68, 64, 60});

    CodeSpec s3{1, 3, 1, 3, 2, 1, 1};
    DerivedParams d3 = derive(s3);
    CHECK(theoretical_weights(s3, d3) == std::vector<uint64_t>{126, 117, 108});

    // degenerate endpoint: je = r+1 makes the weight formula vanish
    // (q-1)(r^2 - (r+1-1)r) = 0
    CHECK((d.q - 1) * (d.r2 - ((d.r + 1) - 1) * d.r) == 0);
}

TEST_CASE("solve_distribution reproduces the five-weight code over GF(4)") {
    CodeSpec s{1, 2, 2, 2, 1, 3, 2};
    WeightDistribution dist = solve_distribution(s, derive(s));
    std::map<uint64_t, BigInt> want{{0, 1},     {52, 35700},  {56, 30600},
                                    {60, 250920}, {64, 377655}, {68, 353700}};
    CHECK(freq_of(dist) == want);
    CHECK(dist.min_distance() == 52);
    CHECK(dist.enumerator_string() ==
          "1+35700Y^{52}+30600Y^{56}+250920Y^{60}+377655Y^{64}+353700Y^{68}");
}

TEST_CASE("solve_distribution: one-weight code and zero-frequency diagnostics") {
    CodeSpec s{2, 2, 2, 2, 2, 6, 1};
    WeightDistribution dist = solve_distribution(s, derive(s));
    std::map<uint64_t, BigInt> want{{0, 1}, {64, 255}};
    CHECK(freq_of(dist) == want);
    CHECK(dist.zero_frequency_weights == std::vector<uint64_t>{68});
    CHECK(dist.enumerator_string() == "1+255Y^{64}");
}

TEST_CASE("solve_distribution rejects inadmissible specs") {
    CodeSpec s{1, 2, 2, 2, 1, 3, 9};
    CHECK_THROWS_AS(solve_distribution(s, derive(s)), std::invalid_argument);
}

TEST_CASE("corollary tables: spot values") {
    // family 2, t=1, e=1 over GF(4): single weight with frequency r^2-1
    CodeSpec s21{2, 2, 2, 2, 2, 6, 1};
    WeightDistribution t2 = corollary_tables(s21, derive(s21));
    CHECK(freq_of(t2) == std::map<uint64_t, BigInt>{{0, 1}, {64, 255}});

    // family 1 middle frequency at e=1, r=16 simplifies to r^2-1 = 255
    CodeSpec s11{1, 2, 2, 2, 1, 3, 1};
    WeightDistribution t1 = corollary_tables(s11, derive(s11));
    CHECK(t1.freq.at(64) == 255);
    CHECK(freq_of(t1) ==
          std::map<uint64_t, BigInt>{{0, 1}, {60, 2040}, {64, 255}, {68, 1800}});

    // family 2, t=2 over GF(8)
    CodeSpec s22{2, 2, 3, 1, 2, 14, 2};
    WeightDistribution t3 = corollary_tables(s22, derive(s22));
    CHECK(freq_of(t3) ==
          std::map<uint64_t, BigInt>{{0, 1}, {6, 588}, {7, 504}, {8, 1827}, {9, 1176}});

    CodeSpec bad{1, 2, 2, 2, 1, 3, 2};
    CHECK_THROWS_AS(corollary_tables(bad, derive(bad)), std::invalid_argument);
}

TEST_CASE("moment system residual and totals on random admissible specs") {
    std::mt19937_64 rng(42);
    const uint64_t primes[] = {2, 3, 5, 7};
    unsigned done = 0;
    while (done < 40) {
        CodeSpec s;
        s.family = 1 + static_cast<int>(rng() % 2);
        s.p = primes[rng() % 4];
        s.l = 1 + static_cast<unsigned>(rng() % 2);
        s.m = 1 + static_cast<unsigned>(rng() % 3);
        s.h = static_cast<long long>(rng() % 9) - 4;
        s.f = static_cast<long long>(rng() % 17) - 8;
        s.t = 1 + static_cast<unsigned>(rng() % 5);
        if (2.0 * s.l * s.m * std::log2(static_cast<double>(s.p)) > 20) continue;
        DerivedParams d = derive(s);
        if (!d.exponents_valid || !check_conditions(s, d).pass()) continue;
        ++done;
        INFO("spec: family=", s.family, " p=", s.p, " l=", s.l, " m=", s.m, " h=", s.h, " f=", s.f, " t=", s.t);

        MomentSystem sys = solve_moment_system(s, d);
        // residual: sum_j x_j^i mu_j == b_i, exactly
        for (unsigned i = 0; i < sys.size; ++i) {
            BigInt lhs = 0;
            for (unsigned j = 0; j < sys.size; ++j) {
                BigInt xp = 1;
                for (unsigned rep = 0; rep < i; ++rep) xp *= sys.nodes[j];
                lhs += xp * sys.mu[j];
            }
            CHECK(lhs == sys.b[i]);
        }
        BigInt total = 0;
        for (const auto& mu : sys.mu) {
            CHECK(mu >= 0);
            total += mu;
        }
        CHECK(total == bp(d.q, d.dim) - 1);

        WeightDistribution dist = solve_distribution(s, d);
        CHECK(dist.total() == bp(d.q, d.dim));
        unsigned bound = s.family == 1 ? 2 * s.t + 1 : 2 * s.t;
        CHECK(dist.freq.size() - 1 <= bound);

        // closed-form tables agree where defined
        if (s.t == 1 || (s.family == 2 && s.t == 2)) {
            WeightDistribution tab = corollary_tables(s, d);
            CHECK(dist.same_distribution(tab));
        }
    }
}

TEST_CASE("large t: 17x17 moment system stays exact") {
    CodeSpec s{1, 2, 2, 3, 1, 1, 8};  // q=4, r=64, e=1, s=17
    DerivedParams d = derive(s);
    REQUIRE(check_conditions(s, d).pass());
    MomentSystem sys = solve_moment_system(s, d);
    BigInt total = 0;
    for (const auto& mu : sys.mu) {
        CHECK(mu >= 0);
        total += mu;
    }
    CHECK(total == bp(d.q, d.dim) - 1);
    for (unsigned i = 0; i < sys.size; ++i) {
        BigInt lhs = 0;
        for (unsigned j = 0; j < sys.size; ++j) {
            BigInt xp = 1;
            for (unsigned rep = 0; rep < i; ++rep) xp *= sys.nodes[j];
            lhs += xp * sys.mu[j];
        }
        CHECK(lhs == sys.b[i]);
    }
    WeightDistribution dist = solve_distribution(s, d);
    CHECK(dist.total() == bp(d.q, d.dim));
    CHECK(dist.freq.size() - 1 <= 17);
}

TEST_CASE("griesmer bound") {
    CHECK(griesmer_bound(3, 7, 8) == 9);       // 7 + 1 + 1
    CHECK(griesmer_bound(5, 1, 3) == 5);       // d = 1: bound = k
    CHECK(griesmer_bound(6, 60, 4) == 82);     // 60 + 15 + 4 + 1 + 1 + 1
    GriesmerReport rep = griesmer_check(9, 3, 7, 8);
    CHECK(rep.bound == 9);
    CHECK(rep.meets);
    CHECK(rep.admissible);
    CHECK(!griesmer_check(85, 6, 60, 4).meets);
    CHECK(griesmer_check(85, 6, 60, 4).admissible);
}

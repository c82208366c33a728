#include <catch2/catch_amalgamated.hpp>

#include "cbc/bounds.hpp"
#include "cbc/codes.hpp"

using namespace cbc;

TEST_CASE("minimal_s") {
    // (n,k,m) of C_TD(q): least s is q
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        long long n = static_cast<long long>(q) * q + q - 1;
        long long k = static_cast<long long>(q) * q - q - 1;
        long long m = static_cast<long long>(q) * q - q;
        CHECK(minimal_s(n, k, m) == q);
    }
    CHECK(minimal_s(1, 5, 8) == 1);
    CHECK_THROWS_AS(minimal_s(0, 5, 8), OutOfRange);
}

TEST_CASE("threshold U is nondecreasing in s") {
    for (auto [k, m] : {std::pair<long long, long long>{5, 6}, {11, 12}, {19, 20},
                        {41, 42}, {71, 72}}) {
        BigRat prev = storage_threshold(m, k, 1);
        for (long long s = 2; s <= k - 1; ++s) {
            BigRat cur = storage_threshold(m, k, s);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("storage_lower reproduces N of C_TD(q)") {
    CHECK(storage_lower(11, 5, 6) == 24);
    CHECK(storage_lower(19, 11, 12) == 60);
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        long long n = static_cast<long long>(q) * q + q - 1;
        long long k = static_cast<long long>(q) * q - q - 1;
        long long m = static_cast<long long>(q) * q - q;
        CHECK(storage_lower(n, k, m) == static_cast<long long>(q) * q * q - q);
    }
}

TEST_CASE("storage_lower degenerates to n when m = n and s = 1") {
    for (long long n : {5, 7, 9}) {
        long long k = 3;
        CHECK(minimal_s(n, k, n) == 1);
        CHECK(storage_lower(n, k, n) == n);
    }
}

TEST_CASE("uniform_upper examples") {
    CHECK(uniform_upper(9, 3, 9) == 12);
    CHECK(uniform_upper(12, 3, 11) == 18);  // gap vs C_1(4)'s n=16 is q-2=2
    CHECK(uniform_upper(11, 3, 11) == 13);
    CHECK_THROWS_AS(uniform_upper(5, 0, 4), OutOfRange);
    CHECK_THROWS_AS(uniform_upper(5, 6, 7), OutOfRange);
}

TEST_CASE("uniform gap identities over the prime-power range") {
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        const long long k = static_cast<long long>(q) * q - q - 1;
        const long long m = static_cast<long long>(q) * q - q;
        // affine: bound met exactly
        CHECK(uniform_upper(static_cast<long long>(q) * q, q,
                            static_cast<long long>(q) * q) ==
              static_cast<long long>(q) * (q + 1));
        // C_1: gap q-2
        CHECK(uniform_upper(m, q - 1, k) - BigInt(static_cast<long long>(q) * q) == q - 2);
        if (q >= 4) {
            // C_2: gap 1
            CHECK(uniform_upper(m, q - 1, k) -
                      BigInt(static_cast<long long>(q) * q + q - 3) == 1);
            // C_3: gap 0
            CHECK(uniform_upper(k, q - 1, k) == static_cast<long long>(q) * q - 3);
        }
    }
}

TEST_CASE("johnson_upper_A") {
    CHECK(johnson_upper_A(6, 2) == 3);
    CHECK(johnson_upper_A(5, 0) == 1);
    CHECK(johnson_upper_A(5, 1) == 1);
    CHECK(johnson_upper_A(8, 8) == 1);  // symmetry to w=0
    for (int m = 8; m <= 20; ++m) {
        // chain bound: A(m,4,4) <= floor(m/4 floor((m-1)/3 floor((m-2)/2)))
        BigInt inner = BigInt((m - 2) / 2);
        inner = BigInt(m - 1) * inner / 3;
        inner = BigInt(m) * inner / 4;
        CHECK(johnson_upper_A(m, 4) <= inner);
    }
}

TEST_CASE("new_range_check") {
    BoundReport r3 = new_range_check(3);
    CHECK(r3.verdict == "holds");
    CHECK(r3.achieved == 11);
    CHECK(r3.bound == 14);  // C(6,3) - 2*3 with A(6,4,2)=3

    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        CHECK(new_range_check(q).verdict == "holds");
    }

    // q=5: right side at least (1/12)(q^2-q)(q^2-q-1)(q^2-q-2)
    BoundReport r5 = new_range_check(5);
    BigInt cube = BigInt(20) * 19 * 18 / 12;
    CHECK(r5.bound >= cube);
}

TEST_CASE("table_exact_N regimes") {
    CHECK(table_exact_N(10, 3, 3) == BigInt(24));   // m=k: kn - k(k-1)
    CHECK(table_exact_N(7, 3, 7) == BigInt(7));     // m=n
    CHECK(table_exact_N(8, 3, 7) == BigInt(10));    // n=m+1: m+k
    // n = m+2: integer output on both branches, continuity at the case split
    for (long long k = 3; k <= 8; ++k)
        for (long long m = k + 1; m <= k + 12; ++m) {
            auto v = table_exact_N(m + 2, k, m);
            REQUIRE(v.has_value());
            CHECK(*v > 0);
        }
    // large-n regime
    CHECK(table_exact_N(100, 3, 4) == BigInt(3) * 100 - 2 * 6);
    // middle regime formula
    {
        long long k = 4, m = 6, n = 20;  // C(6,2)=15 <= 20 <= 3*C(6,3)=60
        BigInt expect = BigInt(n) * 3 - BigInt((3 * 20 - n) / (m - k + 1));
        CHECK(table_exact_N(n, k, m) == expect);
    }
    // outside all regimes
    CHECK_FALSE(table_exact_N(10, 9, 50).has_value());
}

TEST_CASE("optimality_report on the constructed families") {
    for (int q : {3, 4, 5}) {
        CAPTURE(q);
        auto reps = optimality_report(construct_ctd(q), theoretical_k("ctd", q));
        REQUIRE(reps.size() == 1);
        CHECK(reps[0].name == "storage_lower");
        CHECK(reps[0].gap == 0);
        CHECK(reps[0].verdict == "optimal");

        auto arep = optimality_report(construct_affine_cbc(q), theoretical_k("affine", q));
        CHECK(arep[0].gap == 0);
    }
    for (int q : {4, 5}) {
        CAPTURE(q);
        CHECK(optimality_report(construct_c1(q), theoretical_k("c1", q))[0].gap == q - 2);
        CHECK(optimality_report(construct_c2(q), theoretical_k("c2", q))[0].gap == 1);
        CHECK(optimality_report(construct_c3(q), theoretical_k("c3", q))[0].gap == 0);
    }
}

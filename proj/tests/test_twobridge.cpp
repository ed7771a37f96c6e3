#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "concordia/goeritz.hpp"
#include "concordia/twobridge.hpp"

using namespace concordia;

TEST_CASE("continued fractions") {
    CHECK(cont_frac(10, 3) == std::vector<long long>{3, 3});
    CHECK(cont_frac(8, 1) == std::vector<long long>{8});
    CHECK(cont_frac(10, 1) == std::vector<long long>{10});
    for (long long q : {3LL, 5LL, 7LL})
        CHECK(cont_frac(q * q + 1, q) == std::vector<long long>{q, q});
    // round trip
    for (long long p = 2; p <= 40; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto cf = cont_frac(p, q);
            for (long long a : cf) CHECK(a >= 1);
            long long num = cf.back(), den = 1;
            for (size_t i = cf.size() - 1; i-- > 0;) {
                long long nn = cf[i] * num + den;
                den = num;
                num = nn;
            }
            CHECK(num == p);
            CHECK(den == q);
        }
    CHECK_THROWS_AS(cont_frac(10, 4), precondition_error);
    CHECK_THROWS_AS(cont_frac(3, 3), precondition_error);
}

TEST_CASE("two-bridge diagrams: determinant and component count, p <= 60") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LinkDiagram d = twobridge_diagram(p, q);
            CHECK(determinant(d).to_ll() == p);
            CHECK(d.num_components() == (p % 2 == 0 ? 2 : 1));
            CHECK(split_pieces(d).size() == 1);
        }
}

TEST_CASE("two-bridge diagrams are alternating") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{
             {4, 1}, {10, 3}, {5, 2}, {12, 5}, {15, 4}, {9, 2}}) {
        LinkDiagram d = twobridge_diagram(p, q);
        Checkerboard cb = checkerboard(d);
        CHECK(cb.alternating);
    }
}

TEST_CASE("small two-bridge anchors S(4,1), S(10,3), S(3,1)") {
    CHECK(twobridge_diagram(4, 1).num_components() == 2);
    CHECK(determinant(twobridge_diagram(4, 1)).to_ll() == 4);
    CHECK(twobridge_diagram(10, 3).num_components() == 2);
    CHECK(determinant(twobridge_diagram(10, 3)).to_ll() == 10);
    CHECK(twobridge_diagram(3, 1).num_components() == 1);
    CHECK(determinant(twobridge_diagram(3, 1)).to_ll() == 3);
}

TEST_CASE("square classes") {
    CHECK(square_class(50) == std::vector<long long>{2});
    CHECK(square_class(10) == std::vector<long long>{2, 5});
    CHECK(square_class(36) == std::vector<long long>{});
    CHECK(square_class(1) == std::vector<long long>{});
    CHECK_THROWS_AS(square_class(0), precondition_error);
    CHECK_THROWS_AS(square_class((1LL << 33)), precondition_error);
    // group law: class(a*b) = symmetric difference of classes
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> dist(1, 4000);
    for (int it = 0; it < 100; ++it) {
        long long a = dist(rng), b = dist(rng);
        auto ca = square_class(a), cb = square_class(b), cab = square_class(a * b);
        std::vector<long long> sym;
        std::set_symmetric_difference(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                      std::back_inserter(sym));
        CHECK(cab == sym);
    }
}

TEST_CASE("tonelli-shanks") {
    for (long long p : {5LL, 13LL, 17LL, 29LL, 97LL, 101LL}) {
        long long x = tonelli_shanks(p - 1, p);  // sqrt(-1), p = 1 mod 4
        CHECK((x * x + 1) % p == 0);
    }
    CHECK_THROWS_AS(tonelli_shanks(2, 5), precondition_error);  // nonresidue
}

TEST_CASE("torsion witness anchors") {
    WitnessCertificate w1 = torsion_witness({3});
    CHECK(w1.p == 13);
    CHECK(w1.q == 5);
    CHECK(w1.verify());
    WitnessCertificate w2 = torsion_witness({3, 5, 7});
    CHECK(w2.p == 17);
    CHECK(w2.q == 13);
    CHECK(w2.verify());
    WitnessCertificate w3 = torsion_witness({});
    CHECK(w3.p == 5);
    CHECK(w3.q == 3);
    CHECK(w3.verify());
    CHECK_THROWS_AS(torsion_witness({4}), precondition_error);
}

TEST_CASE("torsion witness property: 50 random input sets") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<long long> val(0, 40);
    for (int it = 0; it < 50; ++it) {
        std::vector<long long> qs;
        int n = len(rng);
        for (int i = 0; i < n; ++i) qs.push_back(2 * val(rng) + 1);
        WitnessCertificate w = torsion_witness(qs);
        CHECK(w.verify());
        CHECK(w.p % 4 == 1);
        CHECK(is_prime(w.p));
        CHECK(w.q % 2 == 1);
        CHECK((w.q * w.q + 1) % w.p == 0);
        CHECK(((w.q * w.q + 1) / w.p) % w.p != 0);
        for (long long qi : qs) CHECK((qi * qi + 1) % w.p != 0);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "concordia/bigint.hpp"
#include "concordia/cyclotomic.hpp"
#include "concordia/matrix.hpp"
#include "concordia/poly.hpp"
#include "concordia/rational.hpp"

using namespace concordia;

TEST_CASE("bigint arithmetic agrees with long long on small values") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int it = 0; it < 500; ++it) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_ll() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_ll() == a % b);
        }
    }
}

TEST_CASE("bigint string round trip and big products") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-98765432109876543210");
    CHECK(a.to_string() == "123456789012345678901234567890");
    CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)).to_ll() == 21);
}

TEST_CASE("rational normalization") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.to_string() == "-3/4");
    CHECK((r + Rational(BigInt(3), BigInt(4))).is_zero());
    CHECK((Rational(1) / Rational(BigInt(3))).to_string() == "1/3");
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1).to_string() == "t - 1");
    CHECK(cyclotomic_poly(2).to_string() == "t + 1");
    CHECK(cyclotomic_poly(4).to_string() == "t^2 + 1");
    CHECK(cyclotomic_poly(6).to_string() == "t^2 - t + 1");
    CHECK(cyclotomic_poly(12).degree() == 4);
    CHECK(cyclotomic_poly(9).degree() == 6);
}

TEST_CASE("cyclotomic field arithmetic in Q(zeta_5)") {
    auto f = std::make_shared<CycloField>(5);
    Cyclo z = Cyclo::zeta_power(f, 1);
    Cyclo one = Cyclo::from_rational(f, Rational(1));
    // 1 + z + z^2 + z^3 + z^4 = 0
    Cyclo s = one;
    for (int k = 1; k < 5; ++k) s = s + Cyclo::zeta_power(f, k);
    CHECK(s.is_zero());
    // z * z^4 = 1
    CHECK((z * Cyclo::zeta_power(f, 4) - one).is_zero());
    // inverse
    Cyclo u = one + z;
    CHECK((u * u.inverse() - one).is_zero());
}

TEST_CASE("real sign certification") {
    auto f = std::make_shared<CycloField>(12);
    // 2*cos(2*pi/12) = zeta + zeta^-1 = sqrt(3) > 0
    Cyclo c = Cyclo::zeta_power(f, 1) + Cyclo::zeta_power(f, 11);
    CHECK(c.real_sign() == 1);
    // 2*cos(2*pi*5/12) = zeta^5 + zeta^7 = -sqrt(3) < 0
    Cyclo d = Cyclo::zeta_power(f, 5) + Cyclo::zeta_power(f, 7);
    CHECK(d.real_sign() == -1);
    Rational lo, hi;
    cos_pi_enclosure(1, 3, 20, lo, hi);  // cos(pi/3) = 1/2
    CHECK(lo < Rational(BigInt(1), BigInt(2)));
    CHECK(hi > Rational(BigInt(1), BigInt(2)));
    CHECK((hi - lo) < Rational(BigInt(1), BigInt(1000000)));
}

TEST_CASE("determinants and ranks") {
    IntMat m = {{1, 1, 1, 1}, {1, 2, 0, 0}, {1, 0, 4, 0}, {1, 0, 0, 6}};
    CHECK(mat_det(m).to_ll() == 4);
    CHECK(mat_rank(m) == 4);
    IntMat s = {{0, 2}, {2, 0}};
    auto sig = symmetric_signature(s);
    CHECK(sig.pos == 1);
    CHECK(sig.neg == 1);
    CHECK(sig.nul == 0);
    IntMat z = {{2, 1}, {1, 2}};
    auto sig2 = symmetric_signature(z);
    CHECK(sig2.pos == 2);
    IntMat deg = {{1, 1}, {1, 1}};
    auto sig3 = symmetric_signature(deg);
    CHECK(sig3.pos == 1);
    CHECK(sig3.nul == 1);
}

TEST_CASE("hermite reduction enumerates residues") {
    IntMat m = {{2, 1}, {1, 2}};  // det 3
    auto H = hermite_form(m);
    // residues of Z^2 / M Z^2: three distinct canonical forms
    std::set<std::string> reps;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            auto r = hermite_reduce(H, {BigInt(a), BigInt(b)});
            reps.insert(r[0].to_string() + "," + r[1].to_string());
        }
    CHECK(reps.size() == 3);
}

TEST_CASE("integral congruence of small definite forms") {
    IntMat a = {{2, 1}, {1, 2}};
    IntMat b = {{2, -1}, {-1, 2}};
    CHECK(integrally_congruent(a, b));
    IntMat c = {{1, 0}, {0, 3}};  // same det, different form
    CHECK_FALSE(integrally_congruent(a, c));
    IntMat d4 = {{2, 1, 1, 1}, {1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}};
    IntMat diag = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    CHECK(mat_det(d4) == mat_det(diag));
    CHECK_FALSE(integrally_congruent(d4, diag));
    CHECK(integrally_congruent(d4, d4));
}

TEST_CASE("sturm isolation") {
    // p = (z-1)(z+1)(z-1/2) has three roots in (-2, 2]
    RatPoly p(std::vector<Rational>{Rational(BigInt(1), BigInt(2)), Rational(-1),
                                    Rational(BigInt(-1), BigInt(2)), Rational(1)});
    auto roots = isolate_roots(p, Rational(-2), Rational(2));
    CHECK(roots.size() == 3);
}

#include <projstab/crossratio.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace projstab;

namespace {

const Field Q = Field::rationals();

FieldElement rat(int n, int d = 1) { return Q.from_rational(Rational(n, d)); }
ProjPoint fin(int n, int d = 1) { return ProjPoint::finite(rat(n, d)); }
const ProjPoint inf = ProjPoint::infinity();

// independent oracle: the displayed fraction ((w-x2)/(w-x1)) / ((x3-x2)/(x3-x1))
// evaluated directly on finite rationals in general position
FieldElement cross_ratio_fraction(const FieldElement& x1, const FieldElement& x2,
                                  const FieldElement& x3, const FieldElement& w) {
    return ((w - x2) / (w - x1)) / ((x3 - x2) / (x3 - x1));
}

std::mt19937 rng(0xc0ffee);

FieldElement random_rat() {
    std::uniform_int_distribution<int> num(-15, 15), den(1, 9);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("cross-ratio of the standard frame is lambda") {
    for (int lam : {-7, 2, 3, 5}) CHECK(cross_ratio(inf, fin(0), fin(1), fin(lam)) == fin(lam));
    CHECK(cross_ratio(fin(0), fin(1), fin(2), fin(3)) == fin(4, 3));
}

TEST_CASE("cross-ratio agrees with the direct fraction oracle") {
    for (int trial = 0; trial < 300; ++trial) {
        FieldElement x1 = random_rat(), x2 = random_rat(), x3 = random_rat(), x4 = random_rat();
        if (x1 == x2 || x1 == x3 || x2 == x3 || x4 == x1) continue;
        const ProjPoint got = cross_ratio(ProjPoint::finite(x1), ProjPoint::finite(x2),
                                          ProjPoint::finite(x3), ProjPoint::finite(x4));
        REQUIRE_FALSE(got.is_infinity());
        CHECK(got.value() == cross_ratio_fraction(x1, x2, x3, x4));
    }
}

TEST_CASE("cross-ratio handles x4 on a frame point") {
    CHECK(cross_ratio(inf, fin(0), fin(1), fin(1)) == fin(1));
    CHECK(cross_ratio(inf, fin(0), fin(1), inf) == inf);
    CHECK(cross_ratio(inf, fin(0), fin(1), fin(0)) == fin(0));
    CHECK(cross_ratio(fin(2), fin(0), fin(1), fin(2)) == inf);
}

TEST_CASE("cross-ratio rejects a degenerate frame") {
    CHECK_THROWS_AS(cross_ratio(fin(1), fin(1), fin(2), fin(3)), std::invalid_argument);
    CHECK_THROWS_AS(cross_ratio(inf, inf, fin(2), fin(3)), std::invalid_argument);
}

TEST_CASE("cross-ratio of four distinct points avoids inf, 0, 1") {
    const Field f5 = Field::prime(5);
    std::vector<ProjPoint> pts = {ProjPoint::infinity()};
    for (const auto& v : f5.enumerate()) pts.push_back(ProjPoint::finite(v));
    for (const auto& a : pts)
        for (const auto& b : pts)
            for (const auto& c : pts)
                for (const auto& d : pts) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    const ProjPoint r = cross_ratio(a, b, c, d);
                    REQUIRE_FALSE(r.is_infinity());
                    CHECK_FALSE(r.value().is_zero());
                    CHECK_FALSE(r.value().is_one());
                }
}

TEST_CASE("homographies preserve the cross-ratio (random over Q)") {
    std::uniform_int_distribution<int> coeff(-9, 9);
    const auto random_moebius = [&] {
        for (;;) {
            const int a = coeff(rng), b = coeff(rng), c = coeff(rng), d = coeff(rng);
            if (a * d - b * c != 0) return Moebius(rat(a), rat(b), rat(c), rat(d));
        }
    };
    const auto random_point = [&] {
        const int n = std::uniform_int_distribution<int>(-12, 12)(rng);
        return n == 12 ? inf : fin(n);
    };
    for (int trial = 0; trial < 300; ++trial) {
        const Moebius h = random_moebius();
        ProjPoint a = random_point(), b = random_point(), c = random_point(), d = random_point();
        if (a == b || a == c || b == c) continue;
        CHECK(cross_ratio(h(a), h(b), h(c), h(d)) == cross_ratio(a, b, c, d));
    }
}

TEST_CASE("orbit values in the pinned order, with the stated coincidences") {
    // over a field of characteristic not 2 or 3:
    //   lam = -1: c1 = c2 = -1, c3 = c6 = 2, c4 = c5 = 1/2
    //   lam = 1/2: c1 = c3 = 1/2, c2 = c5 = 2, c4 = c6 = -1
    //   lam = 2: c1 = c4 = 2, c3 = c5 = -1, c2 = c6 = 1/2
    const auto orb_m1 = cross_ratio_orbit(rat(-1));
    CHECK(orb_m1.values[0] == rat(-1));
    CHECK(orb_m1.values[1] == rat(-1));
    CHECK(orb_m1.values[2] == rat(2));
    CHECK(orb_m1.values[5] == rat(2));
    CHECK(orb_m1.values[3] == rat(1, 2));
    CHECK(orb_m1.values[4] == rat(1, 2));
    CHECK(orb_m1.distinct_count == 3);

    const auto orb_half = cross_ratio_orbit(rat(1, 2));
    CHECK(orb_half.values[0] == rat(1, 2));
    CHECK(orb_half.values[2] == rat(1, 2));
    CHECK(orb_half.values[1] == rat(2));
    CHECK(orb_half.values[4] == rat(2));
    CHECK(orb_half.values[3] == rat(-1));
    CHECK(orb_half.values[5] == rat(-1));
    CHECK(orb_half.distinct_count == 3);

    const auto orb_two = cross_ratio_orbit(rat(2));
    CHECK(orb_two.values[0] == rat(2));
    CHECK(orb_two.values[3] == rat(2));
    CHECK(orb_two.values[2] == rat(-1));
    CHECK(orb_two.values[4] == rat(-1));
    CHECK(orb_two.values[1] == rat(1, 2));
    CHECK(orb_two.values[5] == rat(1, 2));
    CHECK(orb_two.distinct_count == 3);
}

TEST_CASE("orbit over F3 at lambda = -1 collapses to a single value") {
    const Field f3 = Field::prime(3);
    const auto orb = cross_ratio_orbit(f3.from_int(-1));
    for (const auto& v : orb.values) CHECK(v == f3.from_int(-1));
    CHECK(orb.distinct_count == 1);
}

TEST_CASE("orbit over F4 at lambda = j: c1 = c5 = c6 = j, c2 = c3 = c4 = j^2") {
    const Field f4 = Field::quad_ext(2);
    const auto [j, j2] = f4.omega_roots();
    for (const auto& lam : {j, j2}) {
        const auto orb = cross_ratio_orbit(lam);
        const FieldElement sq = lam * lam;
        CHECK(orb.values[0] == lam);
        CHECK(orb.values[4] == lam);
        CHECK(orb.values[5] == lam);
        CHECK(orb.values[1] == sq);
        CHECK(orb.values[2] == sq);
        CHECK(orb.values[3] == sq);
        CHECK(orb.distinct_count == 2);
    }
}

TEST_CASE("generic lambda has six distinct orbit values") {
    const auto orb = cross_ratio_orbit(rat(3));
    CHECK(orb.distinct_count == 6);
    const std::set<FieldElement> got(orb.values.begin(), orb.values.end());
    const std::set<FieldElement> want = {rat(3),    rat(1, 3),  rat(-2),
                                         rat(3, 2), rat(-1, 2), rat(2, 3)};
    CHECK(got == want);

    const auto orb5 = cross_ratio_orbit(rat(5));
    const std::set<FieldElement> got5(orb5.values.begin(), orb5.values.end());
    const std::set<FieldElement> want5 = {rat(5),    rat(1, 5),  rat(-4),
                                          rat(5, 4), rat(-1, 4), rat(4, 5)};
    CHECK(got5 == want5);
}

TEST_CASE("orbit rejects 0 and 1") {
    CHECK_THROWS_AS(cross_ratio_orbit(rat(0)), std::domain_error);
    CHECK_THROWS_AS(cross_ratio_orbit(rat(1)), std::domain_error);
    const Field f5 = Field::prime(5);
    CHECK_THROWS_AS(cross_ratio_orbit(f5.one()), std::domain_error);
}

TEST_CASE("distinct counts take only the values 1, 2, 3, 6, matched to lambda") {
    for (const char* spec : {"F3", "F5", "F7", "F13", "F2^2", "F5^2"}) {
        const Field K = Field::parse(spec);
        const auto ex = exceptional_lambdas(K);
        for (const auto& lam : K.enumerate()) {
            if (lam.is_zero() || lam.is_one()) continue;
            const auto orb = cross_ratio_orbit(lam);
            const bool in_s4 = std::count(ex.s4.begin(), ex.s4.end(), lam) > 0;
            const bool in_a4 = std::count(ex.a4.begin(), ex.a4.end(), lam) > 0;
            const bool in_d4 = std::count(ex.d4.begin(), ex.d4.end(), lam) > 0;
            CAPTURE(spec, lam.to_string());
            if (in_s4) {
                CHECK(orb.distinct_count == 1);
            } else if (in_a4) {
                CHECK(orb.distinct_count == 2);
            } else if (in_d4) {
                CHECK(orb.distinct_count == 3);
            } else {
                CHECK(orb.distinct_count == 6);
            }
        }
    }
}

TEST_CASE("exceptional lambda sets per field") {
    const auto exf3 = exceptional_lambdas(Field::prime(3));
    REQUIRE(exf3.s4.size() == 1);
    CHECK(exf3.s4[0] == Field::prime(3).from_int(2));
    CHECK(exf3.a4.empty());
    CHECK(exf3.d4.empty());

    const auto exq = exceptional_lambdas(Q);
    REQUIRE(exq.d4.size() == 3);
    CHECK(exq.d4[0] == rat(-1));
    CHECK(exq.d4[1] == rat(2));
    CHECK(exq.d4[2] == rat(1, 2));
    CHECK(exq.a4.empty());
    CHECK(exq.s4.empty());

    const Field f7 = Field::prime(7);
    const auto exf7 = exceptional_lambdas(f7);
    REQUIRE(exf7.d4.size() == 3);
    CHECK(exf7.d4[0] == f7.from_int(6));
    CHECK(exf7.d4[1] == f7.from_int(2));
    CHECK(exf7.d4[2] == f7.from_int(4));
    REQUIRE(exf7.a4.size() == 2);
    CHECK(exf7.a4[0] == f7.from_int(5));
    CHECK(exf7.a4[1] == f7.from_int(3));

    const Field f4 = Field::quad_ext(2);
    const auto exf4 = exceptional_lambdas(f4);
    const auto [j, j2] = f4.omega_roots();
    REQUIRE(exf4.a4.size() == 2);
    CHECK(exf4.a4[0] == j);
    CHECK(exf4.a4[1] == j2);
    CHECK(exf4.d4.empty());

    const Field f25 = Field::quad_ext(5);
    const auto exf25 = exceptional_lambdas(f25);
    REQUIRE(exf25.a4.size() == 2);
    CHECK(exf25.a4[0] == f25.quad_element(0, 4));  // -j
    CHECK(exf25.a4[1] == f25.quad_element(1, 1));  // -j^2 = 1 + j
}

TEST_CASE("D4 and A4 exceptional sets are disjoint outside characteristics 2 and 3") {
    for (const char* spec : {"F7", "F13", "F19", "F31", "F5^2", "F11^2"}) {
        const Field K = Field::parse(spec);
        const auto ex = exceptional_lambdas(K);
        for (const auto& d : ex.d4)
            for (const auto& a : ex.a4) CHECK(d != a);
    }
}

TEST_CASE("exceptional sets never contain 0 or 1") {
    for (const char* spec : {"Q", "F3", "F5", "F7", "F13", "F2^2", "F5^2", "F11^2"}) {
        const Field K = Field::parse(spec);
        const auto ex = exceptional_lambdas(K);
        for (const auto* set : {&ex.s4, &ex.a4, &ex.d4})
            for (const auto& lam : *set) {
                CHECK_FALSE(lam.is_zero());
                CHECK_FALSE(lam.is_one());
            }
    }
}

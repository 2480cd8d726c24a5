#include <doctest.h>

#include <random>

#include "cubesum/analytic.hpp"
#include "cubesum/errors.hpp"
#include "cubesum/qseries.hpp"
#include "oracles.hpp"

using namespace cubesum;

namespace {

BigComplex random_point(std::mt19937_64& rng, const PeriodLattice& L) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return L.from_coords(Real(d(rng)) * 3, Real(d(rng)) * 3);
}

}  // namespace

TEST_CASE("p lands on the curve") {
    WorkingPrecision wp(256);
    std::mt19937_64 rng(3);
    for (long p : {7L, 13L, 31L}) {
        KNum D = KNum(pow(split_prime(p).pibar, 2u));
        auto L = lattice_of_curve(D, 224);
        for (int k = 0; k < 20; ++k) {
            auto v = wp_eval(L, random_point(rng, L));
            BigComplex y = v.dwp / Real(2);
            BigComplex res = y * y - v.wp * v.wp * v.wp - to_complex(D) / Real(4);
            CHECK(log2_abs(abs(res) / (abs(v.wp * v.wp * v.wp) + 1)) < -200);
        }
    }
}

TEST_CASE("Laurent evaluation agrees with the product expansion") {
    WorkingPrecision wp(224);
    std::mt19937_64 rng(5);
    for (long p : {7L, 13L}) {
        KNum D = KNum(pow(split_prime(p).pi, 2u));
        auto L = lattice_of_curve(D, 192);
        for (int k = 0; k < 10; ++k) {
            auto z = random_point(rng, L);
            auto got = wp_eval(L, z);
            auto want = oracle::wp_qseries(L.Omega(), L.reduce(z), 80);
            CHECK(log2_abs(abs(got.wp - want.wp) / abs(want.wp)) < -170);
            CHECK(log2_abs(abs(got.dwp - want.dwp) / abs(want.dwp)) < -170);
        }
    }
}

TEST_CASE("lattice invariants") {
    WorkingPrecision wp(224);
    auto L = lattice_of_curve(KNum(49), 192);
    // g2 = 0 lattice: p(wz) = w p(z) rotates by the CM unit
    BigComplex z = L.from_coords(Real("0.3"), Real("0.1"));
    auto a = wp_eval(L, z), b = wp_eval(L, omega_c() * z);
    CHECK(log2_abs(abs(b.wp - omega_c() * a.wp)) < -150);
    CHECK(log2_abs(abs(b.dwp - a.dwp)) < -150);
    // periodicity
    auto c = wp_eval(L, z + L.Omega() * omega_c() * Real(2));
    CHECK(log2_abs(abs(c.wp - a.wp)) < -150);
    CHECK(L.lattice_residual(L.Omega() * Real(3)) < Real("1e-50"));
    CHECK_THROWS_AS(wp_eval(L, L.Omega()), PoleAtLatticePoint);
}

TEST_CASE("exact and floating Laurent coefficients agree") {
    WorkingPrecision wp(192);
    KNum g3(-49);
    auto ex = laurent_coefficients_exact(g3, 20);
    auto fl = laurent_coefficients(to_complex(g3), 20);
    for (std::size_t n = 2; n <= 20; ++n)
        CHECK(log2_abs(abs(fl[n] - to_complex(ex[n])) / (abs(to_complex(ex[n])) + 1)) < -150);
    CHECK(ex[2].is_zero());
    CHECK(ex[3] == g3 / KNum(28));
}

TEST_CASE("eval_z term count and caps") {
    WorkingPrecision wp(224);
    auto f = qexp_coefficients(7, 1, 50);
    BigComplex tau(Real(0), Real("0.001"));
    CHECK_THROWS_AS(eval_z(f, tau, 192, 10000), TermsCapExceeded);
    CHECK(terms_needed(0.1, 192) < terms_needed(0.01, 192));
    CHECK(terms_needed(0.01, 192) < terms_needed(0.01, 384));
}

TEST_CASE("Gauss sums") {
    for (long p : {7L, 13L, 31L}) {
        WorkingPrecision wp(160 + kGuardBits);
        auto s = split_prime(p);
        auto g = gauss_sum(s, 1, 160);
        CHECK(log2_abs(norm2(g) - p) < -100);
        BigComplex J = to_complex(KNum(jacobi_sum_split(s)));
        CHECK(log2_abs(abs(g * g * g - J * Real(p))) < -100);
    }
}

TEST_CASE("Fricke constant") {
    for (auto [p, i] : std::vector<std::pair<long, int>>{{7, 1}, {13, 1}, {31, 1}, {7, 2}}) {
        WorkingPrecision wp(192 + kGuardBits);
        auto s = split_prime(p);
        auto C = fricke_constant(p, i, 160);
        CHECK(log2_abs(abs(C) - 1) < -80);
        BigComplex want = to_complex(KNum(pow(s.pi, 2u * i)) / KNum(pow(s.pibar, 2u * i)));
        CHECK(log2_abs(abs(pow(C, 6) - want)) < -80);
        // independent of the evaluation point
        auto C2 = fricke_constant(p, i, 160, 0.05, 1.3);
        CHECK(log2_abs(abs(C - C2)) < -80);
    }
}

TEST_CASE("L-value is a primitive sqrt(-3) torsion point") {
    for (long p : {7L, 13L, 31L}) {
        WorkingPrecision wp(192 + kGuardBits);
        auto rep = l_value_and_cusp_zero(p, 1, 192);
        CHECK(rep.torsion_ok);
        CHECK(log2_abs(rep.residual_sqrt3) < -96);
        CHECK(rep.residual_z0 > Real("0.1"));
        CHECK(log2_abs(abs(rep.x)) < -96);
    }
}

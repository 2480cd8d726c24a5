#include <doctest.h>

#include "cubesum/errors.hpp"
#include "cubesum/fixtures.hpp"
#include "cubesum/parametrize.hpp"

using namespace cubesum;

TEST_CASE("continued fraction recognition") {
    WorkingPrecision wp(256);
    Real x = to_real(mpq_class(-2531, 686));
    auto r = recognize_rational(x, mpz_class(1) << 40, Real("1e-60"));
    REQUIRE(r);
    CHECK(*r == mpq_class(-2531, 686));
    CHECK_FALSE(recognize_rational(pi_real(), mpz_class(1) << 40, Real("1e-60")));
    BigComplex z = to_complex(parse_knum("-1433/686+549*w/343"));
    auto k = recognize_k(z, mpz_class(1) << 40, Real("1e-60"));
    REQUIRE(k);
    CHECK(*k == parse_knum("-1433/686+549*w/343"));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(check_solvable_prime(5), BadInput);
    CHECK_THROWS_AS(check_solvable_prime(11), BadInput);
    CHECK_THROWS_AS(check_solvable_prime(19), BadInput);  // 1 mod 9
    CHECK_THROWS_AS(check_solvable_prime(21), BadInput);
    CHECK_NOTHROW(check_solvable_prime(7));
    CHECK_NOTHROW(check_solvable_prime(13));
    CHECK_NOTHROW(check_solvable_prime(43));
    try {
        check_solvable_prime(23);
        FAIL("expected BadInput");
    } catch (const BadInput& e) {
        CHECK(std::string(e.what()).find("Sylvester") != std::string::npos);
    }
}

TEST_CASE("recognized points re-embed onto the raw values") {
    auto s = split_prime(7);
    auto c = candidate_points(7, 1)[0];
    const unsigned bits = 192;
    WorkingPrecision wp(bits + kGuardBits);
    std::size_t M = terms_needed(c.im(), bits);
    for (bool cj : {false, true}) {
        auto raw = evaluate_cm(qexp_coefficients(7, 1, M, cj), c, bits, M + 1);
        CHECK(raw.residual_log2 < -150);
        auto rp = recognize(raw, s, 1, mpz_class(1) << 64, bits);
        CHECK(log2_abs(abs(to_complex(rp.y) - raw.y)) < -90);
        CHECK(rp.x_residual_log2 < -90);
        CHECK(on_curve(rp.twisted));
    }
}

TEST_CASE("end-to-end solves") {
    for (auto [p, i] : std::vector<std::pair<long, int>>{{7, 1}, {13, 1}, {31, 1}, {7, 2}, {43, 1}}) {
        auto res = solve(p, i);
        mpz_class n = i == 1 ? mpz_class(p) : mpz_class(p * p);
        CHECK(res.cube_sum.target == n);
        CHECK(res.cube_sum.verify());
        CHECK(res.descent.point.is_rational());
        CHECK(on_curve(res.descent.point));
        CHECK(res.descent.cert.nontorsion);
        for (const auto& ch : res.checks) CHECK_MESSAGE(ch.ok, ch.name);
    }
}

TEST_CASE("determinism") {
    auto a = solve(13, 1), b = solve(13, 1);
    CHECK(a.point_K == b.point_K);
    CHECK(a.cube_sum.u == b.cube_sum.u);
    CHECK(a.cube_sum.v == b.cube_sum.v);
    CHECK(a.site.label() == b.site.label());
}

TEST_CASE("site restriction and term caps") {
    SolveOptions opts;
    opts.eval = "tau";
    auto r = solve(7, 1, opts);
    CHECK(r.site.site == Site::Tau);
    CHECK(r.cube_sum.verify());
    opts.eval = "auto";
    opts.max_terms = 100;
    opts.retries = 0;
    CHECK_THROWS_AS(solve(7, 1, opts), PrecisionExhausted);
}

TEST_CASE("descent on a rational K-point") {
    auto P = make_point(KNum(49), KNum(mpq_class(-20, 9), 0), KNum(mpq_class(-61, 54), 0));
    auto d = descend(P);
    CHECK(d.point.is_rational());
    CHECK(d.cert.nontorsion);
    CHECK_THROWS_AS(descend(make_point(KNum(49), KNum(0), KNum(mpq_class(7, 2), 0))), DescentFailed);
}

TEST_CASE("unit orbit membership") {
    auto P = make_point(KNum(49), parse_knum("-7*w/3"), parse_knum("7/18+7*w/9"));
    CHECK(in_unit_orbit(neg(endo_omega(P)), P));
    CHECK(in_unit_orbit(galois_conj(P), P));  // conj(P) = -[w]P here
    CHECK_FALSE(in_unit_orbit(mul(2, P), P));
}

#include <doctest.h>

#include "cubesum/cmpoint.hpp"
#include "cubesum/errors.hpp"

using namespace cubesum;

TEST_CASE("roots of r^2 - r + 1 modulo 3p") {
    for (long p : {7L, 13L, 31L, 43L, 61L, 67L, 79L, 97L}) {
        auto [r1, r2] = solve_r(p);
        CHECK(r1 < r2);
        for (long r : {r1, r2}) {
            CHECK((r * r - r + 1) % (3 * p) == 0);
            CHECK(r >= 0);
            CHECK(r < 3 * p);
        }
    }
}

TEST_CASE("CM point data") {
    for (long p : {7L, 13L, 31L}) {
        auto [r1, r2] = solve_r(p);
        for (long r : {r1, r2}) {
            auto c = make_cm_point(p, 1, r);
            long rr = c.r;
            CHECK(((rr - r) % (3 * p) + 3 * p) % (3 * p) == 0);
            CHECK(c.t * 3 * p == rr * rr - rr + 1);
            KNum d = KNum(0, 3) + KNum(3 * rr);
            CHECK(c.tau == KNum(-1) / d);
            CHECK(c.wtau == KNum(-1) / (KNum(c.N) * c.tau));
            // tau is a fixed point of a matrix of determinant... its norm form is N(3w+3r) = 9(r^2 - r + 1)
            CHECK(norm(d) == 9 * (rr * rr - rr + 1));
            CHECK(c.im_tau() > 0);
            CHECK(c.im_wtau() > 0);
        }
    }
    CHECK(minimal_t_representative(5, 7) == 5);
    CHECK(minimal_t_representative(17, 7) == -4);
}

TEST_CASE("candidate ordering") {
    for (long p : {7L, 13L, 31L}) {
        auto cs = candidate_points(p, 1);
        REQUIRE(cs.size() == 4);
        for (std::size_t k = 1; k < cs.size(); ++k) CHECK(cs[k - 1].im() >= cs[k].im() - 1e-15);
        CHECK(cs[0].site == Site::WTau);
    }
    auto cs = candidate_points(13, 1);
    CHECK(cs[0].label() == "wtau_r=17");
    CHECK(cs[3].label() == "tau_r=-16");
}

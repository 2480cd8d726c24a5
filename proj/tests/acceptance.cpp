// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cubesum/errors.hpp"
#include "cubesum/fixtures.hpp"
#include "cubesum/parametrize.hpp"
#include "oracles.hpp"

using namespace cubesum;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (!ok) detail << "; ";
        else detail.str("");
        ok = false;
        detail << why;
    }
};

using Terms = std::vector<std::pair<int, const char*>>;

// first exponent where got differs from the printed list, or nullopt
std::optional<std::string> series_mismatch(const LaurentSeries& got, int lo, int hi, const Terms& printed) {
    std::map<int, KNum> want;
    for (auto& [e, c] : printed) want[e] = parse_knum(c);
    if (got.order() < hi) return "series known only to O(q^" + std::to_string(got.order()) + ")";
    for (int e = lo; e < hi; ++e) {
        KNum w = want.count(e) ? want[e] : KNum(0);
        if (got.coeff(e) != w)
            return "q^" + std::to_string(e) + " printed " + w.str() + " computed " + got.coeff(e).str();
    }
    return std::nullopt;
}

Outcome criterion1() {
    Outcome o;
    std::ostringstream ok;
    for (auto [p, i] : std::vector<std::pair<long, int>>{{7, 1}, {13, 1}, {31, 1}, {7, 2}}) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult r;
        try {
            r = solve(p, i);
        } catch (const std::exception& e) {
            o.fail("solve " + std::to_string(p) + "^" + std::to_string(i) + ": " + e.what());
            continue;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto& u = r.cube_sum.u;
        const auto& v = r.cube_sum.v;
        mpq_class n = i == 1 ? p : p * p;
        if (u * u * u + v * v * v != n) o.fail("identity fails for " + n.get_str());
        if (!r.descent.cert.nontorsion || !certify_nontorsion(r.descent.point).nontorsion)
            o.fail("no non-torsion certificate for " + n.get_str());
        if (secs > 60) o.fail(n.get_str() + " took " + std::to_string(secs) + " s");
        ok << n.get_str() << " in " << static_cast<int>(secs * 1000) << " ms; ";
    }
    if (o.ok) o.detail << "u^3+v^3 exact for " << ok.str();
    return o;
}

Outcome criterion2() {
    Outcome o;
    struct Case {
        long p;
        const char* site;
        const char* x;
        const char* y;
    };
    // printed combined points, with sqrt(-3) = 1 + 2w and w^2 = -1 - w expanded
    std::vector<Case> cases = {{7, "tau_r=5", "-7*w/3", "7/18+7*w/9"},
                               {13, "tau_r=-16", "13/3+13*w/3", "65/18+65*w/9"},
                               {31, "tau_r=26", "-217*w/12", "-3131/72-3131*w/36"}};
    const unsigned bits = 192;
    for (auto& c : cases) {
        auto split = split_prime(c.p);
        std::optional<Candidate> cand;
        for (auto& k : candidate_points(c.p, 1))
            if (k.label() == c.site) cand = k;
        if (!cand) {
            o.fail(std::string("missing site ") + c.site);
            continue;
        }
        WorkingPrecision wp(bits + kGuardBits);
        std::size_t M = terms_needed(cand->im(), bits);
        auto rec = [&](bool cj) {
            return recognize(evaluate_cm(qexp_coefficients(c.p, 1, M, cj), *cand, bits, M + 1), split, 1,
                             mpz_class(1) << (bits / 3), bits);
        };
        CurvePoint PK;
        try {
            PK = twist_and_combine(rec(false), rec(true));
        } catch (const std::exception& e) {
            o.fail("p=" + std::to_string(c.p) + ": " + e.what());
            continue;
        }
        CurvePoint printed = make_point(KNum(c.p * c.p), parse_knum(c.x), parse_knum(c.y));
        if (!in_unit_orbit(PK, printed))
            o.fail("p=" + std::to_string(c.p) + " computed " + PK.str() + " not in the orbit of " + printed.str());
        else if (o.ok)
            o.detail << "p=" << c.p << " " << PK.str() << (PK == printed ? " (identical) " : " (orbit) ");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto half = [](const EisensteinInt& z) { return KNum(z) / KNum(2); };
    auto s7 = split_prime(7), s13 = split_prime(13), s31 = split_prime(31);
    struct Item {
        std::string name;
        std::function<LaurentSeries()> got;
        int lo, hi;
        Terms printed;
    };
    Terms y7 = {{-3, "-1"}, {0, "1"},  {3, "1"},  {6, "1"},   {9, "-1"}, {12, "-2"}, {15, "1"}, {18, "-3"},
                {21, "1"},  {24, "1"}, {27, "2"}, {33, "-1"}, {36, "2"}, {39, "-4"}, {42, "1"}, {45, "3"}};
    Terms y13 = {{-3, "-1"}, {0, "2"},  {3, "1"},   {6, "-2"},  {9, "-1"}, {12, "-2"}, {15, "2"},
                 {21, "2"},  {24, "2"}, {27, "-1"}, {36, "-4"}, {39, "1"}, {42, "4"},  {45, "-6"}};
    std::vector<Item> items = {
        {"p7 y-series", [&] { return y_series(7, 1, 46) + -half(s7.pibar); }, -3, 47, y7},
        {"p7 y^c-series", [&] { return y_series(7, 1, 46, true) + -half(s7.pi); }, -3, 47, y7},
        {"p13 y-series", [&] { return y_series(13, 1, 46) + half(s13.pibar); }, -3, 47, y13},
        {"p13 y^c-series", [&] { return y_series(13, 1, 46, true) + half(s13.pi); }, -3, 47, y13},
        {"p31 ratio", [&] { return f_plus_minus_series(31, 1, 1, 21).ratio; }, 0, 22,
         {{0, "1"}, {3, "3+6*w"}, {6, "-21-15*w"}, {9, "63-9*w"}, {12, "-39+192*w"}, {15, "-429-750*w"},
          {18, "2133+1458*w"}, {21, "-5274+90*w"}}},
        {"p31 F+", [&] { return f_plus_minus_series(31, 1, 1, 21).F; }, 0, 22,
         {{0, "1"}, {3, "1+2*w"}, {6, "-4-5*w"}, {9, "10+5*w"}, {12, "-16+w"}, {15, "4-40*w"}, {18, "65+109*w"},
          {21, "-240-165*w"}}},
        {"p7 F- = 1", [&] { return f_plus_minus_series(7, 1, -1, 21).F; }, 0, 22, {{0, "1"}}},
        {"p13 F+ = 1", [&] { return f_plus_minus_series(13, 1, 1, 21).F; }, 0, 22, {{0, "1"}}},
    };
    int matched = 0;
    for (auto& it : items) {
        try {
            if (auto bad = series_mismatch(it.got(), it.lo, it.hi, it.printed))
                o.fail(it.name + ": " + *bad);
            else
                ++matched;
        } catch (const std::exception& e) {
            o.fail(it.name + ": " + e.what());
        }
    }
    std::string summary = std::to_string(matched) + "/" + std::to_string(items.size()) + " printed lists match";
    if (o.ok)
        o.detail << summary;
    else
        o.detail << " [" << summary << "]";
    return o;
}

Outcome criterion4() {
    Outcome o;
    long fields = 0, comparisons = 0;
    const long bound = 10000;
    for (long p : {7L, 13L}) {
        auto pibar = split_prime(p).pibar;
        std::vector<EisensteinInt> Ds = {EisensteinInt(1), pibar, pibar * pibar, EisensteinInt(49)};
        for (long l = 5; l < bound; ++l) {
            if (!is_prime(l)) continue;
            std::vector<std::pair<EisensteinInt, bool>> primes;  // (primary generator, inert)
            if (l % 3 == 2) {
                if (l * l >= bound) continue;
                primes.push_back({EisensteinInt(l), true});
            } else {
                auto q = normalize_primary(split_prime(l).pi, 2);
                primes.push_back({q, false});
                primes.push_back({conj(q), false});
            }
            for (auto& [q, inert] : primes) {
                ++fields;
                oracle::u64 w = inert ? 0 : residue_map_omega(q);
                for (auto& D : Ds) {
                    if (divides(q, D)) continue;  // bad reduction
                    long want = oracle::count_points(D, l, inert, w);
                    mpz_class got = count_points_formula(D, q);
                    ++comparisons;
                    if (got != want)
                        o.fail("D=" + D.str() + " at " + q.str() + ": formula " + got.get_str() + ", count " +
                               std::to_string(want));
                }
            }
        }
    }
    if (o.ok) o.detail << comparisons << " counts over " << fields << " residue fields, zero mismatches";
    return o;
}

Outcome criterion5() {
    Outcome o;
    int n = 0;
    for (long q = 2; q < 30; ++q) {
        if (!is_prime(q) || q % 3 != 2) continue;
        ++n;
        auto J = jacobi_sum_cubic(q);
        if (J != EisensteinInt(q) || J != oracle::jacobi_cubic(q))
            o.fail("J(chi,chi) = " + J.str() + " for q = " + std::to_string(q));
    }
    for (long q : {2L, 5L, 11L}) {
        auto lhs = oracle::jacobi_rho_cubic(q);
        auto rhs = oracle::cubic_char_of_int(q, 4) * oracle::jacobi_cubic(q);
        if (lhs != rhs || jacobi_sum_quadratic_cubic(q) != lhs)
            o.fail("J(rho,xi) = " + lhs.str() + " vs xi(4)J(xi,xi) = " + rhs.str() + " at q = " + std::to_string(q));
    }
    if (o.ok) o.detail << "J(chi,chi) = q for " << n << " primes; J(rho,xi) = xi(4)J(xi,xi) for q = 2, 5, 11";
    return o;
}

Outcome criterion6() {
    Outcome o;
    double worst_g = -1e9, worst_c = -1e9;
    for (long p : {7L, 13L, 31L}) {
        WorkingPrecision wp(160 + kGuardBits);
        auto s = split_prime(p);
        auto g = gauss_sum(s, 1, 160);
        BigComplex J = to_complex(KNum(jacobi_sum_split(s)));
        worst_g = std::max({worst_g, log2_abs(norm2(g) - p), log2_abs(abs(g * g * g - J * Real(p)))});
    }
    for (auto [p, i] : std::vector<std::pair<long, int>>{{7, 1}, {13, 1}, {31, 1}, {7, 2}}) {
        WorkingPrecision wp(192 + kGuardBits);
        auto s = split_prime(p);
        auto C = fricke_constant(p, i, 160);
        BigComplex want = to_complex(KNum(pow(s.pi, 2u * i)) / KNum(pow(s.pibar, 2u * i)));
        worst_c = std::max({worst_c, log2_abs(abs(C) - 1), log2_abs(abs(pow(C, 6) - want))});
    }
    if (worst_g >= -100) o.fail("Gauss sum residual 2^" + std::to_string(worst_g));
    if (worst_c >= -80) o.fail("Fricke residual 2^" + std::to_string(worst_c));
    if (o.ok) o.detail << "Gauss residual <= 2^" << static_cast<int>(worst_g) << ", Fricke residual <= 2^" << static_cast<int>(worst_c);
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (long p : {7L, 13L, 31L}) {
        WorkingPrecision wp(192 + kGuardBits);
        auto r = l_value_and_cusp_zero(p, 1, 192);
        double rs = log2_abs(r.residual_sqrt3), rx = log2_abs(abs(r.x));
        if (rs >= -96) o.fail("p=" + std::to_string(p) + ": sqrt(-3) z0 residual 2^" + std::to_string(rs));
        if (r.residual_z0 < Real("0.01")) o.fail("p=" + std::to_string(p) + ": z0 lies in the lattice");
        if (rx >= -96) o.fail("p=" + std::to_string(p) + ": x(z0) = 2^" + std::to_string(rx));
        if (o.ok) o.detail << "p=" << p << " resid 2^" << static_cast<int>(rs) << "; ";
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    // p-function: curve equation and agreement with the product expansion
    {
        WorkingPrecision wp(224);
        auto L = lattice_of_curve(KNum(pow(split_prime(31).pibar, 2u)), 192);
        for (int k = 0; k < 20; ++k) {
            auto z = L.from_coords(Real(d(rng) * 2), Real(d(rng) * 2));
            auto v = wp_eval(L, z);
            BigComplex y = v.dwp / Real(2);
            BigComplex res = y * y - v.wp * v.wp * v.wp - to_complex(KNum(pow(split_prime(31).pibar, 2u))) / Real(4);
            if (log2_abs(abs(res) / (abs(v.wp * v.wp * v.wp) + 1)) > -170) o.fail("curve residual");
            auto q = oracle::wp_qseries(L.Omega(), L.reduce(z), 80);
            if (log2_abs(abs(q.wp - v.wp) / abs(q.wp)) > -170) o.fail("Laurent vs product expansion");
        }
    }
    // Hecke multiplicativity and recursion against direct enumeration
    {
        auto f = qexp_coefficients(13, 1, 2000);
        auto pi = split_prime(13).pi;
        for (long n = 1; n <= 300; ++n)
            if (f.a(n) != oracle::hecke_coefficient(13, 1, pi, n)) o.fail("a_" + std::to_string(n));
        for (std::size_t m = 2; m <= 44; ++m)
            for (std::size_t n = m + 1; m * n <= 2000; ++n)
                if (std::gcd(m, n) == 1 && f.a(m * n) != f.a(m) * f.a(n)) o.fail("multiplicativity");
        for (long l : {2L, 5L, 7L, 11L, 19L, 37L}) {
            auto chi = nebentypus(f, l);
            if (f.a(l * l) != f.a(l) * f.a(l) - chi * EisensteinInt(l)) o.fail("recursion at " + std::to_string(l));
        }
    }
    // integrality of the cusp expansion and exact cube roots
    for (long p : {7L, 13L, 31L}) {
        auto y = y_series(p, 1, 60) + KNum(split_prime(p).pibar) / KNum(2);
        for (int e = y.val; e < y.order(); ++e)
            if (!y.coeff(e).is_integral()) o.fail("y not integral at p=" + std::to_string(p));
        auto fs = f_plus_minus_series(p, 1, 1, 30);
        if (pow(fs.F, 3) != fs.ratio) o.fail("cube root at p=" + std::to_string(p));
    }
    // group law on K-points of y^2 = x^3 + 49/4
    {
        auto P = make_point(KNum(49), parse_knum("-7*w/3"), parse_knum("7/18+7*w/9"));
        auto Q = mul(2, endo_omega(P)), R = galois_conj(mul(3, P));
        if (add(add(P, Q), R) != add(P, add(Q, R))) o.fail("associativity");
        if (add(P, Q) != add(Q, P)) o.fail("commutativity");
        if (!add(P, neg(P)).inf) o.fail("inverse");
        if (sqrt_minus3(sqrt_minus3(P)) != mul(-3, P)) o.fail("sqrt(-3)^2 = -3");
    }
    if (o.ok) o.detail << "p residuals, product expansion, Hecke relations, integrality, cube roots, group law";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 end-to-end solves", criterion1},
        {"2 published K-points", criterion2},
        {"3 published series", criterion3},
        {"4 point-count formula", criterion4},
        {"5 Jacobi sums", criterion5},
        {"6 Gauss sums and Fricke constant", criterion6},
        {"7 L-value torsion point", criterion7},
        {"8 property suites", criterion8},
    };
    int failed = 0;
    for (auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail.str() << std::endl;
    }
    return failed ? 1 : 0;
}

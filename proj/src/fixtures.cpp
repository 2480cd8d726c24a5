#include "cubesum/fixtures.hpp"

#include <sstream>

#include "cubesum/errors.hpp"
#include "cubesum/parametrize.hpp"

namespace cubesum {

PrintedSeries printed_series(const std::string& name, int val, int order,
                             const std::vector<std::pair<int, const char*>>& coeffs,
                             const std::vector<std::pair<int, const char*>>& errata) {
    PrintedSeries s{name, val, order, {}, {}};
    for (auto& [e, c] : coeffs) s.coeffs[e] = parse_knum(c);
    for (auto& [e, c] : errata) s.errata[e] = parse_knum(c);
    return s;
}

FixtureResult compare_series(const PrintedSeries& printed, const LaurentSeries& got, bool strict) {
    FixtureResult r{printed.name, "pass", ""};
    if (got.val > printed.val || got.order() < printed.order) {
        r.status = "fail";
        r.detail = "computed series does not cover q^" + std::to_string(printed.val) + "..q^" +
                   std::to_string(printed.order - 1);
        return r;
    }
    std::ostringstream diffs;
    bool unexplained = false, any = false;
    for (int e = printed.val; e < printed.order; ++e) {
        auto it = printed.coeffs.find(e);
        KNum want = it == printed.coeffs.end() ? KNum(0) : it->second;
        KNum have = got.coeff(e);
        if (have == want) continue;
        auto er = printed.errata.find(e);
        bool known = er != printed.errata.end() && er->second == have;
        unexplained |= !known;
        if (any) diffs << "; ";
        any = true;
        diffs << "q^" << e << ": printed " << want.str() << ", computed " << have.str()
              << (known ? " (documented misprint)" : "");
    }
    if (!any) {
        r.detail = std::to_string(printed.order - printed.val) + " coefficients match";
        return r;
    }
    r.detail = diffs.str();
    r.status = (unexplained || strict) ? "fail" : "erratum";
    return r;
}

bool in_unit_orbit(const CurvePoint& P, const CurvePoint& Q) {
    CurvePoint R = Q;
    for (int k = 0; k < 3; ++k, R = endo_omega(R))
        if (P == R || P == neg(R)) return true;
    return false;
}

std::vector<PrintedSeries> published_series() {
    std::vector<PrintedSeries> out;
    // p = 7: y - pibar/2 = y^c - pi/2
    auto y7 = std::vector<std::pair<int, const char*>>{
        {-3, "-1"}, {0, "1"},  {3, "1"},  {6, "1"},   {9, "-1"},  {12, "-2"}, {15, "1"}, {18, "-3"},
        {21, "1"},  {24, "1"}, {27, "2"}, {33, "-1"}, {36, "2"},  {39, "-4"}, {42, "1"}, {45, "3"}};
    out.push_back(printed_series("p7_y_series", -3, 47, y7));
    out.push_back(printed_series("p7_yc_series", -3, 47, y7));
    auto y13 = std::vector<std::pair<int, const char*>>{
        {-3, "-1"}, {0, "2"},  {3, "1"},  {6, "-2"},  {9, "-1"},  {12, "-2"}, {15, "2"},
        {21, "2"},  {24, "2"}, {27, "-1"}, {36, "-4"}, {39, "1"}, {42, "4"},  {45, "-6"}};
    out.push_back(printed_series("p13_y_series", -3, 47, y13));
    out.push_back(printed_series("p13_yc_series", -3, 47, y13));
    out.push_back(printed_series("p31_y_series", -3, 22,
                                 {{-3, "-1"}, {0, "-4+3*w"}, {3, "1"}, {6, "1+6*w"}, {9, "8+3*w"},
                                  {12, "1+3*w"}, {15, "11"}, {18, "3*w"}, {21, "20-12*w"}},
                                 {{0, "-4-3*w"}}));
    out.push_back(printed_series("p31_yc_series", -3, 22,
                                 {{-3, "-1"}, {0, "-1-3*w"}, {3, "1"}, {6, "5-6*w"}, {9, "5-3*w"},
                                  {12, "-2-3*w"}, {15, "11"}, {18, "-3-3*w"}, {21, "32+12*w"}},
                                 {{0, "-1+3*w"}, {6, "-5-6*w"}}));
    out.push_back(printed_series("p31_ratio_series", 0, 22,
                                 {{0, "1"}, {3, "3+6*w"}, {6, "-21-15*w"}, {9, "63-9*w"}, {12, "-39+192*w"},
                                  {15, "-429-750*w"}, {18, "2133+1458*w"}, {21, "-5274+90*w"}}));
    out.push_back(printed_series("p31_F_plus", 0, 22,
                                 {{0, "1"}, {3, "1+2*w"}, {6, "-4-5*w"}, {9, "10+5*w"}, {12, "-16+w"},
                                  {15, "4-40*w"}, {18, "65+109*w"}, {21, "-240-165*w"}},
                                 {{12, "-16+4*w"}}));
    out.push_back(printed_series("p7_F_minus_is_one", 0, 22, {{0, "1"}}));
    out.push_back(printed_series("p13_F_plus_is_one", 0, 22, {{0, "1"}}));
    return out;
}

// The series a printed fixture is compared against.
static LaurentSeries computed_series(const std::string& name) {
    auto half = [](const EisensteinInt& z) { return KNum(z) / KNum(2); };
    if (name == "p7_y_series") return y_series(7, 1, 46) + -half(split_prime(7).pibar);
    if (name == "p7_yc_series") return y_series(7, 1, 46, true) + -half(split_prime(7).pi);
    if (name == "p13_y_series") return y_series(13, 1, 46) + half(split_prime(13).pibar);
    if (name == "p13_yc_series") return y_series(13, 1, 46, true) + half(split_prime(13).pi);
    if (name == "p31_y_series") return y_series(31, 1, 21) + half(split_prime(31).pibar);
    if (name == "p31_yc_series") return y_series(31, 1, 21, true) + half(split_prime(31).pi);
    if (name == "p31_ratio_series") return f_plus_minus_series(31, 1, +1, 21).ratio;
    if (name == "p31_F_plus") return f_plus_minus_series(31, 1, +1, 21).F;
    if (name == "p7_F_minus_is_one") return f_plus_minus_series(7, 1, -1, 21).F;
    if (name == "p13_F_plus_is_one") return f_plus_minus_series(13, 1, +1, 21).F;
    throw BadInput("unknown series fixture " + name);
}

std::vector<PublishedPoint> published_points() {
    auto pt = [](long p, const char* x, const char* y) {
        return make_point(KNum(p * p), parse_knum(x), parse_knum(y));
    };
    auto sp7 = split_prime(7), sp13 = split_prime(13), sp31 = split_prime(31);
    return {
        {7, "tau_r=5", parse_knum("-2-9*w/2"), parse_knum("-1+4*w"), KNum(sp7.pi) * KNum(mpq_class(-1, 2), 0),
         pt(7, "-7*w/3", "7/18+7*w/9")},
        // -1/(3w+23) and -1/(3w-16) define the same point on X_0(117)
        {13, "tau_r=-16", parse_knum("7/2+9*w/2"), parse_knum("-7-2*w"), KNum(sp13.pi) / KNum(2),
         pt(13, "13/3+13*w/3", "65/18+65*w/9")},
        {31, "tau_r=26", parse_knum("-2531/686-549*w/343"), parse_knum("-404/49-130*w/49"),
         KNum(sp31.pi) / KNum(2), pt(31, "-217*w/12", "-3131/72-3131*w/36")},
    };
}

static std::vector<FixtureResult> check_point(const PublishedPoint& pp, unsigned bits) {
    std::vector<FixtureResult> out;
    std::string tag = "p" + std::to_string(pp.p) + "_";
    auto split = split_prime(pp.p);
    std::optional<Candidate> cand;
    for (auto& c : candidate_points(pp.p, 1))
        if (c.label() == pp.site) cand = c;
    if (!cand) return {{tag + "cm_site", "fail", "no candidate labelled " + pp.site}};

    WorkingPrecision wp(bits + kGuardBits);
    std::size_t M = terms_needed(cand->im(), bits);
    mpz_class bound = mpz_class(1) << (bits / 3);
    auto rec = [&](bool cj) {
        return recognize(evaluate_cm(qexp_coefficients(pp.p, 1, M, cj), *cand, bits, M + 1), split, 1, bound, bits);
    };
    RecognizedPoint rf, rfc;
    try {
        rf = rec(false);
        rfc = rec(true);
    } catch (const Error& e) {
        return {{tag + "cm_values", "fail", e.what()}};
    }

    bool xf = false;
    KNum wk(1);
    for (int k = 0; k < 3; ++k, wk = wk * KNum::omega()) xf |= rf.X == wk * pp.X_f;
    bool okf = rf.y == pp.y_f && xf;
    out.push_back({tag + "phi_at_" + pp.site, okf ? "pass" : "fail",
                   "y = " + rf.y.str() + ", x*pi^(2/3) = " + rf.X.str()});
    bool okfc = rfc.y == pp.y_fc && rfc.X.is_zero();
    out.push_back({tag + "phic_at_" + pp.site, okfc ? "pass" : "fail",
                   "y = " + rfc.y.str() + ", x = " + rfc.X.str()});
    CurvePoint PK = twist_and_combine(rf, rfc);
    bool okk = in_unit_orbit(PK, pp.point_K);
    out.push_back({tag + "K_point", okk ? "pass" : "fail",
                   "computed " + PK.str() + ", printed " + pp.point_K.str()});
    return out;
}

std::vector<FixtureResult> verify_examples(const VerifyOptions& opts) {
    std::vector<FixtureResult> out;
    for (const auto& s : published_series()) {
        if (opts.quick && s.name.rfind("p31_", 0) == 0) continue;
        try {
            out.push_back(compare_series(s, computed_series(s.name), opts.strict));
        } catch (const Error& e) {
            out.push_back({s.name, "fail", e.what()});
        }
    }
    for (const auto& pp : published_points())
        for (auto& r : check_point(pp, opts.bits)) out.push_back(r);
    return out;
}

}  // namespace cubesum

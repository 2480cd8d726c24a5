#include "cubesum/parametrize.hpp"

#include <cmath>

#include "cubesum/errors.hpp"

namespace cubesum {

RawPoint evaluate_cm(const HeckeForm& f, const Candidate& c, unsigned bits, std::size_t cap) {
    WorkingPrecision wp(bits + kGuardBits);
    RawPoint raw;
    raw.cand = c;
    raw.conjugate = f.conjugate;
    auto z = eval_z(f, c.tau(), bits, cap);
    raw.terms = z.terms;
    auto L = lattice_of_curve(KNum(f.curve_D()), bits);
    try {
        auto v = wp_eval(L, z.z);
        raw.x = v.wp;
        raw.y = v.dwp / Real(2);
        BigComplex res = raw.y * raw.y - raw.x * raw.x * raw.x - to_complex(KNum(f.curve_D())) / Real(4);
        raw.residual_log2 = log2_abs(abs(res));
    } catch (const PoleAtLatticePoint&) {
        raw.at_infinity = true;
    }
    return raw;
}

std::optional<mpq_class> recognize_rational(const Real& x, const mpz_class& bound, const Real& tol) {
    mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    Real r = x;
    for (int step = 0; step < 2000; ++step) {
        Real fl = floor(r);
        mpz_class a = round_to_mpz(fl);
        mpz_class h = a * h1 + h2, k = a * k1 + k2;
        if (k > bound) break;
        mpq_class cand(h, k);
        cand.canonicalize();
        if (boost::multiprecision::abs(Real(x - to_real(cand))) < tol) return cand;
        Real frac = r - fl;
        if (frac == 0) break;
        r = 1 / frac;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    return std::nullopt;
}

std::optional<KNum> recognize_k(const BigComplex& z, const mpz_class& bound, const Real& tol) {
    Real s3 = sqrt3_real();
    Real b = 2 * z.im / s3;
    Real a = z.re + z.im / s3;
    auto ra = recognize_rational(a, bound, tol);
    auto rb = recognize_rational(b, bound, tol);
    if (!ra || !rb) return std::nullopt;
    return KNum(*ra, *rb);
}

RecognizedPoint recognize(const RawPoint& raw, const PrimeSplit& s, int i, const mpz_class& bound, unsigned bits) {
    WorkingPrecision wp(bits + kGuardBits);
    RecognizedPoint rp;
    rp.raw = raw;
    KNum P2i = KNum(pow(EisensteinInt(s.p), static_cast<unsigned>(2 * i)));
    if (raw.at_infinity) {
        rp.twisted = CurvePoint::infinity(P2i);
        return rp;
    }
    Real tol = ldexp(Real(1), -static_cast<int>(bits / 2));
    auto y = recognize_k(raw.y, bound, tol);
    if (!y) throw RecognitionFailed("y = " + raw.y.str(25) + " not recognized in K");
    rp.y = *y;
    KNum mu = KNum(pow(raw.conjugate ? s.pibar : s.pi, static_cast<unsigned>(i)));
    rp.Y = mu * rp.y;
    KNum X3 = rp.Y * rp.Y - P2i / KNum(4);
    if (!exact_cube_root(X3, rp.X))
        throw RecognitionFailed("Y^2 - p^(2i)/4 = " + X3.str() + " is not a cube in K");
    // the exact root must be one of the three numeric twists of x
    BigComplex c = root(to_complex(mu * mu), 3);
    BigComplex xc = raw.x * c;
    BigComplex Xc = to_complex(rp.X);
    Real best = -1;
    BigComplex w = omega_c(), wk(1);
    for (int k = 0; k < 3; ++k, wk *= w) {
        Real d = abs(Xc - wk * xc);
        if (best < 0 || d < best) {
            best = d;
            rp.unit_twist = k;
        }
    }
    Real scale = abs(Xc) + Real(1);
    rp.x_residual_log2 = log2_abs(Real(best / scale));
    if (best > tol * scale) throw RecognitionFailed("exact x does not match the numeric value");
    rp.twisted = make_point(P2i, rp.X, rp.Y);
    return rp;
}

CurvePoint twist_and_combine(const RecognizedPoint& Pf, const RecognizedPoint& Pfc) {
    return sub(Pf.twisted, Pfc.twisted);
}

Descent descend(const CurvePoint& PK) {
    if (PK.inf) throw DescentFailed("point at infinity");
    CurvePoint P = PK;
    for (int k = 0; k < 3; ++k, P = endo_omega(P)) {
        for (int sign : {1, -1}) {
            CurvePoint Ps = sign > 0 ? P : neg(P);
            CurvePoint Q1 = add(Ps, galois_conj(Ps));
            if (!Q1.inf && Q1.is_rational()) {
                auto cert = certify_nontorsion(Q1);
                if (cert.nontorsion) return {Q1, "trace", k, sign, cert};
            }
            CurvePoint Q2 = sqrt_minus3(Ps);
            if (!Q2.inf && Q2.is_rational()) {
                auto cert = certify_nontorsion(Q2);
                if (cert.nontorsion) return {Q2, "sqrt-3", k, sign, cert};
            }
        }
    }
    throw DescentFailed("neither trace nor sqrt(-3) image of " + PK.str() + " is a non-torsion rational point");
}

void check_solvable_prime(long p) {
    if (p < 2 || !is_prime(p)) throw BadInput(std::to_string(p) + " is not prime");
    long r = p % 9;
    if (r == 2 || r == 5)
        throw BadInput(std::to_string(p) + " = " + std::to_string(r) +
                       " mod 9: by Sylvester such primes are never sums of two rational cubes");
    if (r != 4 && r != 7)
        throw BadInput(std::to_string(p) + " = " + std::to_string(r) + " mod 9 is outside the p = 4, 7 mod 9 construction");
}

namespace {

std::string short_str(const CurvePoint& P) { return P.str(); }

}  // namespace

SolveResult solve(long p, int i, const SolveOptions& opts) {
    check_solvable_prime(p);
    if (i != 1 && i != 2) throw BadInput("power must be 1 or 2");
    SolveResult res;
    res.p = p;
    res.i = i;
    res.split = split_prime(p);
    mpz_class n = 1;
    for (int k = 0; k < i; ++k) n *= p;

    HeckeForm cache_f, cache_fc;
    FormProvider provider = opts.forms ? opts.forms : FormProvider([&](long pp, int ii, std::size_t M, bool cj) {
        HeckeForm& slot = cj ? cache_fc : cache_f;
        if (slot.terms() < M) slot = qexp_coefficients(pp, ii, M, cj);
        HeckeForm out = slot;
        out.coeffs.resize(M + 1);
        return out;
    });

    auto cands = candidate_points(p, i);
    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        unsigned bits = opts.bits << attempt;
        mpz_class bound = mpz_class(1) << (bits / 3);
        for (const auto& c : cands) {
            if (opts.eval == "tau" && c.site != Site::Tau) continue;
            if (opts.eval == "wtau" && c.site != Site::WTau) continue;
            SiteAttempt log{c.label(), bits, 0, ""};
            std::size_t M = terms_needed(c.im(), bits);
            log.terms = M;
            if (M > opts.max_terms) {
                log.outcome = "TermsCapExceeded";
                res.attempts.push_back(log);
                continue;
            }
            auto f = provider(p, i, M, false);
            auto fc = provider(p, i, M, true);
            std::optional<RecognizedPoint> rf, rfc;
            std::string why;
            try {
                rf = recognize(evaluate_cm(f, c, bits, opts.max_terms), res.split, i, bound, bits);
            } catch (const RecognitionFailed& e) {
                why += std::string("f: ") + e.what() + "; ";
            }
            try {
                rfc = recognize(evaluate_cm(fc, c, bits, opts.max_terms), res.split, i, bound, bits);
            } catch (const RecognitionFailed& e) {
                why += std::string("f^c: ") + e.what() + "; ";
            }

            std::vector<std::pair<std::string, CurvePoint>> kpoints;
            if (rf && rfc) kpoints.emplace_back("difference", twist_and_combine(*rf, *rfc));
            if (rf && !rf->torsion()) kpoints.emplace_back("f", rf->twisted);
            if (rfc && !rfc->torsion()) kpoints.emplace_back("f^c", rfc->twisted);
            if (rf && rfc) kpoints.emplace_back("sum", add(rf->twisted, rfc->twisted));

            for (auto& [src, PK] : kpoints) {
                if (PK.inf || PK.x.is_zero()) continue;
                Descent d;
                try {
                    d = descend(PK);
                } catch (const DescentFailed& e) {
                    why += src + ": " + e.what() + "; ";
                    continue;
                }
                res.site = c;
                res.bits = bits;
                res.terms = M;
                res.Pf = rf;
                res.Pfc = rfc;
                res.point_K = PK;
                res.point_K_source = src;
                res.descent = d;
                res.point_432 = isogeny_to_432(d.point, n);
                res.cube_sum = to_cube_sum(res.point_432);

                auto add_check = [&](std::string name, bool ok, std::string detail) {
                    res.checks.push_back({std::move(name), ok, std::move(detail)});
                };
                if (rf) add_check("curve_residual_f", rf->raw.residual_log2 < -double(bits) + 40,
                                  "log2 residual " + std::to_string(rf->raw.residual_log2));
                if (rfc) add_check("curve_residual_fc", rfc->raw.residual_log2 < -double(bits) + 40,
                                   "log2 residual " + std::to_string(rfc->raw.residual_log2));
                if (rf) add_check("reembed_x_f", rf->x_residual_log2 < -double(bits) / 2,
                                  "log2 residual " + std::to_string(rf->x_residual_log2));
                if (rfc) add_check("reembed_x_fc", rfc->x_residual_log2 < -double(bits) / 2,
                                   "log2 residual " + std::to_string(rfc->x_residual_log2));
                add_check("point_K_on_curve", on_curve(PK), short_str(PK));
                add_check("point_Q_rational", d.point.is_rational() && on_curve(d.point), short_str(d.point));
                add_check("nontorsion", d.cert.nontorsion, "[" + d.cert.bound.get_str() + "]P != O");
                add_check("cube_sum_exact", res.cube_sum.verify(),
                          "u^3 + v^3 = " + mpq_class(res.cube_sum.u * res.cube_sum.u * res.cube_sum.u +
                                                     res.cube_sum.v * res.cube_sum.v * res.cube_sum.v)
                                               .get_str());
                for (const auto& ch : res.checks)
                    if (!ch.ok) throw InternalCheckFailed(ch.name + ": " + ch.detail);
                // a torsion value at the site should be minus the image of the cusp 0
                for (const auto* rp : {&rf, &rfc}) {
                    if (!*rp || !(*rp)->torsion() || (*rp)->twisted.inf) continue;
                    WorkingPrecision wp(bits + kGuardBits);
                    auto cusp = l_value_and_cusp_zero(p, i, bits, (*rp)->raw.conjugate);
                    double d = log2_abs(abs((*rp)->raw.y + cusp.y));
                    res.diagnostics.push_back({std::string((*rp)->raw.conjugate ? "phic" : "phi") + "_equals_minus_cusp_image",
                                               d < -double(bits) / 2, "log2 |y(tau) + y(0)| = " + std::to_string(d)});
                }
                log.outcome = "ok (" + src + ")";
                res.attempts.push_back(log);
                return res;
            }
            log.outcome = why.empty() ? "torsion only" : why;
            res.attempts.push_back(log);
        }
    }
    throw PrecisionExhausted("no candidate site produced a certified point for p = " + std::to_string(p));
}

}  // namespace cubesum

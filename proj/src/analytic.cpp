#include "cubesum/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubesum/errors.hpp"

namespace cubesum {

namespace {

Real eps_bits(unsigned bits) { return ldexp(Real(1), -static_cast<int>(bits)); }

BigComplex times_omega(const BigComplex& t) {
    static thread_local Real half_s3;
    half_s3 = sqrt3_real() / 2;
    return {Real(-t.re / 2 - half_s3 * t.im), Real(half_s3 * t.re - t.im / 2)};
}

// (a + b w) * t
BigComplex eis_times(const EisensteinInt& c, const BigComplex& t) {
    BigComplex out;
    if (c.a != 0) out += t * to_real(c.a);
    if (c.b != 0) out += times_omega(t) * to_real(c.b);
    return out;
}

std::size_t terms_needed_f(double im_tau, unsigned bits) {
    // tail of sum a_n q^n bounded by sum 2n |q|^n
    double lq = -2.0 * M_PI * im_tau;  // log |q|
    double q = std::exp(lq);
    double target = -static_cast<double>(bits) * std::log(2.0) + 2.0 * std::log1p(-q) - std::log(2.0);
    std::size_t M = 1;
    while (std::log(static_cast<double>(M + 1)) + (M + 1) * lq > target) M = M < 16 ? M + 1 : M + M / 8;
    return M;
}

}  // namespace

BigComplex to_complex(const KNum& x) {
    Real a = to_real(x.a), b = to_real(x.b);
    return {Real(a - b / 2), Real(b * sqrt3_real() / 2)};
}

// ---------------------------------------------------------------- lattices

BigComplex g3_unit_lattice(unsigned bits) {
    WorkingPrecision wp(bits + kGuardBits);
    Real q = -exp(-pi_real() * sqrt3_real());
    Real eps = eps_bits(bits + kGuardBits);
    Real sum = 0, qn = 1;
    for (long n = 1; n < 100000; ++n) {
        qn *= q;
        Real n5 = Real(n) * n * n * n * n;
        Real term = n5 * qn / (1 - qn);
        sum += term;
        if (boost::multiprecision::abs(term) < eps) break;
    }
    Real E6 = 1 - 504 * sum;
    Real pi6 = boost::multiprecision::pow(pi_real(), 6);
    return BigComplex(Real(8 * pi6 / 27 * E6));
}

std::vector<BigComplex> laurent_coefficients(const BigComplex& g3, std::size_t K) {
    std::vector<BigComplex> c(std::max<std::size_t>(K + 1, 4));
    c[2] = BigComplex(0);
    c[3] = g3 / Real(28);
    for (std::size_t n = 4; n <= K; ++n) {
        BigComplex s;
        for (std::size_t m = 2; m + 2 <= n; ++m) {
            if (c[m].re == 0 && c[m].im == 0) continue;
            if (c[n - m].re == 0 && c[n - m].im == 0) continue;
            s += c[m] * c[n - m];
        }
        c[n] = s * Real(Real(3) / Real((2 * n + 1) * (n - 3)));
    }
    c.resize(K + 1);
    return c;
}

BigComplex eisenstein_G(const std::vector<BigComplex>& c, std::size_t n) {
    return c.at(n) / Real(2 * n - 1);
}

PeriodLattice::PeriodLattice(BigComplex Omega, BigComplex g3, unsigned bits)
    : Omega_(std::move(Omega)), g3_(std::move(g3)), bits_(bits) {
    // |u| <= 0.35 after halving: terms fall like 0.35^(2n)
    double per_term = 2.0 * std::log2(1.0 / 0.35);
    auto K = static_cast<std::size_t>((bits + kGuardBits + 16) / per_term) + 8;
    laurent_ = laurent_coefficients(g3_, K);
}

void PeriodLattice::coords(const BigComplex& z, Real& s, Real& t) const {
    BigComplex u = z / Omega_;
    t = 2 * u.im / sqrt3_real();
    s = u.re + t / 2;
}

BigComplex PeriodLattice::from_coords(const Real& s, const Real& t) const {
    BigComplex u(Real(s - t / 2), Real(t * sqrt3_real() / 2));
    return u * Omega_;
}

BigComplex PeriodLattice::reduce(const BigComplex& z) const {
    Real s, t;
    coords(z, s, t);
    s -= round(s);
    t -= round(t);
    BigComplex best = from_coords(s, t);
    Real best_n = norm2(best);
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            if (i == 0 && j == 0) continue;
            BigComplex c = from_coords(Real(s + i), Real(t + j));
            Real n = norm2(c);
            if (n < best_n) {
                best = c;
                best_n = n;
            }
        }
    return best;
}

Real PeriodLattice::lattice_residual(const BigComplex& z) const {
    Real s, t;
    coords(z, s, t);
    Real ds = boost::multiprecision::abs(Real(s - round(s)));
    Real dt = boost::multiprecision::abs(Real(t - round(t)));
    return ds > dt ? ds : dt;
}

PeriodLattice lattice_of_curve(const KNum& D, unsigned bits) {
    if (D.is_zero()) throw std::invalid_argument("lattice_of_curve: D = 0");
    WorkingPrecision wp(bits + kGuardBits);
    BigComplex g3 = -to_complex(D);
    BigComplex Omega = root(g3_unit_lattice(bits) / g3, 6);
    return PeriodLattice(Omega, g3, bits);
}

// ---------------------------------------------------------------- p-function

WpValue wp_eval(const PeriodLattice& L, const BigComplex& z) {
    WorkingPrecision wp(L.bits() + kGuardBits);
    BigComplex u = L.reduce(z);
    Real om = abs(L.Omega());
    Real au = abs(u);
    if (au < om * eps_bits(L.bits() / 2)) throw PoleAtLatticePoint("z is congruent to 0 mod L");
    int halvings = 0;
    Real limit = om * Real(0.35);
    while (au > limit) {
        u = u / Real(2);
        au /= 2;
        ++halvings;
    }
    const auto& c = L.laurent();
    BigComplex z2 = u * u;
    BigComplex P = BigComplex(1) / z2;
    BigComplex Pd = BigComplex(-2) / (z2 * u);
    BigComplex pw = z2;  // u^(2n-2) at n = 2
    Real eps = eps_bits(L.bits() + kGuardBits);
    Real scale = abs(P);
    int small = 0;
    for (std::size_t n = 2; n < c.size(); ++n, pw *= z2) {
        if (c[n].re == 0 && c[n].im == 0) continue;
        BigComplex term = c[n] * pw;
        P += term;
        Pd += term * Real(2 * n - 2) / u;
        if (abs(term) < eps * scale) {
            if (++small >= 2) break;
        } else {
            small = 0;
        }
    }
    // doubling on y^2 = x^3 - g3/4 with x = p, y = p'/2
    BigComplex x = P, y = Pd / Real(2);
    for (int k = 0; k < halvings; ++k) {
        BigComplex lam = x * x * Real(3) / (y * Real(2));
        BigComplex x2 = lam * lam - x * Real(2);
        BigComplex y2 = lam * (x - x2) - y;
        x = x2;
        y = y2;
    }
    return {x, y * Real(2)};
}

// ---------------------------------------------------------------- q-expansions

std::size_t terms_needed(double im_tau, unsigned bits) {
    if (im_tau <= 0) throw std::invalid_argument("terms_needed: Im(tau) must be positive");
    double l2q = -2.0 * M_PI * im_tau / std::log(2.0);
    double q = std::exp(-2.0 * M_PI * im_tau);
    double need = (static_cast<double>(bits) + 1.0 - std::log2(1.0 - q)) / (-l2q);
    return static_cast<std::size_t>(std::ceil(need));
}

EvalZResult eval_z(const HeckeForm& f, const BigComplex& tau, unsigned bits, std::size_t cap) {
    if (tau.im <= 0) throw std::invalid_argument("eval_z: Im(tau) must be positive");
    double im = tau.im.convert_to<double>();
    std::size_t M = terms_needed(im, bits);
    if (M > cap) throw TermsCapExceeded("need " + std::to_string(M) + " terms, cap " + std::to_string(cap));
    if (M > f.terms())
        throw std::invalid_argument("eval_z: form has " + std::to_string(f.terms()) + " coefficients, need " +
                                    std::to_string(M));
    unsigned extra = static_cast<unsigned>(std::log2(static_cast<double>(M) + 1)) + 8;
    WorkingPrecision wp(bits + kGuardBits + extra);
    BigComplex q = exp(BigComplex(Real(0), Real(2 * pi_real())) * tau);
    BigComplex qn(1), z;
    for (std::size_t n = 1; n <= M; ++n) {
        qn *= q;
        const auto& a = f.a(n);
        if (a.is_zero()) continue;
        z += eis_times(a, qn / Real(static_cast<double>(n)));
    }
    return {z, M};
}

EvalZResult eval_z(const HeckeForm& f, const KNum& tau, unsigned bits, std::size_t cap) {
    WorkingPrecision wp(bits + kGuardBits + 32);
    return eval_z(f, to_complex(tau), bits, cap);
}

BigComplex eval_f(const HeckeForm& f, const BigComplex& tau, unsigned bits) {
    std::size_t M = terms_needed_f(tau.im.convert_to<double>(), bits);
    if (M > f.terms()) throw std::invalid_argument("eval_f: form too short");
    WorkingPrecision wp(bits + kGuardBits + 16);
    BigComplex q = exp(BigComplex(Real(0), Real(2 * pi_real())) * tau);
    BigComplex qn(1), s;
    for (std::size_t n = 1; n <= M; ++n) {
        qn *= q;
        if (!f.a(n).is_zero()) s += eis_times(f.a(n), qn);
    }
    return s;
}

BigComplex fricke_constant(long p, int i, unsigned bits, double x, double y) {
    long N = conductor_and_level(p, i).N;
    WorkingPrecision wp(bits + kGuardBits + 16);
    Real sN = sqrt(Real(N));
    BigComplex tau(Real(x), Real(Real(y) / sN));
    BigComplex wt = BigComplex(-1) / (tau * Real(N));
    std::size_t M = std::max(terms_needed_f(tau.im.convert_to<double>(), bits),
                             terms_needed_f(wt.im.convert_to<double>(), bits));
    auto f = qexp_coefficients(p, i, M);
    auto fc = f.conjugated();
    BigComplex num = eval_f(f, wt, bits);
    BigComplex den = tau * tau * Real(N) * eval_f(fc, tau, bits);
    return num / den;
}

BigComplex gauss_sum(const PrimeSplit& s, int power, unsigned bits) {
    if (((power % 3) + 3) % 3 == 0) throw TrivialCharacter("gauss_sum needs a nontrivial cubic character");
    WorkingPrecision wp(bits + kGuardBits);
    BigComplex out;
    Real two_pi_p = 2 * pi_real() / Real(s.p);
    BigComplex w = omega_c(), w2 = w * w;
    for (long u = 1; u < s.p; ++u) {
        auto sym = cubic_residue_symbol(EisensteinInt(u), s.pi);
        int k = (sym.k * power % 3 + 3) % 3;
        BigComplex e = expi(Real(two_pi_p * u));
        out += k == 0 ? e : k == 1 ? e * w : e * w2;
    }
    return out;
}

CuspReport l_value_and_cusp_zero(long p, int i, unsigned bits, bool conjugate) {
    long N = conductor_and_level(p, i).N;
    WorkingPrecision wp(bits + kGuardBits);
    BigComplex C = fricke_constant(p, i, bits);
    if (conjugate) C = BigComplex(1) / C;
    BigComplex tau0(Real(0), Real(1 / sqrt(Real(N))));
    std::size_t M = terms_needed(tau0.im.convert_to<double>(), bits + 8);
    auto f = qexp_coefficients(p, i, M, conjugate);
    auto g = f.conjugated();
    BigComplex z0 = eval_z(f, tau0, bits + 8, M).z - C * eval_z(g, tau0, bits + 8, M).z;

    auto L = lattice_of_curve(KNum(f.curve_D()), bits);
    CuspReport rep;
    rep.z0 = z0;
    BigComplex s3z(Real(-z0.im * sqrt3_real()), Real(z0.re * sqrt3_real()));
    rep.residual_sqrt3 = L.lattice_residual(s3z);
    rep.residual_z0 = L.lattice_residual(z0);
    rep.torsion_ok = rep.residual_sqrt3 < eps_bits(bits / 2) && rep.residual_z0 > Real(0.01);
    if (rep.residual_z0 > Real(0.01)) {
        auto v = wp_eval(L, z0);
        rep.x = v.wp;
        rep.y = v.dwp / Real(2);
    }
    return rep;
}

}  // namespace cubesum

#pragma once
// Reference computations written independently of the library, used as
// ground truth by the unit and acceptance tests. Deliberately naive.

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cubesum/analytic.hpp"
#include "cubesum/eisenstein.hpp"

namespace oracle {

using u64 = std::uint64_t;
using cubesum::EisensteinInt;

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline u64 mod(const mpz_class& z, u64 l) {
    mpz_class r = z % static_cast<unsigned long>(l);
    if (r < 0) r += l;
    return r.get_ui();
}

// F_l (deg 1) or F_l[s]/(s^2 + s + 1) (deg 2, l = 2 mod 3); elements are (x, y) = x + y s.
struct Field {
    u64 l;
    int deg;
    using E = std::pair<u64, u64>;
    u64 size() const { return deg == 1 ? l : l * l; }
    E elem(u64 idx) const { return {idx % l, deg == 1 ? 0 : idx / l}; }
    u64 idx(E e) const { return e.first + l * e.second; }
    E add(E u, E v) const { return {(u.first + v.first) % l, (u.second + v.second) % l}; }
    E sub(E u, E v) const { return {(u.first + l - v.first) % l, (u.second + l - v.second) % l}; }
    E mul(E u, E v) const {
        // (a + b s)(c + d s) = ac + (ad + bc) s + bd s^2, s^2 = -1 - s
        u64 ac = u.first * v.first % l, bd = u.second * v.second % l;
        u64 mid = (u.first * v.second + u.second * v.first) % l;
        return {(ac + l - bd) % l, (mid + l - bd) % l};
    }
    E pw(E b, u64 e) const {
        E r{1 % l, 0};
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    bool zero(E e) const { return e.first == 0 && e.second == 0; }
};

// #E(F) for y^2 = x^3 + c over the field, counted with a table of square roots.
inline long count_affine_plus_one(const Field& F, Field::E c) {
    std::vector<int> roots(F.size(), 0);
    for (u64 t = 0; t < F.size(); ++t) {
        auto e = F.elem(t);
        roots[F.idx(F.mul(e, e))]++;
    }
    long n = 1;
    for (u64 t = 0; t < F.size(); ++t) {
        auto x = F.elem(t);
        n += roots[F.idx(F.add(F.mul(F.mul(x, x), x), c))];
    }
    return n;
}

// Count for y^2 = x^3 + D/4 modulo a split prime of norm l at which w = wimg,
// or modulo the inert prime l (wimg ignored).
inline long count_points(const EisensteinInt& D, u64 l, bool inert, u64 wimg) {
    Field F{l, inert ? 2 : 1};
    Field::E d = inert ? Field::E{mod(D.a, l), mod(D.b, l)} : Field::E{(mod(D.a, l) + mod(D.b, l) * wimg) % l, 0};
    u64 inv4 = powmod(4, l - 2, l);
    return count_affine_plus_one(F, F.mul(d, {inv4, 0}));
}

// value of the cubic character of F_{q^2} as a power of s (or -1 for 0)
inline int cubic_char(const Field& F, Field::E u) {
    if (F.zero(u)) return -1;
    auto v = F.pw(u, (F.size() - 1) / 3);
    if (v == Field::E{1, 0}) return 0;
    if (v == Field::E{0, 1}) return 1;
    return 2;
}

inline EisensteinInt w_pow(int k) {
    k = ((k % 3) + 3) % 3;
    return k == 0 ? EisensteinInt(1) : k == 1 ? EisensteinInt(0, 1) : EisensteinInt(-1, -1);
}

// J(chi, chi) = sum chi(u) chi(1 - u) over F_{q^2}, q = 2 mod 3
inline EisensteinInt jacobi_cubic(u64 q) {
    Field F{q, 2};
    EisensteinInt J(0);
    for (u64 t = 0; t < F.size(); ++t) {
        auto u = F.elem(t);
        int a = cubic_char(F, u), b = cubic_char(F, F.sub({1, 0}, u));
        if (a >= 0 && b >= 0) J = J + w_pow(a + b);
    }
    return J;
}

// rho(u) = #{t : t^2 = u} - 1 over F_{q^2}
inline std::vector<int> rho_table(const Field& F) {
    std::vector<int> r(F.size(), -1);
    for (u64 t = 0; t < F.size(); ++t) {
        auto e = F.elem(t);
        r[F.idx(F.mul(e, e))]++;
    }
    return r;
}

// J(rho, chi) = sum rho(u) chi(1 - u)
inline EisensteinInt jacobi_rho_cubic(u64 q) {
    Field F{q, 2};
    auto rho = rho_table(F);
    EisensteinInt J(0);
    for (u64 t = 0; t < F.size(); ++t) {
        auto u = F.elem(t);
        int b = cubic_char(F, F.sub({1, 0}, u));
        if (b >= 0) J = J + EisensteinInt(rho[t]) * w_pow(b);
    }
    return J;
}

// chi(4) in F_{q^2} as an Eisenstein integer (0 when q = 2)
inline EisensteinInt cubic_char_of_int(u64 q, u64 a) {
    Field F{q, 2};
    int k = cubic_char(F, {a % q, 0});
    return k < 0 ? EisensteinInt(0) : w_pow(k);
}

// a_n of the form attached to pi^i by direct enumeration of generators
// alpha = 1 mod 3 of norm n: sum w^(-k i) alpha with alpha^((p-1)/3) = w^k mod pi.
inline EisensteinInt hecke_coefficient(long p, int i, const EisensteinInt& pi, long n) {
    // image of w modulo pi = a + b w: w = -a/b
    u64 P = static_cast<u64>(p);
    u64 wi = (P - mod(pi.a, P)) % P * powmod(mod(pi.b, P), P - 2, P) % P;
    EisensteinInt s(0);
    long bmax = 2 * static_cast<long>(std::sqrt(static_cast<double>(n))) + 2;
    for (long b = -bmax; b <= bmax; ++b)
        for (long a = -bmax; a <= bmax; ++a) {
            if (a * a - a * b + b * b != n) continue;
            if (((a - 1) % 3 + 3) % 3 != 0 || (b % 3 + 3) % 3 != 0) continue;
            u64 r = (mod(a, P) + mod(b, P) * wi) % P;
            if (r == 0) continue;
            u64 v = powmod(r, (P - 1) / 3, P);
            int k = v == 1 ? 0 : v == wi ? 1 : 2;
            s = s + w_pow(-k * i) * EisensteinInt(a, b);
        }
    return s;
}

// p and p'/ by the product expansion in x = e^{2 pi i u}, q = e^{2 pi i w},
// u = z/Omega. Independent of the Laurent/duplication evaluator.
inline cubesum::WpValue wp_qseries(const cubesum::BigComplex& Omega, const cubesum::BigComplex& z, int terms) {
    using cubesum::BigComplex;
    using cubesum::Real;
    Real pi = cubesum::pi_real();
    BigComplex twopii(Real(0), 2 * pi);
    BigComplex u = z / Omega;
    BigComplex x = cubesum::exp(twopii * u);
    BigComplex q = cubesum::exp(twopii * cubesum::omega_c());
    auto term = [](const BigComplex& y) {  // y/(1-y)^2
        BigComplex d = BigComplex(1) - y;
        return y / (d * d);
    };
    auto dterm = [](const BigComplex& y) {  // y(1+y)/(1-y)^3
        BigComplex d = BigComplex(1) - y;
        return y * (BigComplex(1) + y) / (d * d * d);
    };
    BigComplex S = BigComplex(Real(1) / 12) + term(x);
    BigComplex dS = dterm(x);
    BigComplex qn(1);
    BigComplex xinv = BigComplex(1) / x;
    for (int n = 1; n <= terms; ++n) {
        qn = qn * q;
        S = S + term(qn * x) + term(qn * xinv) - term(qn) * Real(2);
        dS = dS + dterm(qn * x) - dterm(qn * xinv);
    }
    BigComplex c = twopii / Omega;
    return {c * c * S, c * c * c * dS};
}

// Polynomials in two variables with integer coefficients, exponents (i, j).
using Poly2 = std::map<std::pair<int, int>, mpz_class>;

inline Poly2 p_add(Poly2 a, const Poly2& b, long sign = 1) {
    for (auto& [e, c] : b) a[e] += sign * c;
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
    return a;
}
inline Poly2 p_mul(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    return p_add(r, {});
}
inline Poly2 p_term(long c, int i, int j) { return {{{i, j}, mpz_class(c)}}; }

}  // namespace oracle

#include "cubesum/heckeform.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "cubesum/errors.hpp"

namespace cubesum {

Level conductor_and_level(long p, int i) {
    if (i != 1 && i != 2) throw BadPrimeClass("power must be 1 or 2");
    if (!is_prime(p) || (p % 9 != 4 && p % 9 != 7))
        throw BadPrimeClass(std::to_string(p) + " is not a prime = 4, 7 mod 9");
    long pi_mod9 = i == 1 ? p % 9 : (p * p) % 9;
    Level L;
    L.sqrt3_exponent = pi_mod9 == 4 ? 1 : 2;
    L.N = (L.sqrt3_exponent == 1 ? 9 : 27) * p;
    return L;
}

EisensteinInt hecke_psi(const EisensteinInt& g, const PrimeSplit& s, int i) {
    if (residue_mod3(g) != 1) throw BadNormalization(g.str() + " is not = 1 mod 3");
    if (divides(s.pi, g)) throw RamifiedIdeal(g.str() + " lies above the conductor prime");
    auto sym = cubic_residue_symbol(pow(s.pi, static_cast<unsigned>(i)), g);
    return conj(sym.value()) * g;
}

HeckeForm HeckeForm::conjugated() const {
    HeckeForm g = *this;
    g.conjugate = !conjugate;
    for (auto& c : g.coeffs) c = cubesum::conj(c);
    return g;
}

HeckeForm form_from_coefficients(long p, int i, std::vector<EisensteinInt> coeffs, bool conjugate) {
    HeckeForm f;
    f.p = p;
    f.i = i;
    auto s = split_prime(p);
    f.pi = s.pi;
    f.pibar = s.pibar;
    f.level = conductor_and_level(p, i);
    f.conjugate = conjugate;
    f.coeffs = std::move(coeffs);
    return f;
}

HeckeForm qexp_coefficients(long p, int i, std::size_t M, bool conjugate) {
    auto level = conductor_and_level(p, i);
    auto s = split_prime(p);
    long w = residue_map_omega(s.pi);

    // cubic character index of each residue mod p relative to w
    std::vector<int> dlog(p, -1);
    {
        long e = (p - 1) / 3;
        long w2 = w * w % p;
        for (long v = 1; v < p; ++v) {
            long t = 1, b = v, k = e;
            while (k) {
                if (k & 1) t = t * b % p;
                b = b * b % p;
                k >>= 1;
            }
            dlog[v] = t == 1 ? 0 : t == w ? 1 : t == w2 ? 2 : -1;
            if (dlog[v] < 0) throw InternalCheckFailed("cubic character table mod p");
        }
    }

    std::vector<std::int64_t> A(M + 1, 0), B(M + 1, 0);
    const auto Mi = static_cast<std::int64_t>(M);
    const auto ymax = static_cast<std::int64_t>(std::sqrt(4.0 * Mi / 3.0)) + 1;
    for (std::int64_t y = -(ymax / 3) * 3; y <= ymax; y += 3) {
        double disc = 4.0 * Mi - 3.0 * y * y;
        if (disc < 0) continue;
        auto lo = static_cast<std::int64_t>(std::floor((y - std::sqrt(disc)) / 2)) - 1;
        auto hi = static_cast<std::int64_t>(std::ceil((y + std::sqrt(disc)) / 2)) + 1;
        // x = 1 mod 3
        std::int64_t x = lo + ((1 - lo) % 3 + 3) % 3;
        for (; x <= hi; x += 3) {
            std::int64_t n = x * x - x * y + y * y;
            if (n == 0 || n > Mi) continue;
            long v = static_cast<long>((((x + (y % p) * w) % p) + p) % p);
            if (v == 0) continue;  // divisible by pi
            int k = (3 - (dlog[v] * i) % 3) % 3;  // conj of chi^i
            // (x + y w) * w^k
            std::int64_t a = x, b = y;
            for (int j = 0; j < k; ++j) {
                std::int64_t na = -b, nb = a - b;
                a = na;
                b = nb;
            }
            A[n] += a;
            B[n] += b;
        }
    }

    HeckeForm f;
    f.p = p;
    f.i = i;
    f.pi = s.pi;
    f.pibar = s.pibar;
    f.level = level;
    f.conjugate = false;
    f.coeffs.resize(M + 1);
    for (std::size_t n = 1; n <= M; ++n) f.coeffs[n] = EisensteinInt(A[n], B[n]);
    return conjugate ? f.conjugated() : f;
}

EisensteinInt nebentypus(const HeckeForm& f, long l) {
    if (!is_prime(l) || f.level.N % l == 0) throw BadInput("nebentypus needs a prime not dividing N");
    PrimeSplit s{f.p, f.pi, f.pibar};
    EisensteinInt psi_l;
    if (l % 3 == 1) {
        auto sl = split_prime(l);
        psi_l = hecke_psi(sl.pi, s, f.i) * hecke_psi(sl.pibar, s, f.i);
    } else {
        psi_l = hecke_psi(EisensteinInt(-l), s, f.i);
    }
    EisensteinInt xi = exact_div(psi_l, EisensteinInt(l % 3 == 1 ? l : -l));
    return f.conjugate ? conj(xi) : xi;
}

namespace {

// (D/alpha)_6 for alpha = 1 mod 3 prime to 6D, multiplicatively over prime factors.
int sextic_symbol_composite(const EisensteinInt& D, EisensteinInt alpha) {
    long n = norm(alpha).get_si();
    int k = 0;
    for (long l = 2; n > 1; ++l) {
        if (l * l > n) l = n;
        if (n % l) continue;
        int e = 0;
        while (n % l == 0) {
            n /= l;
            ++e;
        }
        if (l % 3 == 2) {
            auto sym = sextic_residue_symbol(D, EisensteinInt(-l));
            if (sym.zero) throw InternalCheckFailed("sextic symbol vanished");
            k += sym.k * (e / 2);
            continue;
        }
        auto sl = split_prime(l);
        for (const auto& pr : {sl.pi, sl.pibar}) {
            while (divides(pr, alpha)) {
                alpha = exact_div(alpha, pr);
                auto sym = sextic_residue_symbol(D, pr);
                if (sym.zero) throw InternalCheckFailed("sextic symbol vanished");
                k += sym.k;
            }
        }
    }
    return k % 6;
}

}  // namespace

TwistReport twist_check(long p, int i, std::size_t M) {
    auto f = qexp_coefficients(p, i, M);
    auto s = split_prime(p);
    EisensteinInt D(1);
    for (int j = 0; j < 6 - 2 * i; ++j) D = D * EisensteinInt(p);

    std::vector<EisensteinInt> b(M + 1, EisensteinInt(0));
    const auto Mi = static_cast<long>(M);
    const long ymax = static_cast<long>(std::sqrt(4.0 * Mi / 3.0)) + 2;
    for (long y = -(ymax / 3) * 3; y <= ymax; y += 3)
        for (long x = -ymax - 1; x <= ymax + 1; ++x) {
            if (((x % 3) + 3) % 3 != 1) continue;
            long n = x * x - x * y + y * y;
            if (n == 0 || n > Mi || n % 2 == 0 || n % p == 0) continue;
            EisensteinInt alpha(x, y);
            int k = sextic_symbol_composite(D, alpha);
            b[n] = b[n] + EisensteinInt::zeta_pow(-k) * alpha;
        }

    TwistReport rep;
    for (std::size_t n = 1; n <= M; ++n) {
        if (n % 2 == 0 || n % static_cast<std::size_t>(p) == 0) continue;
        auto chi = cubic_residue_symbol(EisensteinInt(static_cast<long>(n)), s.pi);
        EisensteinInt twisted = EisensteinInt::omega_pow(-chi.k * i) * f.a(n);
        if (b[n] != twisted)
            throw MismatchAt("n=" + std::to_string(n) + ": " + b[n].str() + " vs " + twisted.str());
        ++rep.checked;
    }
    return rep;
}

}  // namespace cubesum

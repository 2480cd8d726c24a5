#include "cubesum/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubesum/errors.hpp"
#include "cubesum/heckeform.hpp"

namespace cubesum {

LaurentSeries LaurentSeries::constant(const KNum& k, int order) {
    LaurentSeries s(0, std::vector<KNum>(std::max(order, 1), KNum(0)));
    s.c[0] = k;
    return s;
}

KNum LaurentSeries::coeff(int e) const {
    if (e < val) return KNum(0);
    if (e >= order()) throw std::out_of_range("coefficient beyond truncation order");
    return c[static_cast<std::size_t>(e - val)];
}

LaurentSeries LaurentSeries::truncated(int ord) const {
    LaurentSeries s = *this;
    if (ord < s.order()) s.c.resize(static_cast<std::size_t>(std::max(0, ord - val)));
    return s;
}

LaurentSeries LaurentSeries::normalized() const {
    std::size_t k = 0;
    while (k < c.size() && c[k].is_zero()) ++k;
    return LaurentSeries(val + static_cast<int>(k), std::vector<KNum>(c.begin() + k, c.end()));
}

std::string LaurentSeries::str() const {
    std::string s;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c[j].str() + ")q^" + std::to_string(val + static_cast<int>(j));
    }
    return (s.empty() ? std::string("0") : s) + " + O(q^" + std::to_string(order()) + ")";
}

namespace {

LaurentSeries add_scaled(const LaurentSeries& A, const LaurentSeries& B, long sign) {
    int v = std::min(A.val, B.val);
    int ord = std::min(A.order(), B.order());
    LaurentSeries out(v, std::vector<KNum>(static_cast<std::size_t>(std::max(0, ord - v)), KNum(0)));
    for (int e = v; e < ord; ++e) {
        KNum x = A.coeff(e), y = B.coeff(e);
        out.c[static_cast<std::size_t>(e - v)] = sign > 0 ? x + y : x - y;
    }
    return out;
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& A, const LaurentSeries& B) { return add_scaled(A, B, 1); }
LaurentSeries operator-(const LaurentSeries& A, const LaurentSeries& B) { return add_scaled(A, B, -1); }

LaurentSeries operator*(const LaurentSeries& A, const LaurentSeries& B) {
    int v = A.val + B.val;
    int ord = std::min(A.order() + B.val, B.order() + A.val);
    auto len = static_cast<std::size_t>(std::max(0, ord - v));
    LaurentSeries out(v, std::vector<KNum>(len, KNum(0)));
    for (std::size_t i = 0; i < A.c.size() && i < len; ++i) {
        if (A.c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len && j < B.c.size(); ++j) {
            if (B.c[j].is_zero()) continue;
            out.c[i + j] = out.c[i + j] + A.c[i] * B.c[j];
        }
    }
    return out;
}

LaurentSeries operator*(const LaurentSeries& A, const KNum& k) {
    LaurentSeries out = A;
    for (auto& x : out.c) x = x * k;
    return out;
}

LaurentSeries operator+(const LaurentSeries& A, const KNum& k) {
    return A + LaurentSeries::constant(k, A.order());
}

LaurentSeries inverse(const LaurentSeries& A0) {
    LaurentSeries A = A0.normalized();
    if (A.c.empty()) throw std::domain_error("inverse of a series that vanishes to its order");
    std::size_t L = A.c.size();
    LaurentSeries B(-A.val, std::vector<KNum>(L, KNum(0)));
    KNum inv0 = KNum(1) / A.c[0];
    B.c[0] = inv0;
    for (std::size_t n = 1; n < L; ++n) {
        KNum s(0);
        for (std::size_t k = 1; k <= n; ++k)
            if (!A.c[k].is_zero() && !B.c[n - k].is_zero()) s = s + A.c[k] * B.c[n - k];
        B.c[n] = -(s * inv0);
    }
    return B;
}

LaurentSeries operator/(const LaurentSeries& A, const LaurentSeries& B) { return A * inverse(B); }

LaurentSeries pow(const LaurentSeries& A, int e) {
    if (e < 0) return inverse(pow(A, -e));
    LaurentSeries r = LaurentSeries::constant(KNum(1), A.normalized().c.size()), b = A.normalized();
    bool first = true;
    while (e) {
        if (e & 1) {
            r = first ? b : r * b;
            first = false;
        }
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

LaurentSeries conj(const LaurentSeries& A) {
    LaurentSeries out = A;
    for (auto& x : out.c) x = conj(x);
    return out;
}

bool operator==(const LaurentSeries& A, const LaurentSeries& B) {
    int lo = std::min(A.val, B.val), hi = std::min(A.order(), B.order());
    for (int e = lo; e < hi; ++e)
        if (A.coeff(e) != B.coeff(e)) return false;
    return true;
}

std::vector<KNum> laurent_coefficients_exact(const KNum& g3, std::size_t K) {
    std::vector<KNum> c(std::max<std::size_t>(K + 1, 4), KNum(0));
    c[3] = g3 / KNum(28);
    for (std::size_t n = 4; n <= K; ++n) {
        KNum s(0);
        for (std::size_t m = 2; m + 2 <= n; ++m)
            if (!c[m].is_zero() && !c[n - m].is_zero()) s = s + c[m] * c[n - m];
        c[n] = s * KNum(mpq_class(3, static_cast<unsigned long>((2 * n + 1) * (n - 3))), 0);
    }
    c.resize(K + 1);
    return c;
}

namespace {

// u(q) = z(q)/q and the exact Laurent data of the curve attached to the form
struct Composition {
    LaurentSeries u;
    LaurentSeries Z;  // z^6
    std::vector<KNum> c;
};

Composition compose_setup(long p, int i, int M, bool conjugate, int extra) {
    if (M < 4) throw std::invalid_argument("series order must be at least 4");
    int L = M + extra;  // u through q^(L-1)
    auto f = qexp_coefficients(p, i, static_cast<std::size_t>(L), conjugate);
    Composition comp;
    comp.u = LaurentSeries(0, std::vector<KNum>(static_cast<std::size_t>(L), KNum(0)));
    for (int n = 1; n <= L; ++n)
        comp.u.c[static_cast<std::size_t>(n - 1)] = KNum(f.a(static_cast<std::size_t>(n))) / KNum(n);
    LaurentSeries u6 = pow(comp.u, 6);
    comp.Z = LaurentSeries(6, u6.c);
    auto mmax = static_cast<std::size_t>(L / 6 + 1);
    comp.c = laurent_coefficients_exact(-KNum(f.curve_D()), 3 * mmax + 3);
    return comp;
}

// sum_{m >= 1} coef(m) Z^m by Horner, truncated to the order of Z's data
template <class Coef>
LaurentSeries horner(const LaurentSeries& Z, std::size_t mmax, Coef coef, int ord) {
    LaurentSeries acc = LaurentSeries::constant(KNum(0), ord);
    for (std::size_t m = mmax; m >= 1; --m) {
        acc = (acc + coef(m)) * Z;
        acc = acc.truncated(ord);
    }
    return acc;
}

}  // namespace

LaurentSeries y_series(long p, int i, int M, bool conjugate) {
    // y z^3 = -1 + sum_m c_{3m} (3m - 1) Z^m with Z = z^6, then divide by q^3 u^3
    const int ord = M + 4;  // y*z^3 through q^(M+3)
    auto comp = compose_setup(p, i, M, conjugate, 4);
    std::size_t mmax = static_cast<std::size_t>(ord / 6 + 1);
    auto H = horner(comp.Z, mmax,
                    [&](std::size_t m) { return comp.c[3 * m] * KNum(static_cast<long>(3 * m - 1)); }, ord);
    LaurentSeries yz3 = H + KNum(-1);
    LaurentSeries y = yz3 * inverse(pow(comp.u, 3));
    y.val -= 3;
    y = y.truncated(M + 1);
    for (int e = y.val; e < y.order(); ++e) {
        KNum twice = y.coeff(e) * KNum(2);
        if (!twice.is_integral())
            throw RecognitionFailed("coefficient of q^" + std::to_string(e) + " is " + y.coeff(e).str() +
                                    ", outside (1/2)Z[w]");
    }
    return y;
}

LaurentSeries x_series(long p, int i, int M, bool conjugate) {
    // x z^2 = 1 + sum_m c_{3m} Z^m
    const int ord = M + 3;
    auto comp = compose_setup(p, i, M, conjugate, 3);
    std::size_t mmax = static_cast<std::size_t>(ord / 6 + 1);
    auto H = horner(comp.Z, mmax, [&](std::size_t m) { return comp.c[3 * m]; }, ord);
    LaurentSeries x = (H + KNum(1)) * inverse(pow(comp.u, 2));
    x.val -= 2;
    return x.truncated(M + 1);
}

LaurentSeries cube_root_series(const LaurentSeries& S0) {
    LaurentSeries S = S0.normalized();
    if (S.c.empty()) throw CubeRootNotInField("series vanishes to its truncation order");
    if (S.val % 3 != 0) throw CubeRootNotInField("leading exponent not divisible by 3");
    KNum r0;
    if (!exact_cube_root(S.c[0], r0)) throw CubeRootNotInField("leading coefficient " + S.c[0].str());
    const std::size_t L = S.c.size();
    LaurentSeries T(S.val / 3, std::vector<KNum>(L, KNum(0)));
    T.c[0] = r0;
    const KNum third = KNum(mpq_class(1, 3), 0);
    // each step doubles the number of correct coefficients
    for (std::size_t good = 1;; good *= 2) {
        LaurentSeries Tinv3 = inverse(pow(T, 3));
        LaurentSeries next = T * ((S * Tinv3) + KNum(2)) * third;
        next = next.truncated(T.order());
        bool done = next == T && good >= L;
        T = next;
        if (done || good > 2 * L) break;
    }
    LaurentSeries check = pow(T, 3) - S;
    for (const auto& x : check.c)
        if (!x.is_zero()) throw InternalCheckFailed("cube root iteration did not converge");
    return T;
}

FSeries f_plus_minus_series(long p, int i, int sign, int M) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    auto s = split_prime(p);
    auto y = y_series(p, i, M, false);
    auto yc = y_series(p, i, M, true);
    KNum half(mpq_class(sign, 2), 0);
    LaurentSeries A = y + KNum(pow(s.pibar, static_cast<unsigned>(i))) * half;
    LaurentSeries B = yc + KNum(pow(s.pi, static_cast<unsigned>(i))) * half;
    FSeries out;
    out.ratio = A / B;
    out.F = cube_root_series(out.ratio);
    out.congruence_ok = true;
    LaurentSeries d = A - B;
    for (const auto& x : d.c) {
        // divisible by sqrt(-3) iff integral with a + b = 0 mod 3
        if (!x.is_integral()) {
            out.congruence_ok = false;
            break;
        }
        mpz_class t = x.a.get_num() + x.b.get_num();
        if (t % 3 != 0) {
            out.congruence_ok = false;
            break;
        }
    }
    return out;
}

}  // namespace cubesum

#include "cubesum/curves.hpp"

#include <stdexcept>

#include "cubesum/errors.hpp"

namespace cubesum {

CurvePoint CurvePoint::infinity(const KNum& D) {
    CurvePoint P;
    P.D = D;
    P.inf = true;
    return P;
}

std::string CurvePoint::str() const {
    if (inf) return "O";
    return "(" + x.str() + ", " + y.str() + ")";
}

bool operator==(const CurvePoint& P, const CurvePoint& Q) {
    if (P.D != Q.D || P.inf != Q.inf) return false;
    return P.inf || (P.x == Q.x && P.y == Q.y);
}

bool on_curve(const CurvePoint& P) {
    if (P.inf) return true;
    return P.y * P.y == P.x * P.x * P.x + P.D / KNum(4);
}

CurvePoint make_point(const KNum& D, const KNum& x, const KNum& y) {
    CurvePoint P;
    P.D = D;
    P.x = x;
    P.y = y;
    if (!on_curve(P)) throw std::invalid_argument("point " + P.str() + " is not on y^2 = x^3 + (" + D.str() + ")/4");
    return P;
}

CurvePoint neg(const CurvePoint& P) {
    CurvePoint R = P;
    if (!R.inf) R.y = -R.y;
    return R;
}

CurvePoint add(const CurvePoint& P, const CurvePoint& Q) {
    if (P.D != Q.D) throw MixedCurves("D = " + P.D.str() + " vs " + Q.D.str());
    if (P.inf) return Q;
    if (Q.inf) return P;
    KNum lam;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return CurvePoint::infinity(P.D);
        lam = KNum(3) * P.x * P.x / (KNum(2) * P.y);
    } else {
        lam = (Q.y - P.y) / (Q.x - P.x);
    }
    CurvePoint R;
    R.D = P.D;
    R.x = lam * lam - P.x - Q.x;
    R.y = lam * (P.x - R.x) - P.y;
    return R;
}

CurvePoint sub(const CurvePoint& P, const CurvePoint& Q) { return add(P, neg(Q)); }

CurvePoint mul(long n, const CurvePoint& P) {
    if (n < 0) return mul(-n, neg(P));
    CurvePoint R = CurvePoint::infinity(P.D), B = P;
    while (n) {
        if (n & 1) R = add(R, B);
        n >>= 1;
        if (n) B = add(B, B);
    }
    return R;
}

CurvePoint endo_omega(const CurvePoint& P) {
    CurvePoint R = P;
    if (!R.inf) R.x = KNum::omega() * R.x;
    return R;
}

CurvePoint sqrt_minus3(const CurvePoint& P) { return add(P, endo_omega(mul(2, P))); }

CurvePoint galois_conj(const CurvePoint& P) {
    CurvePoint R = P;
    R.D = conj(P.D);
    if (!R.inf) {
        R.x = conj(P.x);
        R.y = conj(P.y);
    }
    return R;
}

MinimalModel minimal_model(const EisensteinInt& u) {
    long ra = mpz_fdiv_ui(u.a.get_mpz_t(), 2), rb = mpz_fdiv_ui(u.b.get_mpz_t(), 2);
    MinimalModel m;
    if (ra == 1 && rb == 0) {
        m.which = 1;
        m.a1 = KNum(1);
    } else if (ra == 0 && rb == 1) {
        m.which = 2;
        m.a1 = KNum::omega();
    } else if (ra == 1 && rb == 1) {
        m.which = 3;
        m.a1 = KNum::omega() * KNum::omega();
    } else {
        throw UnhandledResidue(u.str() + " is divisible by 2");
    }
    KNum D = KNum(u) * KNum(u);
    m.a6 = (D - m.a1 * m.a1) / KNum(4);
    if (!m.a6.is_integral()) throw InternalCheckFailed("minimal model constant is not integral");
    return m;
}

std::pair<KNum, KNum> isogeny_template(const KNum& A, const KNum& x, const KNum& y) {
    if (x.is_zero()) throw KernelPoint("x = 0 lies in the kernel");
    KNum x3 = x * x * x;
    return {(x3 + KNum(4) * A) / (x * x), y * (x3 - KNum(8) * A) / x3};
}

Point432 isogeny_to_432(const CurvePoint& P, const mpz_class& n) {
    if (P.inf) throw KernelPoint("point at infinity");
    if (!P.is_rational()) throw std::invalid_argument("isogeny_to_432 needs a rational point");
    mpq_class n2(n * n);
    if (P.D != KNum(mpq_class(n2), 0)) throw MixedCurves("point is not on y^2 = x^3 + n^2/4");
    const mpq_class& x = P.x.a;
    const mpq_class& y = P.y.a;
    if (x == 0) throw KernelPoint("x = 0 lies in the kernel");
    mpq_class x3 = x * x * x;
    Point432 Q;
    Q.n = n;
    Q.X = 4 * (x3 + n2) / (x * x);
    Q.Y = 8 * y * (x3 - 2 * n2) / x3;
    if (Q.Y * Q.Y != Q.X * Q.X * Q.X - 432 * n2) throw InternalCheckFailed("isogeny image off the curve");
    return Q;
}

CubeSum to_cube_sum(const Point432& Q) {
    if (Q.X == 0) throw DegenerateImage("X = 0");
    CubeSum s;
    s.target = Q.n;
    mpq_class n36(36 * Q.n);
    s.u = (n36 + Q.Y) / (6 * Q.X);
    s.v = (n36 - Q.Y) / (6 * Q.X);
    s.u.canonicalize();
    s.v.canonicalize();
    if (!s.verify()) throw InternalCheckFailed("u^3 + v^3 != n");
    return s;
}

mpz_class reduction_count(const mpq_class& D, long l) {
    if (l < 5 || !is_prime(l)) throw BadReduction("need a prime >= 5, got " + std::to_string(l));
    mpz_class num = D.get_num(), den = D.get_den();
    if (num % l == 0 || den % l == 0) throw BadReduction(std::to_string(l) + " divides D");
    long dn = mpz_fdiv_ui(num.get_mpz_t(), l), dd = mpz_fdiv_ui(den.get_mpz_t(), l);
    // D mod l = dn / dd
    long inv = 1, b = dd, e = l - 2;
    while (e) {
        if (e & 1) inv = inv * b % l;
        b = b * b % l;
        e >>= 1;
    }
    long d = dn * inv % l;
    std::vector<long> sq(l, 0);
    for (long t = 0; t < l; ++t) ++sq[t * t % l];
    long count = 1;
    for (long x = 0; x < l; ++x) count += sq[(4 * (x * x % l) * x + d) % l];
    return mpz_class(count);
}

TorsionCertificate certify_nontorsion(const CurvePoint& P, int nprimes) {
    TorsionCertificate c;
    if (!P.D.is_rational() || !P.is_rational()) throw std::invalid_argument("certify_nontorsion works over Q");
    if (P.inf || P.x.is_zero()) return c;
    const mpq_class& D = P.D.a;
    c.bound = 0;
    for (long l = 5; static_cast<int>(c.primes.size()) < nprimes; l += 2) {
        if (!is_prime(l) || D.get_num() % l == 0 || D.get_den() % l == 0) continue;
        mpz_class n = reduction_count(D, l);
        c.primes.push_back(l);
        mpz_gcd(c.bound.get_mpz_t(), c.bound.get_mpz_t(), n.get_mpz_t());
    }
    c.nontorsion = !mul(c.bound.get_si(), P).inf;
    return c;
}

bool is_nontorsion(const CurvePoint& P) { return certify_nontorsion(P).nontorsion; }

}  // namespace cubesum

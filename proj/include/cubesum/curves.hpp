#pragma once
// Exact points on y^2 = x^3 + D/4 over K = Q(w) (and Q as the subfield b = 0),
// the 3-isogeny to Y^2 = X^3 - 432 n^2 and the map to rational cube sums.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cubesum/kfield.hpp"

namespace cubesum {

struct CurvePoint {
    KNum D;  // curve parameter
    KNum x, y;
    bool inf = false;

    static CurvePoint infinity(const KNum& D);
    bool is_rational() const { return inf || (x.is_rational() && y.is_rational()); }
    std::string str() const;
};

bool operator==(const CurvePoint& P, const CurvePoint& Q);
inline bool operator!=(const CurvePoint& P, const CurvePoint& Q) { return !(P == Q); }

bool on_curve(const CurvePoint& P);
CurvePoint make_point(const KNum& D, const KNum& x, const KNum& y);  // throws if not on the curve

CurvePoint neg(const CurvePoint& P);
CurvePoint add(const CurvePoint& P, const CurvePoint& Q);  // throws MixedCurves
CurvePoint sub(const CurvePoint& P, const CurvePoint& Q);
CurvePoint mul(long n, const CurvePoint& P);
CurvePoint endo_omega(const CurvePoint& P);    // (w x, y)
CurvePoint sqrt_minus3(const CurvePoint& P);   // P + [w]([2]P)
CurvePoint galois_conj(const CurvePoint& P);   // w -> w^2 on coordinates and D

// Minimal model of y^2 = x^3 + u^2/4 for u coprime to 2:
//   y^2 + a y = x^3 + (u^2 - a^2)/4 with a in {1, w, w^2}, a = u mod 2.
struct MinimalModel {
    int which = 0;  // 1, 2, 3 for a = 1, w, w^2
    KNum a1, a6;
};
MinimalModel minimal_model(const EisensteinInt& u);

// (x, y) on y^2 = x^3 + n^2/4  ->  (4(x^3 + n^2)/x^2, 8y(x^3 - 2n^2)/x^3) on Y^2 = X^3 - 432 n^2.
struct Point432 {
    mpq_class X, Y;
    mpz_class n;
};
Point432 isogeny_to_432(const CurvePoint& P, const mpz_class& n);
// Unscaled map of the same shape for y^2 = x^3 + A (A arbitrary):
// (x, y) -> ((x^3 + 4A)/x^2, y(x^3 - 8A)/x^3) on y^2 = x^3 - 27 A.
std::pair<KNum, KNum> isogeny_template(const KNum& A, const KNum& x, const KNum& y);

struct CubeSum {
    mpq_class u, v;
    mpz_class target;
    bool verify() const { return u * u * u + v * v * v == mpq_class(target); }
};
// u = (36 n + Y)/(6X), v = (36 n - Y)/(6X)
CubeSum to_cube_sum(const Point432& Q);

// Orders #E(F_l) of the reduction of y^2 = x^3 + D/4 for rational D, by counting.
mpz_class reduction_count(const mpq_class& D, long l);

struct TorsionCertificate {
    bool nontorsion = false;
    std::vector<long> primes;  // good primes used
    mpz_class bound;           // gcd of the reduction counts
};
// P on y^2 = x^3 + D/4 over Q. Non-torsion iff [m]P != O for m = gcd of #E(F_l)
// over good odd primes l (torsion injects into those groups).
TorsionCertificate certify_nontorsion(const CurvePoint& P, int nprimes = 4);
bool is_nontorsion(const CurvePoint& P);

}  // namespace cubesum

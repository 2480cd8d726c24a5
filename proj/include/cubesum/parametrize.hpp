#pragma once
// The pipeline from CM points to rational cube sums: evaluate the modular
// parametrization, recognize the coordinates in K, twist to E: y^2 = x^3 + p^(2i)/4,
// combine, descend to Q and certify.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubesum/analytic.hpp"
#include "cubesum/cmpoint.hpp"
#include "cubesum/curves.hpp"
#include "cubesum/heckeform.hpp"

namespace cubesum {

struct RawPoint {
    Candidate cand;
    bool conjugate = false;  // evaluated with f^c
    BigComplex x, y;
    bool at_infinity = false;
    double residual_log2 = 0;  // log2 |y^2 - x^3 - D/4|
    std::size_t terms = 0;
};

RawPoint evaluate_cm(const HeckeForm& f, const Candidate& c, unsigned bits, std::size_t cap);

// Best rational approximation a/d with d <= bound and |x - a/d| < tol, if any.
std::optional<mpq_class> recognize_rational(const Real& x, const mpz_class& bound, const Real& tol);
// Element of K near z, both coordinates recognized with a common check.
std::optional<KNum> recognize_k(const BigComplex& z, const mpz_class& bound, const Real& tol);

struct RecognizedPoint {
    RawPoint raw;
    KNum y;           // in K
    KNum X, Y;        // twisted coordinates: X = w^k cbrt(mu^2) x, Y = mu y
    int unit_twist = 0;       // k
    double x_residual_log2 = 0;  // re-embedding check of X against the raw x
    CurvePoint twisted;       // on y^2 = x^3 + p^(2i)/4 over K
    bool torsion() const { return twisted.inf || X.is_zero(); }
};

// mu = pi^i for f and pibar^i for f^c. Throws RecognitionFailed.
RecognizedPoint recognize(const RawPoint& raw, const PrimeSplit& s, int i, const mpz_class& bound, unsigned bits);

// P_f - P_fc on y^2 = x^3 + p^(2i)/4.
CurvePoint twist_and_combine(const RecognizedPoint& Pf, const RecognizedPoint& Pfc);

struct Descent {
    CurvePoint point;      // over Q
    std::string branch;    // "trace" or "sqrt-3"
    int unit_twist = 0;
    int sign = 1;
    TorsionCertificate cert;
};
// Throws DescentFailed.
Descent descend(const CurvePoint& PK);

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

using FormProvider = std::function<HeckeForm(long p, int i, std::size_t M, bool conjugate)>;

struct SolveOptions {
    unsigned bits = 192;
    std::size_t max_terms = 2000000;
    std::string eval = "auto";  // auto | tau | wtau
    int retries = 4;
    FormProvider forms;  // defaults to qexp_coefficients
};

struct SiteAttempt {
    std::string site;
    unsigned bits = 0;
    std::size_t terms = 0;
    std::string outcome;
};

struct SolveResult {
    long p = 0;
    int i = 1;
    PrimeSplit split;
    Candidate site;
    unsigned bits = 0;
    std::size_t terms = 0;
    std::optional<RecognizedPoint> Pf, Pfc;
    CurvePoint point_K;
    std::string point_K_source;  // "difference", "f", "f^c", "sum"
    Descent descent;
    Point432 point_432;
    CubeSum cube_sum;
    std::vector<Check> checks;
    std::vector<Check> diagnostics;  // informative only, never fatal
    std::vector<SiteAttempt> attempts;
};

// Full pipeline; throws BadInput, PrecisionExhausted or InternalCheckFailed.
SolveResult solve(long p, int i, const SolveOptions& opts = {});

// Validates p for the cube-sum problem; throws BadInput with the reason.
void check_solvable_prime(long p);

}  // namespace cubesum

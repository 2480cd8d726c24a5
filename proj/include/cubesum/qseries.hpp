#pragma once
// Truncated Laurent series in q over K = Q(w), exact. Used for the cusp
// expansions x(q), y(q) of the modular parametrization and the functions F+-.

#include <cstddef>
#include <string>
#include <vector>

#include "cubesum/kfield.hpp"

namespace cubesum {

struct LaurentSeries {
    int val = 0;             // exponent of c[0]
    std::vector<KNum> c;     // known through q^(val + c.size() - 1)

    LaurentSeries() = default;
    LaurentSeries(int v, std::vector<KNum> coeffs) : val(v), c(std::move(coeffs)) {}
    static LaurentSeries constant(const KNum& k, int order);

    int order() const { return val + static_cast<int>(c.size()); }  // result is exact mod q^order
    KNum coeff(int e) const;
    LaurentSeries truncated(int order) const;
    // drops leading zero coefficients (val increases)
    LaurentSeries normalized() const;
    std::string str() const;
};

LaurentSeries operator+(const LaurentSeries& A, const LaurentSeries& B);
LaurentSeries operator-(const LaurentSeries& A, const LaurentSeries& B);
LaurentSeries operator*(const LaurentSeries& A, const LaurentSeries& B);
LaurentSeries operator*(const LaurentSeries& A, const KNum& k);
LaurentSeries operator+(const LaurentSeries& A, const KNum& k);
LaurentSeries inverse(const LaurentSeries& A);
LaurentSeries operator/(const LaurentSeries& A, const LaurentSeries& B);
LaurentSeries pow(const LaurentSeries& A, int e);
LaurentSeries conj(const LaurentSeries& A);
bool operator==(const LaurentSeries& A, const LaurentSeries& B);  // on the common range

// Exact Laurent coefficients c_2..c_K of p for g2 = 0 (see analytic.hpp).
std::vector<KNum> laurent_coefficients_exact(const KNum& g3, std::size_t K);

// y(q) = p'(z(q))/2 for z(q) = sum a_n/n q^n, exact through q^M (M >= 4).
// Throws RecognitionFailed if a coefficient falls outside (1/2)Z[w].
LaurentSeries y_series(long p, int i, int M, bool conjugate = false);
LaurentSeries x_series(long p, int i, int M, bool conjugate = false);

// Newton iteration T <- T (2 + S T^-3)/3. Throws CubeRootNotInField.
LaurentSeries cube_root_series(const LaurentSeries& S);

struct FSeries {
    LaurentSeries ratio;     // (y + s pibar^i/2)/(y^c + s pi^i/2)
    LaurentSeries F;         // its cube root
    bool congruence_ok = false;  // numerator = denominator mod sqrt(-3), coefficientwise
};
// sign = +1 gives F+, sign = -1 gives F-.
FSeries f_plus_minus_series(long p, int i, int sign, int M);

}  // namespace cubesum

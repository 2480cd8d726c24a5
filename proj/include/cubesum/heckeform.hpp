#pragma once
// The CM newform f attached to E: y^2 = x^3 + pibar^(2i)/4 and its conjugate
// f^c: level, Hecke character values and q-expansion coefficients.

#include <cstddef>
#include <vector>

#include "cubesum/eisenstein.hpp"

namespace cubesum {

struct Level {
    int sqrt3_exponent = 0;  // conductor is (sqrt(-3))^e * (pibar)
    long N = 0;              // 3 * Norm(conductor)
};

// Throws BadPrimeClass unless p is a prime = 4, 7 mod 9 and i in {1, 2}.
Level conductor_and_level(long p, int i);

// psi((g)) = conj((pi^i / g)_3) * g for a prime g = 1 mod 3 coprime to 3*pi.
EisensteinInt hecke_psi(const EisensteinInt& g, const PrimeSplit& s, int i);

struct HeckeForm {
    long p = 0;
    int i = 1;
    EisensteinInt pi, pibar;
    Level level;
    bool conjugate = false;
    std::vector<EisensteinInt> coeffs;  // coeffs[n] = a_n, coeffs[0] = 0

    std::size_t terms() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    const EisensteinInt& a(std::size_t n) const { return coeffs.at(n); }
    // D of the curve y^2 = x^3 + D/4 whose newform this is.
    EisensteinInt curve_D() const { return pow(conjugate ? pi : pibar, static_cast<unsigned>(2 * i)); }
    HeckeForm conjugated() const;
};

// a_1..a_M by summing psi over generators = 1 mod 3 of norm n, prime to pi.
// The character is evaluated in the reciprocity form (alpha/pi)_3^i.
HeckeForm qexp_coefficients(long p, int i, std::size_t M, bool conjugate = false);

// Builds a form from stored coefficients (cache loads).
HeckeForm form_from_coefficients(long p, int i, std::vector<EisensteinInt> coeffs, bool conjugate);

// Nebentypus value xi(l) = (-3/l) psi((l)) / l at a prime l not dividing N.
EisensteinInt nebentypus(const HeckeForm& f, long l);

struct TwistReport {
    std::size_t checked = 0;  // number of n compared
};

// Compares b_n of y^2 = x^3 + p^(6-2i)/4, built from sextic symbols, with
// conj((n/pi)_3^i) a_n for all n <= M prime to 2p. Throws MismatchAt.
TwistReport twist_check(long p, int i, std::size_t M);

}  // namespace cubesum

#pragma once
// Period lattices of y^2 = x^3 + D/4, Weierstrass p evaluation, the modular
// parametrization z(tau) = sum a_n/n q^n and related constants.

#include <cstddef>
#include <vector>

#include "cubesum/bigfloat.hpp"
#include "cubesum/eisenstein.hpp"
#include "cubesum/heckeform.hpp"
#include "cubesum/kfield.hpp"

namespace cubesum {

inline constexpr unsigned kGuardBits = 32;

// g3 of the lattice Z + Z*w, i.e. (8 pi^6 / 27) E_6(w).
BigComplex g3_unit_lattice(unsigned bits);

class PeriodLattice {
public:
    PeriodLattice() = default;
    PeriodLattice(BigComplex Omega, BigComplex g3, unsigned bits);

    const BigComplex& Omega() const { return Omega_; }
    const BigComplex& g3() const { return g3_; }
    unsigned bits() const { return bits_; }

    // z = (s + t*w) * Omega
    void coords(const BigComplex& z, Real& s, Real& t) const;
    BigComplex from_coords(const Real& s, const Real& t) const;
    // representative of z mod L of minimal absolute value
    BigComplex reduce(const BigComplex& z) const;
    // distance of the lattice coordinates of z to the nearest integers (max norm)
    Real lattice_residual(const BigComplex& z) const;

    // Laurent coefficients c_n (index n >= 2) with p(z) = z^-2 + sum c_n z^(2n-2)
    const std::vector<BigComplex>& laurent() const { return laurent_; }

private:
    BigComplex Omega_, g3_;
    unsigned bits_ = 0;
    std::vector<BigComplex> laurent_;
};

// Lattice Omega*Z[w] with g2 = 0 and g3 = -D, so (p, p'/2) lies on y^2 = x^3 + D/4.
PeriodLattice lattice_of_curve(const KNum& D, unsigned bits);

// c_2..c_K of the p-function Laurent series for g2 = 0 (entries 0, 1 unused):
//   c_2 = 0, c_3 = g3/28, c_n = 3/((2n+1)(n-3)) sum_{m=2}^{n-2} c_m c_{n-m}.
std::vector<BigComplex> laurent_coefficients(const BigComplex& g3, std::size_t K);
// G_{2n} = c_n / (2n - 1)
BigComplex eisenstein_G(const std::vector<BigComplex>& c, std::size_t n);

struct WpValue {
    BigComplex wp, dwp;
};

// Reduction mod L, optional halving and the Laurent series, then doubling back.
WpValue wp_eval(const PeriodLattice& L, const BigComplex& z);

BigComplex to_complex(const KNum& x);

// Smallest M with 2|q|^(M+1)/(1-|q|) < 2^-bits for |q| = exp(-2 pi im_tau).
std::size_t terms_needed(double im_tau, unsigned bits);

// z = sum_{n <= M} (a_n/n) q^n; throws TermsCapExceeded if M > cap or the
// form carries fewer than M coefficients.
struct EvalZResult {
    BigComplex z;
    std::size_t terms = 0;
};
EvalZResult eval_z(const HeckeForm& f, const BigComplex& tau, unsigned bits, std::size_t cap);
EvalZResult eval_z(const HeckeForm& f, const KNum& tau, unsigned bits, std::size_t cap);

// f(tau) = sum a_n q^n with the same truncation rule.
BigComplex eval_f(const HeckeForm& f, const BigComplex& tau, unsigned bits);

// C with f(-1/(N tau)) = N tau^2 C f^c(tau), measured at tau = y*i/sqrt(N) + x.
BigComplex fricke_constant(long p, int i, unsigned bits, double x = 0.0, double y = 1.1);

// tau(chi) = sum_u chi(u) e^(2 pi i u/p) with chi(u) = (u/pi)_3^power.
BigComplex gauss_sum(const PrimeSplit& s, int power, unsigned bits);

struct CuspReport {
    BigComplex z0;           // 2 pi i * integral from i*inf to 0 of f, equal to L(f,1)
    Real residual_sqrt3;     // lattice residual of sqrt(-3) z0
    Real residual_z0;        // lattice residual of z0
    BigComplex x, y;         // (p(z0), p'(z0)/2)
    bool torsion_ok = false; // sqrt(-3) z0 in L, z0 not in L
};
CuspReport l_value_and_cusp_zero(long p, int i, unsigned bits, bool conjugate = false);

}  // namespace cubesum

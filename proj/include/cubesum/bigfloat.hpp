#pragma once
// Multiprecision real and complex numbers on top of MPFR.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace cubesum {

using Real = boost::multiprecision::mpfr_float;

// Sets the default MPFR precision (in bits) for new Real values while alive.
class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned bits);
    ~WorkingPrecision();
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    unsigned saved_digits_;
};

unsigned current_precision_bits();

Real to_real(const mpz_class& z);
Real to_real(const mpq_class& q);
mpz_class round_to_mpz(const Real& x);
Real pi_real();
Real sqrt3_real();
// log2 |x|, or a large negative number for x = 0
double log2_abs(const Real& x);

struct BigComplex {
    Real re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(const Real& r) : re(r), im(0) {}
    BigComplex(const Real& r, const Real& i) : re(r), im(i) {}
    BigComplex(long r) : re(r), im(0) {}

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o);

    std::string str(int digits = 20) const;
};

BigComplex operator+(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x);
BigComplex operator*(const BigComplex& x, const BigComplex& y);
BigComplex operator*(const BigComplex& x, const Real& s);
BigComplex operator/(const BigComplex& x, const BigComplex& y);
BigComplex operator/(const BigComplex& x, const Real& s);

Real abs(const BigComplex& z);
Real norm2(const BigComplex& z);  // |z|^2
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex pow(const BigComplex& z, unsigned e);
// principal branch of z^(1/n)
BigComplex root(const BigComplex& z, unsigned n);
BigComplex expi(const Real& theta);  // e^{i theta}
BigComplex omega_c();                // (-1 + sqrt(-3))/2

}  // namespace cubesum

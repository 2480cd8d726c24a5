#include "cubesum/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

namespace cubesum {

namespace {
unsigned bits_to_digits(unsigned bits) { return bits * 30103u / 100000u + 2; }
}  // namespace

WorkingPrecision::WorkingPrecision(unsigned bits) : saved_digits_(Real::default_precision()) {
    Real::default_precision(bits_to_digits(bits));
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(saved_digits_); }

unsigned current_precision_bits() { return static_cast<unsigned>(Real::default_precision() * 332193u / 100000u); }

Real to_real(const mpz_class& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const mpq_class& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

mpz_class round_to_mpz(const Real& x) {
    mpz_class z;
    Real t = round(x);
    mpfr_get_z(z.get_mpz_t(), t.backend().data(), MPFR_RNDN);
    return z;
}

Real pi_real() { return boost::math::constants::pi<Real>(); }
Real sqrt3_real() { return sqrt(Real(3)); }

double log2_abs(const Real& x) {
    if (x == 0) return -1e18;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

std::string BigComplex::str(int digits) const {
    std::string s = re.str(digits);
    s += (im < 0 ? " - " : " + ");
    s += Real(boost::multiprecision::abs(im)).str(digits) + "i";
    return s;
}

BigComplex operator+(const BigComplex& x, const BigComplex& y) { return {Real(x.re + y.re), Real(x.im + y.im)}; }
BigComplex operator-(const BigComplex& x, const BigComplex& y) { return {Real(x.re - y.re), Real(x.im - y.im)}; }
BigComplex operator-(const BigComplex& x) { return {Real(-x.re), Real(-x.im)}; }

BigComplex operator*(const BigComplex& x, const BigComplex& y) {
    BigComplex r = x;
    r *= y;
    return r;
}

BigComplex operator*(const BigComplex& x, const Real& s) { return {Real(x.re * s), Real(x.im * s)}; }

BigComplex operator/(const BigComplex& x, const BigComplex& y) {
    Real d = norm2(y);
    return {Real((x.re * y.re + x.im * y.im) / d), Real((x.im * y.re - x.re * y.im) / d)};
}

BigComplex operator/(const BigComplex& x, const Real& s) { return {Real(x.re / s), Real(x.im / s)}; }

Real norm2(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const BigComplex& z) { return sqrt(norm2(z)); }
BigComplex conj(const BigComplex& z) { return {z.re, Real(-z.im)}; }

BigComplex expi(const Real& theta) { return {Real(cos(theta)), Real(sin(theta))}; }

BigComplex exp(const BigComplex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {Real(m * cos(z.im)), Real(m * sin(z.im))};
}

BigComplex pow(const BigComplex& z, unsigned e) {
    BigComplex r(1), b = z;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigComplex root(const BigComplex& z, unsigned n) {
    Real r = abs(z);
    if (r == 0) return {};
    Real th = atan2(z.im, z.re) / n;
    Real m = boost::multiprecision::pow(r, Real(1) / n);
    return {Real(m * cos(th)), Real(m * sin(th))};
}

BigComplex omega_c() { return {Real(-0.5), Real(sqrt3_real() / 2)}; }

}  // namespace cubesum

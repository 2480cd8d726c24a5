#pragma once
// Exact elements of K = Q(w) stored as a + b*w with rational a, b.

#include <gmpxx.h>

#include <string>

#include "cubesum/eisenstein.hpp"

namespace cubesum {

struct KNum {
    mpq_class a, b;

    KNum() = default;
    KNum(long v) : a(v), b(0) {}
    KNum(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {
        a.canonicalize();
        b.canonicalize();
    }
    KNum(const EisensteinInt& z) : a(z.a), b(z.b) {}

    static KNum omega() { return {0, 1}; }
    static KNum sqrt_minus3() { return {1, 2}; }  // 1 + 2w

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }
    EisensteinInt to_int() const;  // requires is_integral()
    // Least positive integer m with m * this integral.
    mpz_class denominator() const;
    std::string str() const;  // "a+b*w" with rational a, b
};

bool operator==(const KNum& x, const KNum& y);
inline bool operator!=(const KNum& x, const KNum& y) { return !(x == y); }
KNum operator+(const KNum& x, const KNum& y);
KNum operator-(const KNum& x, const KNum& y);
KNum operator-(const KNum& x);
KNum operator*(const KNum& x, const KNum& y);
KNum operator/(const KNum& x, const KNum& y);
KNum pow(const KNum& x, int e);
KNum conj(const KNum& z);
mpq_class norm(const KNum& z);

// Parses the output of KNum::str() (also accepts plain rationals and "b*w").
KNum parse_knum(const std::string& s);

// Exact cube root in K if one exists; candidates are tried in the order
// given by the numeric approximation (re, im) of some cube root.
bool exact_cube_root(const KNum& c, KNum& out);

}  // namespace cubesum

#pragma once
// Arithmetic in Z[w], w = (-1 + sqrt(-3))/2, together with residue fields of
// its primes, cubic and sextic power-residue symbols, Jacobi sums and point
// counts for the curves y^2 = x^3 + D/4.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cubesum {

struct EisensteinInt {
    mpz_class a, b;  // a + b*w

    EisensteinInt() = default;
    EisensteinInt(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}
    EisensteinInt(long a_, long b_ = 0) : a(a_), b(b_) {}

    static EisensteinInt omega() { return {0, 1}; }
    // w^k for any integer k
    static EisensteinInt omega_pow(int k);
    // zeta^k with zeta = 1 + w = -w^2, a primitive sixth root of unity
    static EisensteinInt zeta_pow(int k);

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const;
    std::string str() const;  // "a+b*w"
};

bool operator==(const EisensteinInt& x, const EisensteinInt& y);
inline bool operator!=(const EisensteinInt& x, const EisensteinInt& y) { return !(x == y); }
EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt pow(const EisensteinInt& x, unsigned e);

EisensteinInt conj(const EisensteinInt& z);
mpz_class norm(const EisensteinInt& z);

// Exact divisibility and quotient; exact_div throws std::domain_error if y does not divide x.
bool divides(const EisensteinInt& y, const EisensteinInt& x);
EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y);
// Euclidean quotient by coordinatewise rounding of x*conj(y)/N(y); N(x - q*y) < N(y).
EisensteinInt round_div(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

// 1 if z = 1 mod 3, 2 if z = 2 mod 3, 0 otherwise.
int residue_mod3(const EisensteinInt& z);
EisensteinInt normalize_primary(const EisensteinInt& z, int target_residue);

struct PrimeSplit {
    long p = 0;
    EisensteinInt pi, pibar;
};

// pi = 1 mod 3 with b > 0, pibar its conjugate.
PrimeSplit split_prime(long p);

// w with w = omega mod pi, for pi of prime norm p.
long residue_map_omega(const EisensteinInt& pi);

bool is_prime(long n);

// Residue field Z[w]/(pi) for a prime pi coprime to 3. Split primes give F_l;
// inert primes give F_{l^2} = F_l[s]/(s^2+s+1) with w -> s.
class ResidueField {
public:
    struct Elem {
        std::uint64_t x = 0, y = 0;  // x + y*s
        bool operator==(const Elem& o) const { return x == o.x && y == o.y; }
        bool operator!=(const Elem& o) const { return !(*this == o); }
        bool is_zero() const { return x == 0 && y == 0; }
    };

    explicit ResidueField(const EisensteinInt& pi);

    std::uint64_t characteristic() const { return l_; }
    std::uint64_t size() const { return inert_ ? l_ * l_ : l_; }
    bool inert() const { return inert_; }

    Elem reduce(const EisensteinInt& z) const;
    Elem from_int(long v) const;
    Elem add(Elem u, Elem v) const;
    Elem sub(Elem u, Elem v) const;
    Elem mul(Elem u, Elem v) const;
    Elem pow(Elem u, std::uint64_t e) const;
    Elem omega() const { return omega_; }

    // Enumeration order of the field elements, 0 <= idx < size().
    Elem element(std::uint64_t idx) const;
    std::uint64_t index(Elem u) const { return u.x + l_ * u.y; }

private:
    std::uint64_t l_ = 0;
    bool inert_ = false;
    std::uint64_t w_ = 0;  // image of w when split
    Elem omega_;
};

// Value w^k (order 3) or zeta^k (order 6), or 0.
struct ResidueSymbol {
    bool zero = false;
    int k = 0;
    int order = 3;
    EisensteinInt value() const;
    bool operator==(const ResidueSymbol& o) const {
        return zero == o.zero && (zero || (order == o.order && k == o.k));
    }
};

ResidueSymbol cubic_residue_symbol(const EisensteinInt& a, const EisensteinInt& pi);
ResidueSymbol sextic_residue_symbol(const EisensteinInt& a, const EisensteinInt& pi);

// J(chi_q, chi_q) over F_{q^2}, chi_q the cubic residue character of the inert prime q.
EisensteinInt jacobi_sum_cubic(long q);
// J(rho, chi_q) over F_{q^2}; rho(u) = #{t : t^2 = u} - 1, the quadratic character
// in odd characteristic (and the zero function in characteristic 2).
EisensteinInt jacobi_sum_quadratic_cubic(long q);
// J(chi, chi) for chi(u) = (u/pi)_3^power on F_p.
EisensteinInt jacobi_sum_split(const PrimeSplit& s, int power = 1);

// #E(F_q) for y^2 = x^3 + D/4 via sextic symbols; piq must be = 2 mod 3.
mpz_class count_points_formula(const EisensteinInt& D, const EisensteinInt& piq);
// Same count by enumerating (2y)^2 = 4x^3 + D over the residue field of pi.
mpz_class count_points_bruteforce(const EisensteinInt& D, const EisensteinInt& pi);

inline constexpr std::uint64_t kBruteForceFieldCap = 200000;

}  // namespace cubesum

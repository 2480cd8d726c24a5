#include "cubesum/eisenstein.hpp"

#include <cmath>
#include <stdexcept>

#include "cubesum/errors.hpp"

namespace cubesum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 mod_of(const mpz_class& v, u64 m) {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(m));
    if (r < 0) r += static_cast<unsigned long>(m);
    return r.get_ui();
}

// Symbol index k with u^e equal to gen^k, searching k < order.
ResidueSymbol symbol_in_field(const ResidueField& F, const EisensteinInt& a, int order,
                              const ResidueField::Elem& gen) {
    ResidueSymbol s;
    s.order = order;
    auto u = F.reduce(a);
    if (u.is_zero()) {
        s.zero = true;
        return s;
    }
    auto t = F.pow(u, (F.size() - 1) / order);
    auto g = F.from_int(1);
    for (int k = 0; k < order; ++k) {
        if (g == t) {
            s.k = k;
            return s;
        }
        g = F.mul(g, gen);
    }
    throw InternalCheckFailed("power residue is not a root of unity; modulus not prime?");
}

}  // namespace

// ---------------------------------------------------------------- Z[w] basics

EisensteinInt EisensteinInt::omega_pow(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
    }
}

EisensteinInt EisensteinInt::zeta_pow(int k) {
    // zeta = 1 + w, zeta^3 = -1
    static const EisensteinInt table[6] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    return table[((k % 6) + 6) % 6];
}

bool EisensteinInt::is_unit() const { return norm(*this) == 1; }

std::string EisensteinInt::str() const {
    std::string s = a.get_str();
    if (b >= 0) s += "+";
    return s + b.get_str() + "*w";
}

bool operator==(const EisensteinInt& x, const EisensteinInt& y) { return x.a == y.a && x.b == y.b; }
EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) { return {x.a + y.a, x.b + y.b}; }
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) { return {x.a - y.a, x.b - y.b}; }
EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    mpz_class bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

EisensteinInt pow(const EisensteinInt& x, unsigned e) {
    EisensteinInt r(1), base = x;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

EisensteinInt conj(const EisensteinInt& z) { return {z.a - z.b, -z.b}; }

mpz_class norm(const EisensteinInt& z) { return z.a * z.a - z.a * z.b + z.b * z.b; }

bool divides(const EisensteinInt& y, const EisensteinInt& x) {
    if (y.is_zero()) return x.is_zero();
    mpz_class n = norm(y);
    EisensteinInt t = x * conj(y);
    return mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t());
}

EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y) {
    if (!divides(y, x)) throw std::domain_error("exact_div: " + y.str() + " does not divide " + x.str());
    mpz_class n = norm(y);
    EisensteinInt t = x * conj(y);
    return {t.a / n, t.b / n};
}

namespace {
mpz_class round_quot(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den, den > 0
    mpz_class twice = 2 * num + den;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return q;
}
}  // namespace

EisensteinInt round_div(const EisensteinInt& x, const EisensteinInt& y) {
    if (y.is_zero()) throw std::domain_error("round_div by zero");
    mpz_class n = norm(y);
    EisensteinInt t = x * conj(y);
    return {round_quot(t.a, n), round_quot(t.b, n)};
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    while (!y.is_zero()) {
        EisensteinInt r = x - round_div(x, y) * y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

int residue_mod3(const EisensteinInt& z) {
    if (mpz_divisible_ui_p(z.b.get_mpz_t(), 3) == 0) return 0;
    unsigned long r = mpz_fdiv_ui(z.a.get_mpz_t(), 3);
    return r == 0 ? 0 : static_cast<int>(r);
}

EisensteinInt normalize_primary(const EisensteinInt& z, int target_residue) {
    if (target_residue != 1 && target_residue != 2)
        throw std::invalid_argument("normalize_primary: target residue must be 1 or 2");
    if (z.is_zero() || mpz_divisible_ui_p(mpz_class(norm(z)).get_mpz_t(), 3))
        throw NoPrimaryAssociate("norm of " + z.str() + " is divisible by 3");
    for (int k = 0; k < 6; ++k) {
        EisensteinInt c = z * EisensteinInt::zeta_pow(k);
        if (residue_mod3(c) == target_residue) return c;
    }
    throw InternalCheckFailed("no associate in the requested class for " + z.str());
}

bool is_prime(long n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 30) > 0;
}

PrimeSplit split_prime(long p) {
    if (!is_prime(p) || p % 3 != 1) throw NotSplit(std::to_string(p) + " is not a prime = 1 mod 3");
    // a^2 - a b + b^2 = p  <=>  (2a - b)^2 + 3 b^2 = 4p
    for (long b = 1; 3 * b * b <= 4 * p; ++b) {
        long d = 4 * p - 3 * b * b;
        long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d))));
        while (s * s > d) --s;
        while ((s + 1) * (s + 1) <= d) ++s;
        if (s * s != d || ((s + b) & 1)) continue;
        EisensteinInt z((s + b) / 2, b);
        PrimeSplit out;
        out.p = p;
        for (const auto& cand : {z, conj(z)}) {
            for (int k = 0; k < 6; ++k) {
                EisensteinInt c = cand * EisensteinInt::zeta_pow(k);
                if (residue_mod3(c) == 1 && c.b > 0) {
                    out.pi = c;
                    out.pibar = conj(c);
                    return out;
                }
            }
        }
    }
    throw InternalCheckFailed("split_prime: no representation found for " + std::to_string(p));
}

long residue_map_omega(const EisensteinInt& pi) {
    mpz_class n = norm(pi);
    if (!n.fits_slong_p() || !is_prime(n.get_si()))
        throw NotPrime("residue_map_omega needs prime norm, got " + n.get_str());
    u64 p = n.get_ui();
    u64 a = mod_of(pi.a, p), b = mod_of(pi.b, p);
    u64 binv = powmod(b, p - 2, p);
    return static_cast<long>((p - mulmod(a, binv, p)) % p);
}

// ---------------------------------------------------------------- residue fields

ResidueField::ResidueField(const EisensteinInt& pi) {
    mpz_class n = norm(pi);
    if (!n.fits_slong_p() || n <= 1) throw NotPrime(pi.str() + " is not a prime element");
    long nv = n.get_si();
    if (nv % 3 == 0) throw BadModulus(pi.str() + " is not coprime to 3");
    if (is_prime(nv)) {
        l_ = static_cast<u64>(nv);
        inert_ = false;
        w_ = static_cast<u64>(residue_map_omega(pi));
        omega_ = {w_, 0};
        return;
    }
    long l = std::lround(std::sqrt(static_cast<double>(nv)));
    if (l * l != nv || !is_prime(l) || l % 3 != 2 || !divides(EisensteinInt(l), pi))
        throw NotPrime(pi.str() + " is not a prime element");
    l_ = static_cast<u64>(l);
    inert_ = true;
    omega_ = {0, 1 % l_};
}

ResidueField::Elem ResidueField::reduce(const EisensteinInt& z) const {
    u64 a = mod_of(z.a, l_), b = mod_of(z.b, l_);
    if (inert_) return {a, b};
    return {(a + mulmod(b, w_, l_)) % l_, 0};
}

ResidueField::Elem ResidueField::from_int(long v) const {
    long r = v % static_cast<long>(l_);
    if (r < 0) r += static_cast<long>(l_);
    return {static_cast<u64>(r), 0};
}

ResidueField::Elem ResidueField::add(Elem u, Elem v) const {
    return {(u.x + v.x) % l_, (u.y + v.y) % l_};
}

ResidueField::Elem ResidueField::sub(Elem u, Elem v) const {
    return {(u.x + l_ - v.x) % l_, (u.y + l_ - v.y) % l_};
}

ResidueField::Elem ResidueField::mul(Elem u, Elem v) const {
    if (!inert_) return {mulmod(u.x, v.x, l_), 0};
    // (x1 + y1 s)(x2 + y2 s) with s^2 = -1 - s
    u64 yy = mulmod(u.y, v.y, l_);
    u64 x = (mulmod(u.x, v.x, l_) + l_ - yy) % l_;
    u64 y = (mulmod(u.x, v.y, l_) + mulmod(u.y, v.x, l_) + l_ - yy) % l_;
    return {x, y};
}

ResidueField::Elem ResidueField::pow(Elem u, u64 e) const {
    Elem r = from_int(1);
    while (e) {
        if (e & 1) r = mul(r, u);
        u = mul(u, u);
        e >>= 1;
    }
    return r;
}

ResidueField::Elem ResidueField::element(u64 idx) const {
    if (!inert_) return {idx, 0};
    return {idx % l_, idx / l_};
}

// ---------------------------------------------------------------- residue symbols

EisensteinInt ResidueSymbol::value() const {
    if (zero) return {0, 0};
    return order == 6 ? EisensteinInt::zeta_pow(k) : EisensteinInt::omega_pow(k);
}

ResidueSymbol cubic_residue_symbol(const EisensteinInt& a, const EisensteinInt& pi) {
    ResidueField F(pi);
    return symbol_in_field(F, a, 3, F.omega());
}

ResidueSymbol sextic_residue_symbol(const EisensteinInt& a, const EisensteinInt& pi) {
    ResidueField F(pi);
    if ((F.size() - 1) % 6 != 0)
        throw BadModulus("sextic symbol needs N(pi) = 1 mod 6, got " + std::to_string(F.size()));
    auto zeta = F.add(F.from_int(1), F.omega());
    return symbol_in_field(F, a, 6, zeta);
}

namespace {

// Cubic character index table over a field; -1 marks zero.
std::vector<int> cubic_character_table(const ResidueField& F, int power) {
    std::vector<int> chi(F.size(), -1);
    for (u64 idx = 0; idx < F.size(); ++idx) {
        auto u = F.element(idx);
        if (u.is_zero()) continue;
        auto t = F.pow(u, (F.size() - 1) / 3);
        auto g = F.from_int(1);
        int k = 0;
        while (g != t) {
            g = F.mul(g, F.omega());
            if (++k > 2) throw InternalCheckFailed("cubic character table");
        }
        chi[idx] = (k * power) % 3;
    }
    return chi;
}

EisensteinInt sum_of_units(const long cnt[3]) {
    return EisensteinInt(cnt[0] - cnt[2], cnt[1] - cnt[2]);
}

EisensteinInt jacobi_cubic_in(const ResidueField& F, int power) {
    auto chi = cubic_character_table(F, power);
    long cnt[3] = {0, 0, 0};
    auto one = F.from_int(1);
    for (u64 idx = 0; idx < F.size(); ++idx) {
        auto u = F.element(idx);
        int c1 = chi[idx];
        int c2 = chi[F.index(F.sub(one, u))];
        if (c1 < 0 || c2 < 0) continue;
        ++cnt[(c1 + c2) % 3];
    }
    return sum_of_units(cnt);
}

void require_inert_prime(long q) {
    if (!is_prime(q) || q % 3 != 2)
        throw BadModulus(std::to_string(q) + " is not a prime = 2 mod 3");
    if (static_cast<u64>(q) * static_cast<u64>(q) >= kBruteForceFieldCap)
        throw FieldTooLarge("F_{q^2} with q = " + std::to_string(q));
}

}  // namespace

EisensteinInt jacobi_sum_cubic(long q) {
    require_inert_prime(q);
    return jacobi_cubic_in(ResidueField(EisensteinInt(q)), 1);
}

EisensteinInt jacobi_sum_quadratic_cubic(long q) {
    require_inert_prime(q);
    ResidueField F{EisensteinInt(q)};
    auto chi = cubic_character_table(F, 1);
    std::vector<long> sq(F.size(), 0);
    for (u64 idx = 0; idx < F.size(); ++idx) {
        auto t = F.element(idx);
        ++sq[F.index(F.mul(t, t))];
    }
    long cnt[3] = {0, 0, 0};
    auto one = F.from_int(1);
    for (u64 idx = 0; idx < F.size(); ++idx) {
        long rho = sq[idx] - 1;
        int c = chi[F.index(F.sub(one, F.element(idx)))];
        if (rho == 0 || c < 0) continue;
        cnt[c] += rho;
    }
    return sum_of_units(cnt);
}

EisensteinInt jacobi_sum_split(const PrimeSplit& s, int power) {
    if (((power % 3) + 3) % 3 == 0) throw TrivialCharacter("cubic character to a power divisible by 3");
    return jacobi_cubic_in(ResidueField(s.pi), ((power % 3) + 3) % 3);
}

// ---------------------------------------------------------------- point counts

mpz_class count_points_formula(const EisensteinInt& D, const EisensteinInt& piq) {
    if (residue_mod3(piq) != 2) throw BadNormalization(piq.str() + " is not = 2 mod 3");
    ResidueField F(piq);
    if (F.reduce(D * EisensteinInt(6)).is_zero()) throw DividesSixD(piq.str() + " divides 6D");
    EisensteinInt s = sextic_residue_symbol(D, piq).value();
    EisensteinInt n = EisensteinInt(mpz_class(static_cast<unsigned long>(F.size())) + 1, 0) +
                      conj(s) * piq + s * conj(piq);
    if (n.b != 0) throw InternalCheckFailed("point count formula is not rational");
    return n.a;
}

mpz_class count_points_bruteforce(const EisensteinInt& D, const EisensteinInt& pi) {
    ResidueField F(pi);
    if (F.size() >= kBruteForceFieldCap) throw FieldTooLarge("field of size " + std::to_string(F.size()));
    std::vector<u64> sq(F.size(), 0);
    for (u64 idx = 0; idx < F.size(); ++idx) {
        auto t = F.element(idx);
        ++sq[F.index(F.mul(t, t))];
    }
    auto d = F.reduce(D);
    auto four = F.from_int(4);
    u64 count = 1;  // point at infinity
    for (u64 idx = 0; idx < F.size(); ++idx) {
        auto x = F.element(idx);
        auto rhs = F.add(F.mul(four, F.mul(x, F.mul(x, x))), d);
        count += sq[F.index(rhs)];
    }
    return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace cubesum

#include "cubesum/kfield.hpp"

#include "cubesum/bigfloat.hpp"

#include <cctype>
#include <stdexcept>

namespace cubesum {


EisensteinInt KNum::to_int() const {
    if (!is_integral()) throw std::domain_error("KNum::to_int on non-integral " + str());
    return {a.get_num(), b.get_num()};
}

mpz_class KNum::denominator() const {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    return l;
}

std::string KNum::str() const {
    if (b == 0) return a.get_str();
    std::string s = a == 0 ? std::string() : a.get_str();
    if (b < 0) s += "-";
    else if (!s.empty()) s += "+";
    mpq_class ab = abs(b);
    if (ab.get_den() == 1) return s + ab.get_str() + "*w";
    return s + ab.get_num().get_str() + "*w/" + ab.get_den().get_str();
}

bool operator==(const KNum& x, const KNum& y) { return x.a == y.a && x.b == y.b; }
KNum operator+(const KNum& x, const KNum& y) { return {x.a + y.a, x.b + y.b}; }
KNum operator-(const KNum& x, const KNum& y) { return {x.a - y.a, x.b - y.b}; }
KNum operator-(const KNum& x) { return {-x.a, -x.b}; }

KNum operator*(const KNum& x, const KNum& y) {
    mpq_class bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

KNum conj(const KNum& z) { return {z.a - z.b, -z.b}; }
mpq_class norm(const KNum& z) { return z.a * z.a - z.a * z.b + z.b * z.b; }

KNum operator/(const KNum& x, const KNum& y) {
    mpq_class n = norm(y);
    if (n == 0) throw std::domain_error("KNum division by zero");
    KNum t = x * conj(y);
    return {t.a / n, t.b / n};
}

KNum pow(const KNum& x, int e) {
    if (e < 0) return KNum(1) / pow(x, -e);
    KNum r(1), base = x;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

namespace {

mpq_class parse_rational(std::string t) {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    if (t[0] == '+') t.erase(0, 1);
    mpq_class q(t, 10);
    q.canonicalize();
    return q;
}

}  // namespace

KNum parse_knum(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto wpos = s.find('w');
    if (wpos == std::string::npos) return {parse_rational(s), 0};
    // the w-term starts at the last sign before 'w' that is not at position 0
    std::size_t start = 0;
    for (std::size_t k = wpos; k-- > 0;)
        if ((s[k] == '+' || s[k] == '-') && k > 0) {
            start = k;
            break;
        }
    std::string re = start ? s.substr(0, start) : "";
    std::string term = s.substr(start);
    std::string coef = term.substr(0, term.find('w'));
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    std::string den = term.substr(term.find('w') + 1);
    mpq_class b = parse_rational(coef);
    if (!den.empty()) {
        if (den[0] != '/') throw std::invalid_argument("parse_knum: " + in);
        b /= mpq_class(den.substr(1), 10);
    }
    return {re.empty() ? mpq_class(0) : parse_rational(re), b};
}

bool exact_cube_root(const KNum& c, KNum& out) {
    if (c.is_zero()) {
        out = KNum(0);
        return true;
    }
    // root*m is integral whenever a root exists, so solve delta^3 = c*m^3 in Z[w]
    mpz_class m = c.denominator();
    EisensteinInt target = (c * KNum(mpq_class(m * m * m), 0)).to_int();
    unsigned bits = static_cast<unsigned>(mpz_sizeinbase(target.a.get_mpz_t(), 2) +
                                          mpz_sizeinbase(target.b.get_mpz_t(), 2)) / 3 + 96;
    WorkingPrecision wp(bits);
    Real s3 = sqrt3_real();
    BigComplex t(Real(to_real(target.a) - to_real(target.b) / 2), Real(to_real(target.b) * s3 / 2));
    BigComplex d = root(t, 3);
    bool found = false;
    for (int k = 0; k < 3 && !found; ++k, d *= omega_c()) {
        Real bb = 2 * d.im / s3;
        Real aa = d.re + bb / 2;
        EisensteinInt delta(round_to_mpz(aa), round_to_mpz(bb));
        if (pow(delta, 3u) == target) {
            out = KNum(delta) / KNum(mpq_class(m), 0);
            found = true;
        }
    }
    return found;
}

}  // namespace cubesum

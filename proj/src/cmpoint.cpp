#include "cubesum/cmpoint.hpp"

#include <algorithm>
#include <cmath>

#include "cubesum/errors.hpp"
#include "cubesum/heckeform.hpp"

namespace cubesum {

double CMPoint::im_tau() const { return std::sqrt(3.0) / 2.0 / (9.0 * p * t); }
double CMPoint::im_wtau() const { return 3.0 * std::sqrt(3.0) / 2.0 / N; }

std::pair<long, long> solve_r(long p) {
    if (!is_prime(p) || p % 3 != 1) throw BadInput(std::to_string(p) + " is not a prime = 1 mod 3");
    // r = (1 + s)/2 with s^2 = -3 mod p; r = 2 mod 3 fixes the residue mod 3
    auto sp = split_prime(p);
    long w = residue_map_omega(sp.pi);  // w^2 + w + 1 = 0, so s = 2w + 1
    long m = 3 * p;
    std::vector<long> roots;
    for (long s : {2 * w + 1, p - (2 * w + 1) % p}) {
        long inv2 = (p + 1) / 2;
        long rp = ((1 + s) % p) * inv2 % p;
        // CRT with r = 2 mod 3
        for (long k = 0; k < 3; ++k) {
            long r = rp + k * p;
            if (r % 3 == 2) roots.push_back(r % m);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.size() != 2) throw InternalCheckFailed("solve_r found " + std::to_string(roots.size()) + " roots");
    for (long r : roots)
        if ((r * r - r + 1) % m != 0) throw InternalCheckFailed("solve_r produced a non-root");
    return {roots[0], roots[1]};
}

std::pair<int, int> classify_root(long r, const PrimeSplit& s) {
    long p = s.p;
    long neg = ((-r) % p + p) % p;
    auto cls = [&](const EisensteinInt& pr) {
        long w = residue_map_omega(pr);
        if (neg == w) return 1;
        if (neg == w * w % p) return 2;
        throw InternalCheckFailed("-r is not a primitive cube root of unity mod " + pr.str());
    };
    return {cls(s.pi), cls(s.pibar)};
}

long minimal_t_representative(long r, long p) {
    long m = 3 * p;
    long best = r;
    for (long k = -3; k <= 3; ++k) {
        long c = ((r % m) + m) % m + k * m;
        if (c * c - c + 1 < best * best - best + 1) best = c;
    }
    return best;
}

CMPoint make_cm_point(long p, int i, long r) {
    CMPoint c;
    c.p = p;
    c.N = conductor_and_level(p, i).N;
    c.r = r;
    long v = r * r - r + 1;
    if (v % (3 * p) != 0) throw BadInput("r^2 - r + 1 is not divisible by 3p");
    c.t = v / (3 * p);
    KNum X(mpq_class(3 * r), mpq_class(3));
    c.tau = KNum(-1) / X;
    c.wtau = X / KNum(c.N);
    auto s = split_prime(p);
    auto cls = classify_root(r, s);
    c.class_pi = cls.first;
    c.class_pibar = cls.second;
    return c;
}

std::string site_name(Site s) { return s == Site::Tau ? "tau" : "wtau"; }

std::string Candidate::label() const { return site_name(site) + "_r=" + std::to_string(point.r); }

std::vector<Candidate> candidate_points(long p, int i) {
    auto roots = solve_r(p);
    std::vector<Candidate> out;
    for (long r0 : {roots.first, roots.second}) {
        auto pt = make_cm_point(p, i, minimal_t_representative(r0, p));
        out.push_back({pt, Site::WTau, true});
        out.push_back({pt, Site::Tau, false});
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (std::fabs(a.im() - b.im()) > 1e-12) return a.im() > b.im();
        return a.site == Site::WTau && b.site == Site::Tau;
    });
    return out;
}

}  // namespace cubesum

#pragma once
// CM points tau_r = -1/(3w + 3r) with r^2 - r + 1 = 0 mod 3p, and their
// Fricke images W(tau_r) = (3w + 3r)/N.

#include <string>
#include <utility>
#include <vector>

#include "cubesum/eisenstein.hpp"
#include "cubesum/kfield.hpp"

namespace cubesum {

struct CMPoint {
    long p = 0;
    long N = 0;
    long r = 0;
    long t = 0;  // (r^2 - r + 1)/(3p)
    KNum tau;    // -1/(3w + 3r)
    KNum wtau;   // (3w + 3r)/N
    int class_pi = 0;     // 1 if -r = w mod pi, 2 if -r = w^2
    int class_pibar = 0;  // same modulo pibar

    double im_tau() const;
    double im_wtau() const;
};

// Both roots of r^2 - r + 1 = 0 mod 3p, reduced into [0, 3p), ascending.
std::pair<long, long> solve_r(long p);

// Classes of -r against the images of w modulo pi and pibar.
std::pair<int, int> classify_root(long r, const PrimeSplit& s);

// Representative of r mod 3p with the smallest t.
long minimal_t_representative(long r, long p);

CMPoint make_cm_point(long p, int i, long r);

enum class Site { Tau, WTau };
std::string site_name(Site s);

struct Candidate {
    CMPoint point;
    Site site = Site::WTau;
    bool conjugate_predicted = false;  // which of phi, phi^c is expected non-torsion
    KNum tau() const { return site == Site::Tau ? point.tau : point.wtau; }
    double im() const { return site == Site::Tau ? point.im_tau() : point.im_wtau(); }
    std::string label() const;  // e.g. "wtau_r=5"
};

// Both roots times both sites, by descending imaginary part (ties: W first).
std::vector<Candidate> candidate_points(long p, int i);

}  // namespace cubesum

#pragma once
// Worked examples published with the construction, transcribed as data, and
// the comparison routines used by `verify-examples` and the acceptance tests.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubesum/curves.hpp"
#include "cubesum/qseries.hpp"

namespace cubesum {

struct FixtureResult {
    std::string name;
    std::string status;  // "pass", "fail" or "erratum"
    std::string detail;
    bool ok() const { return status != "fail"; }
};

// A printed series: nonzero coefficients by exponent, known below `order`.
struct PrintedSeries {
    std::string name;
    int val = 0;
    int order = 0;
    std::map<int, KNum> coeffs;
    // documented misprints: exponent -> value the exact computation gives
    std::map<int, KNum> errata;
};

PrintedSeries printed_series(const std::string& name, int val, int order,
                             const std::vector<std::pair<int, const char*>>& coeffs,
                             const std::vector<std::pair<int, const char*>>& errata = {});

// Compares exponent by exponent. A mismatch is reported as "erratum" only
// when every differing exponent is listed with exactly the computed value.
// With strict = true errata count as failures.
FixtureResult compare_series(const PrintedSeries& printed, const LaurentSeries& got, bool strict = false);

// True if P equals +-[w^k]Q for some k.
bool in_unit_orbit(const CurvePoint& P, const CurvePoint& Q);

struct PublishedPoint {
    long p = 0;
    std::string site;   // candidate label of the printed CM point
    KNum y_f, X_f;      // phi(tau): y and x * pi^(2/3), X up to a cube root of unity
    KNum y_fc;          // phi^c(tau) = (0, y_fc)
    CurvePoint point_K; // printed combined point on y^2 = x^3 + p^2/4
};

std::vector<PrintedSeries> published_series();
std::vector<PublishedPoint> published_points();

struct VerifyOptions {
    bool quick = false;    // skip the p = 31 series
    bool strict = false;   // treat documented misprints as failures
    unsigned bits = 192;
};

std::vector<FixtureResult> verify_examples(const VerifyOptions& opts = {});

}  // namespace cubesum

#pragma once
// Run report for `solve`: exact values are kept as strings so the JSON form
// round-trips without loss.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubesum/parametrize.hpp"

namespace cubesum {

struct RunReport {
    long p = 0;
    int i = 1;
    std::map<std::string, std::string> flags;
    std::string pi;
    long r = 0, t = 0;
    std::string site;
    unsigned bits = 0;
    std::size_t terms = 0;
    std::vector<std::string> recognized;  // "phi: (x, y)" style, exact
    std::string point_K, point_K_source;
    std::string point_Q, descent_branch;
    std::string u, v;
    std::vector<Check> checks;
    std::vector<Check> diagnostics;
    std::vector<SiteAttempt> attempts;
    std::map<std::string, double> timings_ms;
};

RunReport make_report(const SolveResult& res);

nlohmann::json to_json(const RunReport& r, bool with_timings = true);
RunReport report_from_json(const nlohmann::json& j);

std::string render_text(const RunReport& r);

}  // namespace cubesum

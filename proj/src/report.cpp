#include "cubesum/report.hpp"

#include <sstream>

namespace cubesum {

using nlohmann::json;

RunReport make_report(const SolveResult& res) {
    RunReport r;
    r.p = res.p;
    r.i = res.i;
    r.pi = res.split.pi.str();
    r.r = res.site.point.r;
    r.t = res.site.point.t;
    r.site = res.site.label();
    r.bits = res.bits;
    r.terms = res.terms;
    auto describe = [](const char* name, const RecognizedPoint& rp) {
        if (rp.twisted.inf) return std::string(name) + ": O";
        return std::string(name) + ": y = " + rp.y.str() + ", x*mu^(2/3) = " + rp.X.str() +
               ", twisted " + rp.twisted.str();
    };
    if (res.Pf) r.recognized.push_back(describe("phi", *res.Pf));
    if (res.Pfc) r.recognized.push_back(describe("phi^c", *res.Pfc));
    r.point_K = res.point_K.str();
    r.point_K_source = res.point_K_source;
    r.point_Q = res.descent.point.str();
    r.descent_branch = res.descent.branch;
    r.u = res.cube_sum.u.get_str();
    r.v = res.cube_sum.v.get_str();
    r.checks = res.checks;
    r.diagnostics = res.diagnostics;
    r.attempts = res.attempts;
    return r;
}

json to_json(const RunReport& r, bool with_timings) {
    json j;
    j["p"] = r.p;
    j["i"] = r.i;
    j["flags"] = r.flags;
    j["pi"] = r.pi;
    j["r"] = r.r;
    j["t"] = r.t;
    j["site"] = r.site;
    j["bits"] = r.bits;
    j["terms"] = r.terms;
    j["recognized"] = r.recognized;
    j["point_K"] = r.point_K;
    j["point_K_source"] = r.point_K_source;
    j["point_Q"] = r.point_Q;
    j["descent_branch"] = r.descent_branch;
    j["cube_sum"] = {{"u", r.u}, {"v", r.v}};
    j["checks"] = json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["diagnostics"] = json::array();
    for (const auto& c : r.diagnostics) j["diagnostics"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["attempts"] = json::array();
    for (const auto& a : r.attempts)
        j["attempts"].push_back({{"site", a.site}, {"bits", a.bits}, {"terms", a.terms}, {"outcome", a.outcome}});
    j["timings_ms"] = with_timings ? json(r.timings_ms) : json::object();
    return j;
}

RunReport report_from_json(const json& j) {
    RunReport r;
    r.p = j.at("p");
    r.i = j.at("i");
    r.flags = j.at("flags").get<std::map<std::string, std::string>>();
    r.pi = j.at("pi");
    r.r = j.at("r");
    r.t = j.at("t");
    r.site = j.at("site");
    r.bits = j.at("bits");
    r.terms = j.at("terms");
    r.recognized = j.at("recognized").get<std::vector<std::string>>();
    r.point_K = j.at("point_K");
    r.point_K_source = j.at("point_K_source");
    r.point_Q = j.at("point_Q");
    r.descent_branch = j.at("descent_branch");
    r.u = j.at("cube_sum").at("u");
    r.v = j.at("cube_sum").at("v");
    for (const auto& c : j.at("checks")) r.checks.push_back({c.at("name"), c.at("ok"), c.at("detail")});
    for (const auto& c : j.at("diagnostics")) r.diagnostics.push_back({c.at("name"), c.at("ok"), c.at("detail")});
    for (const auto& a : j.at("attempts")) r.attempts.push_back({a.at("site"), a.at("bits"), a.at("terms"), a.at("outcome")});
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
}

std::string render_text(const RunReport& r) {
    std::ostringstream os;
    mpz_class n = 1;
    for (int k = 0; k < r.i; ++k) n *= r.p;
    os << "n = " << n.get_str() << " (p = " << r.p << ", i = " << r.i << ")\n";
    os << "pi = " << r.pi << ", r = " << r.r << ", t = " << r.t << "\n";
    os << "site " << r.site << " at " << r.bits << " bits, " << r.terms << " terms\n";
    for (const auto& s : r.recognized) os << "  " << s << "\n";
    os << "point over K (" << r.point_K_source << "): " << r.point_K << "\n";
    os << "point over Q (" << r.descent_branch << "): " << r.point_Q << "\n";
    os << "u = " << r.u << "\nv = " << r.v << "\n";
    os << "u^3 + v^3 = " << n.get_str() << "\n";
    for (const auto& c : r.checks) os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    for (const auto& c : r.diagnostics)
        os << "  (diagnostic) [" << (c.ok ? "ok" : "differs") << "] " << c.name << ": " << c.detail << "\n";
    for (const auto& [k, ms] : r.timings_ms) os << "  time " << k << ": " << ms << " ms\n";
    return os.str();
}

}  // namespace cubesum

// cubesum: write p and p^2 as sums of two rational cubes via CM points.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesum/cache.hpp"
#include "cubesum/errors.hpp"
#include "cubesum/fixtures.hpp"
#include "cubesum/report.hpp"

using namespace cubesum;
using nlohmann::json;

namespace {

std::vector<int> powers_of(const std::string& power) {
    if (power == "1") return {1};
    if (power == "2") return {2};
    if (power == "both") return {1, 2};
    throw BadInput("--power must be 1, 2 or both");
}

json series_json(const LaurentSeries& s) {
    json j = json::object();
    j["order"] = s.order();
    j["coefficients"] = json::array();
    for (int e = s.val; e < s.order(); ++e) j["coefficients"].push_back({e, s.coeff(e).str()});
    return j;
}

void print_series(const LaurentSeries& s, bool as_json) {
    if (as_json) {
        std::cout << series_json(s).dump(2) << "\n";
        return;
    }
    for (int e = s.val; e < s.order(); ++e)
        if (!s.coeff(e).is_zero()) std::cout << "q^" << e << ": " << s.coeff(e).str() << "\n";
    std::cout << "O(q^" << s.order() << ")\n";
}

int run_solve(long p, const std::string& power, const SolveOptions& base, const std::string& cache_flag, bool as_json) {
    check_solvable_prime(p);
    auto dir = resolve_cache_dir(cache_flag);
    json all = json::array();
    for (int i : powers_of(power)) {
        SolveOptions opts = base;
        opts.forms = cached_provider(dir);
        auto t0 = std::chrono::steady_clock::now();
        auto res = solve(p, i, opts);
        auto t1 = std::chrono::steady_clock::now();
        RunReport rep = make_report(res);
        rep.flags = {{"power", power}, {"bits", std::to_string(base.bits)},
                     {"max_terms", std::to_string(base.max_terms)}, {"eval", base.eval}};
        rep.timings_ms["solve"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (as_json)
            all.push_back(to_json(rep));
        else
            std::cout << render_text(rep) << "\n";
    }
    if (as_json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return 0;
}

int run_verify(const VerifyOptions& opts, bool as_json) {
    auto results = verify_examples(opts);
    int failures = 0;
    json j = json::array();
    for (const auto& r : results) {
        failures += !r.ok();
        if (as_json)
            j.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        else
            std::cout << (r.status == "pass" ? "PASS" : r.status == "erratum" ? "MISPRINT" : "FAIL") << "  "
                      << r.name << "  " << r.detail << "\n";
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << results.size() - failures << "/" << results.size() << " fixtures consistent\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sums of two rational cubes for primes p = 4, 7 mod 9"};
    app.require_subcommand(1);

    long p = 0;
    std::string power = "1", cache_flag, eval = "auto", sign = "+";
    unsigned bits = 192;
    std::size_t max_terms = 2000000;
    int terms = 22;
    bool as_json = false, quick = false, strict = false, conj = false;

    auto* solve_cmd = app.add_subcommand("solve", "find u, v with u^3 + v^3 = p^i");
    solve_cmd->add_option("p", p, "prime")->required();
    solve_cmd->add_option("--power", power, "1, 2 or both");
    solve_cmd->add_option("--bits", bits, "working precision");
    solve_cmd->add_option("--max-terms", max_terms, "cap on q-expansion length");
    solve_cmd->add_option("--eval", eval, "auto, tau or wtau")->check(CLI::IsMember({"auto", "tau", "wtau"}));
    solve_cmd->add_option("--cache-dir", cache_flag, "coefficient cache directory");
    solve_cmd->add_flag("--json", as_json);

    auto* qexp_cmd = app.add_subcommand("qexp", "Hecke eigenform coefficients a_1..a_M");
    qexp_cmd->add_option("p", p)->required();
    qexp_cmd->add_option("--power", power, "1 or 2");
    qexp_cmd->add_option("--terms", terms, "number of coefficients");
    qexp_cmd->add_option("--cache-dir", cache_flag);
    qexp_cmd->add_flag("--conj", conj, "the conjugate form");
    qexp_cmd->add_flag("--json", as_json);

    auto* y_cmd = app.add_subcommand("yseries", "cusp expansion of y through O(q^terms)");
    y_cmd->add_option("p", p)->required();
    y_cmd->add_option("--power", power, "1 or 2");
    y_cmd->add_option("--terms", terms);
    y_cmd->add_flag("--conj", conj, "the conjugate form");
    y_cmd->add_flag("--json", as_json);

    auto* f_cmd = app.add_subcommand("fseries", "F+ or F- through O(q^terms)");
    f_cmd->add_option("p", p)->required();
    f_cmd->add_option("--power", power, "1 or 2");
    f_cmd->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
    f_cmd->add_option("--terms", terms);
    f_cmd->add_flag("--json", as_json);

    auto* v_cmd = app.add_subcommand("verify-examples", "check the published worked examples");
    v_cmd->alias("verify-paper");
    v_cmd->add_flag("--quick", quick, "skip the p = 31 series");
    v_cmd->add_flag("--strict", strict, "count documented misprints as failures");
    v_cmd->add_option("--bits", bits);
    v_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd) {
            SolveOptions opts;
            opts.bits = bits;
            opts.max_terms = max_terms;
            opts.eval = eval;
            return run_solve(p, power, opts, cache_flag, as_json);
        }
        auto single_power = [&] {
            auto ps = powers_of(power);
            if (ps.size() != 1) throw BadInput("this command takes --power 1 or 2");
            conductor_and_level(p, ps[0]);
            return ps[0];
        };
        if (*qexp_cmd) {
            int i = single_power();
            if (terms < 1) throw BadInput("--terms must be positive");
            HeckeForm f = cached_provider(resolve_cache_dir(cache_flag))(p, i, terms, conj);
            if (as_json) {
                json j = {{"p", p}, {"i", i}, {"N", f.level.N}, {"conjugate", conj}, {"a", json::array()}};
                for (int n = 1; n <= terms; ++n) j["a"].push_back(f.a(n).str());
                std::cout << j.dump(2) << "\n";
            } else {
                for (int n = 1; n <= terms; ++n) std::cout << n << " " << f.a(n).str() << "\n";
            }
            return 0;
        }
        if (*y_cmd) {
            int i = single_power();
            if (terms < 5) throw BadInput("--terms must be at least 5");
            print_series(y_series(p, i, terms - 1, conj), as_json);
            return 0;
        }
        if (*f_cmd) {
            int i = single_power();
            if (terms < 5) throw BadInput("--terms must be at least 5");
            auto fs = f_plus_minus_series(p, i, sign == "+" ? 1 : -1, terms - 1);
            print_series(fs.F, as_json);
            if (!as_json) std::cout << "ratio: " << fs.ratio.str() << "\n";
            return 0;
        }
        if (*v_cmd) return run_verify({quick, strict, bits}, as_json);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadPrimeClass& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalCheckFailed& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

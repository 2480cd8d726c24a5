#include "cubesum/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <unistd.h>

#include "cubesum/errors.hpp"

namespace cubesum {

namespace fs = std::filesystem;

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return fs::path(flag);
    if (const char* env = std::getenv("CUBESUM_CACHE"); env && *env) return fs::path(env);
    return std::nullopt;
}

fs::path cache_file(const fs::path& dir, long p, int i) {
    return dir / ("hecke_p" + std::to_string(p) + "_i" + std::to_string(i) + ".txt");
}

std::string serialize_coefficients(const HeckeForm& f) {
    HeckeForm g = f.conjugate ? f.conjugated() : f;
    std::ostringstream os;
    os << "SYLV1 p=" << g.p << " i=" << g.i << " N=" << g.level.N << " M=" << g.terms() << "\n";
    for (std::size_t n = 1; n <= g.terms(); ++n) {
        const auto& c = g.coeffs[n];
        if (c.a == 0 && c.b == 0) continue;
        os << n << " " << c.a.get_str() << " " << c.b.get_str() << "\n";
    }
    return os.str();
}

HeckeForm parse_coefficients(const std::string& text, long p, int i) {
    std::istringstream is(text);
    std::string magic, hp, hi, hN, hM;
    if (!(is >> magic >> hp >> hi >> hN >> hM) || magic != "SYLV1")
        throw BadInput("cache file lacks a SYLV1 header");
    auto field = [](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0) throw BadInput("cache header: expected " + key);
        return std::stol(tok.substr(key.size() + 1));
    };
    if (field(hp, "p") != p || field(hi, "i") != i) throw BadInput("cache header is for another (p, i)");
    auto lvl = conductor_and_level(p, i);
    if (field(hN, "N") != lvl.N) throw BadInput("cache header has the wrong level");
    std::size_t M = static_cast<std::size_t>(field(hM, "M"));
    std::vector<EisensteinInt> coeffs(M + 1, EisensteinInt(0));
    std::size_t n;
    std::string a, b;
    while (is >> n >> a >> b) {
        if (n == 0 || n > M) throw BadInput("cache entry index out of range");
        coeffs[n] = EisensteinInt(mpz_class(a), mpz_class(b));
    }
    if (!is.eof()) throw BadInput("malformed cache entry");
    return form_from_coefficients(p, i, std::move(coeffs), false);
}

std::optional<HeckeForm> load_cached(const fs::path& dir, long p, int i, std::size_t M) {
    fs::path file = cache_file(dir, p, i);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string head;
    std::getline(in, head);
    // cheap check of M before reading the body
    auto pos = head.rfind("M=");
    if (pos == std::string::npos || std::stoul(head.substr(pos + 2)) < M) return std::nullopt;
    std::stringstream ss;
    ss << head << "\n" << in.rdbuf();
    return parse_coefficients(ss.str(), p, i);
}

void store_cached(const fs::path& dir, const HeckeForm& f) {
    fs::create_directories(dir);
    fs::path target = cache_file(dir, f.p, f.i);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        out << serialize_coefficients(f);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

FormProvider cached_provider(std::optional<fs::path> dir) {
    auto memo = std::make_shared<std::optional<HeckeForm>>();
    return [dir, memo](long p, int i, std::size_t M, bool conjugate) {
        auto& held = *memo;
        if (!held || held->p != p || held->i != i || held->terms() < M) {
            std::optional<HeckeForm> f;
            if (dir) f = load_cached(*dir, p, i, M);
            if (!f) {
                f = qexp_coefficients(p, i, M, false);
                if (dir) store_cached(*dir, *f);
            }
            held = std::move(f);
        }
        HeckeForm out = *held;
        out.coeffs.resize(M + 1);
        return conjugate ? out.conjugated() : out;
    };
}

}  // namespace cubesum

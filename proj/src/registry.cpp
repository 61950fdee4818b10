#include "bivage/registry.hpp"

#include <charconv>
#include <cmath>

#include "bivage/errors.hpp"

namespace bivage {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(what + ": cannot parse number '" + s + "'");
    return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_double(tok, what));
    return out;
}

} // namespace

std::string copula_keys_help() {
    return "pi | m | w | clayton:<theta> | gumbel:<theta> | frank:<theta> | "
           "arch-gen:<log|cosine|clayton:t|gumbel:t|frank:t> | schur:<marginal-key>";
}

std::string marginal_keys_help() {
    return "exp:<rate> | weibull:<shape>[:<scale>] | pareto:<shape>[:<scale>] | "
           "mixexp:<r1,...>:<w1,...> | geninv:<generator-key>";
}

Generator make_generator(const std::string& key) {
    auto parts = split(key, ':');
    const std::string& fam = parts[0];
    if (fam == "log" && parts.size() == 1) return Generator::log_gen();
    if (fam == "cosine" && parts.size() == 1) return Generator::cosine();
    if (fam == "clayton" && parts.size() == 2)
        return Generator::clayton(parse_double(parts[1], "clayton"));
    if (fam == "gumbel" && parts.size() == 2)
        return Generator::gumbel(parse_double(parts[1], "gumbel"));
    if (fam == "frank" && parts.size() == 2)
        return Generator::frank(parse_double(parts[1], "frank"));
    throw ParseError("unknown generator key '" + key +
                     "'; expected log | cosine | clayton:t | gumbel:t | frank:t");
}

SemiCopula make_copula(const std::string& key) {
    if (key == "pi") return SemiCopula::product();
    if (key == "m") return SemiCopula::comonotone();
    if (key == "w") return SemiCopula::countermonotone();
    if (key == "broken-pi") {
        // deliberately corrupted product copula, for negative tests
        return SemiCopula::from_function(
            [](double u, double v) { return 0.9 * u * v; }, CopulaKind::Copula,
            "broken-pi");
    }
    auto parts = split(key, ':');
    const std::string& fam = parts[0];
    if (fam == "clayton" || fam == "gumbel" || fam == "frank")
        return SemiCopula::archimedean(make_generator(key));
    if (fam == "arch-gen" && parts.size() >= 2)
        return SemiCopula::archimedean(make_generator(key.substr(9)));
    if (fam == "schur" && parts.size() >= 2)
        return schur_constant_semicopula(make_marginal(key.substr(6)));
    throw ParseError("unknown copula key '" + key + "'; valid keys: " +
                     copula_keys_help());
}

SurvivalModel make_marginal(const std::string& key) {
    auto parts = split(key, ':');
    const std::string& fam = parts[0];
    if (fam == "exp" && parts.size() == 2)
        return SurvivalModel::exponential(parse_double(parts[1], "exp"));
    if (fam == "weibull" && (parts.size() == 2 || parts.size() == 3))
        return SurvivalModel::weibull(parse_double(parts[1], "weibull"),
                                      parts.size() == 3 ? parse_double(parts[2], "weibull")
                                                        : 1.0);
    if (fam == "pareto" && (parts.size() == 2 || parts.size() == 3))
        return SurvivalModel::pareto(parse_double(parts[1], "pareto"),
                                     parts.size() == 3 ? parse_double(parts[2], "pareto")
                                                       : 1.0);
    if (fam == "mixexp" && parts.size() == 3) {
        auto rates = parse_list(parts[1], "mixexp rates");
        auto weights = parse_list(parts[2], "mixexp weights");
        if (rates.size() != weights.size())
            throw ParseError("mixexp: rates and weights differ in length");
        std::vector<SurvivalModel> comps;
        for (double r : rates) comps.push_back(SurvivalModel::exponential(r));
        return SurvivalModel::finite_mixture(weights, comps);
    }
    if (fam == "geninv" && parts.size() >= 2)
        return SurvivalModel::generator_inverse(make_generator(key.substr(7)));
    throw ParseError("unknown marginal key '" + key + "'; valid keys: " +
                     marginal_keys_help());
}

std::vector<ModelSpecEntry> builtin_registry() {
    return {
        {"m01", "pi", "exp:1"},
        {"m02", "pi", "weibull:2"},
        {"m03", "pi", "weibull:0.5"},
        {"m04", "pi", "weibull:3"},
        {"m05", "pi", "mixexp:1,5:0.5,0.5"},
        {"m06", "pi", "pareto:1"},
        {"m07", "clayton:1", "exp:1"},
        {"m08", "clayton:1", "weibull:2"},
        {"m09", "clayton:0.5", "exp:1"},
        {"m10", "clayton:2", "weibull:1.5"},
        {"m11", "gumbel:2", "exp:1"},
        {"m12", "gumbel:1.5", "weibull:0.5"},
        {"m13", "frank:2", "exp:1"},
        {"m14", "frank:-2", "exp:1"},
        {"m15", "frank:-2", "weibull:2"},
        {"m16", "m", "exp:1"},
        {"m17", "m", "weibull:2"},
        {"m18", "w", "weibull:2"},
        {"m19", "schur:weibull:0.5", "weibull:0.5"},
        {"m20", "schur:exp:1", "exp:1"},
        {"m21", "gumbel:2", "weibull:2"},
        {"m22", "clayton:1", "mixexp:1,5:0.5,0.5"},
        {"m23", "w", "exp:1"},
        {"m24", "frank:5", "pareto:1"},
    };
}

namespace {

// splitmix64: stable across platforms, unlike <random> distributions
struct SplitMix {
    std::uint64_t state;
    double uniform() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return double(z >> 11) * 0x1.0p-53;
    }
    double range(double a, double b) { return a + (b - a) * uniform(); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

} // namespace

std::vector<ModelSpecEntry> fuzz_registry(std::uint64_t seed, int n) {
    SplitMix rng{seed};
    std::vector<ModelSpecEntry> out;
    for (int i = 0; i < n; ++i) {
        double pick = rng.uniform();
        std::string cop;
        if (pick < 0.3)
            cop = "clayton:" + fmt(rng.range(0.3, 3.0));
        else if (pick < 0.6)
            cop = "gumbel:" + fmt(rng.range(1.0, 3.0));
        else if (pick < 0.85) {
            double th = rng.range(0.5, 4.0);
            if (rng.uniform() < 0.5) th = -th;
            cop = "frank:" + fmt(th);
        } else
            cop = "pi";
        double mpick = rng.uniform();
        std::string marg;
        if (mpick < 0.5)
            marg = "weibull:" + fmt(rng.range(0.3, 3.0));
        else if (mpick < 0.8)
            marg = "exp:" + fmt(rng.range(0.3, 3.0));
        else
            marg = "pareto:" + fmt(rng.range(0.5, 3.0));
        char id[16];
        std::snprintf(id, sizeof id, "fuzz-%03d", i);
        out.push_back({id, cop, marg});
    }
    return out;
}

} // namespace bivage

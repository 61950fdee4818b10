#include "bivage/cli.hpp"

#include <clocale>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bivage/harness.hpp"

namespace bivage::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["status"] = to_string(v.status);
    j["margin"] = v.margin;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

ordered_json report_json(const VerificationReport& rep) {
    ordered_json j;
    j["model"] = rep.model_id;
    j["suite"] = rep.suite;
    if (rep.skipped) {
        j["skipped"] = true;
        j["note"] = rep.note;
        return j;
    }
    ordered_json verdicts;
    for (const auto& [name, v] : rep.verdicts) verdicts[name] = verdict_json(v);
    j["verdicts"] = std::move(verdicts);
    ordered_json imps = ordered_json::array();
    for (const auto& imp : rep.implications) {
        ordered_json ji;
        ji["case"] = imp.name;
        ji["outcome"] = to_string(imp.outcome);
        if (!imp.detail.empty()) ji["detail"] = imp.detail;
        imps.push_back(std::move(ji));
    }
    j["implications"] = std::move(imps);
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

struct OutFile {
    std::ofstream file;
    std::ostream* os;

    OutFile(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os = &fallback;
        } else {
            file.open(path);
            if (!file) throw ParseError("cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

std::string comment_line(const std::string& spec, double tol) {
    return "bivage " + std::string(kToolVersion) + "; spec=" + fnv1a_hex(spec) +
           "; tol=" + g12(tol);
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& copula_key, const std::string& marginal_key,
                 int grid_n, double tol, const std::string& out_path,
                 std::ostream& out) {
    OutFile sink(out_path, out);
    ordered_json j;
    j["tool"] = std::string("bivage ") + kToolVersion;
    j["spec"] = {{"copula", copula_key}, {"marginal", marginal_key}};
    bool all_hold = true;

    auto cop = make_copula(copula_key);
    auto rep = validate(cop, grid_n, tol);
    ordered_json jc;
    jc["boundary"] = verdict_json(rep.boundary);
    jc["monotone"] = verdict_json(rep.monotone);
    jc["two_increasing"] = verdict_json(rep.two_increasing);
    all_hold = all_hold && rep.boundary.holds() && rep.monotone.holds() &&
               rep.two_increasing.holds();
    j["copula"] = std::move(jc);

    if (!marginal_key.empty()) {
        auto m = make_marginal(marginal_key);
        ordered_json jm;
        VerdictSweep g0(tol);
        g0.add(-std::abs(m.survival(0.0) - 1.0), {0.0});
        jm["starts_at_one"] = verdict_json(g0.finish());
        auto grid = default_age_grid(m, grid_n);
        auto dec = monotonicity_verdict([&m](double x) { return m.survival(x); }, grid,
                                        Direction::Decreasing, tol);
        jm["decreasing"] = verdict_json(dec);
        VerdictSweep pos(tol);
        pos.add(m.survival(m.suggested_xmax()), {m.suggested_xmax()});
        jm["positive"] = verdict_json(pos.finish());
        Verdict dens_ok;
        if (m.has_density()) {
            VerdictSweep sweep(tol);
            for (double x : linspace(grid.front(), grid.back(), 9)) {
                double fd = -central_difference(
                    [&m](double t) { return m.survival(t); }, x, 1e-5 * (1.0 + x), 0.0,
                    std::numeric_limits<double>::infinity());
                double g = m.density(x);
                double rel = std::abs(fd - g) / (1.0 + std::abs(g));
                sweep.add(1e-5 - rel, {x});
            }
            dens_ok = sweep.finish();
            jm["density_consistent"] = verdict_json(dens_ok);
            all_hold = all_hold && dens_ok.holds();
        }
        all_hold = all_hold && g0.finish().holds() && dec.holds() && pos.finish().holds();
        j["marginal"] = std::move(jm);
    }

    j["all_hold"] = all_hold;
    sink.stream() << j.dump(2) << "\n";
    return all_hold ? 0 : 1;
}

// ----------------------------------------------------------------- kendall

KendallCurve curve_for(const SemiCopula& cop, const std::string& route,
                       const std::optional<SurvivalModel>& marginal,
                       std::span<const double> grid, const PartitionRefine& refine) {
    if (route == "sup") return kendall_curve_sup(cop, grid, refine);
    if (route == "closed") {
        if (!cop.has_generator())
            throw Error("route 'closed' needs an Archimedean family; '" + cop.label() +
                        "' has no generator");
        return kendall_curve_closed(cop.generator(), grid);
    }
    if (route == "integral") return kendall_curve_integral(cop, grid);
    if (route == "transport-B") {
        if (!marginal)
            throw Error("route 'transport-B' needs --marginal");
        KendallCurve base = cop.has_generator()
                                ? kendall_curve_closed(cop.generator(), grid)
                                : kendall_curve_integral(cop, grid);
        return kendall_curve_transported(base, *marginal, grid);
    }
    throw ParseError("unknown route '" + route + "' (sup | closed | integral | transport-B)");
}

int cmd_kendall(const std::string& copula_key, const std::string& marginal_key,
                const std::string& route, int grid_n, double tol,
                const std::string& out_path, std::ostream& out) {
    auto cop = make_copula(copula_key);
    std::optional<SurvivalModel> marginal;
    if (!marginal_key.empty()) marginal = make_marginal(marginal_key);
    auto grid = kendall_default_grid(grid_n);
    PartitionRefine refine;
    auto curve = curve_for(cop, route, marginal, grid, refine);
    OutFile sink(out_path, out);
    std::string spec = "kendall;" + copula_key + ";" + marginal_key + ";" + route + ";" +
                       std::to_string(grid_n);
    write_kendall_csv(sink.stream(), curve, comment_line(spec, tol) + "; route=" + route);
    return 0;
}

// ---------------------------------------------------------------- classify

ordered_json pair_json(const char* pos, const Verdict& vp, const char* neg,
                       const Verdict& vn) {
    ordered_json j;
    j[pos] = verdict_json(vp);
    j[neg] = verdict_json(vn);
    return j;
}

int cmd_classify(const std::string& copula_key, const std::string& marginal_key,
                 int grid_n, double tol, double xmax, const std::string& out_path,
                 std::ostream& out) {
    auto cop = make_copula(copula_key);
    auto marginal = make_marginal(marginal_key);
    BivariateModel mdl(cop, marginal);

    ordered_json j;
    j["tool"] = std::string("bivage ") + kToolVersion;
    std::string spec = "classify;" + copula_key + ";" + marginal_key;
    j["spec"] = {{"copula", copula_key},
                 {"marginal", marginal_key},
                 {"hash", fnv1a_hex(spec)}};
    double horizon = xmax > 0.0 ? xmax : marginal.suggested_xmax();
    j["tolerances"] = {{"verdict", tol}, {"grid", grid_n}, {"x_max", horizon}};

    auto age_grid = linspace(0.0, horizon, grid_n);
    age_grid.front() = horizon * 1e-6;
    auto ifr = classify_ifr_dfr(marginal, age_grid, tol);
    auto ifra = classify_ifra_dfra(marginal, geomspace(1e-6, horizon, grid_n), tol);
    auto nbu = classify_nbu_nwu(marginal, linspace(0.0, horizon, (grid_n + 1) / 2), tol);
    ordered_json jm;
    jm["IFR"] = verdict_json(ifr.ifr);
    jm["DFR"] = verdict_json(ifr.dfr);
    jm["IFRA"] = verdict_json(ifra.ifra);
    jm["DFRA"] = verdict_json(ifra.dfra);
    jm["NBU"] = verdict_json(nbu.nbu);
    jm["NWU"] = verdict_json(nbu.nwu);
    j["marginal"] = std::move(jm);

    auto grid = kendall_default_grid(19);
    auto curve_of = [&](const SemiCopula& s) {
        if (s.has_generator()) return kendall_curve_closed(s.generator(), grid);
        try {
            return kendall_curve_integral(s, grid);
        } catch (const SectionInversionFailure&) {
            return kendall_curve_sup(s, grid, PartitionRefine{});
        }
    };
    auto pqd = check_pqd(cop, grid_n, tol);
    auto mig = check_migrativity(cop, (grid_n + 1) / 2, tol);
    auto ltd = check_ltd_rti(cop, grid_n, tol);
    auto si = check_si(cop, grid_n, tol);
    auto kc = classify_pkd_nkd(curve_of(cop), tol);
    ordered_json jc;
    jc["PQD"] = verdict_json(pqd.pqd);
    jc["PMD"] = verdict_json(mig.pmd);
    jc["NMD"] = verdict_json(mig.nmd);
    jc["LTD"] = verdict_json(ltd.ltd);
    jc["SI"] = verdict_json(si);
    jc["PKD"] = verdict_json(kc.pkd);
    jc["NKD"] = verdict_json(kc.nkd);
    j["copula"] = std::move(jc);

    auto b = ageing_function(mdl);
    auto bmig = check_migrativity(b, (grid_n + 1) / 2, tol);
    PkdNkd bk;
    if (marginal.has_density()) {
        auto base = curve_of(cop);
        if (base.has_evaluator()) {
            bk = classify_pkd_nkd(kendall_curve_transported(base, marginal, grid), tol);
        } else {
            bk = classify_pkd_nkd(kendall_curve_sup(b, grid, PartitionRefine{}), tol);
        }
    } else {
        bk = classify_pkd_nkd(kendall_curve_sup(b, grid, PartitionRefine{}), tol);
    }
    ordered_json jb;
    jb["PMD"] = verdict_json(bmig.pmd);
    jb["NMD"] = verdict_json(bmig.nmd);
    jb["PKD"] = verdict_json(bk.pkd);
    jb["NKD"] = verdict_json(bk.nkd);
    j["ageing_function"] = std::move(jb);

    j["note"] = pkd_convention_note();
    OutFile sink(out_path, out);
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------ verify

void append_mixture_demos(SweepResult& sweep, const HarnessOptions& opt) {
    struct DemoSpec {
        std::vector<double> rates, weights;
        double tol;
        const char* id;
    };
    const DemoSpec demos[] = {
        {{1.0, 5.0}, {0.5, 0.5}, opt.tol, "mixexp:1,5:0.5,0.5"},
        {{1.0, 1.01}, {0.5, 0.5}, 1e-3, "mixexp:1,1.01:0.5,0.5"},
    };
    for (const auto& d : demos) {
        std::vector<SurvivalModel> comps;
        for (double r : d.rates) comps.push_back(SurvivalModel::exponential(r));
        MixtureModel mix(d.weights, comps);
        HarnessOptions local = opt;
        local.tol = d.tol;
        auto demo = mixture_paradox_demo(mix, local);
        VerificationReport rep;
        rep.model_id = d.id;
        rep.suite = "mixture-demo";
        rep.note = demo.note;
        bool all_comp_ifr = true, all_comp_dfr = true;
        for (size_t i = 0; i < demo.component_ifr.size(); ++i) {
            rep.verdicts.emplace_back("IFR(component " + std::to_string(i) + ")",
                                      demo.component_ifr[i].ifr);
            all_comp_ifr = all_comp_ifr && demo.component_ifr[i].ifr.holds();
            all_comp_dfr = all_comp_dfr && demo.component_ifr[i].dfr.holds();
        }
        rep.verdicts.emplace_back("biv-IFR(conditional)", demo.conditional_biv.biv_ifr);
        rep.verdicts.emplace_back("IFR(mixture)", demo.mixture_ifr.ifr);
        rep.verdicts.emplace_back("DFR(mixture)", demo.mixture_ifr.dfr);

        ImplicationResult closure;
        closure.name = "DFR(all components) => DFR(mixture)";
        if (!all_comp_dfr)
            closure.outcome = Outcome::Vacuous;
        else if (demo.mixture_ifr.dfr.holds())
            closure.outcome = Outcome::Confirmed;
        else if (demo.mixture_ifr.dfr.fails())
            closure.outcome = Outcome::Violation;
        else {
            closure.outcome = Outcome::Vacuous;
            closure.detail = "conclusion tolerance-limited";
        }
        rep.implications.push_back(closure);

        ImplicationResult cond;
        cond.name = "IFR(all components) => biv-IFR(conditional)";
        if (!all_comp_ifr)
            cond.outcome = Outcome::Vacuous;
        else if (demo.conditional_biv.biv_ifr.holds())
            cond.outcome = Outcome::Confirmed;
        else if (demo.conditional_biv.biv_ifr.fails())
            cond.outcome = Outcome::Violation;
        else {
            cond.outcome = Outcome::Vacuous;
            cond.detail = "conclusion tolerance-limited";
        }
        rep.implications.push_back(cond);

        sweep.violations += rep.violations();
        sweep.reports.push_back(std::move(rep));
    }
}

std::vector<ModelSpecEntry> load_registry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open registry file '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("registry parse error: " + std::string(e.what()));
    }
    if (!j.is_array()) throw ParseError("registry must be a JSON array");
    std::vector<ModelSpecEntry> out;
    for (const auto& e : j) {
        ModelSpecEntry m;
        m.id = e.value("id", "model-" + std::to_string(out.size()));
        if (!e.contains("copula") || !e.contains("marginal"))
            throw ParseError("registry entries need 'copula' and 'marginal'");
        m.copula = e["copula"].get<std::string>();
        m.marginal = e["marginal"].get<std::string>();
        out.push_back(std::move(m));
    }
    return out;
}

int cmd_verify(const std::string& source, bool fuzz, std::uint64_t seed, int fuzz_n,
               double tol, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    std::vector<ModelSpecEntry> entries;
    if (source == "builtin")
        entries = builtin_registry();
    else
        entries = load_registry_file(source);
    if (fuzz) {
        auto extra = fuzz_registry(seed, fuzz_n);
        entries.insert(entries.end(), extra.begin(), extra.end());
    }

    HarnessOptions opt;
    opt.tol = tol;
    auto sweep = run_sweep(entries, opt);
    append_mixture_demos(sweep, opt);

    OutFile sink(out_path, out);
    for (const auto& rep : sweep.reports) sink.stream() << report_json(rep).dump() << "\n";

    std::ostream& table = out_path.empty() ? err : out;
    table << "model                          suite                confirmed  vacuous  violations\n";
    for (const auto& rep : sweep.reports) {
        int confirmed = 0, vacuous = 0;
        for (const auto& imp : rep.implications) {
            if (imp.outcome == Outcome::Confirmed) ++confirmed;
            if (imp.outcome == Outcome::Vacuous) ++vacuous;
        }
        char line[160];
        std::snprintf(line, sizeof line, "%-30s %-20s %9d %8d %11d\n",
                      rep.model_id.c_str(),
                      (rep.suite + (rep.skipped ? " (skipped)" : "")).c_str(), confirmed,
                      vacuous, rep.violations());
        table << line;
    }
    table << "TOTAL: " << sweep.models << " models, " << sweep.reports.size()
          << " reports, " << sweep.violations << " violations\n";
    return sweep.violations == 0 ? 0 : 1;
}

// ------------------------------------------------------------- reconstruct

KendallCurve load_kendall_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open kendall CSV '" + path + "'");
    KendallCurve k;
    k.provenance = KendallProvenance::PartitionSup;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("bad CSV row: " + line);
        k.grid.push_back(std::stod(line.substr(0, comma)));
        k.values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (k.grid.size() < 2) throw ParseError("kendall CSV has fewer than two rows");
    return k;
}

int cmd_reconstruct(const std::string& copula_key, const std::string& input_csv,
                    double t0, int grid_n, double tol, const std::string& out_path,
                    std::ostream& out) {
    KendallCurve curve;
    std::string spec_src;
    if (!copula_key.empty()) {
        auto cop = make_copula(copula_key);
        auto grid = kendall_default_grid(grid_n);
        if (cop.has_generator()) {
            curve = kendall_curve_closed(cop.generator(), grid);
        } else {
            try {
                curve = kendall_curve_integral(cop, grid);
            } catch (const SectionInversionFailure&) {
                curve = kendall_curve_sup(cop, grid, PartitionRefine{});
            }
        }
        spec_src = copula_key;
    } else if (!input_csv.empty()) {
        curve = load_kendall_csv(input_csv);
        spec_src = input_csv;
    } else {
        throw ParseError("reconstruct needs --copula or --input");
    }

    auto gen = reconstruct_generator(curve, t0);
    OutFile sink(out_path, out);
    std::string spec = "reconstruct;" + spec_src + ";" + g12(t0);
    sink.stream() << "# " << comment_line(spec, tol) << "; t0=" << g12(t0) << "\n";
    sink.stream() << "t,phi,roundtrip_err\n";
    for (size_t i = 0; i < curve.grid.size(); ++i) {
        double t = curve.grid[i];
        double err_k = std::abs(kendall_archimedean(gen, t) - curve.values[i]);
        sink.stream() << g12(t) << "," << g12(gen.phi(t)) << "," << g12(err_k) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ demo-mixture

int cmd_demo_mixture(const std::string& rates_str, const std::string& weights_str,
                     int grid_n, double xmax, const std::string& out_path,
                     std::ostream& out) {
    auto parse_list = [](const std::string& s) {
        std::vector<double> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
        return v;
    };
    auto rates = parse_list(rates_str);
    auto weights = parse_list(weights_str);
    if (rates.size() != weights.size() || rates.empty())
        throw ParseError("demo-mixture: rates and weights must match and be nonempty");
    std::vector<SurvivalModel> comps;
    for (double r : rates) comps.push_back(SurvivalModel::exponential(r));
    MixtureModel mix(weights, comps); // throws ParseError on a bad weight vector

    SurvivalModel model = mix.as_survival_model();
    if (xmax <= 0.0) xmax = model.suggested_xmax();
    auto grid = linspace(0.0, xmax, grid_n);

    OutFile sink(out_path, out);
    std::string spec = "demo-mixture;" + rates_str + ";" + weights_str;
    sink.stream() << "# " << comment_line(spec, kVerdictTol) << "\n";
    sink.stream() << "t,rate";
    for (size_t j = 0; j < weights.size(); ++j) sink.stream() << ",w" << (j + 1);
    sink.stream() << "\n";
    for (double t : grid) {
        auto post = posterior_weights(mix, t);
        sink.stream() << g12(t) << "," << g12(predictive_failure_rate(mix, t));
        for (double w : post) sink.stream() << "," << g12(w);
        sink.stream() << "\n";
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"semi-copula, Kendall distribution, and bivariate ageing toolkit"};
    app.require_subcommand(1);

    std::string copula, marginal, route = "closed", out_path, input_csv;
    std::string source = "builtin", rates, weights;
    int grid_n = 33;
    double tol = kVerdictTol, t0 = 0.5, xmax = 0.0;
    bool fuzz = false;
    std::uint64_t seed = 0;
    int fuzz_n = 20;

    auto* validate_cmd = app.add_subcommand("validate", "check copula/marginal contracts");
    validate_cmd->add_option("--copula", copula)->required();
    validate_cmd->add_option("--marginal", marginal);
    validate_cmd->add_option("--grid", grid_n);
    validate_cmd->add_option("--tol", tol);
    validate_cmd->add_option("--out", out_path);

    auto* kendall_cmd = app.add_subcommand("kendall", "emit a Kendall curve as CSV");
    kendall_cmd->add_option("--copula", copula)->required();
    kendall_cmd->add_option("--marginal", marginal);
    kendall_cmd->add_option("--route", route)
        ->check(CLI::IsMember({"sup", "closed", "integral", "transport-B"}));
    kendall_cmd->add_option("--grid", grid_n);
    kendall_cmd->add_option("--tol", tol);
    kendall_cmd->add_option("--out", out_path);

    auto* classify_cmd = app.add_subcommand("classify", "full dependence/ageing report");
    classify_cmd->add_option("--copula", copula)->required();
    classify_cmd->add_option("--marginal", marginal)->required();
    classify_cmd->add_option("--grid", grid_n);
    classify_cmd->add_option("--tol", tol);
    classify_cmd->add_option("--xmax", xmax);
    classify_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run the implication sweep");
    verify_cmd->add_option("source", source, "'builtin' or a registry JSON file");
    verify_cmd->add_flag("--fuzz", fuzz);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--n", fuzz_n);
    verify_cmd->add_option("--tol", tol);
    verify_cmd->add_option("--out", out_path);

    auto* rec_cmd = app.add_subcommand("reconstruct", "recover a pseudo-generator");
    rec_cmd->add_option("--copula", copula);
    rec_cmd->add_option("--input", input_csv);
    rec_cmd->add_option("--t0", t0);
    rec_cmd->add_option("--grid", grid_n);
    rec_cmd->add_option("--tol", tol);
    rec_cmd->add_option("--out", out_path);

    auto* demo_cmd = app.add_subcommand("demo-mixture", "posterior/rate table for an "
                                                        "exponential mixture");
    demo_cmd->add_option("--rates", rates)->required();
    demo_cmd->add_option("--weights", weights)->required();
    demo_cmd->add_option("--grid", grid_n);
    demo_cmd->add_option("--xmax", xmax);
    demo_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool in_verify = verify_cmd->parsed();
    try {
        if (validate_cmd->parsed()) {
            if (grid_n == 33) grid_n = 64; // validation default: the 64x64 grid
            return cmd_validate(copula, marginal, grid_n, tol, out_path, out);
        }
        if (kendall_cmd->parsed()) {
            if (grid_n == 33) grid_n = 19; // CSV default: the standard interior grid
            return cmd_kendall(copula, marginal, route, grid_n, tol, out_path, out);
        }
        if (classify_cmd->parsed())
            return cmd_classify(copula, marginal, grid_n, tol, xmax, out_path, out);
        if (verify_cmd->parsed())
            return cmd_verify(source, fuzz, seed, fuzz_n, tol, out_path, out, err);
        if (rec_cmd->parsed()) {
            if (grid_n == 33) grid_n = 99;
            return cmd_reconstruct(copula, input_csv, t0, grid_n, tol, out_path, out);
        }
        if (demo_cmd->parsed())
            return cmd_demo_mixture(rates, weights, std::max(grid_n, 2), xmax, out_path,
                                    out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RouteMismatch& e) {
        err << "route mismatch: " << e.what() << "\n";
        return 3;
    } catch (const NotPseudoArchimedean& e) {
        err << "not pseudo-Archimedean: " << e.what() << "\n";
        return 1;
    } catch (const SectionInversionFailure& e) {
        err << "route inapplicable: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return in_verify ? 3 : 1;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("bivage");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace bivage::cli

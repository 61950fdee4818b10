#include "bivage/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bivage/errors.hpp"

namespace bivage {

std::string to_string(ObjectSel o) {
    switch (o) {
    case ObjectSel::Marginal: return "G";
    case ObjectSel::SurvivalCopula: return "C^";
    case ObjectSel::AgeingFunction: return "B";
    }
    return "?";
}

std::string to_string(AgeProp p) {
    switch (p) {
    case AgeProp::IFR: return "IFR";
    case AgeProp::DFR: return "DFR";
    case AgeProp::IFRA: return "IFRA";
    case AgeProp::DFRA: return "DFRA";
    case AgeProp::PMD: return "PMD";
    case AgeProp::NMD: return "NMD";
    case AgeProp::PKD: return "PKD";
    case AgeProp::NKD: return "NKD";
    }
    return "?";
}

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Vacuous: return "vacuous";
    case Outcome::Confirmed: return "confirmed";
    case Outcome::Violation: return "VIOLATION";
    }
    return "?";
}

int VerificationReport::violations() const {
    int n = 0;
    for (const auto& r : implications)
        if (r.outcome == Outcome::Violation) ++n;
    return n;
}

namespace {

std::string case_name(const ImplicationCase& c) {
    std::string s;
    for (size_t i = 0; i < c.premises.size(); ++i) {
        if (i) s += " & ";
        s += to_string(c.premises[i].second) + "(" + to_string(c.premises[i].first) + ")";
    }
    s += " => " + to_string(c.conclusion.second) + "(" +
         to_string(c.conclusion.first) + ")";
    return s;
}

std::vector<ImplicationCase> six_cases(AgeProp aI, AgeProp aD, AgeProp pos, AgeProp neg) {
    using O = ObjectSel;
    std::vector<ImplicationCase> out = {
        {{{O::Marginal, aI}, {O::SurvivalCopula, pos}}, {O::AgeingFunction, pos}, ""},
        {{{O::Marginal, aD}, {O::SurvivalCopula, neg}}, {O::AgeingFunction, neg}, ""},
        {{{O::AgeingFunction, pos}, {O::Marginal, aD}}, {O::SurvivalCopula, pos}, ""},
        {{{O::AgeingFunction, neg}, {O::Marginal, aI}}, {O::SurvivalCopula, neg}, ""},
        {{{O::SurvivalCopula, pos}, {O::AgeingFunction, neg}}, {O::Marginal, aD}, ""},
        {{{O::SurvivalCopula, neg}, {O::AgeingFunction, pos}}, {O::Marginal, aI}, ""},
    };
    for (auto& c : out) c.name = case_name(c);
    return out;
}

using VerdictTable = std::map<std::pair<ObjectSel, AgeProp>, Verdict>;

void run_implications(VerificationReport& rep, const std::vector<ImplicationCase>& cases,
                      const VerdictTable& table) {
    for (const auto& c : cases) {
        ImplicationResult res;
        res.name = c.name;
        bool premises_hold = true;
        for (const auto& p : c.premises)
            if (!table.at(p).holds()) premises_hold = false;
        if (!premises_hold) {
            res.outcome = Outcome::Vacuous;
            res.detail = "premise not established";
        } else {
            const Verdict& concl = table.at(c.conclusion);
            if (concl.holds()) {
                res.outcome = Outcome::Confirmed;
            } else if (concl.fails()) {
                res.outcome = Outcome::Violation;
                std::ostringstream d;
                d << "conclusion fails, margin " << concl.margin;
                if (!concl.witness.empty()) {
                    d << " at (";
                    for (size_t i = 0; i < concl.witness.size(); ++i)
                        d << (i ? ", " : "") << concl.witness[i];
                    d << ")";
                }
                res.detail = d.str();
            } else {
                res.outcome = Outcome::Vacuous;
                res.detail = "conclusion tolerance-limited";
            }
        }
        rep.implications.push_back(std::move(res));
    }
}

void push(VerificationReport& rep, VerdictTable& table, ObjectSel o, AgeProp p,
          const Verdict& v) {
    table[{o, p}] = v;
    rep.verdicts.emplace_back(to_string(p) + "(" + to_string(o) + ")", v);
}

} // namespace

std::vector<ImplicationCase> migrativity_implications() {
    return six_cases(AgeProp::IFR, AgeProp::DFR, AgeProp::PMD, AgeProp::NMD);
}

std::vector<ImplicationCase> kendall_implications() {
    return six_cases(AgeProp::IFRA, AgeProp::DFRA, AgeProp::PKD, AgeProp::NKD);
}

VerificationReport verify_migrativity_ageing(const BivariateModel& mdl,
                                             const HarnessOptions& opt) {
    VerificationReport rep;
    rep.model_id = mdl.id();
    rep.suite = "migrativity-ageing";
    VerdictTable table;

    auto age_grid = default_age_grid(mdl.marginal(), opt.grid_n);
    auto ifr = classify_ifr_dfr(mdl.marginal(), age_grid, opt.tol);
    push(rep, table, ObjectSel::Marginal, AgeProp::IFR, ifr.ifr);
    push(rep, table, ObjectSel::Marginal, AgeProp::DFR, ifr.dfr);

    auto cm = check_migrativity(mdl.survival_copula(), opt.mig_grid_n, opt.tol);
    push(rep, table, ObjectSel::SurvivalCopula, AgeProp::PMD, cm.pmd);
    push(rep, table, ObjectSel::SurvivalCopula, AgeProp::NMD, cm.nmd);

    auto b = ageing_function(mdl);
    auto bm = check_migrativity(b, opt.mig_grid_n, opt.tol);
    push(rep, table, ObjectSel::AgeingFunction, AgeProp::PMD, bm.pmd);
    push(rep, table, ObjectSel::AgeingFunction, AgeProp::NMD, bm.nmd);

    run_implications(rep, migrativity_implications(), table);
    return rep;
}

VerificationReport verify_kendall_ageing(const BivariateModel& mdl,
                                         const HarnessOptions& opt) {
    VerificationReport rep;
    rep.model_id = mdl.id();
    rep.suite = "kendall-ageing";
    VerdictTable table;

    auto grid = kendall_default_grid(opt.kendall_grid_n);

    const SemiCopula& chat = mdl.survival_copula();
    KendallCurve k_chat = kendall_curve_integral(chat, grid);

    if (opt.cross_check_routes) {
        auto k_sup = kendall_curve_sup(chat, grid, opt.refine);
        for (size_t i = 0; i < grid.size(); ++i) {
            if (std::abs(k_sup.values[i] - k_chat.values[i]) > opt.route_tol) {
                std::ostringstream msg;
                msg << mdl.id() << ": partition-sup vs " << to_string(k_chat.provenance)
                    << " Kendall differ by "
                    << std::abs(k_sup.values[i] - k_chat.values[i]) << " at t = "
                    << grid[i];
                throw RouteMismatch(msg.str());
            }
        }
    }

    KendallCurve k_b = kendall_curve_transported(k_chat, mdl.marginal(), grid);
    auto b = ageing_function(mdl);
    if (opt.cross_check_routes) {
        auto b_sup = kendall_curve_sup(b, grid, opt.refine);
        for (size_t i = 0; i < grid.size(); ++i) {
            if (std::abs(b_sup.values[i] - k_b.values[i]) > opt.route_tol) {
                std::ostringstream msg;
                msg << mdl.id() << ": transported vs partition-sup ageing Kendall differ by "
                    << std::abs(b_sup.values[i] - k_b.values[i]) << " at t = " << grid[i];
                throw RouteMismatch(msg.str());
            }
        }
        rep.note = "kendall routes agree within " + std::to_string(opt.route_tol);
    }

    // the pseudo-generator behind the copula's Kendall class is assumed
    // differentiable; certify finite-difference consistency and record the
    // outcome without claiming more
    try {
        KendallCurve base = chat.has_generator()
                                ? kendall_curve_closed(chat.generator(), grid)
                                : k_chat;
        auto pseudo = reconstruct_generator(base, 0.5);
        auto phi = [&pseudo](double x) { return pseudo.phi(x); };
        double worst = 0.0;
        for (double t : {0.3, 0.5, 0.7}) {
            double d1 = central_difference(phi, t, 1e-4, 0.06, 0.94);
            double d2 = central_difference(phi, t, 5e-5, 0.06, 0.94);
            worst = std::max(worst, std::abs(d1 - d2) / (1.0 + std::abs(d2)));
        }
        rep.note += (rep.note.empty() ? "" : "; ");
        rep.note += worst < 1e-3 ? "pseudo-generator finite-difference consistent"
                                 : "pseudo-generator derivative irregular";
    } catch (const NotPseudoArchimedean&) {
        rep.note += (rep.note.empty() ? "" : "; ");
        rep.note += "survival copula not pseudo-Archimedean on the grid";
    }

    auto hz_grid = default_hazard_average_grid(mdl.marginal(), opt.grid_n);
    auto ifra = classify_ifra_dfra(mdl.marginal(), hz_grid, opt.tol);
    push(rep, table, ObjectSel::Marginal, AgeProp::IFRA, ifra.ifra);
    push(rep, table, ObjectSel::Marginal, AgeProp::DFRA, ifra.dfra);

    auto ck = classify_pkd_nkd(k_chat, opt.tol);
    push(rep, table, ObjectSel::SurvivalCopula, AgeProp::PKD, ck.pkd);
    push(rep, table, ObjectSel::SurvivalCopula, AgeProp::NKD, ck.nkd);

    auto bk = classify_pkd_nkd(k_b, opt.tol);
    push(rep, table, ObjectSel::AgeingFunction, AgeProp::PKD, bk.pkd);
    push(rep, table, ObjectSel::AgeingFunction, AgeProp::NKD, bk.nkd);

    run_implications(rep, kendall_implications(), table);
    return rep;
}

namespace {

SurvivalModel composed_survival(const SurvivalModel& h1, const SurvivalModel& h2) {
    // cumulative hazard composition: R_G = R_{H1} o R_{H2}^{-1}
    auto log_surv = [h1, h2](double x) {
        if (x <= 0.0) return 0.0;
        return h1.log_survival(h2.inverse_hazard(x));
    };
    auto surv = [log_surv](double x) { return std::exp(log_surv(x)); };
    auto inv = [h1, h2](double u) {
        return -h2.log_survival(h1.inverse_survival(u));
    };
    double proxy = inv(0.5) / std::log(2.0);
    return SurvivalModel::from_functions(surv, {}, log_surv, inv,
                                         "composed[" + h1.label() + ";" + h2.label() + "]",
                                         proxy);
}

} // namespace

VerificationReport verify_hazard_composition(const SurvivalModel& h1,
                                             const SurvivalModel& h2,
                                             const HarnessOptions& opt) {
    VerificationReport rep;
    rep.model_id = h1.label() + ";" + h2.label();
    rep.suite = "hazard-composition";

    SurvivalModel g = composed_survival(h1, h2);

    auto cls = [&](const SurvivalModel& m) {
        return classify_ifra_dfra(m, default_hazard_average_grid(m, opt.grid_n), opt.tol);
    };
    auto c1 = cls(h1), c2 = cls(h2), cg = cls(g);

    rep.verdicts = {
        {"IFRA(H1)", c1.ifra}, {"DFRA(H1)", c1.dfra}, {"IFRA(H2)", c2.ifra},
        {"DFRA(H2)", c2.dfra}, {"IFRA(G)", cg.ifra},  {"DFRA(G)", cg.dfra},
    };

    struct Case {
        const Verdict *p1, *p2, *concl;
        const char* name;
    };
    const Case cases[] = {
        {&cg.ifra, &c1.dfra, &c2.dfra, "IFRA(G) & DFRA(H1) => DFRA(H2)"},
        {&cg.dfra, &c1.ifra, &c2.ifra, "DFRA(G) & IFRA(H1) => IFRA(H2)"},
        {&c2.dfra, &cg.dfra, &c1.dfra, "DFRA(H2) & DFRA(G) => DFRA(H1)"},
        {&c2.ifra, &cg.ifra, &c1.ifra, "IFRA(H2) & IFRA(G) => IFRA(H1)"},
        {&c1.dfra, &c2.ifra, &cg.dfra, "DFRA(H1) & IFRA(H2) => DFRA(G)"},
        {&c1.ifra, &c2.dfra, &cg.ifra, "IFRA(H1) & DFRA(H2) => IFRA(G)"},
    };
    for (const auto& c : cases) {
        ImplicationResult res;
        res.name = c.name;
        if (!c.p1->holds() || !c.p2->holds()) {
            res.outcome = Outcome::Vacuous;
        } else if (c.concl->holds()) {
            res.outcome = Outcome::Confirmed;
        } else if (c.concl->fails()) {
            res.outcome = Outcome::Violation;
            res.detail = "conclusion fails, margin " + std::to_string(c.concl->margin);
        } else {
            res.outcome = Outcome::Vacuous;
            res.detail = "conclusion tolerance-limited";
        }
        rep.implications.push_back(std::move(res));
    }
    return rep;
}

namespace {

enum class PairAgreement { Agree, Disagree, Undecided };

PairAgreement compare_sides(const Verdict& left, const Verdict& right) {
    if (left.inconclusive() || right.inconclusive()) return PairAgreement::Undecided;
    if (left.holds() == right.holds()) return PairAgreement::Agree;
    return PairAgreement::Disagree;
}

void push_pair(VerificationReport& rep, const std::string& name, const Verdict& left,
               const Verdict& right, const std::string& left_name,
               const std::string& right_name) {
    rep.verdicts.emplace_back(left_name, left);
    rep.verdicts.emplace_back(right_name, right);
    ImplicationResult res;
    res.name = name;
    switch (compare_sides(left, right)) {
    case PairAgreement::Agree:
        res.outcome = Outcome::Confirmed;
        res.detail = left.holds() ? "both hold" : "both fail";
        break;
    case PairAgreement::Disagree:
        res.outcome = Outcome::Violation;
        res.detail = left_name + " " + to_string(left.status) + " but " + right_name +
                     " " + to_string(right.status);
        break;
    case PairAgreement::Undecided:
        res.outcome = Outcome::Vacuous;
        res.detail = "tolerance-limited side";
        break;
    }
    rep.implications.push_back(std::move(res));
}

} // namespace

VerificationReport verify_generator_ageing_equivalences(const Generator& g,
                                                        const HarnessOptions& opt) {
    VerificationReport rep;
    rep.model_id = g.label();
    rep.suite = "generator-ageing";

    auto cop = SemiCopula::archimedean(g);
    auto inv = SurvivalModel::generator_inverse(g);

    auto pqd = check_pqd(cop, opt.grid_n, opt.tol);
    auto nbu = classify_nbu_nwu(inv, default_nbu_grid(inv, (opt.grid_n + 1) / 2), opt.tol);
    push_pair(rep, "PQD(C) <=> NWU(phi^-1)", pqd.pqd, nbu.nwu, "PQD(C)", "NWU(phi^-1)");
    push_pair(rep, "NQD(C) <=> NBU(phi^-1)", pqd.nqd, nbu.nbu, "NQD(C)", "NBU(phi^-1)");

    auto grid = kendall_default_grid(opt.kendall_grid_n);
    auto kk = classify_pkd_nkd(kendall_curve_closed(g, grid), opt.tol);
    auto ifra = classify_ifra_dfra(inv, default_hazard_average_grid(inv, opt.grid_n),
                                   opt.tol);
    push_pair(rep, "PKD(C) <=> DFRA(phi^-1)", kk.pkd, ifra.dfra, "PKD(C)",
              "DFRA(phi^-1)");
    push_pair(rep, "NKD(C) <=> IFRA(phi^-1)", kk.nkd, ifra.ifra, "NKD(C)",
              "IFRA(phi^-1)");

    auto ltd = check_ltd_rti(cop, opt.grid_n, opt.tol);
    auto ifr = classify_ifr_dfr(inv, default_age_grid(inv, opt.grid_n), opt.tol);
    push_pair(rep, "LTD(C) <=> DFR(phi^-1)", ltd.ltd, ifr.dfr, "LTD(C)", "DFR(phi^-1)");

    auto si = check_si(cop, opt.grid_n, opt.tol);
    auto log_density = [inv](double x) { return std::log(inv.density(x)); };
    auto lc = convexity_verdict(log_density, default_age_grid(inv, opt.grid_n), opt.tol);
    push_pair(rep, "SI(C) <=> log-convex density(phi^-1)", si, lc, "SI(C)",
              "logconvex(f)");

    return rep;
}

MixtureDemoReport mixture_paradox_demo(const MixtureModel& mix, const HarnessOptions& opt) {
    MixtureDemoReport rep;
    SurvivalModel as_model = mix.as_survival_model();

    for (const auto& comp : mix.components)
        rep.component_ifr.push_back(
            classify_ifr_dfr(comp, default_age_grid(comp, opt.grid_n), opt.tol));

    // conditionally-iid joint survival: sum_j w_j G_j(x) G_j(y)
    auto joint = [mix](double x, double y) {
        double s = 0.0;
        for (size_t j = 0; j < mix.weights.size(); ++j)
            s += mix.weights[j] * mix.components[j].survival(x) *
                 mix.components[j].survival(y);
        return s;
    };
    WedgeGrid wg = opt.wedge;
    if (wg.x_max <= 0.0) wg.x_max = as_model.suggested_xmax();
    rep.conditional_biv = schur_concavity_check(joint, wg, opt.tol);

    rep.mixture_ifr =
        classify_ifr_dfr(as_model, default_age_grid(as_model, opt.grid_n), opt.tol);
    rep.note = "independent components with monotone rates; the unconditional "
               "rate mixes posteriors that drift toward the slow component";
    return rep;
}

SweepResult run_sweep(const std::vector<ModelSpecEntry>& entries,
                      const HarnessOptions& opt) {
    SweepResult result;
    for (const auto& e : entries) {
        auto chat = make_copula(e.copula);
        auto marginal = make_marginal(e.marginal);
        auto val = validate(chat, 33, opt.tol);
        if (!val.semicopula_ok())
            throw Error(e.id + ": copula '" + e.copula +
                        "' fails boundary/monotonicity validation");
        BivariateModel mdl(chat, marginal, e.id);

        result.reports.push_back(verify_migrativity_ageing(mdl, opt));
        ++result.models;

        // the Kendall suite needs invertible sections and a density
        bool p1 = true;
        try {
            kendall_integral(chat, 0.5);
        } catch (const SectionInversionFailure&) {
            p1 = false;
        }
        if (p1 && marginal.has_density()) {
            result.reports.push_back(verify_kendall_ageing(mdl, opt));
        } else {
            VerificationReport skip;
            skip.model_id = e.id;
            skip.suite = "kendall-ageing";
            skip.skipped = true;
            skip.note = p1 ? "marginal has no density" : "sections not invertible";
            result.reports.push_back(std::move(skip));
        }
    }

    const std::pair<const char*, const char*> hazard_pairs[] = {
        {"weibull:0.5", "weibull:2"},
        {"weibull:2", "weibull:0.5"},
        {"weibull:2", "weibull:2"},
        {"exp:1", "weibull:3"},
        {"pareto:1", "weibull:0.5"},
    };
    for (const auto& [a, b] : hazard_pairs)
        result.reports.push_back(
            verify_hazard_composition(make_marginal(a), make_marginal(b), opt));

    const char* gen_keys[] = {"clayton:1", "clayton:0.5", "gumbel:2",
                              "gumbel:1.5", "gumbel:0.5", "frank:2"};
    for (const char* k : gen_keys)
        result.reports.push_back(verify_generator_ageing_equivalences(make_generator(k), opt));

    for (const auto& r : result.reports) result.violations += r.violations();
    return result;
}

} // namespace bivage

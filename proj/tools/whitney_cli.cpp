#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "whitney/dual.hpp"
#include "whitney/families.hpp"
#include "whitney/io.hpp"
#include "whitney/kernels.hpp"
#include "whitney/qsym.hpp"

using namespace whitney;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kLimit = 3, kStructural = 4 };

struct RunConfig {
    std::string command;
    std::string family;
    int n = 0;
    std::string labeling;
    std::string input;
    std::string format = "text";
    std::size_t cap = ChainTree::kDefaultCap;
    int max_n = -1;
    int jobs = 0;
    std::string pair;
    bool via_r = false;
    bool omega = false;
    bool assume_verified = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Resolved {
    std::string title;
    Poset poset;
    std::shared_ptr<const Labeling> labeling;
};

Resolved resolve_family(const std::string& family, int n, const std::string& labeling, int max_n) {
    LabeledPoset lp = make_family(family, n, labeling, max_n);
    return {family + " " + std::to_string(n), std::move(lp.poset), lp.labeling};
}

Resolved resolve(const RunConfig& cfg) {
    if (cfg.family.empty() == cfg.input.empty()) throw UsageError("give exactly one of --family or --input");
    if (!cfg.input.empty()) {
        if (!cfg.labeling.empty()) throw UsageError("--labeling names a built-in labeling and needs --family");
        PosetDocument doc = read_poset_file(cfg.input);
        return {cfg.input, std::move(doc.poset), doc.labeling};
    }
    if (cfg.n < 1) throw UsageError("--family needs --n >= 1");
    return resolve_family(cfg.family, cfg.n, cfg.labeling, cfg.max_n);
}

// "family:n" or a poset file.
Resolved resolve_pair(const RunConfig& cfg) {
    if (cfg.pair.empty()) throw UsageError("this command needs --pair");
    const auto colon = cfg.pair.find(':');
    if (colon != std::string::npos) {
        int n = 0;
        try {
            n = std::stoi(cfg.pair.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("--pair expects family:n or a file");
        }
        return resolve_family(cfg.pair.substr(0, colon), n, "", cfg.max_n);
    }
    PosetDocument doc = read_poset_file(cfg.pair);
    return {cfg.pair, std::move(doc.poset), doc.labeling};
}

const Labeling& need_labeling(const Resolved& r) {
    if (!r.labeling) throw UsageError(r.title + " carries no labeling");
    return *r.labeling;
}

std::string vec_str(const WhitneyVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string rank_sizes(const Poset& P) {
    std::string s = "(";
    for (int k = 0; k <= P.height(); ++k) s += (k ? "," : "") + std::to_string(P.level(k).size());
    return s + ")";
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Families whose quotient has a named counterpart.
std::optional<std::string> known_dual(const RunConfig& cfg, const std::string& labeling_name) {
    if (cfg.family == "pi") return "isf";
    if (cfg.family == "nc") return "ncdyck";
    if (cfg.family == "piw" && labeling_name == "lambda_c") return "sf";
    return std::nullopt;
}

DualOptions dual_options(const RunConfig& cfg) {
    DualOptions opt;
    opt.assume_verified = cfg.assume_verified;
    opt.chain_cap = cfg.cap;
    return opt;
}

int cmd_whitney(const RunConfig& cfg) {
    Resolved r = resolve(cfg);
    const auto w = whitney_first(r.poset), W = whitney_second(r.poset);
    std::optional<bool> duals;
    if (!cfg.pair.empty()) duals = is_whitney_dual_pair(r.poset, resolve_pair(cfg).poset);
    if (cfg.format == "json") {
        json j{{"w", w}, {"W", W}};
        if (duals) j["duals"] = *duals;
        emit_json(j);
    } else {
        std::cout << "w=" << vec_str(w) << "\nW=" << vec_str(W) << "\n";
        if (duals) std::cout << "duals: " << yes_no(*duals) << "\n";
    }
    return duals && !*duals ? kFailed : kOk;
}

void print_verdict_text(const Resolved& r, const WhitneyVerdict& v) {
    const bool chain_edge = r.labeling->is_chain_edge();
    const std::string prop = chain_edge ? "CW" : "EW";
    if (v.strict())
        std::cout << prop << ": pass\n";
    else if (v.ok())
        std::cout << prop << ": FAIL\ngeneralized " << prop << ": pass\n";
    else
        std::cout << prop << ": FAIL\n";
    for (const auto& rep : v.reports) std::cout << "  " << rep.summary(r.poset) << "\n";
    if (!v.ok() && !v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
}

int cmd_verify(const RunConfig& cfg) {
    Resolved r = resolve(cfg);
    const Labeling& lab = need_labeling(r);
    WhitneyVerdict v = verify_whitney(r.poset, lab);
    if (cfg.format == "json") {
        json reps = json::array();
        for (const auto& rep : v.reports) reps.push_back(report_to_json(rep, r.poset));
        emit_json({{"labeling", lab.name()}, {"verdict", verdict_name(v.verdict)}, {"pass", v.strict()},
                   {"generalized_pass", v.ok()}, {"reason", v.reason}, {"reports", reps}});
    } else {
        print_verdict_text(r, v);
    }
    return v.strict() ? kOk : kFailed;
}

int cmd_dual(const RunConfig& cfg) {
    Resolved r = resolve(cfg);
    const Labeling& lab = need_labeling(r);
    DualOptions opt = dual_options(cfg);
    QuotientPoset Q = build_Q(r.poset, lab, opt);
    const Poset* out = &Q.poset;
    const EdgeLabeling* out_lab = Q.dual_labeling.get();
    std::optional<RPoset> R;
    std::optional<VerificationReport> iso_rq;
    if (cfg.via_r) {
        R = build_R(r.poset, lab, opt);
        iso_rq = verify_R_iso_Q(r.poset, lab, *R, Q);
        out = &R->poset;
        out_lab = nullptr;
    }
    const bool dual_ok = is_whitney_dual_pair(r.poset, Q.poset);
    std::optional<bool> matches;
    std::string dual_family;
    if (auto df = known_dual(cfg, lab.name())) {
        dual_family = *df;
        matches = are_isomorphic(Q.poset, resolve_family(*df, cfg.n, "", cfg.max_n).poset).isomorphic;
    }
    const bool pass = dual_ok && (!iso_rq || iso_rq->pass) && (!matches || *matches);
    if (cfg.format == "dot") {
        std::cout << poset_to_dot(*out, out_lab, cfg.via_r ? "R" : "Q");
    } else if (cfg.format == "json") {
        json j = poset_to_json(*out, out_lab);
        emit_json(j);
    } else {
        std::cout << (cfg.via_r ? "R" : "Q") << " of " << r.title << " with " << lab.name() << ": " << out->size()
                  << " elements, rank sizes " << rank_sizes(*out) << "\n";
        std::cout << "verdict: " << verdict_name(Q.verdict.verdict) << "\n";
        std::cout << "w=" << vec_str(whitney_first(Q.poset)) << " W=" << vec_str(whitney_second(Q.poset)) << "\n";
        std::cout << "whitney dual of input: " << yes_no(dual_ok) << "\n";
        if (matches) std::cout << "isomorphic to " << dual_family << " " << cfg.n << ": " << yes_no(*matches) << "\n";
        if (iso_rq) std::cout << "R isomorphic to Q: " << (iso_rq->pass ? "pass" : "FAIL") << "\n";
        std::cout << "lattice: " << yes_no(is_lattice(Q.poset)) << "\nbowtie-free: " << yes_no(is_bowtie_free(Q.poset))
                  << "\n";
        for (int k = 0; k <= out->height(); ++k) {
            std::cout << "rank " << k << ":";
            for (ElementId x : out->level(k)) std::cout << " " << out->name(x);
            std::cout << "\n";
        }
        if (out_lab)
            for (auto [lo, hi] : out->cover_pairs())
                std::cout << "  " << out->name(lo) << " < " << out->name(hi) << " : " << out_lab->at(lo, hi).str()
                          << "\n";
    }
    return pass ? kOk : kFailed;
}

int cmd_fqs(const RunConfig& cfg) {
    Resolved r = resolve(cfg);
    QSymFundamental q = flag_qsym(r.poset);
    if (cfg.omega) q = omega(q);
    if (cfg.format == "json")
        emit_json(qsym_to_json(q));
    else
        std::cout << (cfg.omega ? "omega(F) = " : "F = ") << q.str() << "\n";
    return kOk;
}

int cmd_hecke(const RunConfig& cfg) {
    Resolved r = resolve(cfg);
    const Labeling& lab = need_labeling(r);
    HeckeOrbitData H = hecke_action(r.poset, lab, cfg.assume_verified);
    HeckeReport rep = verify_hecke_relations(H);
    const QSymFundamental ch = characteristic(H), F = flag_qsym(r.poset);
    const bool ch_ok = ch == F;
    const bool pass = rep.pass() && ch_ok;
    if (cfg.format == "json") {
        emit_json({{"chains", H.chains.size()},
                   {"local", report_to_json(rep.local, r.poset)},
                   {"idempotent", report_to_json(rep.idempotent, r.poset)},
                   {"commute", report_to_json(rep.commute, r.poset)},
                   {"braid", report_to_json(rep.braid, r.poset)},
                   {"characteristic", qsym_to_json(ch)},
                   {"characteristic_matches_flag", ch_ok}});
    } else {
        auto line = [](const char* name, const VerificationReport& v) {
            std::cout << name << ": " << (v.pass ? "pass" : "FAIL") << " (" << v.checked << " checks)\n";
            if (v.counterexample) std::cout << "  " << v.counterexample->reason << "\n";
        };
        std::cout << H.chains.size() << " maximal chains\n";
        line("idempotent", rep.idempotent);
        line("commute", rep.commute);
        line("braid", rep.braid);
        line("local", rep.local);
        std::cout << "characteristic: " << (ch_ok ? "pass" : "FAIL") << " " << ch.str() << "\n";
    }
    return pass ? kOk : kFailed;
}

int cmd_iso(const RunConfig& cfg) {
    Resolved a = resolve(cfg);
    Resolved b = resolve_pair(cfg);
    IsomorphismResult res = are_isomorphic(a.poset, b.poset);
    if (cfg.format == "json") {
        json j{{"isomorphic", res.isomorphic}};
        if (res.isomorphic) j["witness"] = res.witness;
        emit_json(j);
    } else {
        std::cout << "isomorphic: " << yes_no(res.isomorphic) << "\n";
    }
    return res.isomorphic ? kOk : kFailed;
}

int cmd_export(const RunConfig& cfg) {
    Resolved r = resolve(cfg);
    const auto* edge = dynamic_cast<const EdgeLabeling*>(r.labeling.get());
    if (cfg.format == "dot")
        std::cout << poset_to_dot(r.poset, edge, r.title);
    else
        emit_json(poset_to_json(r.poset, edge));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build and verify Whitney duals of graded posets"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--family", cfg.family, "pi, nc, piw, sf, isf or ncdyck");
    app.add_option("--n", cfg.n, "family size parameter");
    app.add_option("--labeling", cfg.labeling, "min, nc, lambda_e, lambda_c, lambda_sf, isf_star, ncdyck_star");
    app.add_option("--input", cfg.input, "poset JSON file");
    app.add_option("--format,--emit", cfg.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--cap", cfg.cap, "maximum number of chains enumerated from the bottom");
    app.add_option("--max-n", cfg.max_n, "override the family size cap");
    app.add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");
    app.add_option("--pair", cfg.pair, "second poset as family:n or a JSON file");
    app.add_flag("--via-r", cfg.via_r, "build the pair-based dual and check it against the quotient");
    app.add_flag("--omega", cfg.omega, "apply omega to the flag function");
    app.add_flag("--assume-verified", cfg.assume_verified, "skip labeling verification");

    const std::pair<const char*, const char*> commands[] = {
        {"whitney", "Whitney numbers of both kinds"},   {"dual", "construct the quotient dual"},
        {"verify", "check the Whitney labeling axioms"}, {"fqs", "flag quasisymmetric function"},
        {"hecke", "0-Hecke relations and characteristic"}, {"iso", "isomorphism test against --pair"},
        {"export", "write the poset as JSON or DOT"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.jobs > 0) kernels::set_num_threads(cfg.jobs);

    try {
        if (cfg.format == "dot" && cfg.command != "dual" && cfg.command != "export")
            throw UsageError("dot output is available for dual and export");
        if (cfg.command == "whitney") return cmd_whitney(cfg);
        if (cfg.command == "dual") return cmd_dual(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "fqs") return cmd_fqs(cfg);
        if (cfg.command == "hecke") return cmd_hecke(cfg);
        if (cfg.command == "iso") return cmd_iso(cfg);
        if (cfg.command == "export") return cmd_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const WhitneyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidInput:
            return kUsage;
        case ErrorKind::SizeLimit:
            return kLimit;
        default:
            return kStructural;
        }
    }
    return kUsage;
}

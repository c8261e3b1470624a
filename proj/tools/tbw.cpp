// Command-line front end: analyze / prune / quotients / chambers / realize /
// verify over polytope and divisor-pair fixtures.
//
// Exit codes: 0 success, 2 malformed input, 3 violated precondition,
// 4 verification failure.

#include "tbw/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

using namespace tbw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

IVec parse_vector(const std::string& spec) {
    IVec v;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            v.push_back(Int(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) v.push_back(Int(cur));
    if (v.empty()) throw input_error("empty vector specification");
    return v;
}

struct FixtureData {
    std::string name;
    bool is_mdp = false;
    Polytope polytope;
    IVec v;
    MdpInput mdp;
};

FixtureData load_fixture(const std::string& path, const std::string& v_override) {
    json j = load_file(path);
    FixtureData f;
    if (j.contains("name")) f.name = j["name"].get<std::string>();
    if (j.contains("P_minus")) {
        f.is_mdp = true;
        f.mdp = mdp_from_json(j);
        return f;
    }
    f.polytope = polytope_from_json(j);
    if (!v_override.empty()) {
        f.v = parse_vector(v_override);
    } else if (j.contains("v")) {
        f.v = ivec_from_json(j["v"]);
    }
    return f;
}

void emit(const json& report, const std::string& text, const std::string& format,
          const std::string& out_path) {
    std::string payload = (format == "text") ? text : report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot write " + out_path);
        out << payload;
    }
}

struct CommonOpts {
    std::string file;
    std::string vspec;
    std::string format = "json";
    std::string out;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("file", opts.file, "fixture or polytope JSON file")->required();
    cmd->add_option("--v", opts.vspec, "action covector, e.g. 0,1,1 (overrides the fixture's)");
    cmd->add_option("--format", opts.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opts.out, "write the report to this path instead of stdout");
    cmd->add_flag("--timings", opts.timings, "include wall-clock timings (non-deterministic)");
}

json envelope(const std::string& command, const FixtureData& f) {
    json env;
    env["command"] = command;
    json inputs;
    if (!f.name.empty()) inputs["fixture"] = f.name;
    if (f.is_mdp) {
        inputs["kind"] = "divisor-pair";
    } else {
        inputs["kind"] = "pair";
        inputs["v"] = to_json(f.v);
    }
    env["inputs"] = inputs;
    return env;
}

ActionAnalysis analyzed(const FixtureData& f) {
    if (f.v.empty()) throw input_error("no action covector: pass --v or add \"v\" to the fixture");
    return analyze_action(f.polytope, f.v);
}

// aggregated verify state
struct SuiteOutcome {
    std::string name;
    json report;
    bool pass = false;
    bool precondition_stop = false;
    double ms = 0;
};

std::pair<Rat, Rat> default_rho(const ActionAnalysis& an) {
    Rat quarter = an.bandwidth / 4;
    return {an.critical.front() + quarter, an.critical.back() - quarter};
}

SuiteOutcome run_suite(const std::string& name, const FixtureData& f, const Rat& rho_minus,
                       const Rat& rho_plus, const Int& am, const Int& ap, const Int& m_max,
                       int samples) {
    SuiteOutcome out;
    out.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        // the section/chamber suites need a Q-factorial equalized bordism; a
        // plain pair that is not one is replaced by its pruning
        auto subject = [&](json& meta) -> ActionAnalysis {
            if (f.is_mdp) {
                auto rb = realize(f.mdp, am, ap);
                meta["subject"] = "realized slab";
                return analyze_action(rb.q, rb.v);
            }
            ActionAnalysis an = analyzed(f);
            if (an.bordism && an.equalized_sink && an.equalized_source && an.q_factorial) {
                meta["subject"] = "pair";
                return an;
            }
            auto pr = prune(f.polytope, f.v, rho_minus, rho_plus);
            meta["subject"] = "pruned pair";
            return analyze_action(pr.polytope, f.v);
        };
        if (name == "pruning-theorem") {
            auto pr = prune(f.polytope, f.v, rho_minus, rho_plus);
            auto rep = verify_pruning_theorem(f.polytope, f.v, pr);
            out.report = json{{"pruned", to_json(pr)}, {"theorem", to_json(rep)}};
            out.pass = rep.all_pass;
        } else if (name == "section-isomorphisms") {
            json meta;
            ActionAnalysis an = subject(meta);
            auto rep = verify_section_isomorphisms(an, m_max);
            out.report = to_json(rep);
            out.report["subject"] = meta["subject"];
            out.pass = rep.all_pass;
        } else if (name == "chamber-decomposition") {
            json meta;
            ActionAnalysis an = subject(meta);
            auto rep = chamber_decomposition(an, samples);
            out.report = to_json(rep);
            out.report["subject"] = meta["subject"];
            out.pass = rep.all_pass;
        } else if (name == "realization") {
            auto val = validate_mdp(f.mdp);
            json jr;
            jr["validation"] = to_json(val);
            bool pass = val.valid;
            if (val.valid) {
                auto rb = realize(f.mdp, am, ap);
                auto rep = verify_realization(rb);
                jr["realization"] = to_json(rep);
                jr["hull_equals_slab"] = rb.hull_equals_slab;
                pass = rep.all_pass;
            }
            out.report = jr;
            out.pass = pass;
        } else if (name == "round-trip") {
            json jr;
            bool pass = true;
            json trips = json::array();
            for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
                auto rb = realize(f.mdp, m, p);
                auto an = analyze_action(rb.q, rb.v);
                auto mdp = extract_mdp(an);
                auto val = validate_mdp(f.mdp, false);
                bool sink_ok = normally_equivalent(mdp.sink_model, f.mdp.p_minus);
                bool source_ok = val.p_plus && normally_equivalent(mdp.source_model, *val.p_plus);
                trips.push_back(json{{"alpha", json::array({m, p})},
                                     {"sink_recovered", sink_ok},
                                     {"source_recovered", source_ok}});
                pass = pass && sink_ok && source_ok;
            }
            jr["round_trips"] = trips;
            auto cmp = compare_realizations(f.mdp, 1, 1, 1, 2);
            jr["grading_independence"] = to_json(cmp);
            pass = pass && cmp.all_pass;
            out.report = jr;
            out.pass = pass;
        } else {
            throw input_error("unknown suite: " + name);
        }
    } catch (const precondition_error& e) {
        out.precondition_stop = true;
        out.report = json{{"status", "precondition"}, {"error", e.what()}};
        out.pass = false;
    } catch (const verification_error& e) {
        out.report = json{{"status", "failed"}, {"error", e.what()}};
        out.pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    out.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

int cmd_analyze(const CommonOpts& opts) {
    FixtureData f = load_fixture(opts.file, opts.vspec);
    if (f.is_mdp) throw input_error("analyze expects a polytope fixture");
    ActionAnalysis an = analyzed(f);
    json env = envelope("analyze", f);
    env["analysis"] = to_json(an);
    std::string text = "analyze: r=" + std::to_string(an.criticality) +
                       " bandwidth=" + rat_to_string(an.bandwidth) +
                       " b_type=" + (an.b_type ? "true" : "false") +
                       " bordism=" + (an.bordism ? "true" : "false") + "\n";
    emit(env, text, opts.format, opts.out);
    return kExitOk;
}

int cmd_quotients(const CommonOpts& opts) {
    FixtureData f = load_fixture(opts.file, opts.vspec);
    if (f.is_mdp) throw input_error("quotients expects a polytope fixture");
    ActionAnalysis an = analyzed(f);
    auto chain = quotient_chain(an);
    json env = envelope("quotients", f);
    env["chain"] = to_json(chain);
    emit(env, render_chain_text(chain), opts.format, opts.out);
    return kExitOk;
}

int cmd_prune(const CommonOpts& opts, const std::string& rminus, const std::string& rplus) {
    FixtureData f = load_fixture(opts.file, opts.vspec);
    if (f.is_mdp) throw input_error("prune expects a polytope fixture");
    ActionAnalysis an = analyzed(f);
    Rat lo, hi;
    if (rminus.empty() || rplus.empty()) {
        std::tie(lo, hi) = default_rho(an);
    } else {
        lo = rat_from_string(rminus);
        hi = rat_from_string(rplus);
    }
    auto pr = prune(f.polytope, f.v, lo, hi);
    auto rep = verify_pruning_theorem(f.polytope, f.v, pr);
    json env = envelope("prune", f);
    env["inputs"]["rho_minus"] = to_json(lo);
    env["inputs"]["rho_plus"] = to_json(hi);
    env["pruned"] = to_json(pr);
    env["theorem"] = to_json(rep);
    std::string text = "prune: [" + rat_to_string(lo) + ", " + rat_to_string(hi) + "] " +
                       (rep.all_pass ? "all steps pass" : "some step fails") + "\n";
    emit(env, text, opts.format, opts.out);
    return rep.all_pass ? kExitOk : kExitVerification;
}

int cmd_chambers(const CommonOpts& opts, int samples) {
    FixtureData f = load_fixture(opts.file, opts.vspec);
    if (f.is_mdp) throw input_error("chambers expects a polytope fixture");
    ActionAnalysis an = analyzed(f);
    auto rep = chamber_decomposition(an, samples);
    json env = envelope("chambers", f);
    env["chambers"] = to_json(rep);
    std::string text = std::string("chambers: ") + (rep.all_pass ? "constant and matching" : "MISMATCH") + "\n";
    emit(env, text, opts.format, opts.out);
    return rep.all_pass ? kExitOk : kExitVerification;
}

int cmd_realize(const CommonOpts& opts, const std::string& alpha) {
    FixtureData f = load_fixture(opts.file, opts.vspec);
    if (!f.is_mdp) throw input_error("realize expects a divisor-pair fixture");
    IVec a = parse_vector(alpha);
    if (a.size() != 2) throw input_error("--alpha expects two integers a,b");
    auto rb = realize(f.mdp, a[0], a[1]);
    auto rep = verify_realization(rb);
    json env = envelope("realize", f);
    env["inputs"]["alpha"] = json::array({to_json(Rat(a[0])), to_json(Rat(a[1]))});
    env["slab"] = to_json(rb.q);
    env["hull_equals_slab"] = rb.hull_equals_slab;
    env["verification"] = to_json(rep);
    emit(env, render_chain_text(rep.chain), opts.format, opts.out);
    return rep.all_pass ? kExitOk : kExitVerification;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, const std::string& alpha,
               const std::string& rminus, const std::string& rplus, long m_max, int samples) {
    FixtureData f = load_fixture(opts.file, opts.vspec);
    IVec a = parse_vector(alpha);
    if (a.size() != 2) throw input_error("--alpha expects two integers a,b");

    std::vector<std::string> suites;
    if (suite == "all") {
        if (f.is_mdp) suites = {"realization", "round-trip", "section-isomorphisms", "chamber-decomposition"};
        else suites = {"pruning-theorem", "section-isomorphisms", "chamber-decomposition"};
    } else {
        suites = {suite};
    }

    Rat lo, hi;
    if (!f.is_mdp) {
        ActionAnalysis an = analyzed(f);
        if (rminus.empty() || rplus.empty()) {
            std::tie(lo, hi) = default_rho(an);
        } else {
            lo = rat_from_string(rminus);
            hi = rat_from_string(rplus);
        }
    }

    int threads = 1;
    if (const char* t = std::getenv("TB_THREADS")) {
        threads = std::max(1, atoi(t));
    }

    std::vector<SuiteOutcome> outcomes(suites.size());
    if (threads <= 1) {
        for (size_t i = 0; i < suites.size(); ++i) {
            outcomes[i] = run_suite(suites[i], f, lo, hi, a[0], a[1], Int(m_max), samples);
        }
    } else {
        std::vector<std::future<SuiteOutcome>> futs;
        for (size_t i = 0; i < suites.size(); ++i) {
            futs.push_back(std::async(std::launch::async, [&, i] {
                return run_suite(suites[i], f, lo, hi, a[0], a[1], Int(m_max), samples);
            }));
        }
        for (size_t i = 0; i < suites.size(); ++i) outcomes[i] = futs[i].get();
    }

    json env = envelope("verify", f);
    env["inputs"]["suite"] = suite;
    env["inputs"]["alpha"] = json::array({to_json(Rat(a[0])), to_json(Rat(a[1]))});
    if (!f.is_mdp) {
        env["inputs"]["rho_minus"] = to_json(lo);
        env["inputs"]["rho_plus"] = to_json(hi);
        env["inputs"]["m_max"] = m_max;
    }
    bool all_pass = true;
    bool any_precondition = false;
    json jsuites = json::array();
    std::string text;
    for (const auto& o : outcomes) {
        json js;
        js["suite"] = o.name;
        js["pass"] = o.pass;
        js["report"] = o.report;
        if (opts.timings) js["ms"] = o.ms;
        jsuites.push_back(js);
        all_pass = all_pass && o.pass;
        any_precondition = any_precondition || o.precondition_stop;
        text += (o.pass ? "PASS " : (o.precondition_stop ? "SKIP " : "FAIL ")) + o.name + "\n";
    }
    env["suites"] = jsuites;
    env["all_pass"] = all_pass;
    emit(env, text, opts.format, opts.out);
    if (all_pass) return kExitOk;
    return kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric workbench for one-parameter actions, prunings, and divisor pairs"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, prune_opts, quot_opts, chamber_opts, realize_opts, verify_opts;
    std::string rho_minus, rho_plus, alpha = "1,1", suite = "all";
    long m_max = 4;
    int samples = 3;

    auto* c_analyze = app.add_subcommand("analyze", "fixed components, weights, and predicates");
    add_common(c_analyze, analyze_opts);

    auto* c_prune = app.add_subcommand("prune", "truncate the weight interval and verify the construction");
    add_common(c_prune, prune_opts);
    c_prune->add_option("--rho-minus", rho_minus, "lower truncation level, e.g. 1/4");
    c_prune->add_option("--rho-plus", rho_plus, "upper truncation level, e.g. 3/4");

    auto* c_quot = app.add_subcommand("quotients", "quotient chain with wall tags");
    add_common(c_quot, quot_opts);

    auto* c_chambers = app.add_subcommand("chambers", "chamber decomposition of the divisor segment");
    add_common(c_chambers, chamber_opts);
    c_chambers->add_option("--samples", samples, "interior samples per chamber (>= 3)");

    auto* c_realize = app.add_subcommand("realize", "build the slab realizing a divisor pair");
    add_common(c_realize, realize_opts);
    c_realize->add_option("--alpha", alpha, "grading pair a,b (coprime, positive)");

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    add_common(c_verify, verify_opts);
    c_verify->add_option("--suite", suite,
                         "all|pruning-theorem|section-isomorphisms|chamber-decomposition|realization|round-trip");
    c_verify->add_option("--alpha", alpha, "grading pair a,b");
    c_verify->add_option("--rho-minus", rho_minus, "lower truncation level");
    c_verify->add_option("--rho-plus", rho_plus, "upper truncation level");
    c_verify->add_option("--m-max", m_max, "largest dilation for count identities");
    c_verify->add_option("--samples", samples, "interior samples per chamber");

    try {
        app.parse(argc, argv);
        if (c_analyze->parsed()) return cmd_analyze(analyze_opts);
        if (c_prune->parsed()) return cmd_prune(prune_opts, rho_minus, rho_plus);
        if (c_quot->parsed()) return cmd_quotients(quot_opts);
        if (c_chambers->parsed()) return cmd_chambers(chamber_opts, samples);
        if (c_realize->parsed()) return cmd_realize(realize_opts, alpha);
        if (c_verify->parsed()) return cmd_verify(verify_opts, suite, alpha, rho_minus, rho_plus, m_max, samples);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const verification_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

// hurwitz: compute double Hurwitz numbers and their pruned variants, and run
// the verification suites. Exit codes: 0 pass, 1 mismatch, 2 usage, 3 budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "hurwitz/cache.hpp"
#include "hurwitz/report.hpp"

using namespace hurwitz;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct Global {
    std::string format = "text";
    std::uint64_t seed = 1;
    int threads = 1;
    std::string cache_path;
    bool no_cache = false;
    bool timing = false;
    int max_degree = EngineConfig{}.max_degree;
    int max_branch_points = EngineConfig{}.max_branch_points;
    int oracle_bound = EngineConfig{}.forest_oracle_bound;
    std::string output;  // file for the report, stdout when empty
};

EngineConfig engine_config(const Global& g) {
    EngineConfig c;
    c.max_degree = g.max_degree;
    c.max_branch_points = g.max_branch_points;
    c.forest_oracle_bound = g.oracle_bound;
    c.threads = g.threads;
    return c;
}

std::unique_ptr<ResultCache> open_cache(const Global& g) {
    if (g.no_cache)
        return nullptr;
    return std::make_unique<ResultCache>(g.cache_path.empty() ? ResultCache::default_path()
                                                              : std::filesystem::path(g.cache_path));
}

// wall times make reports non-reproducible; dropped unless asked for
void strip_timing(Json& j) {
    if (j.is_object()) {
        j.erase("seconds");
        for (auto& [k, v] : j.items())
            strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j)
            strip_timing(v);
    }
}

void emit(const Global& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out)
        throw std::runtime_error("cannot write " + g.output);
    out << text;
}

int finish_json(const Global& g, const std::string& command, bool pass, Json result) {
    Json doc = report_envelope(command, pass, std::move(result));
    if (!g.timing)
        strip_timing(doc);
    emit(g, doc.dump(2) + "\n");
    return pass ? kPass : kMismatch;
}

std::vector<int> parse_index_set(const std::string& s) {
    if (s.empty() || s == "()")
        return {};
    return parse_partition(s).parts();
}

std::string join(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string step_text(const GluingStep& st) {
    return std::string(st.color == Color::white ? "W" : "B") + "(" + std::to_string(st.k) + "," +
           std::to_string(st.l) + "," + std::to_string(st.s) + ")";
}

std::string sequence_text(const GluingSequence& s) {
    std::string out;
    for (const auto& st : s.steps)
        out += (out.empty() ? "" : " ") + step_text(st);
    return out.empty() ? "(empty)" : out;
}

// ---- compute

struct ComputeArgs {
    std::string kind = "plain";
    int g = 0;
    std::string mu, nu;
};

int run_compute(const Global& gl, const ComputeArgs& a) {
    const FactorizationType t{a.g, parse_partition(a.mu), parse_partition(a.nu)};
    t.validate();
    auto cache = open_cache(gl);
    const HurwitzValue v = hurwitz_number(t, parse_kind(a.kind), engine_config(gl), cache.get());
    if (gl.format == "json")
        return finish_json(gl, "compute", true, to_json(v));
    if (gl.format == "csv") {
        emit(gl, "kind,g,mu,nu,value,count,cache\n" + to_string(v.kind) + "," + std::to_string(t.genus) +
                     ",\"" + t.mu.to_string() + "\",\"" + t.nu.to_string() + "\"," + to_string(v.value) +
                     "," + v.count.str() + "," + (v.cache_hit ? "hit" : "miss") + "\n");
        return kPass;
    }
    std::ostringstream out;
    out << to_string(v.kind) << " " << t.to_string() << " = " << to_string(v.value) << "\n"
        << "  cache: " << (v.cache_hit ? "hit" : "miss") << "\n";
    if (!v.cache_hit)
        out << "  factorizations: " << v.count << "\n";
    out << "  seconds: " << v.seconds << "\n";
    emit(gl, out.str());
    return kPass;
}

// ---- verify

struct VerifyArgs {
    int max_d = 5, max_g = 1, max_b = 5, max_n = 7;
    int g = 0;
    std::string mu, nu;
    int random = 10000;
    bool include_two = false;
};

std::vector<FactorizationType> verify_grid(const VerifyArgs& a, bool exclude_two) {
    if (!a.mu.empty() || !a.nu.empty()) {
        FactorizationType t{a.g, parse_partition(a.mu), parse_partition(a.nu)};
        t.validate();
        return {t};
    }
    if (a.max_d < 1 || a.max_g < 0 || a.max_b < 0)
        throw std::invalid_argument("grid bounds must be positive");
    return type_grid(a.max_d, a.max_g, a.max_b, exclude_two);
}

int run_verify(const Global& gl, const std::string& which, const VerifyArgs& a) {
    SuiteOptions opts;
    opts.config = engine_config(gl);
    opts.seed = gl.seed;
    auto cache = open_cache(gl);
    std::ostringstream text;
    bool pass = true;
    Json result;

    if (which == "main-theorem") {
        VerifyOptions vo;
        vo.empty_mass = true;
        const auto reports = verify_main_theorem(verify_grid(a, true), opts.config, cache.get(), vo);
        Json arr = Json::array();
        int bad = 0;
        for (const auto& r : reports) {
            pass = pass && r.equal;
            bad += !r.equal;
            arr.push_back(to_json(r));
            text << r.type.to_string() << "  lhs " << to_string(*r.lhs) << "  rhs " << to_string(r.rhs)
                 << " (first " << to_string(r.first_sum) << ", delta " << to_string(r.delta_term) << ")  "
                 << (r.equal ? "equal" : "MISMATCH") << "\n";
            if (reports.size() == 1)
                for (const auto& c : r.cells)
                    if (c.contribution != 0)
                        text << "    " << (c.correction ? "delta " : "") << c.mu_p.to_string()
                             << c.nu_p.to_string() << " I=" << join(c.I) << " J=" << join(c.J)
                             << "  " << sequence_text(c.sequence) << "  hat " << to_string(c.hat)
                             << " x mult " << c.multiplicity << " = " << to_string(c.contribution) << "\n";
        }
        text << reports.size() << " types, " << bad << " mismatches\n";
        result = Json{{"reports", arr}};
    } else if (which == "pruning-order") {
        const auto r = verify_pruning_order(verify_grid(a, !a.include_two), opts);
        pass = r.ok();
        result = to_json(r);
        text << r.types << " types, " << r.factorizations << " factorizations, "
             << r.mismatches.size() << " order-dependent terminals\n";
    } else if (which == "forest-fact") {
        const auto r = verify_forest_fact(a.max_n, opts);
        pass = r.ok();
        result = to_json(r);
        text << r.specs << " forest specs, " << r.mismatches.size() << " mismatches\n";
    } else if (which == "fibers") {
        const auto r = verify_fibers(verify_grid(a, !a.include_two), opts);
        pass = r.ok();
        result = to_json(r);
        text << r.types << " types, " << r.cells << " cells, " << r.mismatches.size() << " mismatches\n";
    } else if (which == "inversion") {
        const auto r = verify_inversion(verify_grid(a, false), opts, cache.get());
        pass = r.ok();
        result = to_json(r);
        text << r.table_size << " table entries, " << r.compared << " recovered, "
             << r.mismatches.size() << " mismatches\n";
        for (const auto& m : r.mismatches)
            text << "  " << m.type.to_string() << " direct " << to_string(m.expected) << " recovered "
                 << to_string(m.actual) << "\n";
    } else if (which == "bijection") {
        const auto r = verify_bijection(verify_grid(a, false), a.random, opts.config.max_degree, opts);
        pass = r.ok();
        result = to_json(r);
        text << r.exhaustive_factorizations << " exhaustive + " << r.random_factorizations
             << " random factorizations, " << r.failures.size() << " failures\n";
    } else {
        throw CLI::ValidationError("unknown verify suite " + which);
    }

    if (gl.format == "json")
        return finish_json(gl, "verify " + which, pass, result);
    text << (pass ? "PASS" : "FAIL") << "\n";
    emit(gl, text.str());
    return pass ? kPass : kMismatch;
}

// ---- chambers

struct ChamberArgs {
    int g = 0, m = 2, n = 2, bound = 10;
    std::string kind = "plain";
    std::string csv;
};

int run_chambers(const Global& gl, const ChamberArgs& a) {
    if (a.m < 1 || a.n < 1 || a.bound < 1 || a.g < 0)
        throw std::invalid_argument("need g >= 0 and m, n, bound >= 1");
    auto cache = open_cache(gl);
    const ChamberReport r =
        check_chamber_polynomiality(a.g, a.m, a.n, parse_kind(a.kind), a.bound, engine_config(gl), cache.get());
    const bool pass = !r.violated();
    if (!a.csv.empty()) {
        std::ofstream out(a.csv);
        out << chamber_csv(r);
    }
    if (gl.format == "json")
        return finish_json(gl, "chambers", pass, to_json(r));
    if (gl.format == "csv") {
        emit(gl, chamber_csv(r));
        return pass ? kPass : kMismatch;
    }
    std::ostringstream out;
    out << to_string(r.kind) << " g=" << r.genus << " m=" << r.m << " n=" << r.n << " bound=" << r.bound
        << " degree cap " << r.degree_cap << "\n";
    for (const auto& c : r.chambers) {
        out << "  " << c.id.to_string() << "  e.g. " << c.witness_mu.to_string() << c.witness_nu.to_string()
            << "  " << to_string(c.status) << "  samples " << c.samples << " (train " << c.training
            << ", held out " << c.held_out << ")";
        if (c.polynomial && c.status != FitStatus::underdetermined)
            out << "  P = " << c.polynomial->to_string();
        out << "\n";
    }
    out << r.wall_points << " wall points skipped, " << r.evaluations << " engine calls\n"
        << (pass ? "PASS" : "FAIL") << "\n";
    emit(gl, out.str());
    return pass ? kPass : kMismatch;
}

// ---- gluing

struct GluingArgs {
    std::string mu_p, nu_p, I, J, mu, nu;
    int g = 0;
};

int run_gluing(const Global& gl, const GluingArgs& a) {
    const Partition mu_p = parse_partition(a.mu_p), nu_p = parse_partition(a.nu_p);
    const Partition mu = parse_partition(a.mu), nu = parse_partition(a.nu);
    const auto I = parse_index_set(a.I), J = parse_index_set(a.J);
    if (!precedes(mu_p, I, mu) || !precedes(nu_p, J, nu))
        throw std::invalid_argument("(mu', I) or (nu', J) does not precede (mu, nu)");
    const auto classes = enumerate_gluing_classes(mu_p, nu_p, I, J, mu, nu);
    Json arr = Json::array();
    std::ostringstream out;
    BigInt total = 0;
    for (const auto& c : classes) {
        const BigInt m = sequence_multiplicity(c.canonical, a.g);
        total += m;
        arr.push_back(Json{{"class", to_json(c.type)}, {"sequence", to_json(c.canonical)}, {"multiplicity", m.str()}});
        out << "  " << sequence_text(c.canonical) << "  mult " << m << "\n";
    }
    if (gl.format == "json")
        return finish_json(gl, "gluing", true,
                           Json{{"classes", arr}, {"total_multiplicity", total.str()}});
    if (gl.format == "csv") {
        std::string csv = "sequence,multiplicity\n";
        for (const auto& c : classes)
            csv += "\"" + sequence_text(c.canonical) + "\"," + sequence_multiplicity(c.canonical, a.g).str() + "\n";
        emit(gl, csv);
        return kPass;
    }
    emit(gl, std::to_string(classes.size()) + " classes, total multiplicity " + total.str() + "\n" + out.str());
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double Hurwitz numbers, pruning and gluing"};
    app.require_subcommand(1);
    Global gl;
    app.add_option("--format", gl.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", gl.seed, "seed for random policies and samples");
    app.add_option("--threads", gl.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", gl.cache_path, "cache file (default $HURWITZ_CACHE or ./hurwitz_cache.jsonl)");
    app.add_flag("--no-cache", gl.no_cache, "do not read or write the cache");
    app.add_flag("--timing", gl.timing, "keep wall times in json reports");
    app.add_option("--max-degree", gl.max_degree, "degree budget")->check(CLI::PositiveNumber);
    app.add_option("--max-branch-points", gl.max_branch_points, "branch point budget")->check(CLI::NonNegativeNumber);
    app.add_option("--oracle-bound", gl.oracle_bound, "brute-force forest oracle bound")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", gl.output, "write the report here");

    std::function<int()> action;

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "one Hurwitz-type number");
    compute->add_option("--kind", ca.kind, "plain, pruned, bipruned or bipruned_hat")
        ->check(CLI::IsMember({"plain", "pruned", "bipruned", "bipruned_hat"}));
    compute->add_option("-g,--genus", ca.g)->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--mu", ca.mu, "e.g. 2,1")->required();
    compute->add_option("--nu", ca.nu)->required();
    compute->callback([&] { action = [&] { return run_compute(gl, ca); }; });

    VerifyArgs va;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "main-theorem, pruning-order, forest-fact, fibers, inversion, bijection")
        ->required()
        ->check(CLI::IsMember({"main-theorem", "pruning-order", "forest-fact", "fibers", "inversion", "bijection"}));
    verify->add_option("--max-d", va.max_d, "grid degree bound");
    verify->add_option("--max-g", va.max_g, "grid genus bound");
    verify->add_option("--max-b", va.max_b, "grid branch point bound");
    verify->add_option("--max-n", va.max_n, "forest-fact vertex bound");
    verify->add_option("-g,--genus", va.g, "single type instead of a grid");
    verify->add_option("--mu", va.mu);
    verify->add_option("--nu", va.nu);
    verify->add_option("--random", va.random, "random factorizations for bijection");
    verify->add_flag("--include-two", va.include_two, "keep l(mu)+l(nu)=2 types in the grid");
    verify->callback([&] { action = [&] { return run_verify(gl, suite, va); }; });

    ChamberArgs cha;
    auto* chambers = app.add_subcommand("chambers", "piecewise polynomiality per chamber");
    chambers->add_option("-g,--genus", cha.g)->required();
    chambers->add_option("-m", cha.m, "length of mu")->required();
    chambers->add_option("-n", cha.n, "length of nu")->required();
    chambers->add_option("--kind", cha.kind)->check(CLI::IsMember({"plain", "pruned", "bipruned", "bipruned_hat"}));
    chambers->add_option("--bound", cha.bound, "sample box [1, bound]");
    chambers->add_option("--csv", cha.csv, "also write the coefficient table here");
    chambers->callback([&] { action = [&] { return run_chambers(gl, cha); }; });

    GluingArgs ga;
    auto* gluing = app.add_subcommand("gluing", "gluing classes of one cell with multiplicities");
    gluing->add_option("--mu-p", ga.mu_p)->required();
    gluing->add_option("--nu-p", ga.nu_p)->required();
    gluing->add_option("--I", ga.I)->required();
    gluing->add_option("--J", ga.J)->required();
    gluing->add_option("--mu", ga.mu)->required();
    gluing->add_option("--nu", ga.nu)->required();
    gluing->add_option("-g,--genus", ga.g);
    gluing->callback([&] { action = [&] { return run_gluing(gl, ga); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return action();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

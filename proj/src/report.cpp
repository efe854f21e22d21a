#include "hurwitz/report.hpp"

#include <sstream>

namespace hurwitz {

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(const BigInt& n) { return n.str(); }

Json step_json(const GluingStep& st) {
    return Json{{"color", to_string(st.color)}, {"k", st.k}, {"l", st.l}, {"s", st.s}};
}

std::string monomial_name(const std::vector<int>& e, int m) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k])
            continue;
        if (!s.empty())
            s += '*';
        s += (static_cast<int>(k) < m ? "mu" + std::to_string(k + 1)
                                      : "nu" + std::to_string(k - m + 1));
        if (e[k] > 1)
            s += '^' + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

Json report_envelope(const std::string& command, bool pass, Json result) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"engine_version", kEngineVersion},
                {"command", command},
                {"status", pass ? "pass" : "mismatch"},
                {"result", std::move(result)}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const FactorizationType& t) {
    return Json{{"g", t.genus}, {"mu", to_json(t.mu)}, {"nu", to_json(t.nu)}};
}

Json to_json(const HurwitzValue& v) {
    return Json{{"kind", to_string(v.kind)},
                {"type", to_json(v.type)},
                {"value", str(v.value)},
                {"count", str(v.count)},
                {"nontrivial_stabilizers", v.nontrivial_stabilizers},
                {"cache", v.cache_hit ? "hit" : "miss"},
                {"seconds", v.seconds}};
}

Json to_json(const GluingSequence& s) {
    Json steps = Json::array();
    for (const auto& st : s.steps)
        steps.push_back(step_json(st));
    return Json{{"start_mu", to_json(s.start.mu())},
                {"I", s.I()},
                {"start_nu", to_json(s.start.nu())},
                {"J", s.J()},
                {"steps", steps}};
}

Json to_json(const CombinatorialType& t) {
    auto side = [](const std::set<std::tuple<int, int, int>>& xs) {
        Json a = Json::array();
        for (const auto& [k, l, s] : xs)
            a.push_back(Json::array({k, l, s}));
        return a;
    };
    return Json{{"white", side(t.white)}, {"black", side(t.black)}};
}

Json to_json(const CorrespondenceReport& r) {
    Json cells = Json::array();
    for (const auto& c : r.cells) {
        Json j{{"mu_p", to_json(c.mu_p)},
               {"nu_p", to_json(c.nu_p)},
               {"I", c.I},
               {"J", c.J},
               {"correction", c.correction},
               {"class", to_json(c.type)},
               {"sequence", to_json(c.sequence)},
               {"hat", str(c.hat)},
               {"multiplicity", str(c.multiplicity)},
               {"contribution", str(c.contribution)}};
        if (c.ph)
            j["ph"] = str(*c.ph);
        cells.push_back(std::move(j));
    }
    Json j{{"type", to_json(r.type)}};
    j["lhs"] = r.lhs ? Json(str(*r.lhs)) : Json(nullptr);
    j["rhs"] = str(r.rhs);
    j["first_sum"] = str(r.first_sum);
    j["delta_term"] = str(r.delta_term);
    j["verdict"] = r.lhs ? (r.equal ? "equal" : "mismatch") : "unchecked";
    j["diff"] = str(r.diff);
    Json diag = Json::object();
    if (r.ph_weighted_rhs)
        diag["ph_weighted_rhs"] = str(*r.ph_weighted_rhs);
    if (r.empty_terminal_mass)
        diag["empty_terminal_mass"] = str(*r.empty_terminal_mass);
    j["diagnostics"] = diag;
    j["cells"] = cells;
    return j;
}

Json to_json(const ExactPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& [e, c] : p.coefficients)
        coeffs.push_back(Json{{"exponents", e}, {"monomial", monomial_name(e, p.m)}, {"coefficient", str(c)}});
    return Json{{"text", p.to_string()}, {"degree", p.degree()}, {"coefficients", coeffs}};
}

Json to_json(const ChamberReport& r) {
    Json chambers = Json::array();
    for (const auto& c : r.chambers) {
        Json j{{"chamber", c.id.to_string()},
               {"status", to_string(c.status)},
               {"samples", c.samples},
               {"training", c.training},
               {"held_out", c.held_out},
               {"basis_degree", c.basis_degree},
               {"witness", Json{{"mu", to_json(c.witness_mu)}, {"nu", to_json(c.witness_nu)}}}};
        j["polynomial"] = c.polynomial ? to_json(*c.polynomial) : Json(nullptr);
        if (c.counterexample)
            j["counterexample"] = Json{{"mu", to_json(c.counterexample->mu)},
                                       {"nu", to_json(c.counterexample->nu)},
                                       {"value", str(c.counterexample->value)}};
        chambers.push_back(std::move(j));
    }
    Json forms = Json::array();
    for (const auto& f : chamber_forms(r.m, r.n))
        forms.push_back(Json{{"I", f.I}, {"J", f.J}});
    return Json{{"g", r.genus},
                {"m", r.m},
                {"n", r.n},
                {"kind", to_string(r.kind)},
                {"bound", r.bound},
                {"degree_cap", r.degree_cap},
                {"wall_points", r.wall_points},
                {"evaluations", r.evaluations},
                {"fitted", r.count(FitStatus::fitted)},
                {"underdetermined", r.count(FitStatus::underdetermined)},
                {"violations", r.count(FitStatus::violation)},
                {"seconds", r.seconds},
                {"forms", forms},
                {"chambers", chambers}};
}

Json to_json(const ForestFactResult& r) {
    Json bad = Json::array();
    for (const auto& m : r.mismatches)
        bad.push_back(Json{{"k", m.spec.k}, {"a", m.spec.a}, {"formula", str(m.formula)}, {"brute", str(m.brute)}});
    return Json{{"specs", r.specs}, {"mismatches", bad}};
}

Json to_json(const PruningOrderResult& r) {
    Json bad = Json::array();
    for (const auto& m : r.mismatches)
        bad.push_back(Json{{"type", to_json(m.type)},
                           {"factorization", m.factorization},
                           {"policies", m.policies},
                           {"keys", m.keys}});
    return Json{{"types", r.types},
                {"factorizations", r.factorizations},
                {"empty_terminals", r.empty_terminals},
                {"degenerate_stops", r.degenerate_stops},
                {"mismatches", bad}};
}

Json to_json(const FiberResult& r) {
    Json bad = Json::array();
    for (const auto& m : r.mismatches)
        bad.push_back(Json{{"type", to_json(m.type)},
                           {"terminal", to_json(m.cell.terminal_type)},
                           {"I", m.cell.I},
                           {"J", m.cell.J},
                           {"sequence", to_json(m.cell.sequence)},
                           {"fiber_value", str(m.cell.value)},
                           {"multiplicity", str(m.multiplicity)}});
    return Json{{"types", r.types}, {"cells", r.cells}, {"empty_cells", r.empty_cells}, {"mismatches", bad}};
}

Json to_json(const BijectionResult& r) {
    Json bad = Json::array();
    for (const auto& f : r.failures)
        bad.push_back(Json{{"what", f.what}, {"type", to_json(f.type)}, {"detail", f.detail}});
    return Json{{"exhaustive_types", r.exhaustive_types},
                {"exhaustive_factorizations", r.exhaustive_factorizations},
                {"random_factorizations", r.random_factorizations},
                {"failures", bad}};
}

namespace {
Json mismatches_json(const std::vector<ValueMismatch>& ms, const char* expected, const char* actual) {
    Json bad = Json::array();
    for (const auto& m : ms)
        bad.push_back(Json{{"type", to_json(m.type)}, {expected, str(m.expected)}, {actual, str(m.actual)}});
    return bad;
}
}  // namespace

Json to_json(const InversionResult& r) {
    return Json{{"table_size", r.table_size},
                {"compared", r.compared},
                {"mismatches", mismatches_json(r.mismatches, "direct", "recovered")}};
}

Json to_json(const HatConsistencyResult& r) {
    return Json{{"types", r.types},
                {"loop_types", r.loop_types},
                {"mismatches", mismatches_json(r.mismatches, "expected", "hat")}};
}

std::string chamber_csv(const ChamberReport& r) {
    std::ostringstream out;
    out << "g,m,n,kind,chamber,status,samples,training,held_out,monomial,coefficient\n";
    for (const auto& c : r.chambers) {
        auto prefix = [&] {
            out << r.genus << ',' << r.m << ',' << r.n << ',' << to_string(r.kind) << ','
                << c.id.to_string() << ',' << to_string(c.status) << ',' << c.samples << ','
                << c.training << ',' << c.held_out << ',';
        };
        if (!c.polynomial || c.polynomial->coefficients.empty()) {
            prefix();
            out << (c.polynomial ? "1,0" : ",") << '\n';
            continue;
        }
        for (const auto& [e, q] : c.polynomial->coefficients) {
            prefix();
            out << monomial_name(e, r.m) << ',' << to_string(q) << '\n';
        }
    }
    return out.str();
}

}  // namespace hurwitz

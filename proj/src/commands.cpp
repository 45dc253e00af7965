#include "commands.hpp"

#include "deformation.hpp"
#include "graded.hpp"
#include "selftest.hpp"
#include "trbo_cohomology.hpp"

namespace l3kit {

using nlohmann::ordered_json;

namespace {

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

// Human text uses one-based basis labels; the JSON keeps zero-based indices.
std::string violation_text(const Violation& v) {
    std::string s = "equation " + v.equation + " at (";
    for (std::size_t i = 0; i < v.tuple.size(); ++i) {
        if (i) s += ",";
        s += "e" + std::to_string(v.tuple[i] + 1);
    }
    return s + "): lhs " + vec_str(v.lhs) + " != rhs " + vec_str(v.rhs);
}

ordered_json report_json(const Report& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["checked"] = r.checked;
    ordered_json viols = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json vj;
        vj["equation"] = v.equation;
        vj["tuple"] = v.tuple;
        ordered_json lhs = ordered_json::array(), rhs = ordered_json::array();
        for (const auto& x : v.lhs) lhs.push_back(x.str());
        for (const auto& x : v.rhs) rhs.push_back(x.str());
        vj["lhs"] = std::move(lhs);
        vj["rhs"] = std::move(rhs);
        vj["text"] = violation_text(v);
        viols.push_back(std::move(vj));
    }
    j["violations"] = std::move(viols);
    j["violations_total"] = r.violations_total;
    j["seconds"] = r.seconds;
    return j;
}

CommandOutcome report_outcome(const Report& r) { return {r.ok ? 0 : 1, report_json(r)}; }

struct Args {
    const Manifest& m;
    const CommandOptions& opts;
    std::size_t next = 0;

    const ManifestObject& take(const std::string& type) {
        if (next >= opts.objects.size())
            throw manifest_error("command needs a " + type + " object argument (position " +
                                 std::to_string(next + 1) + ")");
        return get_object(m, opts.objects[next++], type);
    }
};

TwistedSetup setup_from(Args& a) {
    const ManifestObject& rep = a.take("representation");
    const ManifestObject& phi = a.take("cochain");
    return make_setup(rep.rep, phi.cochain);
}

Scalar lambda_from(const CommandOptions& opts) {
    if (!opts.lambda) throw manifest_error("command needs --lambda");
    return Scalar::parse(*opts.lambda);
}

int degree_from(const CommandOptions& opts) {
    if (!opts.degree) throw manifest_error("command needs --degree");
    return *opts.degree;
}

CommandOutcome artifact(std::initializer_list<std::pair<std::string, ManifestObject>> objs,
                        std::initializer_list<std::pair<std::string, ordered_json>> extra = {}) {
    ordered_json body;
    for (const auto& [k, v] : extra) body[k] = v;
    ordered_json jo = ordered_json::object();
    for (const auto& [name, o] : objs) jo[name] = object_to_json(o);
    body["objects"] = std::move(jo);
    return {0, std::move(body)};
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "check-3leibniz", "check-leibniz", "check-rep", "check-trbo", "check-nijenhuis", "check-reynolds",
        "check-weighted-rbo", "check-ns", "coboundary", "cohomology", "cohomology-T", "twisted-semidirect",
        "induced-bracket", "induced-rep", "mc-residual", "l1t-vs-partialT", "gauge", "shift", "obstruction",
        "extend", "infinitesimal-class", "ns-from-trbo", "ns-from-nijenhuis", "ns-from-reynolds",
        "ns-from-weighted", "subadjacent", "selftest"};
    return names;
}

CommandOutcome run_command(const Manifest& m, const std::string& command, const CommandOptions& opts) {
    Args a{m, opts};
    const std::string& out = opts.out_name;

    if (command == "check-3leibniz") return report_outcome(check_3leibniz(a.take("algebra").algebra));
    if (command == "check-leibniz") return report_outcome(check_leibniz(a.take("leibniz").leibniz));
    if (command == "check-rep") return report_outcome(check_representation(a.take("representation").rep));
    if (command == "check-trbo") {
        TwistedSetup s = setup_from(a);
        return report_outcome(check_trbo(s, a.take("operator").op));
    }
    if (command == "check-nijenhuis") {
        const auto& alg = a.take("algebra").algebra;
        return report_outcome(check_nijenhuis(alg, a.take("operator").op));
    }
    if (command == "check-reynolds") {
        const auto& alg = a.take("algebra").algebra;
        return report_outcome(check_reynolds(alg, a.take("operator").op));
    }
    if (command == "check-weighted-rbo") {
        const auto& alg = a.take("algebra").algebra;
        const auto& b = a.take("operator").op;
        return report_outcome(check_weighted_rbo(alg, b, lambda_from(opts)));
    }
    if (command == "check-ns") {
        const NsAxiomMode mode = opts.strict_ns == "printed" ? NsAxiomMode::Printed : NsAxiomMode::Corrected;
        return report_outcome(check_ns(a.take("ns").ns, mode));
    }
    if (command == "coboundary") {
        const ManifestObject& f = a.take("cochain");
        const Representation& rep = get_object(m, f.rep_ref, "representation").rep;
        Cochain img = coboundary(rep, f.cochain);
        const bool zero = img.coeffs.is_zero();
        return artifact({{out, wrap_cochain(std::move(img), f.rep_ref)}}, {{"is_zero", ordered_json(zero)}});
    }
    if (command == "cohomology") {
        const Representation& rep = a.take("representation").rep;
        ordered_json body;
        body["degree"] = degree_from(opts);
        body["dim"] = cohomology_dim(rep, degree_from(opts));
        return {0, std::move(body)};
    }
    if (command == "cohomology-T") {
        TwistedSetup s = setup_from(a);
        const auto& t = a.take("operator").op;
        ordered_json body;
        body["degree"] = degree_from(opts);
        body["dim"] = cohomology_dim_T(s, t, degree_from(opts));
        return {0, std::move(body)};
    }
    if (command == "twisted-semidirect") {
        TwistedSetup s = setup_from(a);
        return artifact({{out, wrap_algebra(twisted_semidirect(s.rep, s.phi))}});
    }
    if (command == "induced-bracket") {
        TwistedSetup s = setup_from(a);
        return artifact({{out, wrap_algebra(induced_bracket(s, a.take("operator").op))}});
    }
    if (command == "induced-rep") {
        TwistedSetup s = setup_from(a);
        InducedRep ir = induced_rep(s, a.take("operator").op);
        Representation asrep = induced_rep_as_representation(ir);
        return artifact({{out + "_algebra", wrap_algebra(ir.on_v)},
                         {out, wrap_representation(std::move(asrep), out + "_algebra")}});
    }
    if (command == "mc-residual") {
        TwistedSetup s = setup_from(a);
        const std::string rep_ref = opts.objects[0];
        BigStructure b = build_pi(s);
        Cochain mc = mc_residual(b, a.take("operator").op);
        const bool zero = mc.coeffs.is_zero();
        return artifact({{out, wrap_cochain(std::move(mc), rep_ref)}}, {{"is_zero", ordered_json(zero)}});
    }
    if (command == "l1t-vs-partialT") {
        TwistedSetup s = setup_from(a);
        const auto& t = a.take("operator").op;
        const ManifestObject& f = a.take("cochain");
        BigStructure b = build_pi(s);
        Cochain lhs = l1_t(b, t, f.cochain);
        Cochain rhs = delta_T(s, t, f.cochain);
        if (f.cochain.degree % 2 == 0) rhs.coeffs *= Scalar(-1);
        ordered_json body;
        body["degree"] = f.cochain.degree;
        body["equal"] = lhs.coeffs == rhs.coeffs;
        return {lhs.coeffs == rhs.coeffs ? 0 : 1, std::move(body)};
    }
    if (command == "gauge") {
        TwistedSetup s = setup_from(a);
        const auto& t = a.take("operator").op;
        const auto& w = a.take("operator").op;
        auto res = gauge_transform(s, t, w);
        if (!res) return {0, ordered_json{{"admissible", false}}};
        return artifact({{out, wrap_operator(*res)}}, {{"admissible", ordered_json(true)}});
    }
    if (command == "shift") {
        TwistedSetup s = setup_from(a);
        const std::string rep_ref = opts.objects[0];
        const auto& t = a.take("operator").op;
        const auto& w = a.take("operator").op;
        auto res = shift_trbo(s, t, w);
        if (!res) return {0, ordered_json{{"invertible", false}}};
        Cochain shifted = s.phi.phi;
        shifted.coeffs += coboundary(s.rep, cochain_from_operator(w, Direction::g_to_V)).coeffs;
        return artifact({{out, wrap_operator(*res)}, {out + "_phi", wrap_cochain(std::move(shifted), rep_ref)}},
                        {{"invertible", ordered_json(true)}});
    }
    if (command == "obstruction") {
        const ManifestObject& def = a.take("deformation");
        TwistedSetup s = make_setup(get_object(m, def.rep_ref, "representation").rep,
                                    get_object(m, def.phi_ref, "cochain").cochain);
        ObstructionCochain ob = obstruction(s, def.terms);
        const bool zero = ob.ob.coeffs.is_zero();
        return artifact({{out, wrap_cochain(std::move(ob.ob), def.rep_ref)}}, {{"is_zero", ordered_json(zero)}});
    }
    if (command == "extend") {
        const ManifestObject& def = a.take("deformation");
        TwistedSetup s = make_setup(get_object(m, def.rep_ref, "representation").rep,
                                    get_object(m, def.phi_ref, "cochain").cochain);
        auto next = extend(s, def.terms);
        if (!next) return {0, ordered_json{{"extendable", false}}};
        ManifestObject extended;
        extended.type = "deformation";
        extended.rep_ref = def.rep_ref;
        extended.phi_ref = def.phi_ref;
        extended.terms = def.terms;
        extended.terms.push_back(*next);
        return artifact({{out, wrap_operator(*next)}, {out + "_deformation", std::move(extended)}},
                        {{"extendable", ordered_json(true)}});
    }
    if (command == "infinitesimal-class") {
        TwistedSetup s = setup_from(a);
        const auto& t = a.take("operator").op;
        const auto& t1 = a.take("operator").op;
        const auto& t2 = a.take("operator").op;
        auto wit = infinitesimals_cohomologous(s, t, cochain_from_operator(t1, Direction::V_to_g),
                                               cochain_from_operator(t2, Direction::V_to_g));
        if (!wit) return {0, ordered_json{{"cohomologous", false}}};
        const int d = s.rep.algebra.dim;
        return artifact({{out, wrap_operator(LinearOperator{d, d, wit->tensor})}},
                        {{"cohomologous", ordered_json(true)}});
    }
    if (command == "ns-from-trbo") {
        TwistedSetup s = setup_from(a);
        return artifact({{out, wrap_ns(ns_from_trbo(s, a.take("operator").op))}});
    }
    if (command == "ns-from-nijenhuis") {
        const auto& alg = a.take("algebra").algebra;
        return artifact({{out, wrap_ns(ns_from_nijenhuis(alg, a.take("operator").op))}});
    }
    if (command == "ns-from-reynolds") {
        const auto& alg = a.take("algebra").algebra;
        return artifact({{out, wrap_ns(ns_from_reynolds(alg, a.take("operator").op))}});
    }
    if (command == "ns-from-weighted") {
        const auto& alg = a.take("algebra").algebra;
        const auto& b = a.take("operator").op;
        return artifact({{out, wrap_ns(ns_from_weighted_rbo(alg, b, lambda_from(opts)))}});
    }
    if (command == "subadjacent") {
        return artifact({{out, wrap_algebra(subadjacent(a.take("ns").ns))}});
    }
    if (command == "selftest") {
        auto results = run_acceptance();
        ordered_json body;
        ordered_json arr = ordered_json::array();
        bool all = true;
        for (const auto& r : results) {
            ordered_json cj;
            cj["id"] = r.id;
            cj["name"] = r.name;
            cj["ok"] = r.passed;
            cj["seconds"] = r.seconds;
            cj["detail"] = r.detail;
            cj["text"] = format_criterion(r);
            arr.push_back(std::move(cj));
            all = all && r.passed;
        }
        body["ok"] = all;
        body["criteria"] = std::move(arr);
        return {all ? 0 : 1, std::move(body)};
    }
    throw manifest_error("unknown command '" + command + "'");
}

} // namespace l3kit

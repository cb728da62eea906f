// Batch front end: load a JSON job description, run one subcommand, report.
// Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 internal error.

#include "pha/classify.hpp"
#include "pha/envelope.hpp"
#include "pha/io.hpp"
#include "pha/quantize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace pha;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kBadInput = 2, kInternal = 3;

struct Options {
    std::string input;
    bool emit_json = false;
    int maxdeg = 2;
    std::string lambda = "1/2";
    bool apply_rees = false;
    size_t vars = 2;
    std::string degree = "quadratic";
    unsigned taft_n = 2;
    bool check_extension = false;
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.emit_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

const PoissonAlgebra& need_algebra(const JobInput& in) {
    if (!in.algebra) throw pha_error("this subcommand needs an \"algebra\" entry");
    return *in.algebra;
}

const HopfAction& need_action(const JobInput& in) {
    if (!in.action) throw pha_error("this subcommand needs an \"action\" entry");
    return *in.action;
}

std::string table_text(const PoissonAlgebra& P) {
    std::string out;
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t j = i + 1; j < P.nvars(); ++j)
            if (!P.table[i][j].is_zero())
                out += "{" + P.vars[i] + "," + P.vars[j] + "} = " +
                       P.table[i][j].to_string(P.vars) + "\n";
    return out.empty() ? "(trivial bracket)\n" : out;
}

int cmd_check(const Options& opt, const JobInput& in) {
    const auto& P = need_algebra(in);
    auto rep = check_jacobi(P);
    bool filtered = is_filtered(P);
    bool unimod = is_unimodular(P);
    json j{{"jacobi", rep.ok}, {"filtered", filtered}, {"unimodular", unimod}};
    std::string text = std::string("jacobi: ") + (rep.ok ? "ok" : "FAIL") +
                       "\nfiltered: " + (filtered ? "yes" : "no") +
                       "\nunimodular: " + (unimod ? "yes" : "no") + "\n";
    for (const auto& fail : rep.failures)
        text += "  J(u" + std::to_string(fail.i + 1) + ",u" + std::to_string(fail.j + 1) +
                ",u" + std::to_string(fail.k + 1) +
                ") = " + fail.residual.to_string(P.vars) + "\n";
    emit(opt, j, text);
    return rep.ok && filtered ? kPass : kFail;
}

int cmd_modular(const Options& opt, const JobInput& in) {
    const auto& P = need_algebra(in);
    auto phi = modular_derivation(P);
    json imgs = json::object();
    std::string text;
    for (size_t i = 0; i < P.nvars(); ++i) {
        std::string s = phi.images[i].to_string(P.vars);
        imgs[P.vars[i]] = s;
        text += "phi(" + P.vars[i] + ") = " + s + "\n";
    }
    bool unimod = phi.is_zero();
    text += std::string("unimodular: ") + (unimod ? "yes" : "no") + "\n";
    emit(opt, {{"images", imgs}, {"unimodular", unimod}}, text);
    return kPass;
}

int algebra_out(const Options& opt, const PoissonAlgebra& Q) {
    emit(opt, algebra_to_json(Q), table_text(Q));
    return kPass;
}

int cmd_quantize(const Options& opt, const JobInput& in) {
    PoissonAlgebra P = need_algebra(in);
    if (opt.apply_rees) P = rees(P);
    CycRat lambda = parse_cycrat(in.field, opt.lambda);
    auto Q = quantization_relations(P, lambda);
    if (opt.emit_json) {
        json rels = json::array();
        for (const auto& r : Q.kernel_basis)
            rels.push_back(r.to_string(Q.presentation.letters));
        std::cout << json{{"lambda", lambda.to_string()},
                          {"generic", Q.generic},
                          {"relations", rels}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << presentation_to_string(Q.presentation) << "\n"
                  << "generic: " << (Q.generic ? "yes" : "no") << "\n";
    }
    return kPass;
}

int report_failures(const Options& opt, const VerificationReport& rep,
                    const std::vector<std::string>& vars, const std::string& okmsg) {
    json fails = json::array();
    std::string text;
    for (const auto& fail : rep.failures) {
        fails.push_back({{"axiom", fail.axiom},
                         {"witness", fail.witness},
                         {"residual", fail.residual.to_string(vars)}});
        text += fail.axiom + " fails at " + fail.witness + ": residual " +
                fail.residual.to_string(vars) + "\n";
    }
    if (rep.ok) text = okmsg + "\n";
    emit(opt, {{"ok", rep.ok}, {"failures", fails}}, text);
    return rep.ok ? kPass : kFail;
}

int cmd_verify_action(const Options& opt, const JobInput& in) {
    const auto& A = need_action(in);
    return report_failures(opt, verify_module_poisson(A, opt.maxdeg), A.algebra.vars,
                           "module Poisson structure verified");
}

int cmd_fixed_ring(const Options& opt, const JobInput& in) {
    const auto& A = need_action(in);
    auto rep = fixed_ring_report(A, opt.maxdeg);
    json gens = json::object();
    std::string text;
    for (size_t i = 0; i < rep.generators.size(); ++i) {
        std::string s = rep.generators[i].to_string(A.algebra.vars);
        gens[rep.names[i]] = s;
        text += rep.names[i] + " = " + s + "\n";
    }
    json brk = json::object();
    for (size_t i = 0; i < rep.generators.size(); ++i)
        for (size_t j = i + 1; j < rep.generators.size(); ++j) {
            const Poly& b = rep.expressed ? rep.table[i][j] : rep.raw_table[i][j];
            if (b.is_zero()) continue;
            const auto& names = rep.expressed ? rep.names : A.algebra.vars;
            brk[rep.names[i] + "," + rep.names[j]] = b.to_string(names);
            text += "{" + rep.names[i] + "," + rep.names[j] + "} = " + b.to_string(names) +
                    "\n";
        }
    text += std::string("poisson closed: ") + (rep.poisson_closed ? "yes" : "no") + "\n";
    emit(opt, {{"generators", gens}, {"brackets", brk}, {"closed", rep.poisson_closed}},
         text);
    return rep.poisson_closed ? kPass : kFail;
}

int cmd_extend_rees(const Options& opt, const JobInput& in) {
    const auto& A = need_action(in);
    auto R = extend_action_to_rees(A);
    auto rep = verify_module_poisson(R, opt.maxdeg);
    json imgs = json::object();
    std::string text = table_text(R.algebra);
    for (size_t g = 0; g < R.hopf.gen_names.size(); ++g) {
        json row = json::object();
        for (size_t v = 0; v < R.algebra.nvars(); ++v) {
            row[R.algebra.vars[v]] = R.gen_actions[g][v].to_string(R.algebra.vars);
            text += R.hopf.gen_names[g] + "." + R.algebra.vars[v] + " = " +
                    R.gen_actions[g][v].to_string(R.algebra.vars) + "\n";
        }
        imgs[R.hopf.gen_names[g]] = row;
    }
    text += std::string("extended action verified: ") + (rep.ok ? "yes" : "no") + "\n";
    emit(opt, {{"algebra", algebra_to_json(R.algebra)}, {"action", imgs}, {"ok", rep.ok}},
         text);
    return rep.ok ? kPass : kFail;
}

int cmd_classify_taft(const Options& opt, const JobInput& in) {
    DegClass dc;
    if (opt.degree == "const")
        dc = DegClass::Constant;
    else if (opt.degree == "linear")
        dc = DegClass::Linear;
    else if (opt.degree == "quadratic")
        dc = DegClass::Quadratic;
    else
        throw pha_error("--degree must be const, linear, or quadratic");
    FieldPtr field = in.field->n % opt.taft_n == 0 ? in.field : make_field(opt.taft_n);

    size_t m = opt.vars;
    std::vector<std::string> vars;
    for (size_t i = 1; i <= m; ++i) vars.push_back("u" + std::to_string(i));
    auto P = make_poisson(field, vars, WeightVector(m, 1),
                          std::vector<std::vector<Poly>>(m, std::vector<Poly>(m, Poly(m))));
    auto A = taft_standard_action(P, opt.taft_n);
    auto fam = equivariant_families(A, dc);
    auto obs = jacobi_obstructions(fam);

    json entries = json::object();
    std::string text = "family dimension: " + std::to_string(fam.dimension()) + "\n";
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (!fam.table[i][j].is_zero()) {
                std::string s = fam.table[i][j].to_string(vars);
                entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] = s;
                text += "{u" + std::to_string(i + 1) + ",u" + std::to_string(j + 1) +
                        "} = " + s + "\n";
            }
    json jo = json::array();
    for (const auto& o : obs) {
        jo.push_back(o.to_string());
        text += "obstruction: " + o.to_string() + "\n";
    }
    if (obs.empty()) text += "no Jacobi obstructions\n";
    emit(opt,
         {{"dimension", fam.dimension()},
          {"parameters", fam.parameters},
          {"brackets", entries},
          {"obstructions", jo}},
         text);
    return kPass;
}

int cmd_envelope(const Options& opt, const JobInput& in) {
    const auto& P = need_algebra(in);
    auto env = enveloping_presentation(P);
    std::string text = presentation_to_string(env.presentation) + "\n";
    json j{{"presentation", presentation_to_string(env.presentation)}};
    int rc = kPass;
    if (opt.check_extension) {
        auto rep = check_extension_conditions(need_action(in));
        j["extends"] = rep.ok;
        json res = json::array();
        std::vector<std::string> letters = env.presentation.letters;
        for (const auto& e : rep.entries) {
            json entry{{"hopf", e.hopf_elem},
                       {"pair", {e.i + 1, e.j + 1}},
                       {"residual1", e.residual1.to_string(letters)},
                       {"residual2", e.residual2.to_string(letters)}};
            res.push_back(entry);
            text += e.hopf_elem + " on (u" + std::to_string(e.i + 1) + ",u" +
                    std::to_string(e.j + 1) + "): " + e.residual1.to_string(letters) +
                    " ; " + e.residual2.to_string(letters) + "\n";
        }
        j["residuals"] = res;
        text += std::string("action extends: ") + (rep.ok ? "yes" : "no") + "\n";
        rc = rep.ok ? kPass : kFail;
    }
    emit(opt, j, text);
    return rc;
}

int cmd_hopf_verify(const Options& opt, const JobInput& in) {
    if (!in.hopf) throw pha_error("this subcommand needs a \"hopf\" entry");
    auto rep = verify_hopf_axioms(*in.hopf);
    bool cocomm = dual_and_cocommutative(*in.hopf).second;
    std::string text = std::string("axioms: ") + (rep.ok ? "ok" : "FAIL") +
                       "\ndimension: " + std::to_string(in.hopf->dim()) +
                       "\ncocommutative: " + (cocomm ? "yes" : "no") + "\n";
    if (!rep.ok) text += "  " + rep.first_failure + "\n";
    emit(opt,
         {{"ok", rep.ok},
          {"dimension", in.hopf->dim()},
          {"cocommutative", cocomm},
          {"failure", rep.first_failure}},
         text);
    return rep.ok ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Poisson algebra and Hopf action calculator"};
    app.require_subcommand(1);

    Options opt;
    std::string subname;
    auto add = [&](const std::string& name, const std::string& desc, bool needs_input) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (needs_input) sub->add_option("--input", opt.input, "job file")->required();
        sub->add_flag("--json", opt.emit_json, "machine-readable output");
        sub->callback([&subname, name] { subname = name; });
        return sub;
    };

    add("check", "Jacobi, filtration, and unimodularity checks", true);
    add("modular", "modular derivation images", true);
    add("rees", "Rees algebra of a filtered bracket", true);
    add("gr", "associated graded bracket", true);
    auto* q = add("quantize", "quadratic quantization relations", true);
    q->add_option("--lambda", opt.lambda, "quantization parameter");
    q->add_flag("--rees", opt.apply_rees, "quantize the Rees algebra instead");
    auto* va = add("verify-action", "module Poisson axioms for an action", true);
    va->add_option("--maxdeg", opt.maxdeg, "degree bound for sampled checks");
    auto* fr = add("fixed-ring", "generators and bracket of the fixed ring", true);
    fr->add_option("--maxdeg", opt.maxdeg, "degree bound for generator search")
        ->required();
    auto* er = add("extend-rees", "extend the action to the Rees algebra", true);
    er->add_option("--maxdeg", opt.maxdeg, "degree bound for verification");
    auto* ct = add("classify-taft", "equivariant bracket families for the standard "
                                    "Taft action", false);
    ct->add_option("--input", opt.input, "optional job file fixing the field");
    ct->add_option("--vars", opt.vars, "number of variables")->required();
    ct->add_option("--degree", opt.degree, "const | linear | quadratic")->required();
    ct->add_option("--n", opt.taft_n, "Taft algebra order");
    auto* env = add("envelope", "Poisson enveloping algebra presentation", true);
    env->add_flag("--check-extension", opt.check_extension,
                  "also test the enveloping extension conditions");
    add("hopf-verify", "Hopf algebra axioms and cocommutativity", true);

    CLI11_PARSE(app, argc, argv);

    JobInput in;
    try {
        if (!opt.input.empty())
            in = load_job(opt.input);
        else
            in.field = make_field(opt.taft_n);
    } catch (const pha_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }

    try {
        if (subname == "check") return cmd_check(opt, in);
        if (subname == "modular") return cmd_modular(opt, in);
        if (subname == "rees") return algebra_out(opt, rees(need_algebra(in)));
        if (subname == "gr") return algebra_out(opt, assoc_graded(need_algebra(in)));
        if (subname == "quantize") return cmd_quantize(opt, in);
        if (subname == "verify-action") return cmd_verify_action(opt, in);
        if (subname == "fixed-ring") return cmd_fixed_ring(opt, in);
        if (subname == "extend-rees") return cmd_extend_rees(opt, in);
        if (subname == "classify-taft") return cmd_classify_taft(opt, in);
        if (subname == "envelope") return cmd_envelope(opt, in);
        if (subname == "hopf-verify") return cmd_hopf_verify(opt, in);
        std::cerr << "unknown subcommand\n";
        return kBadInput;
    } catch (const pha_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

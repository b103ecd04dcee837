#include "qh/cli.hpp"

#include "qh/complex.hpp"
#include "qh/error.hpp"
#include "qh/json_io.hpp"
#include "qh/serre.hpp"
#include "qh/tilting.hpp"
#include "qh/zoo.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qh {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Usage {
    std::string message;
};

struct CheckList {
    Json checks = Json::array();
    std::vector<std::string> hashes;

    void add(const std::string& name, bool pass, Json witnesses = Json(), const std::string& provenance = "") {
        Json c;
        c["name"] = name;
        c["verdict"] = pass ? "pass" : "fail";
        if (!witnesses.is_null()) c["witnesses"] = witnesses;
        if (!provenance.empty()) c["provenance"] = provenance;
        checks.push_back(c);
    }

    void add_precondition_failure(const std::string& name, const std::string& why) {
        Json c;
        c["name"] = name;
        c["verdict"] = "precondition-failed";
        c["witnesses"] = why;
        checks.push_back(c);
    }

    void add_skipped(const std::string& name, const std::string& why) {
        Json c;
        c["name"] = name;
        c["verdict"] = "skipped";
        c["witnesses"] = why;
        checks.push_back(c);
    }

    int exit_code() const {
        bool precondition = false;
        for (const auto& c : checks) {
            std::string v = c.at("verdict").get<std::string>();
            if (v == "fail") return 1;
            if (v == "precondition-failed") precondition = true;
        }
        return precondition ? 2 : 0;
    }
};

Json finish_report(const CheckList& cl, const Json& result, long ms) {
    Json r;
    r["toolVersion"] = kVersion;
    r["inputHashes"] = cl.hashes;
    r["checks"] = cl.checks;
    if (!result.is_null()) r["result"] = result;
    r["timingMs"] = ms;
    return r;
}

void render(const Json& report, bool human, std::ostream& out) {
    if (!human) {
        out << report.dump(2) << "\n";
        return;
    }
    out << "tool " << report.at("toolVersion").get<std::string>() << "\n";
    for (const auto& c : report.at("checks")) {
        out << "  [" << c.at("verdict").get<std::string>() << "] " << c.at("name").get<std::string>();
        if (c.contains("witnesses") && c.at("witnesses").is_string())
            out << "  (" << c.at("witnesses").get<std::string>() << ")";
        out << "\n";
    }
    if (report.contains("result")) out << "result: " << report.at("result").dump(2) << "\n";
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage{"cannot open '" + path + "'"};
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // report line and column from the byte offset
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Usage{"malformed JSON in '" + path + "' at line " + std::to_string(line) + ", column " +
                    std::to_string(col)};
    }
}

AlgebraPtr load_algebra(const std::string& arg, CheckList& cl) {
    if (arg.rfind("zoo:", 0) == 0) {
        ZooEntry e = zoo_get(arg.substr(4));
        cl.hashes.push_back(content_hash(algebra_to_json(e.algebra)));
        return e.algebra;
    }
    Json j = parse_json_file(arg);
    cl.hashes.push_back(content_hash(j));
    return algebra_from_json(j);
}

StratOrder load_order(const std::string& arg, const AlgebraPtr& a, CheckList& cl) {
    if (arg.rfind("zoo:", 0) == 0) {
        ZooEntry e = zoo_get(arg.substr(4));
        if (!(*e.algebra == *a)) throw Usage{"order '" + arg + "' belongs to a different algebra"};
        cl.hashes.push_back(content_hash(order_to_json(e.order, a)));
        return e.order;
    }
    Json j = parse_json_file(arg);
    cl.hashes.push_back(content_hash(j));
    return order_from_json(j, a);
}

std::vector<int> parse_q_labels(const std::string& arg, const AlgebraPtr& a) {
    if (arg == "auto") {
        auto pi = projective_injective_labels(a);
        if (pi.empty()) throw err_precondition("--q auto found no projective-injective modules");
        return pi;
    }
    std::vector<int> out;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(a->quiver().vertex(tok));
    if (out.empty()) throw Usage{"empty label list for --q"};
    return out;
}

Representation parse_module_ref(const std::string& name, const AlgebraPtr& a, const StratPtr& strat) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw Usage{"module reference must look like P:label"};
    std::string kind = name.substr(0, colon);
    std::string label = name.substr(colon + 1);
    int v = a->quiver().vertex(label);
    if (kind == "P") return projective_module(a, v);
    if (kind == "I") return injective_module(a, v);
    if (kind == "L") return simple_module(a, v);
    if (!strat) throw Usage{"module reference '" + kind + ":' needs --order"};
    if (kind == "Delta") return strat->standard(v);
    if (kind == "Nabla") return strat->costandard(v);
    if (kind == "T") return tilting_module(strat, v);
    throw Usage{"unknown module reference kind '" + kind + "'"};
}

// ----- subcommand payloads -----

Json run_analyze(const AlgebraPtr& a, CheckList& cl, int cap) {
    Json result;
    result["dim"] = a->dim();
    result["loewyLength"] = a->loewy_length();
    cl.add("built", true, Json(static_cast<int>(a->dim())), "basis and multiplication table verified at build time");
    auto gd = global_dimension(a, cap);
    result["globalDimension"] = gd ? Json(*gd) : Json("exceeded");
    result["selfinjective"] = is_selfinjective(a);
    result["symmetric"] = is_symmetric(a);
    result["centreDim"] = centre(a).dim();
    auto pi = projective_injective_labels(a);
    Json pil = Json::array();
    for (int l : pi) pil.push_back(a->quiver().vertex_label(l));
    result["projInjective"] = pil;
    if (!pi.empty()) result["good"] = is_good(a, pi);
    cl.add("analyze", true, result);
    return result;
}

Json run_strat(const AlgebraPtr& a, const StratOrder& order, CheckList& cl) {
    auto s = StratifiedAlgebra::make(a, order);
    Verdict ss = is_standardly_stratified(s);
    Verdict qh = is_quasi_hereditary(s);
    Verdict ps = is_properly_stratified(s);
    Json result;
    result["standardlyStratified"] = ss.ok;
    result["quasiHereditary"] = qh.ok;
    result["properlyStratified"] = ps.ok;
    Json delta, pdelta, nabla, pnabla;
    for (size_t l = 0; l < s->num_labels(); ++l) {
        const std::string& lab = a->quiver().vertex_label(static_cast<int>(l));
        delta[lab] = s->standard(static_cast<int>(l)).total_dim();
        pdelta[lab] = s->proper_standard(static_cast<int>(l)).total_dim();
        nabla[lab] = s->costandard(static_cast<int>(l)).total_dim();
        pnabla[lab] = s->proper_costandard(static_cast<int>(l)).total_dim();
    }
    result["delta"] = delta;
    result["properDelta"] = pdelta;
    result["nabla"] = nabla;
    result["properNabla"] = pnabla;
    cl.add("standardlyStratified", ss.ok, ss.ok ? Json() : Json(ss.witness));
    cl.add("quasiHereditary check ran", true, qh.ok);
    cl.add("properlyStratified check ran", true, ps.ok);
    return result;
}

Json run_tilt(const AlgebraPtr& a, const StratOrder& order, CheckList& cl) {
    auto s = StratifiedAlgebra::make(a, order);
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) {
        cl.add_precondition_failure("standardlyStratified", ss.witness);
        return Json();
    }
    TiltingData t = build_tilting(s);
    Json result;
    for (size_t l = 0; l < s->num_labels(); ++l) {
        const std::string& lab = a->quiver().vertex_label(static_cast<int>(l));
        Json e;
        e["dim"] = t.indecomposable[l].total_dim();
        Json sf = Json::array(), pf = Json::array();
        for (int c : t.standard_certs[l].labels) sf.push_back(a->quiver().vertex_label(c));
        for (int c : t.proper_costandard_certs[l].labels) pf.push_back(a->quiver().vertex_label(c));
        e["standardFlag"] = sf;
        e["properCostandardFlag"] = pf;
        result[lab] = e;
    }
    cl.add("tilting modules built with both flags", true, result);
    return result;
}

Json run_ringel(const AlgebraPtr& a, const StratOrder& order, CheckList& cl) {
    auto s = StratifiedAlgebra::make(a, order);
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) {
        cl.add_precondition_failure("standardlyStratified", ss.witness);
        return Json();
    }
    RingelDual rd = ringel_dual(s);
    Json result = algebra_to_json(rd.presented.algebra);
    Json info;
    info["dim"] = rd.presented.algebra->dim();
    info["cartanEquivalentToInput"] = cartan_equivalent(a, rd.presented.algebra);
    cl.add("ringel dual presented", true, info);
    return result;
}

Json run_dc(const AlgebraPtr& a, const StratOrder& order, CheckList& cl) {
    auto s = StratifiedAlgebra::make(a, order);
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) {
        cl.add_precondition_failure("standardlyStratified", ss.witness);
        return Json();
    }
    DcTilting dc = dc_tilting(s);
    Json result;
    Json xs = Json::array();
    for (int l : dc.x_labels) xs.push_back(a->quiver().vertex_label(l));
    result["X"] = xs;
    result["doubleCentraliser"] = dc.double_centraliser;
    result["XequalsCharacteristicTilting"] = dc.x_equals_characteristic;
    result["XinAddQ"] = dc.x_in_add_q;
    result["commutantDim"] = dc.commutant_dim;
    result["cokerDim"] = dc.coker.total_dim();
    result["m"] = dc.m;
    cl.add("doubleCentraliser", dc.double_centraliser, result);
    return result;
}

Json run_serre(const AlgebraPtr& a, const std::string& qarg, CheckList& cl, int cap) {
    std::vector<int> q = parse_q_labels(qarg, a);
    SerrecoapproxReport rep = check_serrecoapprox_equivalence(a, q, cap);
    Json result;
    if (!rep.preconditions_ok) {
        cl.add_precondition_failure("serre preconditions", rep.precondition_failure);
        result["precondition"] = rep.precondition_failure;
        return result;
    }
    cl.add("preconditions", true);
    result["condI"] = rep.cond_i;
    result["condII"] = rep.cond_ii;
    result["condIII"] = rep.cond_iii;
    result["allEqual"] = rep.all_equal;
    result["serrePairingNatural"] = serre_pairing_natural(a);
    cl.add("three conditions equivalent", rep.all_equal,
           Json::array({rep.cond_i, rep.cond_ii, rep.cond_iii}));
    cl.add("serre pairing natural on projectives", result["serrePairingNatural"].get<bool>());
    return result;
}

Json run_coapp(const AlgebraPtr& a, const std::string& qarg, const std::string& modref, int power,
               const StratPtr& strat, CheckList& cl) {
    std::vector<int> q = parse_q_labels(qarg, a);
    for (int l : q)
        if (!is_projective(projective_module(a, l))) throw err_q_not_projective("label is not projective");
    Representation m = parse_module_ref(modref, a, strat);
    for (int i = 0; i < power; ++i) m = coapp(q, m);
    cl.add("coapproximation computed", true, Json(static_cast<int>(m.total_dim())));
    return module_to_json(m);
}

Json run_centre(const AlgebraPtr& a, const std::string& compare_q, CheckList& cl) {
    Json result;
    result["dim"] = centre(a).dim();
    if (!compare_q.empty()) {
        std::vector<int> q = parse_q_labels(compare_q, a);
        try {
            CentreComparison cc = centre_comparison(a, q);
            result["endoDim"] = cc.endo_centre_dim;
            result["restrictionInjective"] = cc.restriction_injective;
            cl.add("centre comparison", cc.equal(), result);
        } catch (const Error& e) {
            if (e.code() == "DoubleCentraliserMissing") {
                cl.add_precondition_failure("centre comparison", e.what());
                return result;
            }
            throw;
        }
    } else {
        cl.add("centre computed", true, result);
    }
    return result;
}

Json run_serre_table(const AlgebraPtr& a, int lo, int hi, CheckList& cl, int cap) {
    auto gd = global_dimension(a, cap);
    if (!gd) {
        cl.add_precondition_failure("finite global dimension", "resolutions exceed the cap");
        return Json();
    }
    Json table = Json::array();
    bool all_equal = true;
    for (size_t l = 0; l < a->quiver().num_vertices(); ++l)
        for (size_t m = 0; m < a->quiver().num_vertices(); ++m) {
            auto rows = serre_duality_check(a, static_cast<int>(l), static_cast<int>(m), lo, hi, cap);
            for (const auto& r : rows) {
                Json row;
                row["from"] = a->quiver().vertex_label(static_cast<int>(l));
                row["to"] = a->quiver().vertex_label(static_cast<int>(m));
                row["n"] = r.n;
                row["lhs"] = r.lhs;
                row["rhs"] = r.rhs;
                row["equal"] = r.equal;
                if (!r.equal) all_equal = false;
                table.push_back(row);
            }
        }
    Json result;
    result["rows"] = table;
    result["allEqual"] = all_equal;
    cl.add("serre duality table equal", all_equal);
    return result;
}

Json run_ext(const AlgebraPtr& a, const std::string& from, const std::string& to, int maxn, CheckList& cl) {
    Representation m = parse_module_ref(from, a, nullptr);
    Representation n = parse_module_ref(to, a, nullptr);
    Json dims = Json::array();
    for (int k = 0; k <= maxn; ++k) dims.push_back(ext_dim(m, n, k));
    Json result;
    result["ext"] = dims;
    cl.add("ext dimensions computed", true, result);
    return result;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto started = std::chrono::steady_clock::now();
    CLI::App app{"bound quiver algebra toolkit"};
    app.require_subcommand(1);
    bool human = false;
    int cap = 20;
    app.add_flag("--human", human, "human readable output (default is JSON)");
    app.add_flag("--json", [](int64_t) {}, "JSON output (default)");
    app.add_option("--cap", cap, "resolution cap");

    std::string alg_arg, order_arg, q_arg = "auto", module_arg, from_arg, to_arg, range_arg = "-2..2";
    std::string compare_q, zoo_name;
    int power = 1, maxn = 4;
    bool zoo_all = false;

    auto* analyze = app.add_subcommand("analyze", "algebra level facts");
    analyze->add_option("algebra", alg_arg)->required();

    auto* strat = app.add_subcommand("strat", "stratification checks");
    auto* strat_check = strat->add_subcommand("check");
    strat_check->add_option("algebra", alg_arg)->required();
    strat_check->add_option("order", order_arg)->required();

    auto* tilt = app.add_subcommand("tilt", "tilting modules");
    auto* tilt_compute = tilt->add_subcommand("compute");
    tilt_compute->add_option("algebra", alg_arg)->required();
    tilt_compute->add_option("order", order_arg)->required();

    auto* ringel = app.add_subcommand("ringel", "ringel dual");
    auto* ringel_dual_cmd = ringel->add_subcommand("dual");
    ringel_dual_cmd->add_option("algebra", alg_arg)->required();
    ringel_dual_cmd->add_option("order", order_arg)->required();

    auto* dc = app.add_subcommand("dc", "double centraliser tilting");
    auto* dc_find = dc->add_subcommand("find");
    dc_find->add_option("algebra", alg_arg)->required();
    dc_find->add_option("order", order_arg)->required();

    auto* serre = app.add_subcommand("serre", "serre functor checks");
    auto* serre_check = serre->add_subcommand("check");
    serre_check->add_option("algebra", alg_arg)->required();
    serre_check->add_option("order", order_arg);
    serre_check->add_option("--q", q_arg, "projective-injective summand labels or 'auto'");

    auto* coapp_cmd = app.add_subcommand("coapp", "partial coapproximation");
    coapp_cmd->add_option("algebra", alg_arg)->required();
    coapp_cmd->add_option("--q", q_arg)->required();
    coapp_cmd->add_option("--module", module_arg)->required();
    coapp_cmd->add_option("--power", power);
    coapp_cmd->add_option("--order", order_arg);

    auto* centre_cmd = app.add_subcommand("centre", "centre of the algebra");
    centre_cmd->add_option("algebra", alg_arg)->required();
    centre_cmd->add_option("--compare-q", compare_q);

    auto* dbcheck = app.add_subcommand("dbcheck", "derived category checks");
    auto* serre_table = dbcheck->add_subcommand("serre-table");
    serre_table->add_option("algebra", alg_arg)->required();
    serre_table->add_option("order", order_arg);
    serre_table->add_option("--range", range_arg);
    auto* ext_cmd = dbcheck->add_subcommand("ext");
    ext_cmd->add_option("algebra", alg_arg)->required();
    ext_cmd->add_option("--from", from_arg)->required();
    ext_cmd->add_option("--to", to_arg)->required();
    ext_cmd->add_option("--max", maxn);

    auto* zoo_cmd = app.add_subcommand("zoo", "built-in examples");
    auto* zoo_list_cmd = zoo_cmd->add_subcommand("list");
    auto* zoo_emit = zoo_cmd->add_subcommand("emit");
    zoo_emit->add_option("name", zoo_name)->required();
    auto* zoo_verify_cmd = zoo_cmd->add_subcommand("verify");
    zoo_verify_cmd->add_option("name", zoo_name);
    zoo_verify_cmd->add_flag("--all", zoo_all);

    // parent flags like --human may trail subcommand arguments
    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    }

    CheckList cl;
    Json result;
    try {
        if (*analyze) {
            result = run_analyze(load_algebra(alg_arg, cl), cl, cap);
        } else if (*strat_check) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            result = run_strat(a, load_order(order_arg, a, cl), cl);
        } else if (*tilt_compute) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            result = run_tilt(a, load_order(order_arg, a, cl), cl);
        } else if (*ringel_dual_cmd) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            result = run_ringel(a, load_order(order_arg, a, cl), cl);
        } else if (*dc_find) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            result = run_dc(a, load_order(order_arg, a, cl), cl);
        } else if (*serre_check) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            result = run_serre(a, q_arg, cl, cap);
        } else if (*coapp_cmd) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            StratPtr s;
            if (!order_arg.empty()) s = StratifiedAlgebra::make(a, load_order(order_arg, a, cl));
            result = run_coapp(a, q_arg, module_arg, power, s, cl);
        } else if (*centre_cmd) {
            result = run_centre(load_algebra(alg_arg, cl), compare_q, cl);
        } else if (*serre_table) {
            AlgebraPtr a = load_algebra(alg_arg, cl);
            auto dots = range_arg.find("..");
            if (dots == std::string::npos) throw Usage{"--range must look like -2..2"};
            int lo = std::stoi(range_arg.substr(0, dots));
            int hi = std::stoi(range_arg.substr(dots + 2));
            result = run_serre_table(a, lo, hi, cl, cap);
        } else if (*ext_cmd) {
            result = run_ext(load_algebra(alg_arg, cl), from_arg, to_arg, maxn, cl);
        } else if (*zoo_list_cmd) {
            result = Json(zoo_list());
            cl.add("zoo listed", true);
        } else if (*zoo_emit) {
            ZooEntry e = zoo_get(zoo_name);
            result["algebra"] = algebra_to_json(e.algebra);
            result["order"] = order_to_json(e.order, e.algebra);
            cl.add("zoo entry emitted", true);
        } else if (*zoo_verify_cmd) {
            std::vector<std::string> names;
            if (zoo_all)
                names = zoo_list();
            else if (!zoo_name.empty())
                names.push_back(zoo_name);
            else
                throw Usage{"zoo verify needs a name or --all"};
            for (const auto& n : names) {
                try {
                    Json rep = zoo_verify(n);
                    cl.add("zoo verify " + n, true);
                    result[n] = rep;
                } catch (const Error& e) {
                    if (e.code() == "Mismatch") {
                        cl.add("zoo verify " + n, false, Json(std::string(e.what())));
                    } else {
                        throw;
                    }
                }
            }
        } else {
            err << "no subcommand selected\n";
            return 64;
        }
    } catch (const Usage& u) {
        err << u.message << "\n";
        return 64;
    } catch (const Error& e) {
        if (e.code() == "PreconditionFailed" || e.code() == "DoubleCentraliserMissing" ||
            e.code() == "QNotProjective" || e.code() == "NotProjectiveInjective") {
            cl.add_precondition_failure("operation", e.what());
        } else if (e.code() == "UnknownEntry" || e.code() == "MalformedRelation") {
            err << e.what() << "\n";
            return 64;
        } else {
            err << e.what() << "\n";
            return 1;
        }
    }

    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
                  .count();
    Json report = finish_report(cl, result, ms);
    render(report, human, out);
    return cl.exit_code();
}

} // namespace qh

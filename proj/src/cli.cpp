#include "ihoe/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "ihoe/primcoh.hpp"
#include "ihoe/serialize.hpp"

namespace ihoe {

namespace {

json load_doc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

Ihoe2Params require_ihoe2(const InputDoc& doc) {
    if (!doc.ihoe2) throw Error("this command requires an input of kind 'ihoe2'");
    return *doc.ihoe2;
}

struct CommonOpts {
    std::string input;
    std::string input2;
    std::string elt;
    std::string elt2;
    std::string chi;
    std::string side = "left";
    std::string alpha_s, beta_s;
    int cap = 0;
    int samples = 8;
    uint64_t seed = 0;
    int field_ext = 1;
    bool classes = false;
    int p = 2;
};

Fq parse_fq(const FieldCtx& F, const std::string& s) {
    return fq_from_json(F, json::parse(s));
}

void emit(std::ostream& out, json j) {
    j["format"] = kFormatVersion;
    out << j.dump(2) << "\n";
}

int cmd_define(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    emit(out, json{{"command", "define"}, {"hopf", to_json(HS)}});
    return 0;
}

int cmd_mul(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    const OrePresentation& P = HS.base();
    PbwElement a = pbw_from_json(P.field(), P.n(), json::parse(o.elt));
    PbwElement b = pbw_from_json(P.field(), P.n(), json::parse(o.elt2));
    emit(out, json{{"command", "mul"}, {"product", to_json(P.field(), mul(P, a, b))}});
    return 0;
}

int cmd_delta(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    PbwElement a = pbw_from_json(HS.field(), HS.n(), json::parse(o.elt));
    emit(out, json{{"command", "delta"},
                   {"coproduct", to_json(HS.field(), coproduct(HS, a))}});
    return 0;
}

int cmd_antipode(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    PbwElement a = pbw_from_json(HS.field(), HS.n(), json::parse(o.elt));
    emit(out, json{{"command", "antipode"},
                   {"antipode", to_json(HS.field(), antipode(HS, a))}});
    return 0;
}

int cmd_check_hopf(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    int cap = o.cap > 0 ? o.cap : HS.field().p() + 2;
    HopfReport rep = verify_hopf(HS, cap, o.samples, o.seed);
    emit(out, json{{"command", "check-hopf"},
                   {"degree_cap", cap},
                   {"samples", o.samples},
                   {"seed", o.seed},
                   {"report", to_json(rep)}});
    return rep.all_pass ? 0 : 1;
}

int cmd_primitives(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    int cap = o.cap > 0 ? o.cap : HS.field().p();
    auto basis = primitives_up_to(HS, cap);
    json arr = json::array();
    for (const auto& f : basis) arr.push_back(to_json(HS.field(), f));
    emit(out, json{{"command", "primitives"}, {"cap", cap},
                   {"dimension", basis.size()}, {"basis", arr}});
    return 0;
}

Ihoe2Params load_params_ext(const CommonOpts& o) {
    InputDoc doc = input_from_json(load_doc(o.input));
    Ihoe2Params par = require_ihoe2(doc);
    if (o.field_ext > 1) {
        FieldCtx big(par.field.p(), par.field.m() * o.field_ext);
        par = embed_params(par, big);
    }
    return par;
}

int cmd_center(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    const OrePresentation& P = HS.base();
    PbwElement h;
    if (!o.elt.empty()) {
        h = pbw_from_json(P.field(), P.n(), json::parse(o.elt));
    } else {
        h = central_z(require_ihoe2(doc));
    }
    CentralityResult res = is_central(P, h);
    json rep{{"command", "center"}, {"central", res.central}};
    if (!res.central) {
        rep["witness_generator"] = res.witness_gen;
        rep["witness"] = to_json(P.field(), res.witness);
    }
    emit(out, rep);
    return 0;
}

int cmd_hopf_center(const CommonOpts& o, std::ostream& out) {
    Ihoe2Params par = load_params_ext(o);
    DeltaZReport dz = delta_z_check(par);
    json rep{{"command", "hopf-center"},
             {"delta_z_equal", dz.equal},
             {"tail_in_kx1", dz.tail_in_kx1}};
    bool ok = dz.equal && dz.tail_in_kx1;
    try {
        HopfCenterReport hc = hopf_center(par);
        rep["verdict"] = hc.verdict == CenterVerdict::PolyX1pZ ? "k[X1^p, z]" : "k[X1^p, z^p]";
        rep["membership"] = hc.membership;
        rep["tail"] = to_json(par.field, hc.tail);
    } catch (const Error& e) {
        rep["verdict"] = "error";
        rep["error"] = e.what();
        ok = false;
    }
    emit(out, rep);
    return ok ? 0 : 1;
}

int cmd_fiber(const CommonOpts& o, std::ostream& out) {
    Ihoe2Params par = load_params_ext(o);
    Fq alpha = parse_fq(par.field, o.alpha_s.empty() ? "0" : o.alpha_s);
    Fq beta = parse_fq(par.field, o.beta_s.empty() ? "0" : o.beta_s);
    FinDimAlgebra A = quotient_fiber(par, alpha, beta);
    bool assoc = fin_associativity_check(A, 4096, o.seed);
    emit(out, json{{"command", "fiber"},
                   {"alpha", to_json(par.field, alpha)},
                   {"beta", to_json(par.field, beta)},
                   {"associative", assoc},
                   {"algebra", to_json(par.field, A)}});
    return assoc ? 0 : 1;
}

int cmd_classify_fiber(const CommonOpts& o, std::ostream& out) {
    Ihoe2Params par = load_params_ext(o);
    Fq alpha = parse_fq(par.field, o.alpha_s.empty() ? "0" : o.alpha_s);
    Fq beta = parse_fq(par.field, o.beta_s.empty() ? "0" : o.beta_s);
    FiberClassification C = classify_fiber(par, alpha, beta);
    FinDimAlgebra A = quotient_fiber(par, alpha, beta);
    SimpleCensus census = simple_census(A, C);
    json rep{{"command", "classify-fiber"},
             {"alpha", to_json(par.field, alpha)},
             {"beta", to_json(par.field, beta)},
             {"witness_field", to_json(C.work_field)},
             {"witnesses_ok", C.witnesses_ok},
             {"simple_dims", census.dims}};
    switch (C.kind) {
        case FiberKind::Azumaya: {
            rep["kind"] = "Azumaya";
            rep["span_rank"] = C.span_rank;
            json x1 = json::array(), x2 = json::array();
            for (const Fq& v : C.x1_mat.a) x1.push_back(to_json(C.work_field, v));
            for (const Fq& v : C.x2_mat.a) x2.push_back(to_json(C.work_field, v));
            rep["x1_matrix_row_major"] = x1;
            rep["x2_matrix_row_major"] = x2;
            break;
        }
        case FiberKind::LocalNilpotent:
            rep["kind"] = "LocalNilpotent";
            break;
        case FiberKind::BlockOfP:
            rep["kind"] = "BlockOfP";
            break;
    }
    if (!C.characters.empty()) {
        json chars = json::array();
        for (const auto& [x1, x2] : C.characters)
            chars.push_back(json{{"x1", to_json(C.work_field, x1)},
                                 {"x2", to_json(C.work_field, x2)}});
        rep["characters"] = chars;
    }
    emit(out, rep);
    return C.witnesses_ok ? 0 : 1;
}

int cmd_locus(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    Ihoe2Params par = require_ihoe2(doc);
    FieldCtx scan = o.field_ext > 1 ? FieldCtx(par.field.p(), par.field.m() * o.field_ext)
                                    : par.field;
    LocusReport rep = nonazumaya_locus(par, scan);
    json roots = json::array();
    for (const Fq& r : rep.roots) roots.push_back(to_json(scan, r));
    emit(out, json{{"command", "locus"},
                   {"scan_field", to_json(scan)},
                   {"roots", roots},
                   {"r_closure", rep.r_closure},
                   {"splitting_degree", rep.splitting_degree}});
    return 0;
}

int cmd_restricted(const CommonOpts& o, std::ostream& out) {
    Ihoe2Params par = load_params_ext(o);
    RestrictedReport rep = restricted_quotient(par);
    bool ok = rep.dim_ok && rep.ideal_coproduct_ok && rep.presentation_ok &&
              rep.change_of_vars_ok;
    emit(out, json{{"command", "restricted"},
                   {"case", rep.case_name},
                   {"dim", rep.alg.dim},
                   {"expected_dim", rep.expected_dim},
                   {"dim_ok", rep.dim_ok},
                   {"ideal_coproduct_ok", rep.ideal_coproduct_ok},
                   {"presentation_ok", rep.presentation_ok},
                   {"change_of_vars_ok", rep.change_of_vars_ok},
                   {"algebra", to_json(par.field, rep.alg)}});
    return ok ? 0 : 1;
}

int cmd_iso(const CommonOpts& o, std::ostream& out) {
    InputDoc d1 = input_from_json(load_doc(o.input));
    InputDoc d2 = input_from_json(load_doc(o.input2));
    Ihoe2Params P = require_ihoe2(d1), Q = require_ihoe2(d2);
    IsoResult res = iso_scalars(P, Q);
    json rep{{"command", "iso"}, {"isomorphic", res.isomorphic}};
    if (res.isomorphic) {
        rep["alpha"] = to_json(P.field, res.alpha);
        rep["beta"] = to_json(P.field, res.beta);
    }
    if (res.needs_extension) {
        rep["needs_extension"] = true;
        rep["extension_degree"] = res.extension_degree;
    }
    emit(out, rep);
    return 0;
}

int cmd_canon(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    Ihoe2Params P = require_ihoe2(doc);
    Ihoe2Params C = canonical_form(P);
    emit(out, json{{"command", "canon"}, {"canonical", to_json(C)}});
    return 0;
}

int cmd_grade(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    DegreeAssignment A = assign_degrees(HS.base(), HS);
    GradedReport rep = graded_commutative_report(HS.base(), HS, A,
                                                 o.samples, o.seed);
    emit(out, json{{"command", "grade"},
                   {"degrees", A.degrees},
                   {"tail_caps", A.tail_caps},
                   {"commutator_degrees", rep.commutator_degrees},
                   {"commutation_ok", rep.commutation_ok},
                   {"submultiplicative_ok", rep.submult_ok},
                   {"graded_dims_ok", rep.graded_dims_ok},
                   {"pass", rep.pass}});
    return rep.pass ? 0 : 1;
}

int cmd_primcoh(const CommonOpts& o, std::ostream& out) {
    int N = o.cap > 0 ? o.cap : 4 * o.p;
    auto d1 = pp_dims(o.p, 1, N);
    auto d2 = pp_dims(o.p, 2, N);
    bool ok = d1 == pp_expected(o.p, 1, N) && d2 == pp_expected(o.p, 2, N);
    json j1 = json::object(), j2 = json::object();
    for (const auto& [i, d] : d1) j1[std::to_string(i)] = d;
    for (const auto& [i, d] : d2) j2[std::to_string(i)] = d;
    json rep{{"command", "primcoh"}, {"p", o.p}, {"cap", N},
             {"p1_dims", j1}, {"p2_dims", j2}, {"tables_match", ok}};
    if (o.classes) {
        ClassReport cr = verify_classes(o.p, N);
        json checks = json::array();
        for (const auto& c : cr.checks)
            checks.push_back(json{{"name", c.name},
                                  {"degree", c.degree},
                                  {"cocycle", c.cocycle},
                                  {"not_coboundary", c.not_coboundary},
                                  {"spans", c.spans}});
        rep["class_checks"] = checks;
        ok = ok && cr.all_pass;
    }
    emit(out, rep);
    return ok ? 0 : 1;
}

int cmd_winding(const CommonOpts& o, std::ostream& out) {
    InputDoc doc = input_from_json(load_doc(o.input));
    HopfStructure HS = build_input(doc);
    const FieldCtx& F = HS.field();
    Character chi;
    json cj = json::parse(o.chi);
    for (const auto& v : cj) chi.values.push_back(fq_from_json(F, v));
    WindingSide side = (o.side == "right") ? WindingSide::Right : WindingSide::Left;
    int cap = o.cap > 0 ? o.cap : static_cast<int>(ipow(F.p(), HS.n())) + 1;
    WindingResult res = winding(HS, chi, side, cap);
    json images = json::array();
    for (const auto& img : res.images) images.push_back(to_json(F, img));
    emit(out, json{{"command", "winding"},
                   {"side", o.side},
                   {"images", images},
                   {"order", res.order},
                   {"order_within_cap", res.within_cap}});
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for iterated Hopf Ore extensions in characteristic p"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", o.input, "input JSON file")->required();
    };
    auto add_knobs = [&](CLI::App* c) {
        c->add_option("--cap", o.cap, "degree cap");
        c->add_option("--samples", o.samples, "random sample count");
        c->add_option("--seed", o.seed, "RNG seed (default 0)");
    };
    auto add_ab = [&](CLI::App* c) {
        c->add_option("--alpha", o.alpha_s, "alpha (int or coord array)");
        c->add_option("--beta", o.beta_s, "beta (int or coord array)");
        c->add_option("--field-ext", o.field_ext, "extension degree multiplier");
    };

    CLI::App* define = app.add_subcommand("define", "validate and emit a presentation");
    add_input(define);
    CLI::App* mulc = app.add_subcommand("mul", "PBW normal-form product");
    add_input(mulc);
    mulc->add_option("--a", o.elt, "left factor (PBW JSON)")->required();
    mulc->add_option("--b", o.elt2, "right factor (PBW JSON)")->required();
    CLI::App* delta = app.add_subcommand("delta", "coproduct of an element");
    add_input(delta);
    delta->add_option("--elt", o.elt, "element (PBW JSON)")->required();
    CLI::App* anti = app.add_subcommand("antipode", "antipode of an element");
    add_input(anti);
    anti->add_option("--elt", o.elt, "element (PBW JSON)")->required();
    CLI::App* check = app.add_subcommand("check-hopf", "verify the Hopf axioms");
    add_input(check);
    add_knobs(check);
    CLI::App* prim = app.add_subcommand("primitives", "basis of primitives up to degree cap");
    add_input(prim);
    add_knobs(prim);
    CLI::App* center = app.add_subcommand("center", "centrality test");
    add_input(center);
    center->add_option("--elt", o.elt, "element (PBW JSON); default z");
    CLI::App* hcenter = app.add_subcommand("hopf-center", "Hopf center of a 2-step algebra");
    add_input(hcenter);
    hcenter->add_option("--field-ext", o.field_ext, "extension degree multiplier");
    CLI::App* fiber = app.add_subcommand("fiber", "central fiber H_{alpha,beta}");
    add_input(fiber);
    add_ab(fiber);
    fiber->add_option("--seed", o.seed, "RNG seed");
    CLI::App* classify = app.add_subcommand("classify-fiber", "fiber classification");
    add_input(classify);
    add_ab(classify);
    CLI::App* locus = app.add_subcommand("locus", "non-Azumaya locus roots");
    add_input(locus);
    locus->add_option("--field-ext", o.field_ext, "extension degree multiplier");
    CLI::App* restr = app.add_subcommand("restricted", "restricted Hopf quotient");
    add_input(restr);
    restr->add_option("--field-ext", o.field_ext, "extension degree multiplier");
    CLI::App* iso = app.add_subcommand("iso", "isomorphism scalars");
    add_input(iso);
    iso->add_option("input2", o.input2, "second input JSON file")->required();
    CLI::App* canon = app.add_subcommand("canon", "canonical parameter form");
    add_input(canon);
    CLI::App* grade = app.add_subcommand("grade", "degree assignment and graded report");
    add_input(grade);
    add_knobs(grade);
    CLI::App* pc = app.add_subcommand("primcoh", "primitive cohomology tables");
    pc->add_option("--p", o.p, "characteristic")->required();
    pc->add_option("--cap", o.cap, "degree cap");
    pc->add_flag("--classes", o.classes, "verify the Z_s / Y_{s,t} classes");
    CLI::App* wind = app.add_subcommand("winding", "winding automorphism and order");
    add_input(wind);
    wind->add_option("--chi", o.chi, "character values (JSON array)")->required();
    wind->add_option("--side", o.side, "left|right");
    wind->add_option("--cap", o.cap, "order search cap");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (define->parsed()) return cmd_define(o, out);
        if (mulc->parsed()) return cmd_mul(o, out);
        if (delta->parsed()) return cmd_delta(o, out);
        if (anti->parsed()) return cmd_antipode(o, out);
        if (check->parsed()) return cmd_check_hopf(o, out);
        if (prim->parsed()) return cmd_primitives(o, out);
        if (center->parsed()) return cmd_center(o, out);
        if (hcenter->parsed()) return cmd_hopf_center(o, out);
        if (fiber->parsed()) return cmd_fiber(o, out);
        if (classify->parsed()) return cmd_classify_fiber(o, out);
        if (locus->parsed()) return cmd_locus(o, out);
        if (restr->parsed()) return cmd_restricted(o, out);
        if (iso->parsed()) return cmd_iso(o, out);
        if (canon->parsed()) return cmd_canon(o, out);
        if (grade->parsed()) return cmd_grade(o, out);
        if (pc->parsed()) return cmd_primcoh(o, out);
        if (wind->parsed()) return cmd_winding(o, out);
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no command\n";
    return 2;
}

}  // namespace ihoe

#include "ihoe/serialize.hpp"

namespace ihoe {

json to_json(const FieldCtx& F) {
    return json{{"p", F.p()}, {"m", F.m()}, {"modulus_coeffs", F.modulus()}};
}

FieldCtx field_from_json(const json& j) {
    FieldCtx F(j.at("p").get<int>(), j.value("m", 1));
    if (j.contains("modulus_coeffs") &&
        j.at("modulus_coeffs").get<std::vector<int>>() != F.modulus())
        throw Error("field_from_json: modulus mismatch with the deterministic choice");
    return F;
}

json to_json(const FieldCtx& F, const Fq& x) {
    std::vector<int> coords(static_cast<size_t>(F.m()));
    for (int i = 0; i < F.m(); ++i) coords[static_cast<size_t>(i)] = x.c[i];
    return json(coords);
}

Fq fq_from_json(const FieldCtx& F, const json& j) {
    if (j.is_number_integer()) return F.from_int(j.get<long long>());
    return F.from_coords(j.get<std::vector<int>>());
}

json to_json(const FieldCtx& F, const PbwElement& a) {
    json arr = json::array();
    for (const auto& [e, c] : a.terms)
        arr.push_back(json{{"exponents", e}, {"coeff", to_json(F, c)}});
    return arr;
}

PbwElement pbw_from_json(const FieldCtx& F, int n, const json& j) {
    PbwElement a;
    for (const auto& t : j) {
        ExpVec e = t.at("exponents").get<ExpVec>();
        if (static_cast<int>(e.size()) != n) throw Error("pbw_from_json: exponent arity");
        pbw_add_term(F, a, e, fq_from_json(F, t.at("coeff")));
    }
    return a;
}

json to_json(const FieldCtx& F, const TensorElement& t) {
    json arr = json::array();
    for (const auto& [k, c] : t.terms) {
        json term{{"left", k[0]}, {"right", k[1]}};
        if (t.arity == 3) term["mid"] = k[2];
        term["coeff"] = to_json(F, c);
        arr.push_back(std::move(term));
    }
    return json{{"arity", t.arity}, {"terms", arr}};
}

TensorElement tensor_from_json(const FieldCtx& F, int n, const json& j) {
    TensorElement t = t_zero(j.value("arity", 2));
    for (const auto& term : j.at("terms")) {
        std::vector<ExpVec> key;
        key.push_back(term.at("left").get<ExpVec>());
        key.push_back(term.at("right").get<ExpVec>());
        if (t.arity == 3) key.push_back(term.at("mid").get<ExpVec>());
        for (const auto& e : key)
            if (static_cast<int>(e.size()) != n) throw Error("tensor_from_json: arity");
        t_add_term(F, t, key, fq_from_json(F, term.at("coeff")));
    }
    return t;
}

json to_json(const OrePresentation& P) {
    const FieldCtx& F = P.field();
    json sig = json::array(), del = json::array();
    for (int i = 2; i <= P.n(); ++i) {
        json srow = json::array(), drow = json::array();
        for (int j = 1; j < i; ++j) {
            srow.push_back(to_json(F, P.sigma_image(i, j)));
            drow.push_back(to_json(F, P.delta_image(i, j)));
        }
        sig.push_back(std::move(srow));
        del.push_back(std::move(drow));
    }
    std::vector<int> laurent;
    for (int i = 1; i <= P.n(); ++i) laurent.push_back(P.is_laurent(i) ? 1 : 0);
    return json{{"field", to_json(F)},
                {"n", P.n()},
                {"laurent", laurent},
                {"sigma_images", sig},
                {"delta_images", del}};
}

OrePresentation presentation_from_json(const json& j) {
    FieldCtx F = field_from_json(j.at("field"));
    int n = j.at("n").get<int>();
    std::vector<std::vector<PbwElement>> sig, del;
    for (int i = 2; i <= n; ++i) {
        std::vector<PbwElement> srow, drow;
        for (int jj = 1; jj < i; ++jj) {
            srow.push_back(pbw_from_json(F, n, j.at("sigma_images")[i - 2][jj - 1]));
            drow.push_back(pbw_from_json(F, n, j.at("delta_images")[i - 2][jj - 1]));
        }
        sig.push_back(std::move(srow));
        del.push_back(std::move(drow));
    }
    std::vector<uint8_t> laurent;
    if (j.contains("laurent"))
        for (const auto& v : j.at("laurent")) laurent.push_back(v.get<int>() != 0);
    return OrePresentation(F, n, std::move(sig), std::move(del), std::move(laurent));
}

json to_json(const Ihoe2Params& par) {
    const FieldCtx& F = par.field;
    json d = json::array(), b = json::array(), c = json::array();
    for (const auto& [s, v] : par.d) d.push_back(json::array({s, to_json(F, v)}));
    for (const auto& [s, v] : par.b) b.push_back(json::array({s, to_json(F, v)}));
    for (const auto& [st, v] : par.c)
        c.push_back(json::array({st.first, st.second, to_json(F, v)}));
    return json{{"p", F.p()}, {"m", F.m()}, {"d", d}, {"b", b}, {"c", c}};
}

Ihoe2Params params_from_json(const json& j) {
    FieldCtx F(j.at("p").get<int>(), j.value("m", 1));
    Ihoe2Params par(F);
    for (const auto& e : j.value("d", json::array()))
        par.set_d(e[0].get<int>(), fq_from_json(F, e[1]));
    for (const auto& e : j.value("b", json::array()))
        par.set_b(e[0].get<int>(), fq_from_json(F, e[1]));
    for (const auto& e : j.value("c", json::array()))
        par.set_c(e[0].get<int>(), e[1].get<int>(), fq_from_json(F, e[2]));
    return par;
}

json to_json(const KParams& par) {
    return json{{"p", par.field.p()},
                {"m", par.field.m()},
                {"a", par.a},
                {"b", to_json(par.field, par.b)},
                {"c", to_json(par.field, par.c)}};
}

KParams kparams_from_json(const json& j) {
    FieldCtx F(j.at("p").get<int>(), j.value("m", 1));
    KParams par{F};
    par.a = j.at("a").get<long long>();
    par.b = fq_from_json(F, j.at("b"));
    par.c = fq_from_json(F, j.at("c"));
    return par;
}

json to_json(const HopfStructure& HS) {
    const FieldCtx& F = HS.field();
    json kinds = json::array(), gparts = json::array(), tails = json::array(),
         anti = json::array();
    for (int i = 1; i <= HS.n(); ++i) {
        kinds.push_back(HS.kind(i) == GenKind::Primitive ? "primitive" : "grouplike");
        gparts.push_back(HS.group_part(i));
        tails.push_back(to_json(F, HS.tail(i)));
        anti.push_back(to_json(F, HS.antipode_image(i)));
    }
    return json{{"presentation", to_json(HS.base())},
                {"gen_kinds", kinds},
                {"group_parts", gparts},
                {"tails", tails},
                {"antipode_images", anti}};
}

json to_json(const FieldCtx& F, const FinDimAlgebra& A) {
    json labels = json::array();
    for (const auto& e : A.basis) labels.push_back(e);
    json sc = json::array();
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k)
                if (!F.is_zero(A.c(i, j, k)))
                    sc.push_back(json::array({i, j, k, to_json(F, A.c(i, j, k))}));
    return json{{"dim", A.dim}, {"labels", labels}, {"structure_constants", sc},
                {"unit_index", A.unit_index}};
}

json to_json(const HopfReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"axiom", c.axiom}, {"result", c.pass ? "pass" : "fail"}};
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"all_pass", rep.all_pass}, {"checks", checks}};
}

InputDoc input_from_json(const json& j) {
    if (j.value("format", 0) != kFormatVersion)
        throw Error("input: unsupported or missing format version");
    FieldCtx F = field_from_json(j.at("field"));
    InputDoc doc(F);
    doc.kind = j.at("kind").get<std::string>();
    const json& params = j.at("params");
    if (doc.kind == "ihoe2") {
        json pj = params;
        pj["p"] = F.p();
        pj["m"] = F.m();
        doc.ihoe2 = std::make_unique<Ihoe2Params>(params_from_json(pj));
    } else if (doc.kind == "kfamily") {
        json pj = params;
        pj["p"] = F.p();
        pj["m"] = F.m();
        doc.kfamily = std::make_unique<KParams>(kparams_from_json(pj));
    } else if (doc.kind == "ore") {
        json pj = params;
        pj["field"] = to_json(F);
        doc.ore = std::make_unique<OrePresentation>(presentation_from_json(pj));
        int n = doc.ore->n();
        for (int i = 0; i < n; ++i) {
            std::string k = params.contains("gen_kinds")
                                ? params.at("gen_kinds")[i].get<std::string>()
                                : "primitive";
            doc.gen_kinds.push_back(k == "grouplike" ? GenKind::Grouplike
                                                     : GenKind::Primitive);
            doc.group_parts.push_back(params.contains("group_parts")
                                          ? params.at("group_parts")[i].get<ExpVec>()
                                          : exp_zero(n));
            doc.tails.push_back(params.contains("tails")
                                    ? tensor_from_json(F, n, params.at("tails")[i])
                                    : t_zero(2));
        }
    } else {
        throw Error("input: unknown kind '" + doc.kind + "'");
    }
    return doc;
}

HopfStructure build_input(const InputDoc& doc) {
    if (doc.ihoe2) return build_h(*doc.ihoe2);
    if (doc.kfamily) return build_k(*doc.kfamily);
    return HopfStructure(*doc.ore, doc.gen_kinds, doc.group_parts, doc.tails);
}

}  // namespace ihoe

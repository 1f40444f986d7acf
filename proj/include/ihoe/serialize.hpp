#pragma once

#include <memory>

#include <json.hpp>

#include "ihoe/filtration.hpp"
#include "ihoe/findim.hpp"

namespace ihoe {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

json to_json(const FieldCtx& F);
FieldCtx field_from_json(const json& j);

json to_json(const FieldCtx& F, const Fq& x);
Fq fq_from_json(const FieldCtx& F, const json& j);

json to_json(const FieldCtx& F, const PbwElement& a);
PbwElement pbw_from_json(const FieldCtx& F, int n, const json& j);

json to_json(const FieldCtx& F, const TensorElement& t);
TensorElement tensor_from_json(const FieldCtx& F, int n, const json& j);

json to_json(const OrePresentation& P);
OrePresentation presentation_from_json(const json& j);

json to_json(const Ihoe2Params& par);
Ihoe2Params params_from_json(const json& j);

json to_json(const KParams& par);
KParams kparams_from_json(const json& j);

json to_json(const HopfStructure& HS);

json to_json(const FieldCtx& F, const FinDimAlgebra& A);
json to_json(const HopfReport& rep);

/// Input document: {format, field:{p,m}, kind: "ihoe2"|"ore"|"kfamily", params...}
struct InputDoc {
    std::string kind;
    FieldCtx field;
    // exactly one of these is populated, per kind
    std::unique_ptr<Ihoe2Params> ihoe2;
    std::unique_ptr<KParams> kfamily;
    std::unique_ptr<OrePresentation> ore;
    // Hopf data for kind = "ore"
    std::vector<GenKind> gen_kinds;
    std::vector<ExpVec> group_parts;
    std::vector<TensorElement> tails;

    explicit InputDoc(FieldCtx F) : field(std::move(F)) {}
};
InputDoc input_from_json(const json& j);
/// HopfStructure for any input kind.
HopfStructure build_input(const InputDoc& doc);

}  // namespace ihoe

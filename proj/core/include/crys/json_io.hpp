#pragma once

#include <json.hpp>

#include "crys/crys_group.hpp"

namespace crys {

using Json = nlohmann::ordered_json;

// Matrix JSON form:
// {"rows":r,"cols":c,"domain":"Z"|"Q"|"Fp"|"Fp[x]","p":optional,
//  "entries":[row-major strings]};
// integers and rationals as decimal strings "a" / "a/b".
Json to_json(const IntMat& m);
Json to_json(const RatMat& m);
Json to_json(const FpMat& m);
Json to_json(const FpPolyMat& m);
IntMat int_mat_from_json(const Json& j);
RatMat rat_mat_from_json(const Json& j);
FpMat fp_mat_from_json(const Json& j);
FpPolyMat fp_poly_mat_from_json(const Json& j);

// CycloElement JSON: {"p":p,"level":i,"coords":[rational strings]}.
Json to_json(const CycloElement& x);
CycloElement cyclo_from_json(const Json& j);

Json to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vector_from_json(const Json& j);

Json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json group_to_json(const HolonomyGroup& g);

/// Full bundle: family parameters, group, generator images, cocycle
/// generator values, and flags. Deterministic field order.
Json bundle_to_json(const FamilySpec& spec, const CrysGroup& g, std::uint64_t seed);

struct LoadedBundle {
    FamilySpec spec;
    CrysGroup group;
    std::uint64_t seed = 0;
};

/// Rebuilds the bundle from its family parameters and checks that the
/// serialized generator images and cocycle values match the rebuilt ones.
LoadedBundle bundle_from_json(const Json& j);

Json certificate_to_json(const Certificate& c, const HolonomyGroup& g);

}  // namespace crys

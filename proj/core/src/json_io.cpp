#include "crys/json_io.hpp"

#include <stdexcept>

#include "crys/poly_factor.hpp"

namespace crys {

namespace {

template <class T, class Fmt>
Json matrix_json(const Matrix<T>& m, const char* domain, Fmt fmt, std::uint64_t p = 0) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["domain"] = domain;
    if (p) j["p"] = p;
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(fmt(m(i, c)));
    j["entries"] = std::move(entries);
    return j;
}

void expect_domain(const Json& j, const char* domain) {
    if (j.at("domain").get<std::string>() != domain)
        throw std::invalid_argument("matrix json: expected domain " + std::string(domain) +
                                    ", got " + j.at("domain").get<std::string>());
}

template <class T, class Parse>
Matrix<T> matrix_from_json(const Json& j, Parse parse) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw std::invalid_argument("matrix json: entry count mismatch");
    Matrix<T> m(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = parse(entries[k++].get<std::string>());
    return m;
}

}  // namespace

Json to_json(const IntMat& m) {
    return matrix_json(m, "Z", [](const Int& v) { return to_string(v); });
}

Json to_json(const RatMat& m) {
    return matrix_json(m, "Q", [](const Rat& v) { return to_string(v); });
}

Json to_json(const FpMat& m) {
    std::uint64_t p = 0;
    for (const auto& e : m.entries())
        if (e.p) {
            p = e.p;
            break;
        }
    return matrix_json(m, "Fp", [](const Fp& v) { return to_string(v); }, p);
}

Json to_json(const FpPolyMat& m) {
    std::uint64_t p = 0;
    for (const auto& e : m.entries())
        if (modulus_of(e)) {
            p = modulus_of(e);
            break;
        }
    return matrix_json(m, "Fp[x]", [](const FpPoly& v) { return to_string(v); }, p);
}

IntMat int_mat_from_json(const Json& j) {
    expect_domain(j, "Z");
    return matrix_from_json<Int>(j, [](const std::string& s) { return parse_int(s); });
}

RatMat rat_mat_from_json(const Json& j) {
    expect_domain(j, "Q");
    return matrix_from_json<Rat>(j, [](const std::string& s) { return parse_rat(s); });
}

FpMat fp_mat_from_json(const Json& j) {
    expect_domain(j, "Fp");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    return matrix_from_json<Fp>(
        j, [p](const std::string& s) { return Fp(std::stoull(s), p); });
}

FpPolyMat fp_poly_mat_from_json(const Json& j) {
    expect_domain(j, "Fp[x]");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    return matrix_from_json<FpPoly>(
        j, [p](const std::string& s) { return parse_fp_poly(s, p); });
}

Json to_json(const CycloElement& x) {
    Json j;
    j["p"] = x.p();
    j["level"] = x.level();
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_string(c));
    j["coords"] = std::move(coords);
    return j;
}

CycloElement cyclo_from_json(const Json& j) {
    std::vector<Rat> coords;
    for (const auto& c : j.at("coords")) coords.push_back(parse_rat(c.get<std::string>()));
    return CycloElement(j.at("p").get<std::uint64_t>(), j.at("level").get<unsigned>(),
                        std::move(coords));
}

Json to_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(to_string(c));
    return a;
}

std::vector<Rat> rat_vector_from_json(const Json& j) {
    std::vector<Rat> v;
    for (const auto& c : j) v.push_back(parse_rat(c.get<std::string>()));
    return v;
}

Json family_spec_to_json(const FamilySpec& spec) {
    Json j;
    if (const auto* t1 = std::get_if<Theorem1Spec>(&spec)) {
        j["family"] = "theorem1";
        Json factors = Json::array();
        for (const auto& f : t1->factors) factors.push_back({{"p", f.p}, {"n", f.n}});
        j["factors"] = std::move(factors);
        j["m"] = t1->m;
    } else if (const auto* t2 = std::get_if<Theorem2Spec>(&spec)) {
        j["family"] = "theorem2";
        j["p"] = t2->p;
        j["n"] = t2->n;
        j["ring"] = to_string(t2->ring);
    } else {
        const auto& t3 = std::get<Theorem3Spec>(spec);
        j["family"] = "theorem3";
        j["n"] = t3.n;
    }
    return j;
}

FamilySpec family_spec_from_json(const Json& j) {
    std::string family = j.at("family").get<std::string>();
    if (family == "theorem1") {
        Theorem1Spec s;
        for (const auto& f : j.at("factors"))
            s.factors.push_back({f.at("p").get<std::uint64_t>(), f.at("n").get<unsigned>()});
        s.m = j.at("m").get<unsigned>();
        return s;
    }
    if (family == "theorem2") {
        Theorem2Spec s;
        s.p = j.at("p").get<std::uint64_t>();
        s.n = j.at("n").get<unsigned>();
        if (j.contains("ring")) s.ring = parse_ring_marker(j.at("ring").get<std::string>());
        return s;
    }
    if (family == "theorem3") {
        Theorem3Spec s;
        s.n = j.at("n").get<unsigned>();
        return s;
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

Json group_to_json(const HolonomyGroup& g) {
    Json j;
    switch (g.family()) {
        case GroupFamily::Cyclic: {
            j["family"] = "cyclic";
            Json factors = Json::array();
            for (const auto& f : g.factors()) factors.push_back({{"p", f.p}, {"n", f.n}});
            j["factors"] = std::move(factors);
            break;
        }
        case GroupFamily::BiElementary:
            j["family"] = "bi_elementary";
            j["p"] = g.p();
            break;
        case GroupFamily::Alt4:
            j["family"] = "alt4";
            break;
    }
    j["order"] = g.order();
    return j;
}

Json bundle_to_json(const FamilySpec& spec, const CrysGroup& g, std::uint64_t seed) {
    Json j;
    j["schema"] = "crys-bundle/1";
    j["params"] = family_spec_to_json(spec);
    j["seed"] = seed;
    j["group"] = group_to_json(g.rep().group);
    j["dimension"] = g.dimension();
    j["ring"] = to_string(g.rep().ring);
    Json gens = Json::array();
    for (const auto& [name, img] : g.rep().gen_images)
        gens.push_back({{"name", name}, {"image", to_json(img)}});
    j["representation"] = {{"generators", std::move(gens)}};
    Json vals = Json::array();
    for (const auto& [name, v] : g.cocycle().gen_values)
        vals.push_back({{"name", name}, {"value", to_json(v.coords())}});
    j["cocycle"] = {{"gen_values", std::move(vals)}};
    j["flags"] = {{"coprime_ok", g.rep().prov.coprime_ok},
                  {"nonsplit_witnessed", g.nonsplit_witnessed()}};
    return j;
}

LoadedBundle bundle_from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != "crys-bundle/1")
        throw std::invalid_argument("unsupported bundle schema");
    FamilySpec spec = family_spec_from_json(j.at("params"));
    CrysGroup g = build_crys(spec);

    // the serialized images and cocycle values must match the rebuild
    const auto& gens = j.at("representation").at("generators");
    if (gens.size() != g.rep().gen_images.size())
        throw std::invalid_argument("bundle: generator count mismatch");
    for (const auto& entry : gens) {
        const auto& name = entry.at("name").get<std::string>();
        IntMat img = int_mat_from_json(entry.at("image"));
        if (!(img == g.rep().image_of_generator(name)))
            throw std::invalid_argument("bundle: generator image for '" + name +
                                        "' does not match the family parameters");
    }
    for (const auto& entry : j.at("cocycle").at("gen_values")) {
        const auto& name = entry.at("name").get<std::string>();
        std::vector<Rat> v = rat_vector_from_json(entry.at("value"));
        bool found = false;
        for (const auto& [n, cv] : g.cocycle().gen_values)
            if (n == name) {
                found = true;
                if (!(CosetVector(v) == cv))
                    throw std::invalid_argument("bundle: cocycle value for '" + name +
                                                "' does not match");
            }
        if (!found) throw std::invalid_argument("bundle: unknown cocycle generator " + name);
    }
    std::uint64_t seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
    return LoadedBundle{std::move(spec), std::move(g), seed};
}

Json certificate_to_json(const Certificate& c, const HolonomyGroup& g) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["verdict"] = c.verdict;
    j["checked_against_oracle"] = c.checked_against_oracle;
    if (c.prime) j["p"] = c.prime;
    if (!c.subgroup_checks.empty()) {
        Json checks = Json::array();
        for (const auto& s : c.subgroup_checks) {
            Json sj;
            sj["generator"] = g.format(s.generator);
            sj["order"] = s.prime;
            sj["restriction_is_coboundary"] = s.restriction_is_coboundary;
            if (s.coboundary_witness) sj["coboundary_witness"] = to_json(*s.coboundary_witness);
            if (s.obstruction_divisor)
                sj["obstruction_divisor"] = to_string(*s.obstruction_divisor);
            if (s.oracle_ran) sj["oracle_found_torsion"] = s.oracle_found_torsion;
            checks.push_back(std::move(sj));
        }
        j["subgroup_checks"] = std::move(checks);
    }
    if (c.torsion_witness) {
        j["torsion_witness"] = {{"g", g.format(c.torsion_witness->g)},
                                {"order", c.torsion_witness->order},
                                {"translation", to_json(c.torsion_witness->translation)}};
    }
    if (c.idempotent_witness) j["idempotent"] = to_json(*c.idempotent_witness);
    if (c.radical_dim) j["radical_dim"] = *c.radical_dim;
    if (c.residue_field_degree) j["residue_dim"] = *c.residue_field_degree;
    if (!c.invariant_factors.empty()) j["parameter_invariant_factors"] = c.invariant_factors;
    if (!c.sub_certificates.empty()) {
        Json subs = Json::array();
        for (const auto& s : c.sub_certificates) subs.push_back(certificate_to_json(s, g));
        j["factor_certificates"] = std::move(subs);
    }
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

}  // namespace crys

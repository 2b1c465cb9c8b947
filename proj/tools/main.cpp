// Command-line front end: builds certified group bundles, runs the
// verification checks, renders reports, and drives the randomized
// cross-check suites.
//
// Exit codes: 0 all requested verdicts positive, 1 a check failed,
// 2 invalid parameters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crys/json_io.hpp"
#include "crys/suites.hpp"

namespace {

using namespace crys;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadParams = 2;

std::vector<CyclicFactor> parse_factors(const std::string& s) {
    // "2^3,3^2"
    std::vector<CyclicFactor> factors;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw CLI::ValidationError("--factors", "expected p^n entries, got '" + tok + "'");
        factors.push_back({std::stoull(tok.substr(0, caret)),
                           static_cast<unsigned>(std::stoul(tok.substr(caret + 1)))});
    }
    if (factors.empty()) throw CLI::ValidationError("--factors", "no factors given");
    return factors;
}

void write_output(const Json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << j.dump(2) << "\n";
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

std::size_t expected_dimension(const FamilySpec& spec) {
    if (const auto* t1 = std::get_if<Theorem1Spec>(&spec)) {
        std::size_t order = 1;
        for (const auto& f : t1->factors) order *= f.order();
        return t1->m * order;
    }
    if (const auto* t2 = std::get_if<Theorem2Spec>(&spec))
        return (3 * t2->p - 2) * t2->n + t2->p * t2->p;
    return 12 * std::get<Theorem3Spec>(spec).n;
}

std::uint64_t default_prime(const FamilySpec& spec) {
    if (const auto* t1 = std::get_if<Theorem1Spec>(&spec)) return t1->factors[0].p;
    if (const auto* t2 = std::get_if<Theorem2Spec>(&spec)) return t2->p;
    return 2;
}

struct CheckOutcome {
    std::string name;
    bool passed = false;
    Json detail;
};

int run_verify(const LoadedBundle& bundle, const std::vector<std::string>& checks,
               bool force_oracle, std::uint64_t prime_override, const std::string& out_path,
               std::uint64_t seed) {
    const CrysGroup& g = bundle.group;
    bool oracle_on = force_oracle || g.dimension() <= 60;

    std::vector<CheckOutcome> outcomes;
    for (const auto& name : checks) {
        CheckOutcome o;
        o.name = name;
        if (name == "dimension") {
            std::size_t want = expected_dimension(bundle.spec);
            o.passed = g.dimension() == want;
            o.detail = Json{{"expected", want}, {"actual", g.dimension()}};
        } else if (name == "relations" || name == "faithful") {
            RepReport rep = verify_representation(g.rep());
            o.passed = name == "relations" ? rep.relations_ok && rep.unit_determinants
                                           : rep.faithful;
            o.detail = Json{{"relations_ok", rep.relations_ok},
                            {"faithful", rep.faithful},
                            {"unit_determinants", rep.unit_determinants}};
        } else if (name == "cocycle") {
            Certificate c = certify_cocycle_valid(g.cocycle());
            o.passed = c.verdict;
            o.detail = certificate_to_json(c, g.rep().group);
        } else if (name == "torsionfree") {
            Certificate c = certify_torsionfree(g.cocycle(), oracle_on);
            o.passed = c.verdict;
            o.detail = certificate_to_json(c, g.rep().group);
        } else if (name == "indecomposable") {
            std::uint64_t p = prime_override ? prime_override : default_prime(bundle.spec);
            Certificate c = certify_indecomposable(g.rep(), p);
            o.passed = c.kind == CertKind::Indecomposable && c.verdict;
            o.detail = certificate_to_json(c, g.rep().group);
        } else {
            throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
        }
        outcomes.push_back(std::move(o));
    }

    Json j;
    j["schema"] = "crys-certificates/1";
    j["bundle"] = family_spec_to_json(bundle.spec);
    j["dimension"] = g.dimension();
    j["seed"] = seed;
    j["oracle_enabled"] = oracle_on;
    bool all = true;
    Json arr = Json::array();
    for (const auto& o : outcomes) {
        arr.push_back({{"check", o.name}, {"passed", o.passed}, {"detail", o.detail}});
        all = all && o.passed;
    }
    j["checks"] = std::move(arr);
    j["all_passed"] = all;
    write_output(j, out_path);
    return all ? kExitOk : kExitCheckFailed;
}

int run_report(const Json& certs) {
    std::cout << "bundle: " << certs.at("bundle").dump() << "\n";
    std::cout << "dimension: " << certs.at("dimension") << "\n\n";
    std::cout << "  check            verdict  summary\n";
    std::cout << "  ---------------  -------  -------------------------------\n";
    for (const auto& c : certs.at("checks")) {
        std::string name = c.at("check").get<std::string>();
        bool ok = c.at("passed").get<bool>();
        std::string summary;
        const auto& detail = c.at("detail");
        if (detail.is_object() && detail.contains("notes") && !detail.at("notes").empty())
            summary = detail.at("notes")[0].get<std::string>();
        else if (detail.is_object() && detail.contains("subgroup_checks"))
            summary = std::to_string(detail.at("subgroup_checks").size()) +
                      " prime-order subgroups checked";
        printf("  %-15s  %-7s  %s\n", name.c_str(), ok ? "pass" : "FAIL", summary.c_str());
    }
    std::cout << "\nall passed: " << (certs.at("all_passed").get<bool>() ? "yes" : "no") << "\n";
    return certs.at("all_passed").get<bool>() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for generalized crystallographic groups"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a certified bundle and write JSON");
    std::string family, factors_str = "2^3", out_path;
    std::uint64_t p = 3, seed = 0;
    unsigned n = 0, m = 1;
    std::string ring = "Z";
    build->add_option("--family", family, "theorem1 | theorem2 | theorem3")->required();
    build->add_option("--factors", factors_str, "cyclic factors, e.g. 2^3,3^2 (theorem1)");
    build->add_option("--m", m, "multiplicity parameter (theorem1)");
    build->add_option("--p", p, "odd prime (theorem2)");
    build->add_option("--n", n, "layer count (theorem2) / block count (theorem3)");
    build->add_option("--ring", ring, "Z | Z_(p) | Z_p (theorem2 bookkeeping)");
    build->add_option("--seed", seed, "seed recorded in the output");
    build->add_option("--out,-o", out_path, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run certificate checks on a bundle");
    std::string bundle_path;
    std::string checks_str = "dimension,relations,faithful,cocycle,torsionfree,indecomposable";
    std::string verify_out;
    bool force_oracle = false;
    std::uint64_t prime_override = 0, verify_seed = 0;
    verify->add_option("bundle", bundle_path, "bundle JSON file")->required();
    verify->add_option("--checks", checks_str, "comma-separated check list");
    verify->add_flag("--force-oracle", force_oracle,
                     "run oracle cross-checks even for large bundles (degree > 60)");
    verify->add_option("--prime", prime_override, "prime for the indecomposability certificate");
    verify->add_option("--seed", verify_seed, "seed recorded in the output");
    verify->add_option("--out,-o", verify_out, "certificate output path (default stdout)");

    // report
    auto* report = app.add_subcommand("report", "render a certificate file as text");
    std::string report_path;
    report->add_option("certs", report_path, "certificate JSON file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "run randomized cross-check suites");
    std::string suite = "all", oracle_out;
    std::uint64_t oracle_seed = 20240601;
    unsigned count = 100;
    oracle->add_option("--suite", suite, "coboundary | identities | all");
    oracle->add_option("--seed", oracle_seed, "random seed");
    oracle->add_option("--count", count, "randomized trials per group");
    oracle->add_option("--out,-o", oracle_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            FamilySpec spec;
            if (family == "theorem1") {
                spec = Theorem1Spec{parse_factors(factors_str), m};
            } else if (family == "theorem2") {
                spec = Theorem2Spec{p, n, parse_ring_marker(ring)};
            } else if (family == "theorem3") {
                if (n < 1) {
                    std::cerr << "error: family theorem3 requires n >= 1\n";
                    return kExitBadParams;
                }
                spec = Theorem3Spec{n};
            } else {
                std::cerr << "error: unknown family '" << family << "'\n";
                return kExitBadParams;
            }
            CrysGroup g = build_crys(spec);
            write_output(bundle_to_json(spec, g, seed), out_path);
            return kExitOk;
        }
        if (*verify) {
            LoadedBundle bundle = bundle_from_json(load_json(bundle_path));
            std::vector<std::string> checks;
            std::stringstream ss(checks_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) checks.push_back(tok);
            return run_verify(bundle, checks, force_oracle, prime_override, verify_out,
                              verify_seed);
        }
        if (*report) return run_report(load_json(report_path));
        if (*oracle) {
            std::vector<SuiteResult> results;
            if (suite == "coboundary" || suite == "all") {
                auto r = coboundary_agreement_suite(oracle_seed, count);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (suite == "identities" || suite == "all") {
                auto r = identity_suite(oracle_seed);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (results.empty()) {
                std::cerr << "error: unknown suite '" << suite << "'\n";
                return kExitBadParams;
            }
            Json j;
            j["schema"] = "crys-oracle/1";
            j["seed"] = oracle_seed;
            j["count"] = count;
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                all = all && r.passed;
            }
            j["results"] = std::move(arr);
            j["all_passed"] = all;
            write_output(j, oracle_out);
            return all ? kExitOk : kExitCheckFailed;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const CocycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitBadParams;
}

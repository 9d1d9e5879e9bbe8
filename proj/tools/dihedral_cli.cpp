// Command-line front end: generation, verification and export.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exhausted.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/suites.hpp"

using namespace dihedral;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long budget_override(long fallback) {
    const char* env = std::getenv("DIHEDRAL_BUDGET");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw UsageError("DIHEDRAL_BUDGET must be a positive integer");
    return v;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

// System spec: [theta:]kind[/algebra]/m with kind in wti, sti, km, bk, a1.
struct SystemSpec {
    std::string kind;
    std::string algebra = "At";
    int m = 3;
    bool theta = false;
    std::string str() const {
        return (theta ? "theta:" : "") + kind + (kind == "km" ? "/" + algebra : "") + "/" + std::to_string(m);
    }
};

SystemSpec parse_spec(std::string text) {
    SystemSpec s;
    if (text.rfind("theta:", 0) == 0) {
        s.theta = true;
        text = text.substr(6);
    }
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, '/');) parts.push_back(p);
    if (parts.size() < 2) throw UsageError("system spec must look like wti/3, km/At/3 or theta:bk/3");
    s.kind = parts[0];
    if (s.kind == "km") {
        if (parts.size() != 3) throw UsageError("km spec needs an algebra: km/At/3");
        s.algebra = parts[1];
    } else if (parts.size() != 2) {
        throw UsageError("unexpected fields in system spec " + text);
    }
    try {
        s.m = std::stoi(parts.back());
    } catch (const std::exception&) {
        throw UsageError("bad slot count in system spec " + text);
    }
    return s;
}

InequalitySystem make_system(int n, const SystemSpec& s) {
    auto sys = [&]() -> InequalitySystem {
        if (s.kind == "wti") return gen_wti(n, s.m);
        if (s.kind == "sti") return gen_sti(n, s.m, budget_override(2000000));
        if (s.kind == "bk") return gen_bk(n, s.m);
        if (s.kind == "a1") {
            if (n != 2) throw UsageError("a1 is the n = 2 oracle");
            return gen_a1_product(s.m);
        }
        if (s.kind == "km") {
            auto alg = parse_km_algebra(s.algebra);
            if (!alg) throw UsageError("unknown algebra " + s.algebra + " (At, grAt, B1, B2, grB1, grB2, B, grB)");
            return gen_km(n, *alg, s.m);
        }
        throw UsageError("unknown system " + s.kind + " (wti, sti, km, bk, a1)");
    }();
    return s.theta ? theta_system(sys) : sys;
}

std::string field_name(int n) { return make_cyclotomic_field(n)->describe(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dihedral Schubert calculus, stability cones and building models"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("-o,--output", out_path, "Output file (default: stdout)");

    int n = 3, m = 3, side = 0, stages = 2, tuple = 0, vertex = -1;
    std::uint64_t seed = 1;
    long cap = 400;
    std::string algebra = "at", system = "wti", km_alg = "At", format = "json", point_file, a_spec, b_spec, graph_file,
                config_file, suite;
    bool theta = false;

    auto* mt = app.add_subcommand("mult-table", "Multiplication table of A_t, gr, the tau limit or B^(i)");
    mt->add_option("--n", n, "Dihedral order n")->required()->check(CLI::Range(2, 64));
    mt->add_option("--algebra", algebra, "at | gr | limit | bi")->check(CLI::IsMember({"at", "gr", "limit", "bi"}));
    mt->add_option("--side", side, "0 for the full weighting, i for side i")->check(CLI::Range(0, 2));

    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", system, "wti | sti | km | bk | a1")->check(CLI::IsMember({"wti", "sti", "km", "bk", "a1"}));
        sub->add_option("--n", n, "Dihedral order n")->required()->check(CLI::Range(2, 64));
        sub->add_option("--m", m, "Number of weights (km/bk: m + 1 slots)")->check(CLI::Range(2, 12));
        sub->add_option("--algebra", km_alg, "Algebra for km: At, grAt, B1, B2, grB1, grB2, B, grB");
        sub->add_flag("--theta", theta, "Apply Theta to the system");
    };
    auto* cone = app.add_subcommand("cone", "Generate an inequality system");
    add_system(cone);
    cone->add_option("--out", format, "json | latex")->check(CLI::IsMember({"json", "latex"}));
    auto* member = app.add_subcommand("member", "Membership of a point");
    add_system(member);
    member->add_option("--point", point_file, "JSON file {\"point\": [[a, b], ...]}")->required();
    auto* audit = app.add_subcommand("audit", "Redundancy certificates for every inequality");
    add_system(audit);
    auto* equal = app.add_subcommand("equal", "Cone equality by LP mutual implication");
    equal->add_option("--n", n, "Dihedral order n")->required()->check(CLI::Range(2, 64));
    equal->add_option("--a", a_spec, "System spec, e.g. wti/3 or theta:km/At/3")->required();
    equal->add_option("--b", b_spec, "System spec")->required();
    auto* build = app.add_subcommand("build", "Seeded free construction with metrics");
    build->add_option("--n", n, "Dihedral order n")->required()->check(CLI::Range(2, 32));
    build->add_option("--stages", stages, "Number of bar steps")->check(CLI::Range(0, 64));
    build->add_option("--seed", seed, "Random seed");
    build->add_option("--cap", cap, "Pair budget per bar step");
    build->add_option("--tuple", tuple, "Also produce m pairwise antipodal chambers")->check(CLI::Range(0, 16));
    auto* slope = app.add_subcommand("slope", "Slope of a weighted configuration");
    slope->add_option("--graph", graph_file, "Graph JSON from build")->required();
    slope->add_option("--config", config_file, "JSON {\"chambers\": [[u, v], ...], \"weights\": [[a, b], ...]}")->required();
    slope->add_option("--vertex", vertex, "Vertex (default: minimum over all vertices)");
    auto* verify = app.add_subcommand("verify", "Run a named acceptance suite");
    verify->add_option("suite", suite, "Suite name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        auto flag_spec = [&]() {
            SystemSpec s;
            s.kind = system;
            s.algebra = km_alg;
            s.m = m;
            s.theta = theta;
            return s;
        };

        if (*mt) {
            Json params{{"n", n}, {"algebra", algebra}, {"side", side}};
            auto payload = mult_table(n, algebra, side);
            emit(canonical_dump(with_manifest(make_manifest("mult-table", params, 0, field_name(n)), "table", payload)), out_path);
            return 0;
        }
        if (*cone) {
            auto spec = flag_spec();
            auto sys = make_system(n, spec);
            Json params{{"n", n}, {"system", spec.str()}, {"out", format}};
            auto man = make_manifest("cone", params, 0, field_name(n));
            if (format == "latex") {
                auto text = system_to_latex(sys);
                man.digests["latex"] = sha256_hex(text);
                std::string header;
                std::istringstream lines(canonical_dump(to_json(man)));
                for (std::string line; std::getline(lines, line);) header += "% " + line + "\n";
                emit(header + text, out_path);
            } else {
                emit(canonical_dump(with_manifest(man, "system", to_json(sys))), out_path);
            }
            return 0;
        }
        if (*member) {
            auto spec = flag_spec();
            auto p = cone_point_from_json(read_json(point_file));
            auto sys = make_system(n, spec);
            if (static_cast<int>(p.size()) != sys.slots())
                throw UsageError("point has " + std::to_string(p.size()) + " slots, system has " + std::to_string(sys.slots()));
            auto res = is_member(sys, p);
            Json payload{{"member", res.member}};
            if (!res.member) {
                payload["first_violation"] = tag_string(sys.inequalities()[res.first_violation].tag);
                payload["value"] = to_json(res.value);
            }
            Json params{{"n", n}, {"system", spec.str()}, {"point", point_file}};
            std::cerr << (res.member ? "member" : "non-member") << "\n";
            emit(canonical_dump(with_manifest(make_manifest("member", params, 0, field_name(n)), "membership", payload)), out_path);
            return 0;
        }
        if (*audit) {
            auto spec = flag_spec();
            auto sys = make_system(n, spec);
            auto rep = redundancy_audit(sys);
            Json params{{"n", n}, {"system", spec.str()}};
            emit(canonical_dump(with_manifest(make_manifest("audit", params, 0, field_name(n)), "audit", to_json(rep))), out_path);
            if (!rep.all_facets) {
                for (const auto& c : rep.rows)
                    if (c.status != RowStatus::Facet) {
                        std::cerr << "redundant: " << tag_string(c.tag) << "\n";
                        break;
                    }
                return kVerifyFailed;
            }
            return 0;
        }
        if (*equal) {
            auto sa = parse_spec(a_spec), sb = parse_spec(b_spec);
            auto rep = cone_equal(make_system(n, sa), make_system(n, sb));
            Json params{{"n", n}, {"a", sa.str()}, {"b", sb.str()}};
            emit(canonical_dump(with_manifest(make_manifest("equal", params, 0, field_name(n)), "equality", to_json(rep))), out_path);
            if (!rep.equal) {
                std::cerr << "not equal: " << rep.first_failure << "\n";
                return kVerifyFailed;
            }
            return 0;
        }
        if (*build) {
            long c = budget_override(cap);
            auto g = ChamberGraph::apartment(n, seed);
            Json steps = Json::array();
            for (int s = 0; s < stages; ++s) {
                auto rep = bar_step(g, c);
                steps.push_back(Json{{"p_pairs", rep.p_pairs}, {"q_pairs", rep.q_pairs}, {"processed", rep.processed},
                                     {"unprocessed", rep.unprocessed}});
            }
            Json payload;
            if (tuple > 0) {
                auto cs = find_antipodal_tuple(g, tuple);
                Json arr = Json::array();
                for (const auto& ch : cs) arr.push_back(Json::array({ch.first, ch.second}));
                payload["chambers"] = arr;
            }
            payload["steps"] = steps;
            payload["metrics"] = to_json(graph_metrics(g));
            payload["graph"] = to_json(g);
            Json params{{"n", n}, {"stages", stages}, {"cap", c}, {"tuple", tuple}};
            emit(canonical_dump(with_manifest(make_manifest("build", params, seed, field_name(n)), "build", payload)), out_path);
            return 0;
        }
        if (*slope) {
            auto gj = read_json(graph_file);
            if (gj.contains("build")) gj = gj["build"]["graph"];
            auto g = graph_from_json(gj);
            auto cfg = config_from_json(read_json(config_file));
            auto ctx = dihedral_context(g.n());
            Json payload{{"config", to_json(cfg)}};
            if (vertex >= 0) {
                payload["vertex"] = vertex;
                payload["slope"] = to_json(slope_at(g, *ctx, cfg, vertex));
            } else {
                auto scan = min_slope_scan(g, *ctx, cfg);
                payload["vertex"] = scan.vertex;
                payload["slope"] = to_json(scan.value);
                payload["scanned"] = scan.scanned;
                payload["nonnegative"] = sign_of(scan.value) >= 0;
            }
            Json params{{"graph", graph_file}, {"config", config_file}, {"vertex", vertex}};
            emit(canonical_dump(with_manifest(make_manifest("slope", params, g.seed(), field_name(g.n())), "slope", payload)), out_path);
            return 0;
        }
        if (*verify) {
            if (!is_suite(suite)) {
                std::string names;
                for (const auto& s : suite_names()) names += " " + s;
                throw UsageError("unknown suite " + suite + "; available:" + names);
            }
            auto r = run_suite(suite);
            Json payload{{"criterion", r.criterion}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"artifact", r.artifact}};
            emit(canonical_dump(with_manifest(make_manifest("verify", Json{{"suite", suite}}, 0, "per suite"), "result", payload)), out_path);
            std::cerr << suite << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
            return r.pass ? 0 : kVerifyFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::CapExceeded) return kBudget;
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

#include "dihedral/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

#include "dihedral/errors.hpp"

namespace dihedral {

Json to_json(const FieldElement& e) {
    Json out = Json::array();
    for (const auto& s : e.to_strings()) out.push_back(s);
    return out;
}

FieldElement field_element_from_json(const Field& f, const Json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) > f->degree()) fail(ErrorKind::InvalidParameter, "bad field element");
    std::vector<Rational> c(f->degree(), Rational(0));
    for (std::size_t k = 0; k < j.size(); ++k) c[k] = parse_rational(j[k].get<std::string>());
    return FieldElement(f.get(), std::move(c));
}

Json to_json(const Field& f) {
    Json out;
    out["mode"] = f->cyclotomic() ? "cyclotomic" : "hyperbolic";
    if (f->cyclotomic()) out["n"] = f->n();
    else out["t"] = rational_string(f->t());
    Json poly = Json::array();
    for (const auto& c : f->min_poly()) poly.push_back(c.get_str());
    out["min_poly"] = poly;
    out["describe"] = f->describe();
    return out;
}

Json to_json(const WeylElement& w) { return to_string(w); }

Json to_json(const InequalityTag& t) {
    Json out;
    out["system"] = t.system;
    if (!t.algebra.empty()) out["algebra"] = t.algebra;
    out["l"] = t.l;
    if (t.slot_i >= 0) out["slots"] = Json::array({t.slot_i + 1, t.slot_j + 1});
    Json tuple = Json::array();
    for (const auto& w : t.tuple) tuple.push_back(to_json(w));
    out["tuple"] = tuple;
    return out;
}

Json to_json(const InequalitySystem& sys) {
    Json out;
    out["n"] = sys.n();
    out["slots"] = sys.slots();
    out["field"] = to_json(sys.context().field);
    out["convention"] = "sum_s a_s row[2s] + b_s row[2s+1] <= 0 for lambda_s = a_s zeta_1 + b_s zeta_2";
    out["count"] = sys.size();
    Json rows = Json::array();
    for (const auto& q : sys.inequalities()) {
        Json r;
        r["tag"] = to_json(q.tag);
        Json row = Json::array();
        for (const auto& e : q.row) row.push_back(to_json(e));
        r["row"] = row;
        rows.push_back(r);
    }
    out["inequalities"] = rows;
    return out;
}

namespace {

Json certificate_json(const RowCertificate& c) {
    Json out;
    out["index"] = c.index;
    out["tag"] = tag_string(c.tag);
    out["status"] = row_status_name(c.status);
    out["optimum"] = to_json(c.optimum);
    if (!c.witness.empty()) {
        Json w = Json::array();
        for (const auto& e : c.witness) w.push_back(to_json(e));
        out["witness"] = w;
    }
    return out;
}

}  // namespace

Json to_json(const RedundancyReport& rep) {
    Json out;
    out["all_facets"] = rep.all_facets;
    out["lps"] = rep.lps;
    Json rows = Json::array();
    for (const auto& c : rep.rows) rows.push_back(certificate_json(c));
    out["rows"] = rows;
    return out;
}

Json to_json(const ConeEqualReport& rep) {
    Json out;
    out["equal"] = rep.equal;
    out["lps"] = rep.lps;
    out["memo_hits"] = rep.memo_hits;
    if (!rep.first_failure.empty()) out["first_failure"] = rep.first_failure;
    Json ab = Json::array(), ba = Json::array();
    for (const auto& c : rep.a_in_b) ab.push_back(certificate_json(c));
    for (const auto& c : rep.b_in_a) ba.push_back(certificate_json(c));
    out["a_in_b"] = ab;
    out["b_in_a"] = ba;
    return out;
}

Json to_json(const ChamberGraph& g) {
    Json out;
    out["n"] = g.n();
    out["seed"] = g.seed();
    Json vs = Json::array();
    for (int v = 0; v < g.size(); ++v) vs.push_back(Json{{"id", v}, {"type", g.type(v)}});
    out["vertices"] = vs;
    Json es = Json::array();
    for (auto [a, b] : g.edges()) es.push_back(Json::array({a, b}));
    out["edges"] = es;
    out["log"] = g.log();
    return out;
}

Json to_json(const GraphMetrics& m) {
    auto inf = [](int v) { return v == ChamberGraph::kInfinite ? Json("inf") : Json(v); };
    Json out;
    out["vertices"] = m.vertices;
    out["edges"] = m.edges;
    out["girth"] = inf(m.girth);
    out["diameter"] = inf(m.diameter);
    out["connected"] = m.connected;
    out["min_valence"] = m.min_valence;
    out["max_valence"] = m.max_valence;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", m.mean_valence);
    out["mean_valence"] = buf;
    return out;
}

Json to_json(const CensusReport& rep) {
    Json out;
    out["pass"] = rep.pass;
    out["rounds"] = rep.rounds;
    out["girth_ok"] = rep.girth_ok;
    out["l2_checks"] = rep.l2_checks;
    out["uncompared"] = rep.uncompared;
    out["uncompared_nonempty"] = rep.uncompared_nonempty;
    out["apartment_paths"] = rep.apartment_paths;
    out["final_vertices"] = rep.final_vertices;
    if (!rep.first_failure.empty()) out["first_failure"] = rep.first_failure;
    return out;
}

Json to_json(const WeightedConfiguration& c) {
    Json out;
    Json cs = Json::array(), ws = Json::array();
    for (const auto& ch : c.chambers) cs.push_back(Json::array({ch.first, ch.second}));
    for (const auto& w : c.weights) ws.push_back(Json::array({rational_string(w.a), rational_string(w.b)}));
    out["chambers"] = cs;
    out["weights"] = ws;
    return out;
}

std::string census_to_csv(const CensusReport& rep) {
    std::ostringstream os;
    os << "radii,type,counts,observed,expected,compared\n";
    for (const auto& row : rep.rows) {
        std::string r, c;
        for (std::size_t k = 0; k < row.radii.size(); ++k) r += (k ? " " : "") + std::to_string(row.radii[k]);
        for (std::size_t k = 0; k < row.counts.size(); ++k) c += (k ? " " : "") + std::to_string(row.counts[k]);
        os << r << "," << row.l << "," << c << "," << census_class_name(row.observed) << ","
           << (row.compared ? census_class_name(row.expected) : "") << "," << (row.compared ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string system_to_latex(const InequalitySystem& sys) {
    std::ostringstream os;
    os << "% " << sys.size() << " inequalities, n = " << sys.n() << ", theta = 2cos(pi/" << 2 * sys.n() << ")\n";
    os << "\\begin{align*}\n";
    for (const auto& q : sys.inequalities()) {
        std::string lhs;
        for (int s = 0; s < sys.slots(); ++s)
            for (int k = 0; k < 2; ++k) {
                const auto& e = q.row[2 * s + k];
                if (e.is_zero()) continue;
                if (!lhs.empty()) lhs += " + ";
                lhs += "(" + e.str() + ")\\," + (k == 0 ? "a_{" : "b_{") + std::to_string(s + 1) + "}";
            }
        if (lhs.empty()) lhs = "0";
        os << "  " << lhs << " &\\le 0 && \\text{" << tag_string(q.tag) << "} \\\\\n";
    }
    os << "\\end{align*}\n";
    return os.str();
}

ConePoint cone_point_from_json(const Json& j) {
    const Json& arr = j.is_object() ? j.at("point") : j;
    ConePoint p;
    for (const auto& slot : arr) {
        if (!slot.is_array() || slot.size() != 2) fail(ErrorKind::InvalidParameter, "each slot is a pair [a, b]");
        auto val = [](const Json& x) { return x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()); };
        p.push_back({val(slot[0]), val(slot[1])});
    }
    return p;
}

ChamberGraph graph_from_json(const Json& j) {
    ChamberGraph g(j.at("n").get<int>(), j.value("seed", std::uint64_t{0}));
    const auto& vs = j.at("vertices");
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (vs[k].at("id").get<std::size_t>() != k) fail(ErrorKind::InvalidParameter, "vertex ids must be 0, 1, 2, ...");
        g.add_vertex(vs[k].at("type").get<int>(), "import");
    }
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("log"))
        for (const auto& entry : j["log"]) g.note(entry.get<std::string>());
    return g;
}

WeightedConfiguration config_from_json(const Json& j) {
    WeightedConfiguration c;
    for (const auto& ch : j.at("chambers")) c.chambers.emplace_back(ch.at(0).get<int>(), ch.at(1).get<int>());
    c.weights = cone_point_from_json(j.at("weights"));
    return c;
}

namespace {

Json terms_json(const std::vector<Term>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) out.push_back(Json{{"w", to_json(t.w)}, {"c", to_json(t.c)}});
    return out;
}

}  // namespace

Json mult_table(int n, const std::string& algebra, int side) {
    if (side < 0 || side > 2) fail(ErrorKind::InvalidParameter, "side must be 0, 1 or 2");
    auto f = make_cyclotomic_field(n);
    UniversalAlgebra alg(f);
    const auto& g = alg.group();
    Json out;
    out["n"] = n;
    out["algebra"] = algebra;
    out["field"] = to_json(f);
    Json entries = Json::array();
    if (algebra == "at" || algebra == "bi") {
        if (algebra == "bi" && side == 0) fail(ErrorKind::InvalidParameter, "bi needs --side 1 or 2");
        auto basis = algebra == "at" ? g.elements() : alg.B_basis(side);
        for (const auto& u : basis)
            for (const auto& v : basis)
                entries.push_back(Json{{"u", to_json(u)}, {"v", to_json(v)}, {"terms", terms_json(alg.mul_basis(u, v))}});
    } else if (algebra == "gr") {
        auto phi = make_weighting(alg, side);
        auto basis = side == 0 ? g.elements() : alg.B_basis(side);
        for (const auto& u : basis)
            for (const auto& v : basis)
                entries.push_back(Json{{"u", to_json(u)}, {"v", to_json(v)}, {"terms", terms_json(gr_mul(alg, phi, u, v))}});
    } else if (algebra == "limit") {
        auto phi = make_weighting(alg, side);
        auto tab = limit_prering(alg, phi);
        for (std::size_t a = 0; a < tab.basis.size(); ++a)
            for (std::size_t b = 0; b < tab.basis.size(); ++b) {
                Json terms = Json::array();
                for (std::size_t c = 0; c < tab.basis.size(); ++c)
                    if (!tab.entry[a][b][c].is_zero())
                        terms.push_back(Json{{"w", to_json(tab.basis[c])}, {"c", tab.entry[a][b][c].str()}});
                entries.push_back(Json{{"u", to_json(tab.basis[a])}, {"v", to_json(tab.basis[b])}, {"terms", terms}});
            }
    } else {
        fail(ErrorKind::InvalidParameter, "algebra must be at, gr, limit or bi");
    }
    if (algebra != "at") out["side"] = side;
    out["entries"] = entries;
    return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

RunManifest make_manifest(const std::string& command, Json parameters, std::uint64_t seed, const std::string& field) {
    RunManifest m;
    m.command = command;
    m.parameters = std::move(parameters);
    m.seed = seed;
    m.field = field;
#if defined(__clang__)
    m.toolchain = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    m.toolchain = std::string("gcc ") + __VERSION__;
#else
    m.toolchain = "unknown";
#endif
    m.toolchain += ", C++" + std::to_string(__cplusplus / 100 % 100);
    return m;
}

Json to_json(const RunManifest& m) {
    Json out;
    out["command"] = m.command;
    out["parameters"] = m.parameters;
    out["seed"] = m.seed;
    out["field"] = m.field;
    out["toolchain"] = m.toolchain;
    out["digests"] = m.digests;
    return out;
}

Json with_manifest(RunManifest m, const std::string& name, const Json& payload) {
    m.digests[name] = sha256_hex(canonical_dump(payload));
    Json out;
    out["manifest"] = to_json(m);
    out[name] = payload;
    return out;
}

}  // namespace dihedral

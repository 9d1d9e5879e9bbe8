#include "dihedral/suites.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "dihedral/errors.hpp"

namespace dihedral {

namespace {

struct Outcome {
    bool pass = true;
    std::string failure;
    void check(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            failure = what;
        }
    }
};

std::string nm(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

SuiteResult start(int criterion, const std::string& name) {
    SuiteResult r;
    r.criterion = criterion;
    r.name = name;
    return r;
}

SuiteResult finish(SuiteResult r, const Outcome& o, const std::string& summary) {
    r.pass = o.pass;
    r.detail = o.pass ? summary : o.failure;
    return r;
}

// 1. Chevalley isomorphism for the supported Cartan pairs.
SuiteResult suite_chevalley() {
    SuiteResult r = start(1, "chevalley");
    Outcome o;
    long checks = 0;
    Json cases = Json::array();
    const std::vector<std::pair<int, int>> pairs{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {2, 2}};
    for (auto [a12, a21] : pairs) {
        KacMoodyRing km(a12, a21, 8);
        auto [c1, c2] = default_iso_scalars(km);
        auto rep = iso_check(km, c1, c2);
        checks += rep.checks;
        std::string name = "(" + std::to_string(a12) + "," + std::to_string(a21) + ")";
        o.check(rep.pass, "Cartan " + name + ": " + rep.counterexample);
        cases.push_back(Json{{"cartan", name}, {"field", km.field()->describe()}, {"checks", rep.checks}, {"pass", rep.pass}});
    }
    r.artifact["cases"] = cases;
    return finish(r, o, std::to_string(pairs.size()) + " Cartan pairs, " + std::to_string(checks) + " exact checks");
}

// 2. A_t laws for n <= 8.
SuiteResult suite_algebra() {
    SuiteResult r = start(2, "algebra");
    Outcome o;
    long checks = 0;
    Json cases = Json::array();
    for (int n = 2; n <= 8 && o.pass; ++n) {
        auto f = make_cyclotomic_field(n);
        UniversalAlgebra alg(f);
        const auto& g = alg.group();
        const auto& tab = alg.numbers();
        const std::string at = "n=" + std::to_string(n) + " ";
        for (const auto& u : g.elements())
            for (const auto& v : g.elements()) {
                auto uv = alg.mul(alg.basis(u), alg.basis(v));
                o.check(vector_equal(uv, alg.mul(alg.basis(v), alg.basis(u))), at + "commutativity at " + to_string(u) + "," + to_string(v));
                for (const auto& t : alg.mul_basis(u, v))
                    o.check(sign_of(t.c) > 0 && t.w.len == u.len + v.len, at + "positivity at " + to_string(u) + "," + to_string(v));
                for (const auto& w : g.elements()) {
                    o.check(vector_equal(alg.mul(uv, alg.basis(w)), alg.mul(alg.basis(u), alg.mul(alg.basis(v), alg.basis(w)))),
                            at + "associativity at " + to_string(u) + "," + to_string(v) + "," + to_string(w));
                    ++checks;
                }
            }
        auto sig = [&](int i, int k) { return alg.basis(g.make(k, i)); };
        for (int i = 1; i <= 2; ++i)
            for (int k = 1; k < n; ++k)
                for (int l = 1; k + l < n; ++l) {
                    o.check(vector_equal(alg.mul(sig(i, k), sig(i, l)), vector_scale(sig(i, k + l), tab.binomial(k + l, k))),
                            at + "divided power");
                    ++checks;
                }
        auto s1 = sig(1, 1), s2 = sig(2, 1);
        o.check(vector_equal(vector_scale(alg.mul(s1, s2), two_t(f)), vector_add(alg.mul(s1, s1), alg.mul(s2, s2))),
                at + "quadratic relation");
        for (int k = 1; k < n; ++k)
            o.check(vector_equal(alg.mul(sig(1, k), sig(2, n - k)), alg.basis(g.longest())), at + "top pairing");
        cases.push_back(Json{{"n", n}, {"table_sha256", sha256_hex(canonical_dump(mult_table(n, "at", 0)))}});
    }
    r.artifact["cases"] = cases;
    return finish(r, o, "n=2..8, " + std::to_string(checks) + " exact identities");
}

// 3. Concavity of phi, phi_i with the equality sets, superadditivity of F and G.
SuiteResult suite_concavity() {
    SuiteResult r = start(3, "concavity");
    Outcome o;
    long checks = 0;
    Json cases = Json::array();
    for (int n = 2; n <= 12; ++n) {
        auto f = make_cyclotomic_field(n);
        UniversalAlgebra alg(f);
        Json c{{"n", n}};
        for (int side = 0; side <= 2; ++side) {
            auto rep = concavity_audit(alg, make_weighting(alg, side));
            checks += rep.checked;
            o.check(rep.concave && rep.equality_matches,
                    "n=" + std::to_string(n) + " side=" + std::to_string(side) + ": " + rep.first_failure);
            c["equality_set_side" + std::to_string(side)] = rep.equality_set.size();
        }
        auto sup = superadditivity_audit(f);
        checks += sup.checked;
        o.check(sup.pass, "n=" + std::to_string(n) + " superadditivity: " + sup.first_failure);
        cases.push_back(c);
    }
    r.artifact["cases"] = cases;
    return finish(r, o, "n=2..12, " + std::to_string(checks) + " inequalities checked");
}

// 4. tau -> infinity limits against the pre-rings.
SuiteResult suite_limits() {
    SuiteResult r = start(4, "limits");
    Outcome o;
    long checks = 0;
    Json cases = Json::array();
    for (int n = 2; n <= 12; ++n) {
        auto f = make_cyclotomic_field(n);
        UniversalAlgebra alg(f);
        for (int side = 0; side <= 2; ++side) {
            auto tab = limit_prering(alg, make_weighting(alg, side));
            auto rep = limit_isomorphism_check(alg, tab);
            checks += rep.checked;
            o.check(rep.pass, "n=" + std::to_string(n) + " side=" + std::to_string(side) + ": " + rep.first_failure);
        }
        cases.push_back(Json{{"n", n}, {"table_sha256", sha256_hex(canonical_dump(mult_table(n, "limit", 0)))}});
    }
    r.artifact["cases"] = cases;
    return finish(r, o, "n=2..12, all sides, " + std::to_string(checks) + " entries");
}

// 5. WTI = STI and Theta(K_m(A)) = K_{m+1} for A in {A_t, gr A_t, B, BK}.
SuiteResult suite_cones() {
    SuiteResult r = start(5, "cones");
    Outcome o;
    long lps = 0;
    Json cases = Json::array();
    for (int n = 2; n <= 6; ++n)
        for (int m = 3; m <= 4; ++m) {
            auto wti = gen_wti(n, m);
            auto wti1 = gen_wti(n, m + 1);
            Json c{{"n", n}, {"m", m}, {"wti", wti.size()}};
            auto eq = cone_equal(wti, gen_sti(n, m));
            lps += eq.lps;
            o.check(eq.equal, nm(n, m) + " WTI vs STI: " + eq.first_failure);
            c["wti_sti_sha256"] = sha256_hex(canonical_dump(to_json(eq)));
            for (auto alg : {KmAlgebra::At, KmAlgebra::GrAt, KmAlgebra::B}) {
                auto km = gen_km(n, alg, m);
                auto e = cone_equal(theta_system(km), wti1);
                lps += e.lps;
                o.check(e.equal, nm(n, m) + " Theta(K_m(" + km_algebra_name(alg) + ")) vs K_{m+1}: " + e.first_failure);
                c[std::string("km_") + km_algebra_name(alg)] = km.size();
                c[std::string("km_") + km_algebra_name(alg) + "_sha256"] = sha256_hex(canonical_dump(to_json(e)));
            }
            auto e = cone_equal(theta_system(gen_bk(n, m)), wti1);
            lps += e.lps;
            o.check(e.equal, nm(n, m) + " Theta(BK) vs K_{m+1}: " + e.first_failure);
            cases.push_back(c);
        }
    r.artifact["cases"] = cases;
    return finish(r, o, "n=2..6, m=3..4, " + std::to_string(lps) + " certified LPs");
}

// 6. Every WTI inequality is facet-defining.
SuiteResult suite_irredundancy() {
    SuiteResult r = start(6, "irredundancy");
    Outcome o;
    long rows = 0, constructive = 0;
    Json cases = Json::array();
    for (int n = 2; n <= 6; ++n)
        for (int m = 3; m <= 4; ++m) {
            auto wti = gen_wti(n, m);
            auto rep = redundancy_audit(wti);
            for (const auto& cert : rep.rows) {
                ++rows;
                std::string at = nm(n, m) + " " + tag_string(cert.tag);
                o.check(cert.status == RowStatus::Facet, at + " is not a facet");
                if (cert.status != RowStatus::Facet) continue;
                // The witness violates its own row and satisfies all the others.
                const auto& x = cert.witness;
                bool ok = sign_of(row_dot(wti.inequalities()[cert.index].row, x)) > 0;
                for (long k = 0; k < static_cast<long>(wti.size()) && ok; ++k)
                    if (k != cert.index) ok = sign_of(row_dot(wti.inequalities()[k].row, x)) <= 0;
                for (const auto& v : x) ok = ok && sign_of(v) >= 0;
                o.check(ok, at + " witness does not separate");
                constructive += wti_constructive_witness(wti, cert.index).valid;
            }
            cases.push_back(Json{{"n", n}, {"m", m}, {"rows", wti.size()}, {"sha256", sha256_hex(canonical_dump(to_json(rep)))}});
        }
    r.artifact["cases"] = cases;
    r.artifact["constructive_witnesses"] = constructive;
    return finish(r, o, std::to_string(rows) + " facets certified, " + std::to_string(constructive) + " constructive witnesses valid");
}

// 7. n = 2 against the product of two A1 triangle cones.
SuiteResult suite_classical() {
    SuiteResult r = start(7, "classical");
    Outcome o;
    auto eq = cone_equal(gen_wti(2, 3), gen_a1_product(3));
    o.check(eq.equal, "n=2 m=3: " + eq.first_failure);
    r.artifact["certificate_sha256"] = sha256_hex(canonical_dump(to_json(eq)));
    return finish(r, o, "n=2 m=3 equals the A1 x A1 triangle cone, " + std::to_string(eq.lps) + " LPs");
}

// 8. Ball-intersection census on seeded constructions.
SuiteResult suite_census() {
    SuiteResult r = start(8, "census");
    Outcome o;
    long tuples = 0, rows = 0;
    Json cases = Json::array();
    for (int n = 3; n <= 5; ++n) {
        auto g = ChamberGraph::apartment(n, 7);
        bar_step(g, 200);
        bar_step(g, 30);
        find_antipodal_tuple(g, 3);
        o.check(g.girth() >= 2 * n && compute_girth(g) == g.girth(), "n=" + std::to_string(n) + " base girth");
        Json c{{"n", n}, {"vertices", g.size()}};
        std::string digest_input;
        for (int m = 2; m <= 3; ++m) {
            auto ts = enumerate_antipodal_tuples(g, m, 1000000);
            c["tuples_m" + std::to_string(m)] = ts.size();
            for (const auto& t : ts) {
                auto rep = ball_intersection_census(g, t, 3);
                ++tuples;
                rows += static_cast<long>(rep.rows.size()) - rep.uncompared;
                std::string at = "n=" + std::to_string(n) + " chambers";
                for (const auto& ch : t) at += " (" + std::to_string(ch.first) + "," + std::to_string(ch.second) + ")";
                o.check(rep.pass, at + ": " + rep.first_failure);
                if (m == 2)
                    for (const auto& row : rep.rows)
                        if (row.radii[0] + row.radii[1] == n - 1) o.check(row.counts.back() == 1, at + " two-point intersection");
                digest_input += census_to_csv(rep);
            }
        }
        c["census_sha256"] = sha256_hex(digest_input);
        c["graph_sha256"] = sha256_hex(canonical_dump(to_json(g)));
        cases.push_back(c);
    }
    r.artifact["cases"] = cases;
    return finish(r, o, std::to_string(tuples) + " antipodal tuples, " + std::to_string(rows) + " compared rows");
}

// 9. Semistability round trip.
SuiteResult suite_semistable() {
    SuiteResult r = start(9, "semistable");
    Outcome o;
    Json cases = Json::array();
    std::mt19937_64 rng(2024);
    auto rnd = [&](int lo) { return Rational(lo + static_cast<long>(rng() % 24), 1 + static_cast<long>(rng() % 3)); };
    for (int n = 2; n <= 4; ++n) {
        auto wti = gen_wti(n, 3);
        auto ctx = dihedral_context(n);
        int inside = 0, outside = 0;
        long attempts = 0;
        std::string digest_input;
        while ((inside < 25 || outside < 25) && ++attempts < 200000) {
            ConePoint p(3);
            for (auto& w : p) w = {rnd(1), rnd(1)};
            auto x = point_row(*ctx, p);
            int violated = 0;
            bool strict = true;
            for (const auto& q : wti.inequalities()) {
                int s = sign_of(row_dot(q.row, x));
                violated += s > 0;
                strict = strict && s < 0;
            }
            std::uint64_t seed = rng();
            if (strict && inside < 25) {
                ++inside;
                auto rep = construct_semistable(n, p, 3, seed);
                bool ok = rep.member && rep.nonnegative && rep.round_minima.size() == 4;
                o.check(ok, "n=" + std::to_string(n) + " interior point has a negative slope");
                for (const auto& v : rep.round_minima) digest_input += v.str() + ";";
            } else if (violated == 1 && outside < 25) {
                ++outside;
                auto rep = construct_semistable(n, p, 3, seed);
                bool ok = !rep.member && rep.witness >= 0 && rep.witness_negative;
                o.check(ok, "n=" + std::to_string(n) + " violated point without a negative witness");
                digest_input += std::to_string(rep.witness) + ":" + rep.witness_slope.str() + ";";
            }
        }
        o.check(inside == 25 && outside == 25, "n=" + std::to_string(n) + " sampling budget exhausted");
        cases.push_back(Json{{"n", n}, {"inside", inside}, {"outside", outside}, {"sha256", sha256_hex(digest_input)}});
    }
    r.artifact["cases"] = cases;
    return finish(r, o, "n=2..4, 25 interior and 25 violating points each");
}

using SuiteFn = std::function<SuiteResult()>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"chevalley", suite_chevalley}, {"algebra", suite_algebra},         {"concavity", suite_concavity},
        {"limits", suite_limits},       {"cones", suite_cones},             {"irredundancy", suite_irredundancy},
        {"classical", suite_classical}, {"census", suite_census},           {"semistable", suite_semistable},
    };
    return r;
}

SuiteResult timed(const SuiteFn& fn) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    r = fn();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        v.push_back("determinism");
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& v = suite_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

SuiteResult run_suite(const std::string& name) {
    if (name == "determinism") {
        std::vector<SuiteResult> first;
        for (const auto& [n, fn] : registry()) first.push_back(timed(fn));
        return determinism_check(first);
    }
    for (const auto& [n, fn] : registry())
        if (n == name) return timed(fn);
    fail(ErrorKind::InvalidParameter, "unknown suite " + name);
}

SuiteResult determinism_check(const std::vector<SuiteResult>& first) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = start(10, "determinism");
    Outcome o;
    Json digests = Json::object();
    for (const auto& prev : first) {
        SuiteResult again;
        for (const auto& [n, fn] : registry())
            if (n == prev.name) again = fn();
        std::string a = sha256_hex(canonical_dump(prev.artifact)), b = sha256_hex(canonical_dump(again.artifact));
        o.check(a == b && prev.pass == again.pass, prev.name + " artifacts differ between runs");
        digests[prev.name] = a;
    }
    r.artifact["digests"] = digests;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(r, o, std::to_string(first.size()) + " suites byte-identical on rerun");
}

}  // namespace dihedral

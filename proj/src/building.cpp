#include "dihedral/building.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "dihedral/errors.hpp"

namespace dihedral {

namespace {

constexpr int kInf = ChamberGraph::kInfinite;

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

ChamberGraph::ChamberGraph(int n, std::uint64_t seed) : n_(n), seed_(seed), rng_(seed) {
    if (n < 2) fail(ErrorKind::InvalidParameter, "n must be at least 2");
}

ChamberGraph ChamberGraph::apartment(int n, std::uint64_t seed) {
    ChamberGraph g(n, seed);
    for (int j = 0; j < 2 * n; ++j) g.add_vertex(1 + j % 2, "apartment");
    for (int j = 0; j < 2 * n; ++j) g.add_edge(j, (j + 1) % (2 * n));
    g.note("apartment 2n-cycle n=" + std::to_string(n));
    return g;
}

int ChamberGraph::add_vertex(int type, const std::string& origin) {
    if (type != 1 && type != 2) fail(ErrorKind::InvalidParameter, "vertex type must be 1 or 2");
    type_.push_back(type);
    adj_.emplace_back();
    origin_.push_back("s" + std::to_string(stage_) + ":" + origin);
    return size() - 1;
}

bool ChamberGraph::adjacent(int a, int b) const {
    const auto& na = adj_[a];
    return std::find(na.begin(), na.end(), b) != na.end();
}

void ChamberGraph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= size() || b >= size()) fail(ErrorKind::OutOfRange, "edge endpoint out of range");
    if (type_[a] == type_[b]) fail(ErrorKind::Precondition, "edge joins two vertices of the same type");
    if (adjacent(a, b)) fail(ErrorKind::Precondition, "edge already present");
    // A new edge closes cycles of length d(a, b) + 1 at minimum.
    int d = girth_ == kInf ? distance(a, b) : distance(a, b, girth_);
    if (d >= 0) girth_ = std::min(girth_, d + 1);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++edges_;
}

std::vector<int> ChamberGraph::attach_path(int a, int b, int len, const std::string& origin) {
    if (len < 1) fail(ErrorKind::InvalidParameter, "path length must be positive");
    if ((type_[a] == type_[b]) != (len % 2 == 0)) fail(ErrorKind::Precondition, "path length has the wrong parity");
    if (len == 1) {
        add_edge(a, b);
        return {};
    }
    // Interior vertices have degree two, so the shortest new cycle is len + d(a, b).
    int d = girth_ == kInf ? distance(a, b) : distance(a, b, girth_);
    if (d >= 0) girth_ = std::min(girth_, d + len);
    std::vector<int> interior;
    int prev = a;
    for (int k = 1; k < len; ++k) {
        int v = add_vertex(type_[prev] == 1 ? 2 : 1, origin);
        adj_[prev].push_back(v);
        adj_[v].push_back(prev);
        ++edges_;
        interior.push_back(v);
        prev = v;
    }
    adj_[prev].push_back(b);
    adj_[b].push_back(prev);
    ++edges_;
    return interior;
}

std::vector<std::pair<int, int>> ChamberGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < size(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::vector<int> ChamberGraph::distances(const std::vector<int>& sources, int max_depth) const {
    std::vector<int> d(size(), -1);
    std::deque<int> queue;
    for (int s : sources)
        if (d[s] < 0) {
            d[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && d[v] >= max_depth) continue;
        for (int w : adj_[v])
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                queue.push_back(w);
            }
    }
    return d;
}

int ChamberGraph::distance(int a, int b, int max_depth) const {
    if (a == b) return 0;
    std::vector<int> d(size(), -1);
    std::deque<int> queue{a};
    d[a] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && d[v] >= max_depth) continue;
        for (int w : adj_[v])
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                if (w == b) return d[w];
                queue.push_back(w);
            }
    }
    return -1;
}

Chamber ChamberGraph::chamber(int a, int b) const {
    if (!adjacent(a, b)) fail(ErrorKind::Precondition, "chamber vertices are not adjacent");
    return type_[a] == 1 ? Chamber{a, b} : Chamber{b, a};
}

// ---------------------------------------------------------------------------

int compute_girth(const ChamberGraph& g) {
    int best = kInf;
    const int nv = g.size();
    std::vector<int> d(nv, -1), parent(nv, -1);
    for (int s = 0; s < nv; ++s) {
        std::vector<int> touched{s};
        std::deque<int> queue{s};
        d[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            // Cycles closed from here on are no shorter than 2 d[v].
            if (best != kInf && 2 * d[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    parent[w] = v;
                    touched.push_back(w);
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    best = std::min(best, d[v] + d[w] + 1);
                }
            }
        }
        for (int v : touched) d[v] = parent[v] = -1;
    }
    return best;
}

GraphMetrics graph_metrics(const ChamberGraph& g) {
    GraphMetrics m;
    m.vertices = g.size();
    m.edges = g.edge_count();
    m.girth = compute_girth(g);
    if (g.size() == 0) return m;
    m.min_valence = INT_MAX;
    long total = 0;
    for (int v = 0; v < g.size(); ++v) {
        int k = static_cast<int>(g.neighbors(v).size());
        m.min_valence = std::min(m.min_valence, k);
        m.max_valence = std::max(m.max_valence, k);
        total += k;
    }
    m.mean_valence = static_cast<double>(total) / g.size();
    int diam = 0;
    for (int s = 0; s < g.size() && m.connected; ++s) {
        auto d = g.distances({s});
        for (int x : d) {
            if (x < 0) {
                m.connected = false;
                break;
            }
            diam = std::max(diam, x);
        }
    }
    m.diameter = m.connected ? diam : kInf;
    return m;
}

bool check_n1_isometric(const ChamberGraph& before, const ChamberGraph& after, int sources, std::uint64_t seed) {
    const int n = before.n();
    if (after.size() < before.size()) return false;
    std::vector<int> src(before.size());
    std::iota(src.begin(), src.end(), 0);
    if (sources > 0 && sources < before.size()) {
        std::mt19937_64 rng(seed);
        std::shuffle(src.begin(), src.end(), rng);
        src.resize(sources);
    }
    for (int s : src) {
        auto db = before.distances({s});
        auto da = after.distances({s});
        for (int t = 0; t < before.size(); ++t) {
            if (before.type(t) != after.type(t)) return false;
            bool short_before = db[t] >= 0 && db[t] < n - 1;
            if (short_before && da[t] != db[t]) return false;
            if (!short_before && da[t] >= 0 && da[t] < n - 1) return false;
        }
    }
    return true;
}

BarReport bar_step(ChamberGraph& g, long cap) {
    const int n = g.n();
    std::vector<std::pair<int, int>> p_pairs, q_pairs;
    for (int u = 0; u < g.size(); ++u) {
        auto d = g.distances({u}, n + 1);
        for (int v = u + 1; v < g.size(); ++v) {
            if (d[v] == n + 1) p_pairs.emplace_back(u, v);
            else if (d[v] == n) q_pairs.emplace_back(u, v);
        }
    }
    BarReport rep;
    rep.p_pairs = static_cast<long>(p_pairs.size());
    rep.q_pairs = static_cast<long>(q_pairs.size());
    // (length of the new path, u, v)
    std::vector<std::tuple<int, int, int>> work;
    for (auto [u, v] : p_pairs) work.emplace_back(n - 1, u, v);
    for (auto [u, v] : q_pairs) work.emplace_back(n, u, v);
    if (static_cast<long>(work.size()) > cap) {
        std::shuffle(work.begin(), work.end(), g.rng());
        rep.unprocessed = static_cast<long>(work.size()) - cap;
        work.resize(cap);
        std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
        });
    }
    const std::string origin = "bar" + std::to_string(g.stage());
    for (auto [len, u, v] : work) {
        g.attach_path(u, v, len, origin);
        ++rep.processed;
    }
    if (g.girth() < 2 * n) fail(ErrorKind::Precondition, "bar step lowered the girth below 2n");
    g.note("bar stage=" + std::to_string(g.stage()) + " p=" + std::to_string(rep.p_pairs) + " q=" +
           std::to_string(rep.q_pairs) + " processed=" + std::to_string(rep.processed) +
           " unprocessed=" + std::to_string(rep.unprocessed));
    g.next_stage();
    return rep;
}

bool antipodal(const ChamberGraph& g, const Chamber& a, const Chamber& b) {
    auto d = g.distances({a.first, a.second}, g.n());
    int m = std::min(d[b.first] < 0 ? kInf : d[b.first], d[b.second] < 0 ? kInf : d[b.second]);
    return m == g.n() - 1;
}

bool pairwise_antipodal(const ChamberGraph& g, const std::vector<Chamber>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (!antipodal(g, cs[i], cs[j])) return false;
    return true;
}

bool mpod_admissible(int n, const std::vector<int>& radii) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0 || radii[i] > n - 1) return false;
        for (std::size_t j = i + 1; j < radii.size(); ++j)
            if (radii[i] + radii[j] < n) return false;
    }
    return true;
}

namespace {

int attach_mpod_unchecked(ChamberGraph& g, const std::vector<Chamber>& cs, const std::vector<int>& radii, int l) {
    const std::string origin = "pod" + std::to_string(g.stage());
    int z = g.add_vertex(l, origin);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        // The leg ends at the chamber vertex whose type has parity l + r_i.
        int x = (g.type(cs[i].first) + l + radii[i]) % 2 == 0 ? cs[i].first : cs[i].second;
        g.attach_path(x, z, radii[i], origin);
    }
    if (g.girth() < 2 * g.n()) fail(ErrorKind::Precondition, "pod lowered the girth below 2n");
    g.note("pod z=" + std::to_string(z) + " l=" + std::to_string(l) + " r=(" + join(radii) + ")");
    return z;
}

}  // namespace

int attach_mpod(ChamberGraph& g, const std::vector<Chamber>& cs, const std::vector<int>& radii, int l) {
    const int n = g.n();
    if (cs.size() < 2 || cs.size() != radii.size()) fail(ErrorKind::InvalidParameter, "a pod needs m >= 2 chambers and m radii");
    if (l != 1 && l != 2) fail(ErrorKind::InvalidParameter, "center type must be 1 or 2");
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (radii[i] <= 0 || radii[i] > n - 1)
            fail(ErrorKind::Precondition, "radius " + std::to_string(i + 1) + " must lie in [1, n-1]");
    for (std::size_t i = 0; i < radii.size(); ++i)
        for (std::size_t j = i + 1; j < radii.size(); ++j)
            if (radii[i] + radii[j] < n)
                fail(ErrorKind::Precondition,
                     "radii " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " sum to less than n");
    for (const auto& c : cs) g.chamber(c.first, c.second);
    if (!pairwise_antipodal(g, cs)) fail(ErrorKind::Precondition, "pod chambers are not pairwise antipodal");
    return attach_mpod_unchecked(g, cs, radii, l);
}

std::vector<Chamber> find_antipodal_tuple(ChamberGraph& g, int m, long budget) {
    const int n = g.n();
    if (m < 1) fail(ErrorKind::InvalidParameter, "m must be positive");
    std::vector<Chamber> out;
    auto es = g.edges();
    if (es.empty()) fail(ErrorKind::Precondition, "graph has no chambers");
    out.push_back(g.chamber(es[0].first, es[0].second));
    if (m == 1) return out;
    // Second chamber: any edge antipodal to the first.
    {
        auto d = g.distances({out[0].first, out[0].second});
        for (auto [a, b] : es) {
            if (d[a] < 0 || d[b] < 0) continue;
            if (std::min(d[a], d[b]) == n - 1) {
                out.push_back(g.chamber(a, b));
                break;
            }
        }
        if (out.size() < 2) {
            // A fresh path of length n - 1 from the first chamber, then a fresh edge at its end.
            if (--budget < 0) fail(ErrorKind::BudgetExceeded, "antipodal tuple budget exhausted");
            int x = g.add_vertex((g.type(out[0].first) + n - 1) % 2 == 1 ? 1 : 2, "tuple");
            g.attach_path(out[0].first, x, n - 1, "tuple");
            int y = g.add_vertex(g.type(x) == 1 ? 2 : 1, "tuple");
            g.add_edge(x, y);
            out.push_back(g.chamber(x, y));
        }
    }
    while (static_cast<int>(out.size()) < m) {
        std::vector<std::vector<int>> ds;
        for (const auto& c : out) ds.push_back(g.distances({c.first, c.second}));
        int x = -1;
        for (int v = 0; v < g.size() && x < 0; ++v) {
            bool ok = true;
            for (const auto& d : ds)
                if (d[v] != n - 1) {
                    ok = false;
                    break;
                }
            if (ok) x = v;
        }
        if (x < 0) {
            if (--budget < 0) fail(ErrorKind::BudgetExceeded, "antipodal tuple budget exhausted");
            x = attach_mpod_unchecked(g, out, std::vector<int>(out.size(), n - 1), 1);
        }
        int y = g.add_vertex(g.type(x) == 1 ? 2 : 1, "tuple");
        g.add_edge(x, y);
        out.push_back(g.chamber(x, y));
    }
    g.note("antipodal tuple m=" + std::to_string(m));
    return out;
}

std::vector<std::vector<Chamber>> enumerate_antipodal_tuples(const ChamberGraph& g, int m, long limit) {
    std::vector<Chamber> cs;
    for (auto [a, b] : g.edges()) cs.push_back(g.chamber(a, b));
    const int ne = static_cast<int>(cs.size());
    // anti[i] lists the chambers j > i antipodal to chamber i.
    std::vector<std::vector<char>> anti(ne, std::vector<char>(ne, 0));
    for (int i = 0; i < ne; ++i) {
        auto d = g.distances({cs[i].first, cs[i].second}, g.n());
        for (int j = i + 1; j < ne; ++j) {
            int a = d[cs[j].first], b = d[cs[j].second];
            int mn = std::min(a < 0 ? kInf : a, b < 0 ? kInf : b);
            anti[i][j] = anti[j][i] = mn == g.n() - 1;
        }
    }
    std::vector<std::vector<Chamber>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<long>(out.size()) >= limit) return;
        if (static_cast<int>(cur.size()) == m) {
            std::vector<Chamber> t;
            for (int i : cur) t.push_back(cs[i]);
            out.push_back(std::move(t));
            return;
        }
        for (int j = start; j < ne; ++j) {
            bool ok = true;
            for (int i : cur)
                if (!anti[i][j]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------

long ball_intersection_count(const ChamberGraph& g, const std::vector<Chamber>& cs, const std::vector<int>& radii, int l) {
    if (cs.size() != radii.size()) fail(ErrorKind::InvalidParameter, "one radius per chamber");
    const int n = g.n();
    std::vector<std::vector<int>> ds;
    for (const auto& c : cs) ds.push_back(g.distances({c.first, c.second}));
    long count = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (g.type(v) != l) continue;
        bool in = true;
        for (std::size_t i = 0; i < cs.size() && in; ++i) in = ds[i][v] >= 0 && std::min(ds[i][v], n - 1) <= radii[i];
        count += in;
    }
    return count;
}

const char* census_class_name(CensusClass c) {
    switch (c) {
    case CensusClass::Zero: return "0";
    case CensusClass::One: return "1";
    case CensusClass::Growing: return "growing";
    case CensusClass::Other: return "other";
    }
    return "other";
}

CensusClass prering_class(int n, const std::vector<int>& radii) {
    const int m = static_cast<int>(radii.size());
    GrassmannPreRing ring(n);
    auto prod = ring.product(radii);
    int total = std::accumulate(radii.begin(), radii.end(), 0);
    int bound = (n - 1) * (m - 1);
    bool nonzero = std::any_of(prod.begin(), prod.end(), [](const PreRingCoeff& c) { return !c.is_zero(); });
    if (total < bound) return nonzero ? CensusClass::Other : CensusClass::Zero;
    if (total > bound) return nonzero ? CensusClass::Growing : CensusClass::Zero;
    const auto& c = prod[0];
    if (c.is_inf()) return CensusClass::Growing;
    return c.is_zero() ? CensusClass::Zero : CensusClass::One;
}

CensusClass census_expectation(int n, const std::vector<int>& radii, bool* compared) {
    const int m = static_cast<int>(radii.size());
    int total = std::accumulate(radii.begin(), radii.end(), 0);
    *compared = true;
    if (total >= (n - 1) * (m - 1)) return prering_class(n, radii);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (radii[i] + radii[j] < n - 1) return CensusClass::Zero;
    *compared = false;
    return CensusClass::Other;
}

int complete_apartments(ChamberGraph& g, const std::vector<Chamber>& cs) {
    const int n = g.n();
    int added = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            for (int a : {cs[i].first, cs[i].second})
                for (int b : {cs[j].first, cs[j].second})
                    if (g.distance(a, b, n + 1) == n + 1) {
                        g.attach_path(a, b, n - 1, "apartment");
                        ++added;
                    }
    if (g.girth() < 2 * n) fail(ErrorKind::Precondition, "apartment completion lowered the girth below 2n");
    if (added) g.note("apartments completed paths=" + std::to_string(added));
    return added;
}

CensusReport ball_intersection_census(ChamberGraph g, const std::vector<Chamber>& cs, int rounds) {
    const int n = g.n();
    const int m = static_cast<int>(cs.size());
    if (m < 2) fail(ErrorKind::InvalidParameter, "census needs at least two chambers");
    if (!pairwise_antipodal(g, cs)) fail(ErrorKind::Precondition, "census chambers are not pairwise antipodal");

    // All radius vectors in [0, n-1]^m.
    std::vector<std::vector<int>> radii;
    std::vector<int> r(m, 0);
    for (;;) {
        radii.push_back(r);
        int k = 0;
        while (k < m && ++r[k] == n) r[k++] = 0;
        if (k == m) break;
    }

    CensusReport rep;
    rep.rounds = rounds;
    for (const auto& rv : radii)
        for (int l = 1; l <= 2; ++l) {
            CensusRow row;
            row.radii = rv;
            row.l = l;
            row.expected = census_expectation(n, rv, &row.compared);
            rep.rows.push_back(std::move(row));
        }

    auto measure = [&]() {
        std::vector<std::vector<int>> ds;
        for (const auto& c : cs) ds.push_back(g.distances({c.first, c.second}));
        for (auto& row : rep.rows) {
            long count = 0;
            for (int v = 0; v < g.size(); ++v) {
                if (g.type(v) != row.l) continue;
                bool in = true;
                for (int i = 0; i < m && in; ++i) in = ds[i][v] >= 0 && std::min(ds[i][v], n - 1) <= row.radii[i];
                count += in;
            }
            row.counts.push_back(count);
        }
    };

    rep.apartment_paths = complete_apartments(g, cs);
    measure();
    for (int round = 0; round < rounds; ++round) {
        for (const auto& rv : radii) {
            if (!mpod_admissible(n, rv)) continue;
            for (int l = 1; l <= 2; ++l) attach_mpod_unchecked(g, cs, rv, l);
        }
        g.next_stage();
        if (g.girth() < 2 * n) rep.girth_ok = false;
        measure();
    }
    if (!pairwise_antipodal(g, cs)) {
        rep.pass = false;
        rep.first_failure = "chambers stopped being antipodal";
    }

    for (auto& row : rep.rows) {
        bool increasing = rounds >= 2;
        for (std::size_t k = 1; k < row.counts.size(); ++k)
            if (row.counts[k] <= row.counts[k - 1]) increasing = false;
        bool constant = std::all_of(row.counts.begin(), row.counts.end(), [&](long c) { return c == row.counts[0]; });
        if (increasing) row.observed = CensusClass::Growing;
        else if (constant && row.counts[0] == 0) row.observed = CensusClass::Zero;
        else if (constant && row.counts[0] == 1) row.observed = CensusClass::One;
        else row.observed = CensusClass::Other;
        if (m == 2 && row.radii[0] + row.radii[1] == n - 1) ++rep.l2_checks;
        if (!row.compared) {
            ++rep.uncompared;
            if (row.counts.back() > 0) ++rep.uncompared_nonempty;
            continue;
        }
        if (row.observed != row.expected && rep.pass) {
            rep.pass = false;
            std::string counts;
            for (long c : row.counts) counts += (counts.empty() ? "" : ",") + std::to_string(c);
            rep.first_failure = "r=(" + join(row.radii) + ") l=" + std::to_string(row.l) + " observed " +
                                census_class_name(row.observed) + " [" + counts + "] expected " +
                                census_class_name(row.expected);
        }
    }
    if (!rep.girth_ok) {
        rep.pass = false;
        if (rep.first_failure.empty()) rep.first_failure = "girth dropped below 2n";
    }
    rep.final_vertices = g.size();
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Contributions -<lambda_i, v> indexed [slot][r][near type - 1] for r in [0, n-1].
std::vector<std::vector<std::array<FieldElement, 2>>> slope_table(const DihedralContext& ctx, const WeightedConfiguration& c) {
    const int n = ctx.n;
    const auto& pl = ctx.plane;
    std::vector<std::vector<std::array<FieldElement, 2>>> tab(c.weights.size());
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        const auto& w = c.weights[i];
        if (w.a < 0 || w.b < 0) fail(ErrorKind::DomainError, "weight " + std::to_string(i + 1) + " is not dominant");
        FieldElement a = FieldElement::from_rational(ctx.field, w.a), b = FieldElement::from_rational(ctx.field, w.b);
        tab[i].resize(n);
        for (int r = 0; r < n; ++r)
            for (int p = 1; p <= 2; ++p) {
                // Near vertex zeta_1 (index 0) rotates to -r, zeta_2 (index 1) to 1 + r.
                long j = p == 1 ? -r : 1 + r;
                Vec2 v = pl.vertex(j);
                tab[i][r][p - 1] = -(a * dot(pl.zeta(1), v) + b * dot(pl.zeta(2), v));
            }
    }
    return tab;
}

void check_config(const ChamberGraph& g, const DihedralContext& ctx, const WeightedConfiguration& c) {
    if (ctx.n != g.n()) fail(ErrorKind::InvalidParameter, "context and graph disagree on n");
    if (c.chambers.size() != c.weights.size()) fail(ErrorKind::InvalidParameter, "one weight per chamber");
    for (const auto& ch : c.chambers) {
        if (!g.adjacent(ch.first, ch.second) || g.type(ch.first) != 1)
            fail(ErrorKind::InvalidParameter, "configuration chambers must be (type 1, type 2) edges");
    }
}

}  // namespace

FieldElement slope_at(const ChamberGraph& g, const DihedralContext& ctx, const WeightedConfiguration& c, int eta) {
    check_config(g, ctx, c);
    if (eta < 0 || eta >= g.size()) fail(ErrorKind::OutOfRange, "vertex out of range");
    const int n = g.n();
    auto tab = slope_table(ctx, c);
    FieldElement s = FieldElement::from_int(ctx.field, 0);
    for (std::size_t i = 0; i < c.chambers.size(); ++i) {
        int d = g.distance(eta, c.chambers[i].first);
        int e = g.distance(eta, c.chambers[i].second);
        if (d < 0 && e < 0) fail(ErrorKind::DomainError, "vertex is disconnected from chamber " + std::to_string(i + 1));
        int r = std::min(d < 0 ? kInf : d, e < 0 ? kInf : e);
        r = std::min(r, n - 1);
        int near = (g.type(eta) - 1 + r) % 2 + 1;
        s += tab[i][r][near - 1];
    }
    return s;
}

SlopeScan min_slope_scan(const ChamberGraph& g, const DihedralContext& ctx, const WeightedConfiguration& c, int l) {
    check_config(g, ctx, c);
    const int n = g.n();
    const int m = static_cast<int>(c.chambers.size());
    if (m == 0) fail(ErrorKind::InvalidParameter, "empty configuration");
    auto tab = slope_table(ctx, c);
    std::vector<std::vector<int>> ds;
    for (const auto& ch : c.chambers) ds.push_back(g.distances({ch.first, ch.second}));
    // Slopes depend only on (type, clamped distances); evaluate each signature once.
    std::map<std::vector<int>, int> signatures;
    SlopeScan out;
    for (int v = 0; v < g.size(); ++v) {
        if (l != 0 && g.type(v) != l) continue;
        if (ds[0][v] < 0) continue;
        std::vector<int> sig{g.type(v)};
        for (int i = 0; i < m; ++i) {
            if (ds[i][v] < 0) fail(ErrorKind::DomainError, "configuration chambers lie in different components");
            sig.push_back(std::min(ds[i][v], n - 1));
        }
        ++out.scanned;
        signatures.emplace(std::move(sig), v);
    }
    for (const auto& [sig, v] : signatures) {
        FieldElement s = FieldElement::from_int(ctx.field, 0);
        for (int i = 0; i < m; ++i) {
            int r = sig[i + 1];
            int near = (sig[0] - 1 + r) % 2 + 1;
            s += tab[i][r][near - 1];
        }
        if (out.vertex < 0 || compare(s, out.value) < 0) {
            out.vertex = v;
            out.value = s;
        }
    }
    return out;
}

SemistableReport construct_semistable(int n, const ConePoint& lambdas, int rounds, std::uint64_t seed, long bar_cap) {
    const int m = static_cast<int>(lambdas.size());
    if (m < 2) fail(ErrorKind::InvalidParameter, "need at least two weights");
    auto ctx = dihedral_context(n);
    auto wti = gen_wti(n, m);
    SemistableReport rep;
    auto mem = is_member(wti, lambdas);
    rep.member = mem.member;

    ChamberGraph g = ChamberGraph::apartment(n, seed);
    rep.config.chambers = find_antipodal_tuple(g, m);
    rep.config.weights = lambdas;
    // The Schubert positions of a violated tuple lie in the apartments spanned by chamber pairs.
    complete_apartments(g, rep.config.chambers);

    if (rep.member) {
        rep.nonnegative = true;
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int round = 0; round <= rounds; ++round) {
            if (round > 0) {
                bar_step(g, bar_cap);
                // Pods on the configuration chambers add the vertices nearest to all of them.
                std::vector<int> rv(m);
                for (int k = 0; k < 2 * m; ++k) {
                    for (int i = 0; i < m; ++i) rv[i] = 1 + static_cast<int>(rng() % (n - 1));
                    if (mpod_admissible(n, rv)) attach_mpod_unchecked(g, rep.config.chambers, rv, 1 + static_cast<int>(rng() % 2));
                }
                g.next_stage();
            }
            auto scan = min_slope_scan(g, *ctx, rep.config);
            rep.round_minima.push_back(scan.value);
            if (sign_of(scan.value) < 0) rep.nonnegative = false;
        }
        rep.vertices = g.size();
        return rep;
    }

    rep.violated = mem.first_violation;
    const auto& ineq = wti.inequalities()[mem.first_violation];
    rep.violated_tag = ineq.tag;
    const int l = ineq.tag.l;
    const auto& grp = ctx->group;
    // Distances of w_k(zeta_l) from the fundamental chamber in the apartment.
    std::vector<int> target(m);
    FieldElement value = FieldElement::from_int(ctx->field, 0);
    for (int k = 0; k < m; ++k) {
        const auto& w = ineq.tag.tuple[k];
        long j = grp.vertex_index(w, l);
        long period = 2L * n;
        auto cyc = [&](long a) {
            long d = ((a % period) + period) % period;
            return static_cast<int>(std::min(d, period - d));
        };
        target[k] = std::min(cyc(j), cyc(j - 1));
        const auto& pr = ctx->pairing[l - 1][grp.index(w)];
        value += FieldElement::from_rational(ctx->field, lambdas[k].a) * pr.first +
                 FieldElement::from_rational(ctx->field, lambdas[k].b) * pr.second;
    }
    rep.inequality_value = value;
    std::vector<std::vector<int>> ds;
    for (const auto& ch : rep.config.chambers) ds.push_back(g.distances({ch.first, ch.second}));
    for (int v = 0; v < g.size() && rep.witness < 0; ++v) {
        if (g.type(v) != l) continue;
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) ok = ds[k][v] >= 0 && std::min(ds[k][v], n - 1) == target[k];
        if (ok) rep.witness = v;
    }
    if (rep.witness < 0) fail(ErrorKind::Precondition, "no vertex realizes the violated Schubert position");
    rep.witness_slope = slope_at(g, *ctx, rep.config, rep.witness);
    rep.witness_negative = sign_of(rep.witness_slope) < 0 && rep.witness_slope == -value;
    rep.vertices = g.size();
    return rep;
}

}  // namespace dihedral

#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/cones.hpp"
#include "dihedral/prering.hpp"

namespace dihedral {

using Chamber = std::pair<int, int>;  // (type-1 vertex, type-2 vertex)

// Bipartite graph with vertex types 1, 2 and an exactly tracked girth.
class ChamberGraph {
public:
    static constexpr int kInfinite = INT_MAX;

    explicit ChamberGraph(int n, std::uint64_t seed = 0);
    // A single 2n-cycle; vertex j sits at angle j*pi/n and has type 1 + (j mod 2).
    static ChamberGraph apartment(int n, std::uint64_t seed = 0);

    int n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    int size() const { return static_cast<int>(type_.size()); }
    int type(int v) const { return type_[v]; }
    int stage() const { return stage_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::string>& log() const { return log_; }
    const std::string& origin(int v) const { return origin_[v]; }
    std::vector<std::pair<int, int>> edges() const;
    long edge_count() const { return edges_; }
    bool adjacent(int a, int b) const;

    int add_vertex(int type, const std::string& origin);
    // Edge between vertices of different types; updates the tracked girth.
    void add_edge(int a, int b);
    // Path of length len >= 1 from a to b through fresh vertices; returns the interior vertices.
    std::vector<int> attach_path(int a, int b, int len, const std::string& origin);
    int girth() const { return girth_; }  // tracked; kInfinite for forests
    void note(const std::string& entry) { log_.push_back(entry); }
    void next_stage() { ++stage_; }
    std::mt19937_64& rng() { return rng_; }

    // Multi-source BFS; -1 marks unreachable vertices. max_depth < 0 means unbounded.
    std::vector<int> distances(const std::vector<int>& sources, int max_depth = -1) const;
    int distance(int a, int b, int max_depth = -1) const;
    // Vertex-to-chamber distances d(v, {a, b}).
    std::vector<int> chamber_distances(const Chamber& c) const { return distances({c.first, c.second}); }
    Chamber chamber(int a, int b) const;  // orients an edge as (type 1, type 2)

private:
    int n_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::vector<int> type_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> origin_;
    std::vector<std::string> log_;
    long edges_ = 0;
    int girth_ = kInfinite;
    int stage_ = 0;
};

struct GraphMetrics {
    int girth = ChamberGraph::kInfinite;     // recomputed from scratch
    int diameter = ChamberGraph::kInfinite;  // kInfinite when disconnected
    bool connected = true;
    int min_valence = 0, max_valence = 0;
    double mean_valence = 0;
    int vertices = 0;
    long edges = 0;
};

GraphMetrics graph_metrics(const ChamberGraph& g);
int compute_girth(const ChamberGraph& g);

// The vertices of `before` keep their ids in `after`; checks the (n-1)-isometric conditions from
// `sources` sampled sources (all when sources <= 0).
bool check_n1_isometric(const ChamberGraph& before, const ChamberGraph& after, int sources = 0, std::uint64_t seed = 1);

struct BarReport {
    long p_pairs = 0, q_pairs = 0;
    long processed = 0, unprocessed = 0;
};

// Free-construction step: (n-1)-paths between distance-(n+1) pairs, n-paths between distance-n
// pairs. At most `cap` pairs (seeded sample beyond the cap).
BarReport bar_step(ChamberGraph& g, long cap = 1000);

bool antipodal(const ChamberGraph& g, const Chamber& a, const Chamber& b);
bool pairwise_antipodal(const ChamberGraph& g, const std::vector<Chamber>& cs);

// m-pod with bases cs, leg lengths radii and a center of type l; returns the center.
int attach_mpod(ChamberGraph& g, const std::vector<Chamber>& cs, const std::vector<int>& radii, int l);
bool mpod_admissible(int n, const std::vector<int>& radii);

// m pairwise antipodal chambers, adding pods and fresh edges when needed.
std::vector<Chamber> find_antipodal_tuple(ChamberGraph& g, int m, long budget = 64);
std::vector<std::vector<Chamber>> enumerate_antipodal_tuples(const ChamberGraph& g, int m, long limit);

// Vertices of type l in the intersection of the balls B_{r_i}(c_i). Distances are clamped at n-1 as
// in slope_at, so a ball of radius n-1 is the whole component.
long ball_intersection_count(const ChamberGraph& g, const std::vector<Chamber>& cs, const std::vector<int>& radii, int l);

enum class CensusClass { Zero, One, Growing, Other };
const char* census_class_name(CensusClass c);

struct CensusRow {
    std::vector<int> radii;
    int l = 1;
    std::vector<long> counts;  // before growth, then after each round
    CensusClass observed = CensusClass::Other;
    CensusClass expected = CensusClass::Other;
    bool compared = true;
};

struct CensusReport {
    bool pass = true;
    int rounds = 0;
    long l2_checks = 0;  // antipodal pairs with r_1 + r_2 = n - 1
    long uncompared = 0;  // sum below (n-1)(m-1) with every pair sum >= n-1
    long uncompared_nonempty = 0;
    int apartment_paths = 0;
    bool girth_ok = true;
    int final_vertices = 0;
    std::vector<CensusRow> rows;
    std::string first_failure;
};

// Class predicted by the Grassmannian pre-ring product of C_{r_1}, ..., C_{r_m}.
CensusClass prering_class(int n, const std::vector<int>& radii);
// Predicted class, or Other when no prediction applies: the pre-ring class when the sum is at
// least (n-1)(m-1), Zero when some pair sums to less than n-1.
CensusClass census_expectation(int n, const std::vector<int>& radii, bool* compared);
// Closes the apartment of each antipodal pair: an (n-1)-path between far endpoints at distance n+1.
int complete_apartments(ChamberGraph& g, const std::vector<Chamber>& cs);
// Completes apartments, then growth rounds attach pods for every admissible radius vector (both
// center types); every radius vector in [0, n-1]^m is classified from its count sequence.
// Works on a copy of g.
CensusReport ball_intersection_census(ChamberGraph g, const std::vector<Chamber>& cs, int rounds = 3);

// Weighted configuration: weight lambda_i sits in chamber i at the point of type lambda_i.
struct WeightedConfiguration {
    std::vector<Chamber> chambers;
    std::vector<DominantWeight> weights;
};

// Exact slope at a vertex. Finite distances >= n-1 are read as n-1 (their value in every
// building reached by (n-1)-isometric growth); unreachable vertices raise domain-error.
FieldElement slope_at(const ChamberGraph& g, const DihedralContext& ctx, const WeightedConfiguration& c, int eta);

struct SlopeScan {
    int vertex = -1;
    FieldElement value;
    long scanned = 0;
};

// Minimum slope over the vertices of type l (0 for both types) in the component of the configuration.
SlopeScan min_slope_scan(const ChamberGraph& g, const DihedralContext& ctx, const WeightedConfiguration& c, int l = 0);

struct SemistableReport {
    bool member = false;
    WeightedConfiguration config;
    std::vector<FieldElement> round_minima;  // member path: min slope per growth round
    bool nonnegative = false;
    long violated = -1;                      // non-member path: first violated WTI inequality
    InequalityTag violated_tag;
    int witness = -1;
    FieldElement witness_slope;
    FieldElement inequality_value;           // sum <lambda_k, w_k(zeta_l)> of the violated tuple
    bool witness_negative = false;
    int vertices = 0;
};

SemistableReport construct_semistable(int n, const ConePoint& lambdas, int rounds, std::uint64_t seed, long bar_cap = 400);

}  // namespace dihedral

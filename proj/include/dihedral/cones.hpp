#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dihedral/algebra.hpp"
#include "dihedral/bk.hpp"
#include "dihedral/lp.hpp"
#include "dihedral/weyl.hpp"

namespace dihedral {

// One shared field and plane model per n, so that all systems for the same n interoperate.
struct DihedralContext {
    explicit DihedralContext(int n);
    int n;
    Field field;
    DihedralGroup group;
    PlaneAction plane;
    // Ray coordinates (<v, zeta_1>, <v, zeta_2>) of w(zeta_l), indexed [l-1][group index].
    std::array<std::vector<std::pair<FieldElement, FieldElement>>, 2> pairing;
    bool star_swaps = false;  // star exchanges zeta_1 and zeta_2 (n odd)
};

std::shared_ptr<const DihedralContext> dihedral_context(int n);

// Dominant weight a zeta_1 + b zeta_2 with a, b >= 0.
struct DominantWeight {
    Rational a, b;
    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

using ConePoint = std::vector<DominantWeight>;

struct InequalityTag {
    std::string system;  // WTI, STI, KM, BK, A1
    std::string algebra;  // KM/BK: At, grAt, B1, B2, grB1, grB2
    int l = 0;           // pairing vertex zeta_l
    std::vector<WeylElement> tuple;
    int slot_i = -1, slot_j = -1;
};

std::string tag_string(const InequalityTag& t);

// sum_s <lambda_s, covector_s> <= 0.
struct LinearInequality {
    std::vector<Vec2> covectors;
    Row row;  // row[2s + k - 1] = <covector_s, zeta_k>, the pairing in ray coordinates
    InequalityTag tag;
};

class InequalitySystem {
public:
    InequalitySystem(int n, int slots, bool dedup = true);
    int n() const { return ctx_->n; }
    int slots() const { return slots_; }
    int nvars() const { return 2 * slots_; }
    const DihedralContext& context() const { return *ctx_; }
    const Field& field() const { return ctx_->field; }
    // Normalizes to the canonical positive multiple; returns false when the inequality is a duplicate.
    bool add(std::vector<Vec2> covectors, InequalityTag tag);
    const std::vector<LinearInequality>& inequalities() const { return ineqs_; }
    std::size_t size() const { return ineqs_.size(); }
    bool contains(const Row& row) const;  // row need not be normalized
    // Canonical key of the positive ray spanned by a row.
    static std::string row_key(const Row& row);
    const std::vector<std::vector<double>>& approx_rows() const { return approx_; }
    long duplicates_dropped() const { return dropped_; }

private:
    std::shared_ptr<const DihedralContext> ctx_;
    int slots_;
    bool dedup_;
    std::vector<LinearInequality> ineqs_;
    std::vector<std::vector<double>> approx_;
    std::unordered_map<std::string, std::size_t> keys_;
    long dropped_ = 0;
};

Row normalize_row(const Row& row);

struct WtiReport {
    long expected_count = 0;  // 2 n (m choose 2)
    long tuple_form_count = 0;
    long w_form_count = 0;
    bool forms_agree = false;
};

InequalitySystem gen_wti(int n, int m, WtiReport* report = nullptr);
InequalitySystem gen_sti(int n, int m, long budget = 2000000);

enum class KmAlgebra { At, GrAt, B1, B2, GrB1, GrB2, B, GrB };
const char* km_algebra_name(KmAlgebra a);
std::optional<KmAlgebra> parse_km_algebra(const std::string& s);

// K_m(A) on (lambda_1, ..., lambda_m; mu). Pairings with both zeta_l, or for the
// Grassmannian algebras B^(k) with zeta_{3-k} only when bk_pairing is set.
InequalitySystem gen_km(int n, KmAlgebra algebra, int m, bool bk_pairing = false);
// The Belkale-Kumar system: gr(B^(1)) and gr(B^(2)) with their own pairings.
InequalitySystem gen_bk(int n, int m);
// Coordinate-wise A_1 triangle inequalities for n = 2.
InequalitySystem gen_a1_product(int m);

// Theta: star on the first m slots, identity on the last.
ConePoint theta(const DihedralContext& ctx, const ConePoint& p);
InequalitySystem theta_system(const InequalitySystem& sys);

struct Membership {
    bool member = true;
    long first_violation = -1;
    FieldElement value;  // value of the first violated inequality
};

// Ray coordinates (a_1, b_1, ..., a_k, b_k) of a point.
Row point_row(const DihedralContext& ctx, const ConePoint& p);
Membership is_member(const InequalitySystem& sys, const ConePoint& p);
Membership is_member_row(const InequalitySystem& sys, const Row& x);

// max objective.x over {x >= 0, sum x = 1, row_r.x <= 0 for every r != skip}; cutting planes over the rows.
struct ConeLpResult {
    LpStatus status = LpStatus::Infeasible;
    FieldElement value;
    Row x;                  // primal vertex (checked against every active row)
    std::vector<long> support;  // rows kept in the final LP
    Row y;                  // duals on support rows
    FieldElement z;         // dual of the normalization
    long lps = 0;
    long pivots = 0;
};

ConeLpResult lp_optimize(const InequalitySystem& sys, const Row& objective, long skip = -1);
// Re-checks the certificate of an lp_optimize result from scratch.
bool verify_cone_certificate(const InequalitySystem& sys, const Row& objective, long skip, const ConeLpResult& res);

enum class RowStatus { Facet, Redundant, Implied, NotImplied, Verbatim };
const char* row_status_name(RowStatus s);

struct RowCertificate {
    long index = -1;
    InequalityTag tag;
    RowStatus status = RowStatus::Facet;
    FieldElement optimum;
    Row witness;  // primal point (facet / not implied)
};

struct RedundancyReport {
    bool all_facets = true;
    std::vector<RowCertificate> rows;
    long lps = 0;
};

RedundancyReport redundancy_audit(const InequalitySystem& sys);

// Experimental constructive witness for a WTI inequality: regular weights off the pair (i, j), a deep
// lambda_j, and lambda_i at the midpoint of the side of lambda_j^* + Hull(W lambda_K^*) whose outward
// normal is the covector of slot i. Validated by exact evaluation of every row.
struct ConstructiveWitness {
    long target = -1;
    Row point;
    bool dominant = false;
    bool target_tight = false;
    long other_tight = 0;
    long violated = 0;
    int polygon_vertices = 0;  // distinct points of W lambda_K^*
    bool valid = false;        // dominant, target tight, all other rows strict
};

ConstructiveWitness wti_constructive_witness(const InequalitySystem& wti, long index);

struct ConeEqualReport {
    bool equal = true;
    std::vector<RowCertificate> a_in_b, b_in_a;
    long lps = 0;
    long memo_hits = 0;
    std::string first_failure;
};

// Slot permutations preserving the system, checked on generators of S_k.
bool symmetric_in_slots(const InequalitySystem& sys, int first, int count);
ConeEqualReport cone_equal(const InequalitySystem& a, const InequalitySystem& b);

// Coherence: membership in K_{m+l-1}(A) vs existence of a splitting weight mu'.
struct CoherenceReport {
    bool pass = true;
    long members = 0, non_members = 0, compositions = 0;
    std::string first_failure;
};

// Exact feasibility of the splitting LP; returns the ray coordinates of mu'.
std::optional<Row> find_splitting(const InequalitySystem& km, const InequalitySystem& kl, const Row& p);
CoherenceReport coherence_check(int n, int m, int l, int samples, std::uint64_t seed);

}  // namespace dihedral

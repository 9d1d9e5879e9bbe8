#include "dihedral/cones.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "dihedral/prering.hpp"

namespace dihedral {

DihedralContext::DihedralContext(int n_)
    : n(n_), field(make_cyclotomic_field(n_)), group(n_), plane(field, group) {
    for (int l = 1; l <= 2; ++l)
        for (const auto& w : group.elements()) {
            Vec2 v = plane.act(w, plane.zeta(l));
            pairing[l - 1].push_back({dot(v, plane.zeta(1)), dot(v, plane.zeta(2))});
        }
    star_swaps = vec_equal(plane.star(plane.zeta(1)), plane.zeta(2));
}

std::shared_ptr<const DihedralContext> dihedral_context(int n) {
    static std::map<int, std::shared_ptr<const DihedralContext>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const DihedralContext>(n);
    cache.emplace(n, ctx);
    return ctx;
}

std::string tag_string(const InequalityTag& t) {
    std::string s = t.system;
    if (!t.algebra.empty()) s += "[" + t.algebra + "]";
    s += " l=" + std::to_string(t.l);
    if (t.slot_i >= 0) s += " slots=(" + std::to_string(t.slot_i + 1) + "," + std::to_string(t.slot_j + 1) + ")";
    if (!t.tuple.empty()) {
        s += " w=(";
        for (std::size_t k = 0; k < t.tuple.size(); ++k) s += (k ? "," : "") + to_string(t.tuple[k]);
        s += ")";
    }
    return s;
}

// ---------------------------------------------------------------------------

Row normalize_row(const Row& row) {
    for (const auto& e : row)
        if (!e.is_zero()) {
            FieldElement scale = e.abs().inverse();
            Row out;
            out.reserve(row.size());
            for (const auto& v : row) out.push_back(v * scale);
            return out;
        }
    return row;
}

std::string InequalitySystem::row_key(const Row& row) {
    std::string key;
    for (const auto& e : normalize_row(row)) {
        for (const auto& c : e.coeffs()) {
            key += c.get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

InequalitySystem::InequalitySystem(int n, int slots, bool dedup) : ctx_(dihedral_context(n)), slots_(slots), dedup_(dedup) {
    if (slots < 1) fail(ErrorKind::InvalidParameter, "inequality system needs at least one slot");
}

bool InequalitySystem::add(std::vector<Vec2> covectors, InequalityTag tag) {
    if (static_cast<int>(covectors.size()) != slots_) fail(ErrorKind::InvalidParameter, "covector count does not match the slot count");
    Row row;
    row.reserve(2 * slots_);
    for (const auto& c : covectors) {
        row.push_back(dot(c, ctx_->plane.zeta(1)));
        row.push_back(dot(c, ctx_->plane.zeta(2)));
    }
    auto it = std::find_if(row.begin(), row.end(), [](const FieldElement& e) { return !e.is_zero(); });
    if (it == row.end()) {
        ++dropped_;  // the trivial inequality 0 <= 0
        return false;
    }
    FieldElement scale = it->abs().inverse();
    for (auto& v : row) v *= scale;
    for (auto& c : covectors) c = vec_scale(c, scale);
    std::string key = row_key(row);
    if (dedup_ && keys_.count(key)) {
        ++dropped_;
        return false;
    }
    keys_.emplace(key, ineqs_.size());
    std::vector<double> approx;
    for (const auto& v : row) approx.push_back(v.to_double());
    approx_.push_back(std::move(approx));
    ineqs_.push_back({std::move(covectors), std::move(row), std::move(tag)});
    return true;
}

bool InequalitySystem::contains(const Row& row) const { return keys_.count(row_key(row)) > 0; }

// ---------------------------------------------------------------------------

InequalitySystem gen_wti(int n, int m, WtiReport* report) {
    if (m < 2) fail(ErrorKind::InvalidParameter, "WTI needs m >= 2");
    InequalitySystem sys(n, m);
    const auto& ctx = sys.context();
    const auto& g = ctx.group;
    const auto wo = g.longest();
    for (int l = 1; l <= 2; ++l)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (const auto& w : g.elements()) {
                    std::vector<WeylElement> tuple(m, wo);
                    tuple[i] = w;
                    tuple[j] = g.pd(w);
                    std::vector<Vec2> cov;
                    for (const auto& u : tuple) cov.push_back(ctx.plane.act(u, ctx.plane.zeta(l)));
                    sys.add(std::move(cov), {"WTI", "", l, tuple, i, j});
                }
    // The w-form <w(lambda_i - lambda_j^*), zeta_l> <= <sum_k lambda_k^*, zeta_l>.
    InequalitySystem wform(n, m);
    for (int l = 1; l <= 2; ++l)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                for (const auto& w : g.elements()) {
                    Vec2 v = ctx.plane.act(g.inverse(w), ctx.plane.zeta(l));
                    std::vector<Vec2> cov(m, ctx.plane.act(wo, ctx.plane.zeta(l)));
                    cov[i] = v;
                    cov[j] = ctx.plane.act(wo, v);
                    wform.add(std::move(cov), {"WTI", "", l, {w}, i, j});
                }
            }
    bool agree = wform.size() == sys.size();
    for (const auto& q : wform.inequalities()) agree = agree && sys.contains(q.row);
    if (!agree) fail(ErrorKind::Precondition, "WTI tuple form and w-form disagree");
    if (report) {
        report->expected_count = 2L * n * m * (m - 1) / 2;
        report->tuple_form_count = static_cast<long>(sys.size());
        report->w_form_count = static_cast<long>(wform.size());
        report->forms_agree = agree;
    }
    return sys;
}

InequalitySystem gen_sti(int n, int m, long budget) {
    InequalitySystem sys(n, m);
    const auto& ctx = sys.context();
    for (const auto& tuple : enumerate_sigma_Am(n, m, budget))
        for (int k = 1; k <= 2; ++k) {
            std::vector<Vec2> cov;
            for (const auto& u : tuple) cov.push_back(ctx.plane.act(u, ctx.plane.zeta(k)));
            sys.add(std::move(cov), {"STI", "", k, tuple, -1, -1});
        }
    return sys;
}

const char* km_algebra_name(KmAlgebra a) {
    switch (a) {
    case KmAlgebra::At: return "At";
    case KmAlgebra::GrAt: return "grAt";
    case KmAlgebra::B1: return "B1";
    case KmAlgebra::B2: return "B2";
    case KmAlgebra::GrB1: return "grB1";
    case KmAlgebra::GrB2: return "grB2";
    case KmAlgebra::B: return "B";
    case KmAlgebra::GrB: return "grB";
    }
    return "?";
}

std::optional<KmAlgebra> parse_km_algebra(const std::string& s) {
    for (auto a : {KmAlgebra::At, KmAlgebra::GrAt, KmAlgebra::B1, KmAlgebra::B2, KmAlgebra::GrB1, KmAlgebra::GrB2, KmAlgebra::B, KmAlgebra::GrB})
        if (s == km_algebra_name(a)) return a;
    return std::nullopt;
}

namespace {

void add_km_rows(InequalitySystem& sys, const UniversalAlgebra& alg, KmAlgebra kind, int m, bool bk_pairing) {
    const auto& ctx = sys.context();
    const auto& g = alg.group();
    int side = 0;
    bool graded = false;
    switch (kind) {
    case KmAlgebra::At: break;
    case KmAlgebra::GrAt: graded = true; break;
    case KmAlgebra::B1: side = 1; break;
    case KmAlgebra::B2: side = 2; break;
    case KmAlgebra::GrB1: side = 1; graded = true; break;
    case KmAlgebra::GrB2: side = 2; graded = true; break;
    default: fail(ErrorKind::InvalidParameter, "composite algebra passed to add_km_rows");
    }
    std::vector<WeylElement> basis = side == 0 ? g.elements() : alg.B_basis(side);
    std::optional<ConcaveWeighting> phi;
    if (graded) phi = make_weighting(alg, side);
    std::vector<int> pairings = {1, 2};
    if (bk_pairing && side != 0) pairings = {3 - side};

    auto times_basis = [&](const ClassVector& a, const WeylElement& x) {
        auto out = alg.zero();
        for (int i = 0; i < alg.size(); ++i) {
            if (a[i].is_zero()) continue;
            const auto& terms = graded ? gr_mul(alg, *phi, g.at(i), x) : alg.mul_basis(g.at(i), x);
            for (const auto& t : terms) out[g.index(t.w)] += a[i] * t.c;
        }
        return out;
    };

    std::vector<WeylElement> xs(m);
    auto rec = [&](auto&& self, int slot, const ClassVector& acc) -> void {
        if (slot == m) {
            for (const auto& y : basis) {
                if (acc[g.index(y)].is_zero()) continue;
                std::vector<WeylElement> tuple = xs;
                tuple.push_back(y);
                for (int l : pairings) {
                    std::vector<Vec2> cov;
                    for (const auto& x : xs) {
                        Vec2 v = ctx.plane.act(x, ctx.plane.zeta(l));
                        cov.push_back({-v[0], -v[1]});
                    }
                    cov.push_back(ctx.plane.act(y, ctx.plane.zeta(l)));
                    sys.add(std::move(cov), {graded && side && bk_pairing ? "BK" : "KM", km_algebra_name(kind), l, tuple, -1, -1});
                }
            }
            return;
        }
        for (const auto& x : basis) {
            xs[slot] = x;
            self(self, slot + 1, slot == 0 ? alg.basis(x) : times_basis(acc, x));
        }
    };
    rec(rec, 0, alg.unit());
}

}  // namespace

InequalitySystem gen_km(int n, KmAlgebra algebra, int m, bool bk_pairing) {
    if (m < 1) fail(ErrorKind::InvalidParameter, "K_m needs m >= 1");
    InequalitySystem sys(n, m + 1);
    UniversalAlgebra alg(sys.field());
    if (algebra == KmAlgebra::B || algebra == KmAlgebra::GrB) {
        bool gr = algebra == KmAlgebra::GrB;
        add_km_rows(sys, alg, gr ? KmAlgebra::GrB1 : KmAlgebra::B1, m, bk_pairing);
        add_km_rows(sys, alg, gr ? KmAlgebra::GrB2 : KmAlgebra::B2, m, bk_pairing);
    } else {
        add_km_rows(sys, alg, algebra, m, bk_pairing);
    }
    return sys;
}

InequalitySystem gen_bk(int n, int m) { return gen_km(n, KmAlgebra::GrB, m, true); }

InequalitySystem gen_a1_product(int m) {
    if (m < 2) fail(ErrorKind::InvalidParameter, "triangle inequalities need m >= 2");
    InequalitySystem sys(2, m);
    const auto& ctx = sys.context();
    for (int k = 1; k <= 2; ++k) {
        const Vec2& e = ctx.plane.zeta(k);  // orthonormal for n = 2
        for (int i = 0; i < m; ++i) {
            std::vector<Vec2> cov(m, vec_scale(e, FieldElement::from_int(ctx.field, -1)));
            cov[i] = e;
            sys.add(std::move(cov), {"A1", "", k, {}, i, -1});
        }
    }
    return sys;
}

ConePoint theta(const DihedralContext& ctx, const ConePoint& p) {
    ConePoint out = p;
    if (ctx.star_swaps)
        for (std::size_t s = 0; s + 1 < out.size(); ++s) std::swap(out[s].a, out[s].b);
    return out;
}

InequalitySystem theta_system(const InequalitySystem& sys) {
    InequalitySystem out(sys.n(), sys.slots());
    const auto& plane = sys.context().plane;
    for (const auto& q : sys.inequalities()) {
        auto cov = q.covectors;
        for (int s = 0; s + 1 < sys.slots(); ++s) cov[s] = plane.star(cov[s]);
        out.add(std::move(cov), q.tag);
    }
    return out;
}

// ---------------------------------------------------------------------------

Row point_row(const DihedralContext& ctx, const ConePoint& p) {
    Row x;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (p[s].a < 0 || p[s].b < 0) fail(ErrorKind::DomainError, "slot " + std::to_string(s + 1) + " is not dominant");
        x.push_back(FieldElement::from_rational(ctx.field, p[s].a));
        x.push_back(FieldElement::from_rational(ctx.field, p[s].b));
    }
    return x;
}

namespace {

// Sign of row . x with a floating filter; exact arithmetic only near zero.
int row_sign(const Row& row, const std::vector<double>& approx, const Row& x, const std::vector<double>& xd) {
    double s = 0, mag = 0;
    for (std::size_t j = 0; j < xd.size(); ++j) {
        s += approx[j] * xd[j];
        mag += std::fabs(approx[j] * xd[j]);
    }
    double bound = 1e-9 * (1.0 + mag);
    if (s > bound) return 1;
    if (s < -bound) return -1;
    return sign_of(row_dot(row, x));
}

std::vector<double> to_doubles(const Row& x) {
    std::vector<double> d;
    for (const auto& v : x) d.push_back(v.to_double());
    return d;
}

}  // namespace

Membership is_member_row(const InequalitySystem& sys, const Row& x) {
    if (static_cast<int>(x.size()) != sys.nvars()) fail(ErrorKind::InvalidParameter, "point has the wrong number of slots");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (sign_of(x[j]) < 0) fail(ErrorKind::DomainError, "slot " + std::to_string(j / 2 + 1) + " is not dominant");
    auto xd = to_doubles(x);
    Membership res;
    for (std::size_t r = 0; r < sys.size(); ++r) {
        const auto& q = sys.inequalities()[r];
        if (row_sign(q.row, sys.approx_rows()[r], x, xd) > 0) {
            res.member = false;
            res.first_violation = static_cast<long>(r);
            res.value = row_dot(q.row, x);
            return res;
        }
    }
    return res;
}

Membership is_member(const InequalitySystem& sys, const ConePoint& p) {
    if (static_cast<int>(p.size()) != sys.slots()) fail(ErrorKind::InvalidParameter, "point has the wrong number of slots");
    return is_member_row(sys, point_row(sys.context(), p));
}

// ---------------------------------------------------------------------------

ConeLpResult lp_optimize(const InequalitySystem& sys, const Row& objective, long skip) {
    const int nv = sys.nvars();
    if (static_cast<int>(objective.size()) != nv) fail(ErrorKind::InvalidParameter, "objective has the wrong length");
    const auto& f = sys.field();
    const long total = static_cast<long>(sys.size());
    ConeLpResult res;
    std::vector<long> working;
    std::vector<bool> in_working(total, false);
    for (;;) {
        LinearProgram lp;
        lp.nvars = nv;
        for (long r : working) {
            lp.le_rows.push_back(sys.inequalities()[r].row);
            lp.le_rhs.push_back(FieldElement::from_int(f, 0));
        }
        lp.eq_rows.push_back(Row(nv, FieldElement::from_int(f, 1)));
        lp.eq_rhs.push_back(FieldElement::from_int(f, 1));
        lp.objective = objective;
        auto sol = lp_solve(f, lp);
        ++res.lps;
        res.pivots += sol.pivots;
        if (sol.status != LpStatus::Optimal) {
            res.status = sol.status;
            res.support = working;
            return res;
        }
        auto xd = to_doubles(sol.x);
        std::vector<std::pair<double, long>> violated;
        for (long r = 0; r < total; ++r) {
            if (r == skip || in_working[r]) continue;
            const auto& ad = sys.approx_rows()[r];
            if (row_sign(sys.inequalities()[r].row, ad, sol.x, xd) > 0) {
                double s = 0;
                for (int j = 0; j < nv; ++j) s += ad[j] * xd[j];
                violated.push_back({-s, r});
            }
        }
        if (violated.empty()) {
            res.status = LpStatus::Optimal;
            res.value = sol.value;
            res.x = sol.x;
            res.support = working;
            res.y = sol.y;
            res.z = sol.z[0];
            return res;
        }
        std::sort(violated.begin(), violated.end());
        const std::size_t batch = std::min<std::size_t>(violated.size(), 2 * nv + 8);
        for (std::size_t k = 0; k < batch; ++k) {
            working.push_back(violated[k].second);
            in_working[violated[k].second] = true;
        }
    }
}

bool verify_cone_certificate(const InequalitySystem& sys, const Row& objective, long skip, const ConeLpResult& res) {
    if (res.status != LpStatus::Optimal) return false;
    const int nv = sys.nvars();
    FieldElement sum;
    for (const auto& v : res.x) {
        if (sign_of(v) < 0) return false;
        sum += v;
    }
    if (sum != FieldElement::from_int(sys.field(), 1)) return false;
    for (long r = 0; r < static_cast<long>(sys.size()); ++r)
        if (r != skip && sign_of(row_dot(sys.inequalities()[r].row, res.x)) > 0) return false;
    if (row_dot(objective, res.x) != res.value) return false;
    if (res.y.size() != res.support.size()) return false;
    for (const auto& v : res.y)
        if (sign_of(v) < 0) return false;
    for (int j = 0; j < nv; ++j) {
        FieldElement s = res.z;
        for (std::size_t k = 0; k < res.support.size(); ++k)
            if (!res.y[k].is_zero()) s += res.y[k] * sys.inequalities()[res.support[k]].row[j];
        if (compare(s, objective[j]) < 0) return false;
    }
    return res.z == res.value;
}

const char* row_status_name(RowStatus s) {
    switch (s) {
    case RowStatus::Facet: return "facet";
    case RowStatus::Redundant: return "redundant";
    case RowStatus::Implied: return "implied";
    case RowStatus::NotImplied: return "not-implied";
    case RowStatus::Verbatim: return "verbatim";
    }
    return "?";
}

ConstructiveWitness wti_constructive_witness(const InequalitySystem& wti, long index) {
    const auto& ctx = wti.context();
    const auto& pl = ctx.plane;
    const int m = wti.slots();
    if (index < 0 || index >= static_cast<long>(wti.size())) fail(ErrorKind::OutOfRange, "inequality index out of range");
    const auto& q = wti.inequalities()[index];
    if (q.tag.system != "WTI" || m < 3) fail(ErrorKind::InvalidParameter, "witness needs a WTI inequality with m >= 3");
    const int i = q.tag.slot_i, j = q.tag.slot_j;
    const FieldElement zero = FieldElement::from_int(ctx.field, 0), one = FieldElement::from_int(ctx.field, 1);
    const Vec2 rho = pl.from_ray(one, one);

    ConstructiveWitness out;
    out.target = index;
    std::vector<Vec2> lam(m, rho);
    // Distance from lambda_j to the walls is at least c |rho| sin(pi/2n) >= (c/n) |rho|.
    lam[j] = vec_scale(rho, FieldElement::from_int(ctx.field, ctx.n * (m - 1)));
    Vec2 lk{zero, zero};
    for (int k = 0; k < m; ++k)
        if (k != i && k != j) lk = vec_add(lk, pl.star(lam[k]));
    const Vec2& normal = q.covectors[i];
    std::vector<Vec2> orbit, best;
    FieldElement top;
    for (const auto& w : ctx.group.elements()) {
        Vec2 p = pl.act(w, lk);
        if (std::none_of(orbit.begin(), orbit.end(), [&](const Vec2& o) { return vec_equal(o, p); })) orbit.push_back(p);
    }
    out.polygon_vertices = static_cast<int>(orbit.size());
    for (const auto& p : orbit) {
        FieldElement v = dot(p, normal);
        int c = best.empty() ? 1 : compare(v, top);
        if (c > 0) {
            best = {p};
            top = v;
        } else if (c == 0) {
            best.push_back(p);
        }
    }
    Vec2 mid = best.size() == 2 ? vec_scale(vec_add(best[0], best[1]), FieldElement::from_rational(ctx.field, Rational(1, 2))) : best[0];
    lam[i] = vec_add(pl.star(lam[j]), mid);

    out.point.reserve(2 * m);
    out.dominant = true;
    for (const auto& v : lam) {
        auto [a, b] = pl.ray_coords(v);
        if (sign_of(a) < 0 || sign_of(b) < 0) out.dominant = false;
        out.point.push_back(a);
        out.point.push_back(b);
    }
    for (long r = 0; r < static_cast<long>(wti.size()); ++r) {
        int s = sign_of(row_dot(wti.inequalities()[r].row, out.point));
        if (r == index) out.target_tight = s == 0;
        else if (s == 0) ++out.other_tight;
        else if (s > 0) ++out.violated;
    }
    out.valid = out.dominant && out.target_tight && out.other_tight == 0 && out.violated == 0;
    return out;
}

RedundancyReport redundancy_audit(const InequalitySystem& sys) {
    RedundancyReport rep;
    for (long r = 0; r < static_cast<long>(sys.size()); ++r) {
        const auto& q = sys.inequalities()[r];
        auto res = lp_optimize(sys, q.row, r);
        rep.lps += res.lps;
        RowCertificate cert;
        cert.index = r;
        cert.tag = q.tag;
        if (res.status != LpStatus::Optimal) fail(ErrorKind::Infeasible, "audit LP failed at " + tag_string(q.tag));
        cert.optimum = res.value;
        if (sign_of(res.value) > 0) {
            cert.status = RowStatus::Facet;
            cert.witness = res.x;
        } else {
            cert.status = RowStatus::Redundant;
            rep.all_facets = false;
        }
        rep.rows.push_back(std::move(cert));
    }
    return rep;
}

namespace {

std::vector<int> permute_slots(int slots, const std::vector<int>& perm_part, int first) {
    std::vector<int> p(slots);
    for (int s = 0; s < slots; ++s) p[s] = s;
    for (std::size_t k = 0; k < perm_part.size(); ++k) p[first + k] = first + perm_part[k];
    return p;
}

Row apply_perm(const Row& row, const std::vector<int>& p) {
    Row out(row.size());
    for (std::size_t s = 0; s < p.size(); ++s) {
        out[2 * p[s]] = row[2 * s];
        out[2 * p[s] + 1] = row[2 * s + 1];
    }
    return out;
}

// Key of the orbit of a row under permutations of slots [first, first + count).
std::string orbit_key(const Row& row, int first, int count) {
    Row nrow = normalize_row(row);
    std::vector<std::string> parts;
    for (int s = first; s < first + count; ++s) parts.push_back(InequalitySystem::row_key({nrow[2 * s], nrow[2 * s + 1]}));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (int s = 0; s < static_cast<int>(nrow.size() / 2); ++s) {
        if (s == first) {
            for (const auto& p : parts) key += p + "|";
            continue;
        }
        if (s > first && s < first + count) continue;
        key += InequalitySystem::row_key({nrow[2 * s], nrow[2 * s + 1]}) + "|";
    }
    return key;
}

}  // namespace

bool symmetric_in_slots(const InequalitySystem& sys, int first, int count) {
    if (count <= 1) return true;
    std::vector<int> swap01(count), cycle(count);
    for (int k = 0; k < count; ++k) {
        swap01[k] = k;
        cycle[k] = (k + 1) % count;
    }
    std::swap(swap01[0], swap01[1]);
    for (const auto& part : {swap01, cycle}) {
        auto p = permute_slots(sys.slots(), part, first);
        for (const auto& q : sys.inequalities())
            if (!sys.contains(apply_perm(q.row, p))) return false;
    }
    return true;
}

namespace {

void audit_into(const InequalitySystem& src, const InequalitySystem& dst, std::vector<RowCertificate>& out, ConeEqualReport& rep,
                const std::string& label) {
    int first = 0, count = 0;
    if (symmetric_in_slots(dst, 0, dst.slots())) count = dst.slots();
    else if (symmetric_in_slots(dst, 0, dst.slots() - 1)) count = dst.slots() - 1;
    std::unordered_map<std::string, std::pair<RowStatus, FieldElement>> memo;
    for (long r = 0; r < static_cast<long>(src.size()); ++r) {
        const auto& q = src.inequalities()[r];
        RowCertificate cert;
        cert.index = r;
        cert.tag = q.tag;
        if (dst.contains(q.row)) {
            cert.status = RowStatus::Verbatim;
            cert.optimum = FieldElement::from_int(src.field(), 0);
            out.push_back(std::move(cert));
            continue;
        }
        std::string key = count > 1 ? orbit_key(q.row, first, count) : InequalitySystem::row_key(q.row);
        auto it = memo.find(key);
        if (it != memo.end()) {
            ++rep.memo_hits;
            cert.status = it->second.first;
            cert.optimum = it->second.second;
        } else {
            auto res = lp_optimize(dst, q.row);
            rep.lps += res.lps;
            if (res.status != LpStatus::Optimal) fail(ErrorKind::Infeasible, "implication LP failed at " + tag_string(q.tag));
            cert.optimum = res.value;
            cert.status = sign_of(res.value) > 0 ? RowStatus::NotImplied : RowStatus::Implied;
            if (cert.status == RowStatus::NotImplied) cert.witness = res.x;
            memo.emplace(key, std::make_pair(cert.status, cert.optimum));
        }
        if (cert.status == RowStatus::NotImplied) {
            rep.equal = false;
            if (rep.first_failure.empty()) rep.first_failure = label + ": " + tag_string(q.tag) + " is not implied";
        }
        out.push_back(std::move(cert));
    }
}

}  // namespace

ConeEqualReport cone_equal(const InequalitySystem& a, const InequalitySystem& b) {
    if (a.n() != b.n() || a.slots() != b.slots()) fail(ErrorKind::InvalidParameter, "cone_equal needs systems on the same space");
    ConeEqualReport rep;
    audit_into(a, b, rep.a_in_b, rep, "a in b");
    audit_into(b, a, rep.b_in_a, rep, "b in a");
    return rep;
}

// ---------------------------------------------------------------------------

std::optional<Row> find_splitting(const InequalitySystem& km, const InequalitySystem& kl, const Row& p) {
    const int m = km.slots() - 1, l = kl.slots() - 1;
    if (static_cast<int>(p.size()) != 2 * (m + l)) fail(ErrorKind::InvalidParameter, "splitting point has the wrong number of slots");
    const auto& f = km.field();
    LinearProgram lp;
    lp.nvars = 2;
    lp.objective = Row(2, FieldElement::from_int(f, 0));
    for (const auto& q : km.inequalities()) {
        FieldElement rest;
        for (int j = 0; j < 2 * m; ++j) rest += q.row[j] * p[j];
        lp.le_rows.push_back({q.row[2 * m], q.row[2 * m + 1]});
        lp.le_rhs.push_back(-rest);
    }
    for (const auto& q : kl.inequalities()) {
        FieldElement rest;
        for (int j = 2; j < 2 * (l + 1); ++j) rest += q.row[j] * p[2 * m + j - 2];
        lp.le_rows.push_back({q.row[0], q.row[1]});
        lp.le_rhs.push_back(-rest);
    }
    for (auto& v : lp.le_rhs)
        if (!v.field()) v = FieldElement::from_int(f, 0);
    auto sol = lp_solve(f, lp);
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    if (!check_primal(lp, sol.x)) fail(ErrorKind::Precondition, "splitting LP returned an infeasible point");
    return sol.x;
}

CoherenceReport coherence_check(int n, int m, int l, int samples, std::uint64_t seed) {
    if (m < 1 || l < 1) fail(ErrorKind::InvalidParameter, "coherence needs m, l >= 1");
    auto km = gen_km(n, KmAlgebra::At, m);
    auto kl = gen_km(n, KmAlgebra::At, l);
    auto kml = gen_km(n, KmAlgebra::At, m + l - 1);
    const auto& ctx = km.context();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(0, 12), den(1, 4);
    auto rnd = [&]() { return Rational(num(rng), den(rng)); };
    CoherenceReport rep;
    const int k = m + l - 1;
    for (int s = 0; s < samples; ++s) {
        ConePoint p;
        for (int i = 0; i < k; ++i) p.push_back({rnd(), rnd()});
        // mu: the sum of the lambdas (a boundary point), scaled and perturbed copies.
        Rational sa = 0, sb = 0;
        for (int i = 0; i < k; ++i) {
            sa += p[i].a;
            sb += p[i].b;
        }
        std::vector<DominantWeight> mus{{sa, sb}};
        Rational scale(num(rng), 12);
        mus.push_back({sa * scale + rnd() / 4, sb * scale + rnd() / 4});
        mus.push_back({rnd(), rnd()});
        for (const auto& mu : mus) {
            ConePoint q = p;
            q.push_back(mu);
            Row x = point_row(ctx, q);
            bool member = is_member_row(kml, x).member;
            bool split = find_splitting(km, kl, x).has_value();
            (member ? rep.members : rep.non_members)++;
            if (member != split) {
                rep.pass = false;
                if (rep.first_failure.empty())
                    rep.first_failure = std::string(member ? "member without" : "non-member with") + " a splitting, sample " + std::to_string(s);
            }
        }
        // Composition direction: a member of K_m followed by a member of K_l.
        ConePoint first(p.begin(), p.begin() + m);
        Rational pa = 0, pb = 0;
        for (const auto& w : first) {
            pa += w.a;
            pb += w.b;
        }
        Rational shrink(num(rng) + 1, 13);
        DominantWeight mid{pa * shrink, pb * shrink};
        ConePoint left = first;
        left.push_back(mid);
        if (!is_member(km, left).member) continue;
        ConePoint right{mid};
        for (int i = m; i < k; ++i) right.push_back(p[i]);
        Rational ra = mid.a, rb = mid.b;
        for (int i = m; i < k; ++i) {
            ra += p[i].a;
            rb += p[i].b;
        }
        DominantWeight mu{ra * shrink, rb * shrink};
        right.push_back(mu);
        if (!is_member(kl, right).member) continue;
        ++rep.compositions;
        ConePoint whole = p;
        whole.push_back(mu);
        if (!is_member(kml, whole).member) {
            rep.pass = false;
            if (rep.first_failure.empty()) rep.first_failure = "composition left K_{m+l-1}, sample " + std::to_string(s);
        }
    }
    return rep;
}

}  // namespace dihedral

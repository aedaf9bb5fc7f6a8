#include "bpcat/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bpcat {

namespace {

long catalogue_dim(const CatLabel& L, int p) {
    switch (L.kind) {
        case CatLabel::V: return p;
        case CatLabel::S: return L.i + 1;
        case CatLabel::P: return 2 * p;
    }
    return 0;
}

// Candidate summands whose highest weight is a ker(E)-weight of M.
std::vector<CatLabel> candidates(const WeightModule& M, int p) {
    std::set<Rat> hws;
    for (const CVec& v : M.E.nullspace())
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                hws.insert(M.weights[i]);
                break;
            }
    std::vector<CatLabel> cand;
    for (const Rat& h : hws) {
        cand.push_back({CatLabel::V, h - (p - 1), 0, 0});
        if (is_integer(h)) {
            long hh = to_long(h);
            long i = ((hh % p) + p) % p;
            if (i <= p - 2) cand.push_back({CatLabel::S, Rat(0), (int)i, (hh - i) / p});
            long ip = (((-hh - 2) % p) + p) % p;
            if (ip <= p - 2) cand.push_back({CatLabel::P, Rat(0), (int)ip, (hh + 2 + ip) / p - 2});
        }
    }
    std::sort(cand.begin(), cand.end(), [&](const CatLabel& a, const CatLabel& b) {
        long da = catalogue_dim(a, p), db = catalogue_dim(b, p);
        if (da != db) return da > db;
        return a < b;
    });
    return cand;
}

// Find f: L -> M, g: M -> L with g f invertible; returns (f, pi) with
// pi = (gf)^{-1} g, or nullopt if L does not split off.
std::optional<std::pair<CMat, CMat>> try_split(const WeightModule& L, const WeightModule& M) {
    std::vector<CMat> A = hom_space(L, M);
    if (A.empty()) return std::nullopt;
    std::vector<CMat> B = hom_space(M, L);
    if (B.empty()) return std::nullopt;
    auto attempt = [&](const CMat& f, const CMat& g) -> std::optional<std::pair<CMat, CMat>> {
        CMat gf = g * f;
        auto inv = gf.inverse();
        if (!inv) return std::nullopt;
        return std::make_pair(f, *inv * g);
    };
    for (const CMat& f : A)
        for (const CMat& g : B)
            if (auto r = attempt(f, g)) return r;
    // small deterministic combinations (covers End(P) = 2 corner cases)
    static const long coefs[] = {1, -1, 2, -2};
    for (long ca : coefs)
        for (size_t a1 = 0; a1 < A.size(); ++a1)
            for (size_t a2 = a1 + 1; a2 < A.size(); ++a2) {
                CMat f = A[a1] + A[a2].scaled(CycScalar::from_rat(Rat(ca)));
                for (const CMat& g : B)
                    if (auto r = attempt(f, g)) return r;
                for (long cb : coefs)
                    for (size_t b1 = 0; b1 < B.size(); ++b1)
                        for (size_t b2 = b1 + 1; b2 < B.size(); ++b2) {
                            CMat g = B[b1] + B[b2].scaled(CycScalar::from_rat(Rat(cb)));
                            if (auto r = attempt(f, g)) return r;
                        }
            }
    return std::nullopt;
}

}  // namespace

FusionDecomp decompose(const WeightModule& M, int p) {
    FusionDecomp out;
    std::vector<CMat> projs;  // original M -> L_k
    CMat chain = CMat::identity(M.dim);
    WeightModule cur = M;
    while (cur.dim > 0) {
        bool peeled = false;
        for (const CatLabel& L : candidates(cur, p)) {
            if (catalogue_dim(L, p) > cur.dim) continue;
            WeightModule Lm = realize(L, p);
            auto split = try_split(Lm, cur);
            if (!split) continue;
            const auto& [f, pi] = *split;
            out.order.push_back(L);
            projs.push_back(pi * chain);
            if (cur.dim == Lm.dim) {
                cur = WeightModule{};
                cur.p = p;
                cur.dim = 0;
                peeled = true;
                break;
            }
            CMat e = f * pi;
            CMat rest = CMat::identity(cur.dim) - e;
            std::vector<CVec> gens;
            for (int j = 0; j < cur.dim; ++j) {
                CVec v(cur.dim);
                for (int i = 0; i < cur.dim; ++i) v[i] = rest.at(i, j);
                gens.push_back(std::move(v));
            }
            auto [next, incl] = submodule_generated(cur, gens);
            CMat rho = CMat::solve_columns(incl, rest);  // cur -> next
            chain = rho * chain;
            cur = next;
            peeled = true;
            break;
        }
        if (!peeled)
            throw decomposition_error("decompose: no catalogue summand splits off '" + M.label +
                                      "' remainder of dim " + std::to_string(cur.dim));
    }
    std::vector<WeightModule> blocks;
    for (const CatLabel& L : out.order) blocks.push_back(realize(L, p));
    out.dsum = module_direct_sum(blocks);
    int total = 0;
    for (const auto& b : blocks) total += b.dim;
    if (total != M.dim) throw decomposition_error("decompose: dimension bookkeeping");
    out.cert = CMat(M.dim, M.dim);
    int row = 0;
    for (size_t k = 0; k < blocks.size(); ++k) {
        for (int i = 0; i < blocks[k].dim; ++i)
            for (int j = 0; j < M.dim; ++j) out.cert.at(row + i, j) = projs[k].at(i, j);
        row += blocks[k].dim;
    }
    if (out.cert.rank() != M.dim || !intertwines(M, out.dsum, out.cert))
        throw decomposition_error("decompose: certificate is not an isomorphism");
    std::map<CatLabel, int> agg;
    for (const CatLabel& L : out.order) agg[L]++;
    out.parts.assign(agg.begin(), agg.end());
    return out;
}

std::vector<std::pair<ExtLabel, int>> fuse_ext(const ExtLabel& A, const ExtLabel& B, int p) {
    DObject da = underlying(A), db = underlying(B);
    WeightModule M = tensor(realize(da.wm, p), realize(db.wm, p));
    FusionDecomp dec = decompose(M, p);
    std::map<ExtLabel, int> agg;
    for (const auto& [lbl, mult] : dec.parts) {
        DObject d{da.c + db.c, lbl};
        agg[induce(d, p)] += mult;
    }
    return {agg.begin(), agg.end()};
}

std::vector<SummandScalar> braiding_scalars(const ExtLabel& A, const ExtLabel& B, int p) {
    DObject da = underlying(A), db = underlying(B);
    WeightModule M = realize(da.wm, p), N = realize(db.wm, p);
    CycScalar fock_braid = CycScalar::from_rootexp(FockLine{da.c}.braid_with({db.c}, p));
    CycScalar fock_mono = fock_braid * fock_braid;

    FusionDecomp d1 = decompose(tensor(M, N), p);
    FusionDecomp d2 = decompose(tensor(N, M), p);
    if (d1.parts != d2.parts)
        throw decomposition_error("braiding_scalars: asymmetric decompositions");

    auto block_ranges = [&](const FusionDecomp& d) {
        std::map<CatLabel, std::vector<std::pair<int, int>>> r;
        int at = 0;
        for (const CatLabel& L : d.order) {
            int dim = (int)catalogue_dim(L, p);
            r[L].push_back({at, dim});
            at += dim;
        }
        return r;
    };
    auto r1 = block_ranges(d1), r2 = block_ranges(d2);

    CMat inv1 = *d1.cert.inverse();
    CMat inv2 = *d2.cert.inverse();
    CMat braid = d2.cert * braiding(M, N) * inv1;             // ⊕L -> ⊕L
    CMat mono = d1.cert * monodromy(M, N) * inv1;             // ⊕L -> ⊕L

    // cross-label blocks must vanish
    auto check_block_structure = [&](const CMat& X, const auto& rows, const auto& cols) {
        for (const auto& [la, ras] : rows)
            for (const auto& [lb, cbs] : cols) {
                if (la == lb) continue;
                for (auto [ra, na] : ras)
                    for (auto [cb, nb] : cbs)
                        for (int i = 0; i < na; ++i)
                            for (int j = 0; j < nb; ++j)
                                if (!X.at(ra + i, cb + j).is_zero())
                                    throw decomposition_error(
                                        "braiding_scalars: braiding mixes distinct labels");
            }
    };
    check_block_structure(braid, r2, r1);
    check_block_structure(mono, r1, r1);

    auto isotypic_scalar = [&](const CMat& X, const std::vector<std::pair<int, int>>& rows,
                               const std::vector<std::pair<int, int>>& cols, bool* nil) {
        // gather the full isotypic sub-block and split off its scalar part
        int n = 0;
        for (auto [_, d] : rows) n += d;
        CMat blk(n, n);
        int ro = 0;
        for (auto [ra, na] : rows) {
            int co = 0;
            for (auto [ca, nc] : cols) {
                for (int i = 0; i < na; ++i)
                    for (int j = 0; j < nc; ++j) blk.at(ro + i, co + j) = X.at(ra + i, ca + j);
                co += nc;
            }
            ro += na;
        }
        CycScalar s = blk.trace() / CycScalar::from_rat(Rat(n));
        CMat rem = blk - CMat::identity(n).scaled(s);
        *nil = !rem.is_zero();
        if (*nil && !rem.is_nilpotent(2 * p))
            throw decomposition_error("braiding_scalars: non-scalar semisimple part");
        return s;
    };

    // highest-weight index inside a realized block
    auto top_index = [&](const CatLabel& L) {
        WeightModule Lm = realize(L, p);
        int hi = 0;
        for (int i = 1; i < Lm.dim; ++i)
            if (Lm.weights[i] > Lm.weights[hi]) hi = i;
        return hi;
    };
    auto lead_normalized = [&](const CMat& inv, int col) {
        CVec u(inv.rows());
        for (int i = 0; i < inv.rows(); ++i) u[i] = inv.at(i, col);
        for (int i = 0; i < inv.rows(); ++i)
            if (!u[i].is_zero()) {
                CycScalar d = u[i].inverse();
                for (auto& x : u) x = x.is_zero() ? x : x * d;
                break;
            }
        return u;
    };

    std::vector<SummandScalar> out;
    CMat cmat = braiding(M, N);
    for (const auto& [L, mult] : d1.parts) {
        SummandScalar e;
        e.label = L;
        e.mult = mult;
        bool nil1 = false, nil2 = false;
        e.block_scalar = fock_braid * isotypic_scalar(braid, r2[L], r1[L], &nil1);
        e.monodromy_eig = fock_mono * isotypic_scalar(mono, r1[L], r1[L], &nil2);
        e.nilpotent = nil1;
        if (e.nilpotent && L.kind != CatLabel::P)
            throw decomposition_error("braiding_scalars: nilpotent part on non-projective '" +
                                      L.str() + "'");
        if (mult == 1) {
            int ti = top_index(L);
            CVec u = lead_normalized(inv1, r1[L][0].first + ti);
            CVec up = lead_normalized(inv2, r2[L][0].first + ti);
            CVec cu = cmat.apply(u);
            // cu = s * up exactly on the top line (nilpotents kill it)
            CycScalar s = CycScalar::zero();
            for (size_t i = 0; i < up.size(); ++i)
                if (!up[i].is_zero()) {
                    s = cu[i] / up[i];
                    break;
                }
            for (size_t i = 0; i < up.size(); ++i)
                if (!(cu[i] == s * up[i]))
                    throw decomposition_error("braiding_scalars: top vector not an eigenline");
            e.scalar = fock_braid * s;
        } else {
            e.scalar = e.block_scalar;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace bpcat

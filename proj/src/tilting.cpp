#include "qh/tilting.hpp"

#include "qh/error.hpp"

#include <algorithm>
#include <set>

namespace qh {

namespace {

// complement indices of a subspace, in ascending coordinate order
std::vector<size_t> complement_coords(const Subspace& s, size_t ambient) {
    auto [red, pivots] = s.basis().rref();
    std::vector<bool> is_pivot(ambient, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<size_t> out;
    for (size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

// basis of Ext^1(M, D) realized as maps K -> D for the cover kernel K of M
struct Ext1Data {
    Representation kmod;
    ModuleMap inclusion; // K -> P
    ModuleMap cover;     // P -> M
    std::vector<ModuleMap> classes;
};

Ext1Data ext1_classes(const Representation& m, const Representation& d) {
    Cover c = projective_cover(m);
    Submodule k = kernel_submodule(c.map);
    SubQuotient kq = submodule_as_module(c.proj, k);
    auto hk = hom_basis(kq.rep, d);
    auto hp = hom_basis(c.proj, d);
    // image of the restriction map Hom(P, D) -> Hom(K, D)
    std::vector<ModuleMap> restricted;
    for (const auto& f : hp) restricted.push_back(compose(kq.map, f));
    Matrix rows(restricted.size(), hk.size());
    for (size_t r = 0; r < restricted.size(); ++r) {
        auto coords = hom_coordinates(hk, restricted[r]);
        for (size_t cc = 0; cc < hk.size(); ++cc) rows.at(r, cc) = coords[cc];
    }
    Subspace img = Subspace::span_of_rows(rows);
    std::vector<ModuleMap> classes;
    for (size_t idx : complement_coords(img, hk.size())) classes.push_back(hk[idx]);
    return Ext1Data{kq.rep, kq.map, c.map, std::move(classes)};
}

} // namespace

Representation universal_extension(const Representation& m, const Representation& by_d) {
    Ext1Data ext = ext1_classes(m, by_d);
    size_t d = ext.classes.size();
    if (d == 0) return m;
    const AlgebraPtr& a = m.algebra();
    std::vector<Representation> parts{ext.cover.source};
    for (size_t t = 0; t < d; ++t) parts.push_back(by_d);
    DirectSum ds = direct_sum(a, parts);
    // graph of (inclusion, -g_1, ..., -g_d) on K, a submodule of the sum
    Submodule w = zero_submodule(ds.rep);
    for (size_t v = 0; v < ds.rep.num_vertices(); ++v) {
        int kv = ext.kmod.dim_at(static_cast<int>(v));
        Matrix rows(kv, ds.rep.dim_at(static_cast<int>(v)));
        for (int c = 0; c < kv; ++c) {
            Matrix col(kv, 1);
            col.at(c, 0) = Rational(1);
            Matrix pimg = ext.inclusion.blocks[v] * col;
            for (size_t r = 0; r < pimg.rows(); ++r) rows.at(c, r) = pimg.at(r, 0);
            size_t off = ext.cover.source.dim_at(static_cast<int>(v));
            for (size_t t = 0; t < d; ++t) {
                Matrix dimg = ext.classes[t].blocks[v] * col;
                for (size_t r = 0; r < dimg.rows(); ++r) rows.at(c, off + r) = -dimg.at(r, 0);
                off += by_d.dim_at(static_cast<int>(v));
            }
        }
        w.per_vertex[v] = Subspace::span_of_rows(rows);
    }
    Submodule closed = submodule_generated(ds.rep, w.per_vertex);
    if (closed.total_dim() != w.total_dim()) throw err_internal("universal_extension: graph not a submodule");
    return quotient_module(ds.rep, closed).rep;
}

Representation universal_coextension(const Representation& m, const Representation& by_d) {
    return dualize(universal_extension(dualize(m), dualize(by_d)));
}

namespace {

// ext^1(D, -) with the partial resolution of D computed once
struct Ext1From {
    std::vector<Representation> terms; // P_0, P_1, P_2 (absent when the resolution stops)
    std::vector<ModuleMap> diffs;

    explicit Ext1From(const Representation& d) {
        MinimalResolution res = minimal_resolution(d, 2);
        terms = res.terms;
        diffs = res.differentials;
    }

    size_t eval(const Representation& n) const {
        if (terms.size() < 2) return 0;
        auto h0 = hom_basis(terms[0], n);
        auto h1 = hom_basis(terms[1], n);
        if (h1.empty()) return 0;
        auto rank_to = [&](const std::vector<ModuleMap>& dom, const std::vector<ModuleMap>& cod,
                           const ModuleMap& d) -> size_t {
            if (dom.empty() || cod.empty()) return 0;
            Matrix mat(cod.size(), dom.size());
            for (size_t k = 0; k < dom.size(); ++k) {
                auto coords = hom_coordinates(cod, compose(d, dom[k]));
                for (size_t r = 0; r < cod.size(); ++r) mat.at(r, k) = coords[r];
            }
            return mat.rank();
        };
        size_t rank_in = rank_to(h0, h1, diffs[0]);
        size_t rank_out = 0;
        if (terms.size() >= 3) {
            auto h2 = hom_basis(terms[2], n);
            rank_out = rank_to(h1, h2, diffs[1]);
        }
        return h1.size() - rank_out - rank_in;
    }
};

Representation tilting_sweep(const StratPtr& s, int label, int sweep_cap) {
    Representation x = s->standard(label);
    auto sweep = s->order().descending_linear_extension();
    std::vector<Ext1From> ext1;
    for (size_t l = 0; l < s->num_labels(); ++l) ext1.emplace_back(s->standard(static_cast<int>(l)));
    bool stable = false;
    for (int round = 0; round < sweep_cap && !stable; ++round) {
        stable = true;
        for (int mu : sweep) {
            size_t d = ext1[mu].eval(x);
            if (d > 0) {
                x = universal_coextension(x, s->standard(mu));
                stable = false;
            }
        }
    }
    if (!stable) throw err_non_terminating("tilting sweep did not stabilise within the cap");
    return x;
}

} // namespace

namespace {

Representation tilting_module_unchecked(const StratPtr& s, int label, int sweep_cap) {
    Representation x = tilting_sweep(s, label, sweep_cap);
    if (!has_flag(s, x, FlagFamily::Standard)) throw err_internal("tilting candidate has no standard flag");
    if (!has_flag(s, x, FlagFamily::ProperCostandard))
        throw err_internal("tilting candidate has no proper costandard flag");
    Decomposition dec = decompose(x);
    if (dec.summands.size() == 1 && dec.multiplicities[0] == 1) return x;
    // pick the summand receiving Delta(label) as a submodule
    for (const auto& w : dec.summands) {
        if (hom_basis(s->standard(label), w).empty()) continue;
        auto cert = has_flag(s, w, FlagFamily::Standard, false);
        if (cert && !cert->labels.empty() && cert->labels.back() == label) return w;
    }
    throw err_internal("tilting sweep result has no summand with the expected bottom");
}

} // namespace

Representation tilting_module(const StratPtr& s, int label, int sweep_cap) {
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) throw err_not_stratified("tilting_module: " + ss.witness);
    return tilting_module_unchecked(s, label, sweep_cap);
}

TiltingData build_tilting(const StratPtr& s, int sweep_cap) {
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) throw err_not_stratified("build_tilting: " + ss.witness);
    std::vector<Representation> ts;
    for (size_t l = 0; l < s->num_labels(); ++l) ts.push_back(tilting_module_unchecked(s, static_cast<int>(l), sweep_cap));
    Representation charac = direct_sum(s->algebra(), ts).rep;
    std::vector<FlagCertificate> dcerts, pcerts;
    for (const auto& t : ts) {
        auto dc = has_flag(s, t, FlagFamily::Standard);
        auto pc = has_flag(s, t, FlagFamily::ProperCostandard);
        if (!dc || !pc) throw err_internal("tilting module lost its flags");
        dcerts.push_back(*dc);
        pcerts.push_back(*pc);
    }
    return TiltingData{s, std::move(ts), charac, std::move(dcerts), std::move(pcerts)};
}

RingelDual ringel_dual(const StratPtr& s) {
    TiltingData t = build_tilting(s);
    std::vector<std::string> names;
    for (size_t l = 0; l < s->num_labels(); ++l) names.push_back(s->algebra()->quiver().vertex_label(static_cast<int>(l)));
    PresentedAlgebra p = present_endomorphism_algebra(s->algebra(), t.indecomposable, names);
    // the Ringel dual carries the opposite order
    std::vector<std::pair<int, int>> flipped;
    for (const auto& [a, b] : s->order().generator_pairs()) flipped.emplace_back(b, a);
    StratPtr dual = StratifiedAlgebra::make(p.algebra, StratOrder(s->num_labels(), flipped));
    return RingelDual{std::move(t), std::move(p), std::move(dual)};
}

Representation ringel_functor(const RingelDual& r, const Representation& m) { return hom_module(r.presented, m); }

ModuleMap ringel_functor_map(const RingelDual& r, const ModuleMap& f) { return hom_module_map(r.presented, f); }

Representation regular_module(const AlgebraPtr& a) {
    std::vector<Representation> parts;
    for (size_t v = 0; v < a->quiver().num_vertices(); ++v) parts.push_back(projective_module(a, static_cast<int>(v)));
    return direct_sum(a, parts).rep;
}

CommutantReport commutant_of_endomorphisms(const Representation& q) {
    auto endos = hom_basis(q, q);
    size_t n = q.total_dim();
    // commutant: linear maps on the total space commuting with every endo
    std::vector<Matrix> bmats;
    for (const auto& b : endos) bmats.push_back(b.total());
    Matrix sys(bmats.size() * n * n, n * n);
    size_t row = 0;
    for (const auto& b : bmats) {
        // phi*b - b*phi = 0, unknowns phi[r][c] row-major
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                for (size_t k = 0; k < n; ++k) {
                    sys.at(row, r * n + k) += b.at(k, c);
                    sys.at(row, k * n + c) -= b.at(r, k);
                }
                ++row;
            }
    }
    size_t commutant = sys.kernel_basis().rows();
    // faithfulness of the algebra action on q
    const AlgebraPtr& a = q.algebra();
    size_t dima = a->dim();
    Matrix act(n * n, dima);
    for (size_t i = 0; i < dima; ++i) {
        Matrix bi = q.basis_action(static_cast<int>(i));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) act.at(r * n + c, i) = bi.at(r, c);
    }
    bool faithful = act.kernel_basis().rows() == 0;
    return CommutantReport{commutant, faithful};
}

DcTilting dc_tilting(const RingelDual& r) {
    const StratPtr& s = r.tilting.strat;
    const AlgebraPtr& a = s->algebra();
    Representation areg = regular_module(a);
    Representation tr = ringel_functor(r, areg); // characteristic tilting over R(A)
    Cover cover = projective_cover(tr);
    // pull the cover back through the Ringel equivalence
    std::vector<int> q_labels = cover.labels;
    std::vector<Representation> qparts;
    for (int l : q_labels) qparts.push_back(r.tilting.indecomposable[l]);
    Representation q = qparts.empty() ? Representation::zero(a) : direct_sum(a, qparts).rep;
    Representation rq = ringel_functor(r, q);
    // R(Q) is projective with the same summands as the cover term, so its own
    // cover map is an isomorphism from the cover term; invert it blockwise
    Cover rq_cover = projective_cover(rq);
    if (rq_cover.labels != cover.labels || rq_cover.proj.total_dim() != rq.total_dim())
        throw err_internal("dc_tilting: R(Q) is not the projective cover term");
    std::vector<Matrix> inv_blocks;
    for (const auto& blk : rq_cover.map.blocks) {
        auto inv = blk.inverse();
        if (!inv) throw err_internal("dc_tilting: cover of R(Q) is not invertible");
        inv_blocks.push_back(*inv);
    }
    ModuleMap omega = make_map(rq, rq_cover.proj, std::move(inv_blocks));
    ModuleMap g = compose(omega, cover.map); // R(Q) -> R(A)
    // solve for h: A -> Q with R(h) = g
    auto hbasis = hom_basis(areg, q);
    if (hbasis.empty()) throw err_internal("dc_tilting: no maps from the regular module");
    std::vector<ModuleMap> images;
    for (const auto& h : hbasis) images.push_back(ringel_functor_map(r, h));
    size_t flat = 0;
    for (const auto& blk : g.blocks) flat += blk.rows() * blk.cols();
    Matrix sys(flat, hbasis.size());
    Matrix rhs(flat, 1);
    size_t row = 0;
    for (size_t v = 0; v < g.blocks.size(); ++v)
        for (size_t rr = 0; rr < g.blocks[v].rows(); ++rr)
            for (size_t cc = 0; cc < g.blocks[v].cols(); ++cc) {
                for (size_t k = 0; k < images.size(); ++k) sys.at(row, k) = images[k].blocks[v].at(rr, cc);
                rhs.at(row, 0) = g.blocks[v].at(rr, cc);
                ++row;
            }
    auto sol = sys.solve(rhs);
    if (!sol || !(sys * *sol == rhs)) throw err_internal("dc_tilting: cover map has no preimage under R");
    ModuleMap iota = zero_map(areg, q);
    for (size_t k = 0; k < hbasis.size(); ++k)
        if (!sol->at(k, 0).is_zero()) iota = add_maps(iota, scale_map(sol->at(k, 0), hbasis[k]));
    if (!iota.is_injective()) throw err_internal("dc_tilting: pulled-back map is not injective");
    SubQuotient cq = quotient_module(q, image_submodule(iota));
    auto flag = has_flag(s, cq.rep, FlagFamily::Standard);
    if (!flag) throw err_internal("dc_tilting: cokernel has no standard flag");

    // find a basic tilting Y with coker -> Y^m, preferring summands of Q
    std::set<int> qset(q_labels.begin(), q_labels.end());
    std::vector<std::vector<int>> candidates;
    for (int l : qset) candidates.push_back({l});
    for (size_t l = 0; l < s->num_labels(); ++l)
        if (!qset.count(static_cast<int>(l))) candidates.push_back({static_cast<int>(l)});
    {
        std::vector<int> all;
        for (size_t l = 0; l < s->num_labels(); ++l) all.push_back(static_cast<int>(l));
        candidates.push_back(all);
    }
    std::vector<int> y_labels;
    int found_m = 0;
    for (const auto& cand : candidates) {
        std::vector<Representation> parts;
        for (int l : cand) parts.push_back(r.tilting.indecomposable[l]);
        Representation y = direct_sum(a, parts).rep;
        auto hy = hom_basis(cq.rep, y);
        if (hy.empty()) {
            if (cq.rep.total_dim() == 0) {
                y_labels = cand;
                found_m = 1;
                break;
            }
            continue;
        }
        // joint kernel must vanish for any power to receive the cokernel
        Submodule joint = full_submodule(cq.rep);
        for (const auto& h : hy) joint = submodule_intersect(cq.rep, joint, kernel_submodule(h));
        if (joint.total_dim() != 0) continue;
        // smallest m with an injective map coker -> y^m over deterministic
        // coefficient patterns; m = |hom basis| always works
        auto pattern_injective = [&](const std::vector<std::vector<Rational>>& pat) {
            size_t m = pat.size();
            for (size_t v = 0; v < cq.rep.num_vertices(); ++v) {
                size_t rows = static_cast<size_t>(y.dim_at(static_cast<int>(v))) * m;
                Matrix blk(rows, cq.rep.dim_at(static_cast<int>(v)));
                for (size_t j = 0; j < m; ++j)
                    for (size_t i = 0; i < hy.size(); ++i) {
                        if (pat[j][i].is_zero()) continue;
                        const Matrix& hb = hy[i].blocks[v];
                        for (size_t rr = 0; rr < hb.rows(); ++rr)
                            for (size_t cc = 0; cc < hb.cols(); ++cc)
                                blk.at(j * hb.rows() + rr, cc) += pat[j][i] * hb.at(rr, cc);
                    }
                if (blk.rank() != blk.cols()) return false;
            }
            return true;
        };
        for (size_t m = 1; m <= hy.size() && found_m == 0; ++m) {
            std::vector<std::vector<std::vector<Rational>>> patterns;
            std::vector<std::vector<Rational>> spread(m, std::vector<Rational>(hy.size(), Rational(0)));
            for (size_t i = 0; i < hy.size(); ++i) spread[i % m][i] = Rational(1);
            patterns.push_back(spread);
            for (long long t = 2; t <= 5; ++t) {
                std::vector<std::vector<Rational>> mix(m, std::vector<Rational>(hy.size(), Rational(0)));
                Rational p(1);
                for (size_t j = 0; j < m; ++j)
                    for (size_t i = 0; i < hy.size(); ++i) {
                        mix[j][i] = p;
                        p *= Rational(t);
                    }
                patterns.push_back(std::move(mix));
            }
            for (const auto& pat : patterns)
                if (pattern_injective(pat)) {
                    found_m = static_cast<int>(m);
                    break;
                }
        }
        if (found_m > 0) {
            y_labels = cand;
            break;
        }
    }
    if (y_labels.empty() && cq.rep.total_dim() > 0)
        throw err_internal("dc_tilting: no tilting receives the cokernel");

    std::set<int> xset(qset);
    for (int l : y_labels) xset.insert(l);
    std::vector<int> x_labels(xset.begin(), xset.end());
    std::vector<Representation> xparts;
    for (int l : x_labels) xparts.push_back(r.tilting.indecomposable[l]);
    Representation x = direct_sum(a, xparts).rep;
    CommutantReport cr = commutant_of_endomorphisms(x);
    bool dc = cr.action_faithful && cr.commutant_dim == a->dim();
    bool xchar = x_labels.size() == s->num_labels();
    bool xinq = true;
    for (int l : y_labels)
        if (!qset.count(l)) xinq = false;

    return DcTilting{q,
                     q_labels,
                     iota,
                     cq.rep,
                     *flag,
                     y_labels,
                     found_m,
                     x_labels,
                     x,
                     dc,
                     cr.commutant_dim,
                     xchar,
                     xinq};
}

DcTilting dc_tilting(const StratPtr& s) { return dc_tilting(ringel_dual(s)); }

} // namespace qh

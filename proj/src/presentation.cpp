#include "qh/presentation.hpp"

#include "qh/error.hpp"

#include <algorithm>
#include <map>

namespace qh {

namespace {

using Coords = std::vector<Rational>;

Matrix rows_from_coords(const std::vector<Coords>& rows, size_t width) {
    Matrix m(rows.size(), width);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < width; ++c) m.at(r, c) = rows[r][c];
    return m;
}

// candidate path in the presentation quiver under construction
struct Mono {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;
    Coords eval; // coordinates in the concrete endomorphism algebra
};

} // namespace

PresentedAlgebra present_endomorphism_algebra(const AlgebraPtr& base, const std::vector<Representation>& summands,
                                              const std::vector<std::string>& vertex_names) {
    if (summands.empty()) throw err_internal("present_endomorphism_algebra: no summands");
    if (vertex_names.size() != summands.size()) throw err_internal("present_endomorphism_algebra: name count");
    size_t ns = summands.size();
    DirectSum xs = direct_sum(base, summands);
    EndoAlgebra E = endo_algebra(xs.rep);
    size_t dimE = E.dim();

    // idempotent and block data in coordinates
    std::vector<Coords> idem(ns);
    for (size_t i = 0; i < ns; ++i)
        idem[i] = hom_coordinates(E.basis, compose(xs.projections[i], xs.inclusions[i]));
    auto mul = [&](const Coords& a, const Coords& b) { return E.multiply(a, b); };
    auto block_project = [&](size_t i, size_t j, const Coords& x) { return mul(mul(idem[i], x), idem[j]); };

    // radical powers as coordinate subspaces
    std::vector<Subspace> radpow{Subspace::full(dimE), E.radical};
    while (radpow.back().dim() > 0) {
        const Subspace& prev = radpow.back();
        std::vector<Coords> prods;
        for (size_t r = 0; r < prev.dim(); ++r)
            for (size_t s = 0; s < E.radical.dim(); ++s) {
                Coords a(dimE), b(dimE);
                for (size_t c = 0; c < dimE; ++c) {
                    a[c] = prev.basis().at(r, c);
                    b[c] = E.radical.basis().at(s, c);
                }
                prods.push_back(mul(a, b));
            }
        radpow.push_back(Subspace::span_of_rows(rows_from_coords(prods, dimE)));
        if (radpow.size() > dimE + 2) throw err_internal("radical not nilpotent");
    }
    int nilpotency = static_cast<int>(radpow.size()) - 1; // rad^nilpotency = 0

    // block subspaces e_i E e_j
    std::vector<std::vector<Subspace>> block(ns, std::vector<Subspace>(ns, Subspace(dimE)));
    for (size_t i = 0; i < ns; ++i)
        for (size_t j = 0; j < ns; ++j) {
            std::vector<Coords> gens;
            for (size_t k = 0; k < dimE; ++k) {
                Coords ek(dimE, Rational(0));
                ek[k] = Rational(1);
                gens.push_back(block_project(i, j, ek));
            }
            block[i][j] = Subspace::span_of_rows(rows_from_coords(gens, dimE));
        }

    // choose arrows: per block, a complement of rad^2 inside rad
    Quiver quiver;
    for (const auto& n : vertex_names) quiver.add_vertex(n);
    std::vector<Coords> arrow_eval;
    struct ArrowInfo {
        int i, j;
    };
    std::vector<ArrowInfo> arrow_info;
    for (size_t i = 0; i < ns; ++i)
        for (size_t j = 0; j < ns; ++j) {
            Subspace r1 = block[i][j].intersect(radpow[1]);
            Subspace r2 = block[i][j].intersect(radpow.size() > 2 ? radpow[2] : Subspace(dimE));
            // greedy complement of r2 in r1
            Subspace span = r2;
            for (size_t r = 0; r < r1.dim(); ++r) {
                Coords v(dimE);
                for (size_t c = 0; c < dimE; ++c) v[c] = r1.basis().at(r, c);
                Matrix row(1, dimE);
                for (size_t c = 0; c < dimE; ++c) row.at(0, c) = v[c];
                Subspace cand = span + Subspace::span_of_rows(row);
                if (cand.dim() > span.dim()) {
                    span = cand;
                    std::string name = vertex_names[i] + "_" + vertex_names[j] + "_" +
                                       std::to_string(arrow_eval.size());
                    quiver.add_arrow(name, vertex_names[i], vertex_names[j]);
                    arrow_eval.push_back(v);
                    arrow_info.push_back({static_cast<int>(i), static_cast<int>(j)});
                }
            }
        }

    // enumerate monomial paths by length, choosing a basis adapted to the
    // radical filtration; every non-chosen path gets a straightening relation
    std::vector<Mono> chosen;
    for (size_t i = 0; i < ns; ++i) chosen.push_back(Mono{static_cast<int>(i), static_cast<int>(i), {}, idem[i]});
    for (size_t a = 0; a < arrow_eval.size(); ++a)
        chosen.push_back(Mono{arrow_info[a].i, arrow_info[a].j, {static_cast<int>(a)}, arrow_eval[a]});

    std::vector<Mono> frontier; // chosen paths of the current length
    for (size_t a = 0; a < arrow_eval.size(); ++a) frontier.push_back(chosen[ns + a]);

    std::vector<std::pair<Mono, bool>> all_paths; // (path, chosen?)
    for (const auto& m : chosen) all_paths.emplace_back(m, true);

    for (int len = 2; len <= nilpotency; ++len) {
        std::vector<Mono> next;
        // span chosen so far, to test independence in E
        auto spanning = [&](const std::vector<Mono>& ms) {
            std::vector<Coords> rows;
            for (const auto& m : ms) rows.push_back(m.eval);
            return Subspace::span_of_rows(rows_from_coords(rows, dimE));
        };
        for (const auto& p : frontier) {
            for (size_t a = 0; a < arrow_eval.size(); ++a) {
                if (arrow_info[a].i != p.target) continue;
                Mono ext;
                ext.source = p.source;
                ext.target = arrow_info[a].j;
                ext.arrows = p.arrows;
                ext.arrows.push_back(static_cast<int>(a));
                ext.eval = mul(p.eval, arrow_eval[a]);
                Subspace cur = spanning(chosen);
                Matrix row(1, dimE);
                for (size_t c = 0; c < dimE; ++c) row.at(0, c) = ext.eval[c];
                bool indep = (cur + Subspace::span_of_rows(row)).dim() > cur.dim();
                if (indep) {
                    chosen.push_back(ext);
                    next.push_back(ext);
                    all_paths.emplace_back(ext, true);
                } else {
                    all_paths.emplace_back(ext, false);
                }
            }
        }
        // extend the frontier with every path of this length so relations for
        // longer non-chosen paths still get generated through chosen ones
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    if (chosen.size() != dimE)
        throw err_internal("presentation basis has wrong size: " + std::to_string(chosen.size()) + " vs " +
                           std::to_string(dimE));

    // straightening relations: express each non-chosen path over the chosen
    // monomials (support stays in the same block and in lengths >= 2)
    Matrix basis_rows(dimE, dimE);
    for (size_t r = 0; r < dimE; ++r)
        for (size_t c = 0; c < dimE; ++c) basis_rows.at(r, c) = chosen[r].eval[c];
    Matrix basis_cols = basis_rows.transpose();
    std::vector<RelationElement> relations;
    for (const auto& [p, was_chosen] : all_paths) {
        if (was_chosen) continue;
        Matrix rhs(dimE, 1);
        for (size_t c = 0; c < dimE; ++c) rhs.at(c, 0) = p.eval[c];
        auto coords = basis_cols.solve(rhs);
        if (!coords) throw err_internal("straightening solve failed");
        RelationElement rel;
        rel.terms.push_back({Rational(1), p.arrows});
        for (size_t k = 0; k < dimE; ++k) {
            if (coords->at(k, 0).is_zero()) continue;
            if (chosen[k].arrows.size() < 2)
                throw err_internal("straightening hit a short monomial");
            rel.terms.push_back({-coords->at(k, 0), chosen[k].arrows});
        }
        relations.push_back(std::move(rel));
    }

    AlgebraPtr alg = BoundQuiverAlgebra::build(quiver, relations, std::max(nilpotency + 1, 2));
    if (alg->dim() != dimE)
        throw err_internal("presentation dimension mismatch: " + std::to_string(alg->dim()) + " vs " +
                           std::to_string(dimE));

    // concrete endo for each presentation basis path, and the multiplication
    // agreement check on all basis pairs
    std::vector<Coords> basis_coords;
    std::vector<ModuleMap> basis_endos;
    for (size_t k = 0; k < alg->dim(); ++k) {
        const auto& bp = alg->basis_path(static_cast<int>(k));
        Coords cur = idem[bp.source];
        for (int a : bp.arrows) cur = mul(cur, arrow_eval[a]);
        basis_coords.push_back(cur);
        basis_endos.push_back(E.realize(cur));
    }
    for (size_t i = 0; i < alg->dim(); ++i)
        for (size_t j = 0; j < alg->dim(); ++j) {
            Coords lhs = mul(basis_coords[i], basis_coords[j]);
            Coords rhs(dimE, Rational(0));
            for (const auto& [k, c] : alg->product(static_cast<int>(i), static_cast<int>(j)))
                for (size_t t = 0; t < dimE; ++t) rhs[t] += c * basis_coords[k][t];
            if (lhs != rhs) throw err_internal("presentation multiplication disagrees with composition");
        }

    return PresentedAlgebra{alg,
                            xs.rep,
                            summands,
                            xs.inclusions,
                            xs.projections,
                            std::move(basis_endos)};
}

Representation hom_module(const PresentedAlgebra& b, const Representation& m) {
    size_t ns = b.summands.size();
    std::vector<std::vector<ModuleMap>> hom_bases(ns);
    std::vector<int> dims(ns);
    for (size_t i = 0; i < ns; ++i) {
        hom_bases[i] = hom_basis(m, b.summands[i]);
        dims[i] = static_cast<int>(hom_bases[i].size());
    }
    const Quiver& q = b.algebra->quiver();
    std::vector<Matrix> acts;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        // concrete component of the arrow as a map X_i -> X_j
        int abasis = b.algebra->arrow_basis_index(static_cast<int>(a));
        ModuleMap low = compose(compose(b.summand_inclusions[ar.source], b.basis_endos[abasis]),
                                b.summand_projections[ar.target]);
        Matrix blk(dims[ar.target], dims[ar.source]);
        for (int c = 0; c < dims[ar.source]; ++c) {
            ModuleMap img = compose(hom_bases[ar.source][c], low);
            auto coords = hom_coordinates(hom_bases[ar.target], img);
            for (int r = 0; r < dims[ar.target]; ++r) blk.at(r, c) = coords[r];
        }
        acts.push_back(std::move(blk));
    }
    return Representation(b.algebra, std::move(dims), std::move(acts));
}

ModuleMap hom_module_map(const PresentedAlgebra& b, const ModuleMap& f) {
    Representation src = hom_module(b, f.target);
    Representation dst = hom_module(b, f.source);
    size_t ns = b.summands.size();
    std::vector<Matrix> blocks;
    for (size_t i = 0; i < ns; ++i) {
        auto src_basis = hom_basis(f.target, b.summands[i]);
        auto dst_basis = hom_basis(f.source, b.summands[i]);
        Matrix blk(dst_basis.size(), src_basis.size());
        for (size_t c = 0; c < src_basis.size(); ++c) {
            ModuleMap img = compose(f, src_basis[c]);
            auto coords = hom_coordinates(dst_basis, img);
            for (size_t r = 0; r < dst_basis.size(); ++r) blk.at(r, c) = coords[r];
        }
        blocks.push_back(std::move(blk));
    }
    return make_map(src, dst, std::move(blocks));
}

Representation covariant_hom_module(const PresentedAlgebra& b, const Representation& m) {
    AlgebraPtr opp = b.algebra->opposite();
    size_t ns = b.summands.size();
    std::vector<std::vector<ModuleMap>> hom_bases(ns);
    std::vector<int> dims(ns);
    for (size_t i = 0; i < ns; ++i) {
        hom_bases[i] = hom_basis(b.summands[i], m);
        dims[i] = static_cast<int>(hom_bases[i].size());
    }
    // the reversed arrow of alpha: i -> j acts Hom(X_j, M) -> Hom(X_i, M) by
    // precomposition with the concrete component X_i -> X_j
    std::vector<Matrix> acts;
    for (size_t ar = 0; ar < opp->quiver().num_arrows(); ++ar) {
        const Arrow& orig = b.algebra->quiver().arrow_data(static_cast<int>(ar));
        int from = orig.target, to = orig.source;
        int abasis = b.algebra->arrow_basis_index(static_cast<int>(ar));
        ModuleMap low = compose(compose(b.summand_inclusions[orig.source], b.basis_endos[abasis]),
                                b.summand_projections[orig.target]);
        Matrix blk(dims[to], dims[from]);
        for (int c = 0; c < dims[from]; ++c) {
            ModuleMap img = compose(low, hom_bases[from][c]);
            auto coords = hom_coordinates(hom_bases[to], img);
            for (int r = 0; r < dims[to]; ++r) blk.at(r, c) = coords[r];
        }
        acts.push_back(std::move(blk));
    }
    return Representation(opp, std::move(dims), std::move(acts));
}

Matrix cartan_matrix(const AlgebraPtr& a) {
    size_t n = a->quiver().num_vertices();
    Matrix c(n, n);
    for (size_t m = 0; m < n; ++m) {
        Representation p = projective_module(a, static_cast<int>(m));
        for (size_t l = 0; l < n; ++l) c.at(l, m) = Rational(p.dim_at(static_cast<int>(l)));
    }
    return c;
}

bool cartan_equivalent(const AlgebraPtr& a, const AlgebraPtr& b) {
    size_t n = a->quiver().num_vertices();
    if (b->quiver().num_vertices() != n) return false;
    Matrix ca = cartan_matrix(a), cb = cartan_matrix(b);
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j)
                if (!(ca.at(perm[i], perm[j]) == cb.at(i, j))) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace qh

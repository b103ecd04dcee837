#include "qh/module.hpp"

#include "qh/error.hpp"

#include <algorithm>

namespace qh {

namespace {

void ensure_same_algebra(const Representation& a, const Representation& b, const char* who) {
    if (!(*a.algebra() == *b.algebra())) throw err_dimension(std::string(who) + ": modules over different algebras");
}

void block_shape_check(const Matrix& m, int rows, int cols, const char* who) {
    if (m.rows() != static_cast<size_t>(rows) || m.cols() != static_cast<size_t>(cols))
        throw err_dimension(std::string(who) + ": block shape mismatch");
}

} // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> arrow_actions)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), actions_(std::move(arrow_actions)) {
    const Quiver& q = algebra_->quiver();
    if (dims_.size() != q.num_vertices() || actions_.size() != q.num_arrows())
        throw err_dimension("Representation: vertex/arrow count mismatch");
    offsets_.resize(dims_.size());
    for (size_t v = 0; v < dims_.size(); ++v) {
        if (dims_[v] < 0) throw err_dimension("Representation: negative dimension");
        offsets_[v] = total_;
        total_ += static_cast<size_t>(dims_[v]);
    }
    for (size_t a = 0; a < actions_.size(); ++a)
        block_shape_check(actions_[a], dims_[q.arrow_data(static_cast<int>(a)).target],
                          dims_[q.arrow_data(static_cast<int>(a)).source], "Representation");
    // every relation of the algebra must act by zero
    for (const auto& rel : algebra_->relations()) {
        int src = q.arrow_data(rel.terms.front().arrows.front()).source;
        int tgt = src;
        for (int ar : rel.terms.front().arrows) tgt = q.arrow_data(ar).target;
        Matrix sum(dims_[tgt], dims_[src]);
        for (const auto& t : rel.terms) sum = sum + t.coef * path_action(src, t.arrows);
        if (!sum.is_zero()) throw err_dimension("Representation: relation does not act by zero");
    }
}

Representation Representation::zero(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<Matrix> acts;
    for (size_t a = 0; a < q.num_arrows(); ++a) acts.emplace_back(0, 0);
    return Representation(std::move(algebra), std::move(dims), std::move(acts));
}

Matrix Representation::path_action(int source_vertex, const std::vector<int>& arrows) const {
    Matrix cur = Matrix::identity(static_cast<size_t>(dims_[source_vertex]));
    for (int a : arrows) cur = actions_[a] * cur;
    return cur;
}

Matrix Representation::basis_action(int basis_index) const {
    const auto& bp = algebra_->basis_path(basis_index);
    Matrix blk = path_action(bp.source, bp.arrows);
    Matrix out(total_, total_);
    for (size_t r = 0; r < blk.rows(); ++r)
        for (size_t c = 0; c < blk.cols(); ++c)
            out.at(offsets_[bp.target] + r, offsets_[bp.source] + c) = blk.at(r, c);
    return out;
}

Matrix Representation::element_action(const BoundQuiverAlgebra::Elem& e) const {
    Matrix out(total_, total_);
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i].is_zero()) continue;
        out = out + e[i] * basis_action(static_cast<int>(i));
    }
    return out;
}

bool operator==(const Representation& a, const Representation& b) {
    if (!(*a.algebra_ == *b.algebra_)) return false;
    return a.dims_ == b.dims_ && a.actions_ == b.actions_;
}

Matrix ModuleMap::total() const {
    Matrix out(target.total_dim(), source.total_dim());
    for (size_t v = 0; v < blocks.size(); ++v)
        for (size_t r = 0; r < blocks[v].rows(); ++r)
            for (size_t c = 0; c < blocks[v].cols(); ++c)
                out.at(target.offset(static_cast<int>(v)) + r, source.offset(static_cast<int>(v)) + c) =
                    blocks[v].at(r, c);
    return out;
}

bool ModuleMap::is_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool ModuleMap::is_injective() const {
    for (const auto& b : blocks)
        if (b.rank() != b.cols()) return false;
    return true;
}

bool ModuleMap::is_surjective() const {
    for (const auto& b : blocks)
        if (b.rank() != b.rows()) return false;
    return true;
}

bool ModuleMap::is_iso() const {
    for (const auto& b : blocks)
        if (b.rows() != b.cols() || !b.is_invertible()) return false;
    return true;
}

ModuleMap make_map(const Representation& src, const Representation& dst, std::vector<Matrix> blocks) {
    ensure_same_algebra(src, dst, "make_map");
    if (blocks.size() != src.num_vertices()) throw err_dimension("make_map: block count");
    const Quiver& q = src.algebra()->quiver();
    for (size_t v = 0; v < blocks.size(); ++v)
        block_shape_check(blocks[v], dst.dim_at(static_cast<int>(v)), src.dim_at(static_cast<int>(v)), "make_map");
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        Matrix lhs = blocks[ar.target] * src.arrow_action(static_cast<int>(a));
        Matrix rhs = dst.arrow_action(static_cast<int>(a)) * blocks[ar.source];
        if (!(lhs == rhs)) throw err_dimension("make_map: blocks do not intertwine arrow actions");
    }
    return ModuleMap{src, dst, std::move(blocks)};
}

ModuleMap zero_map(const Representation& src, const Representation& dst) {
    std::vector<Matrix> blocks;
    for (size_t v = 0; v < src.num_vertices(); ++v)
        blocks.emplace_back(dst.dim_at(static_cast<int>(v)), src.dim_at(static_cast<int>(v)));
    return ModuleMap{src, dst, std::move(blocks)};
}

ModuleMap identity_map(const Representation& m) {
    std::vector<Matrix> blocks;
    for (size_t v = 0; v < m.num_vertices(); ++v) blocks.push_back(Matrix::identity(m.dim_at(static_cast<int>(v))));
    return ModuleMap{m, m, std::move(blocks)};
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    if (!(f.target == g.source)) throw err_dimension("compose: middle modules disagree");
    std::vector<Matrix> blocks;
    for (size_t v = 0; v < f.blocks.size(); ++v) blocks.push_back(g.blocks[v] * f.blocks[v]);
    return ModuleMap{f.source, g.target, std::move(blocks)};
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
    std::vector<Matrix> blocks;
    for (size_t v = 0; v < f.blocks.size(); ++v) blocks.push_back(f.blocks[v] + g.blocks[v]);
    return ModuleMap{f.source, f.target, std::move(blocks)};
}

ModuleMap scale_map(const Rational& c, const ModuleMap& f) {
    std::vector<Matrix> blocks;
    for (const auto& b : f.blocks) blocks.push_back(c * b);
    return ModuleMap{f.source, f.target, std::move(blocks)};
}

size_t Submodule::total_dim() const {
    size_t t = 0;
    for (const auto& s : per_vertex) t += s.dim();
    return t;
}

Submodule zero_submodule(const Representation& m) {
    Submodule s;
    for (size_t v = 0; v < m.num_vertices(); ++v) s.per_vertex.emplace_back(m.dim_at(static_cast<int>(v)));
    return s;
}

Submodule full_submodule(const Representation& m) {
    Submodule s;
    for (size_t v = 0; v < m.num_vertices(); ++v)
        s.per_vertex.push_back(Subspace::full(m.dim_at(static_cast<int>(v))));
    return s;
}

bool submodule_contains(const Representation&, const Submodule& a, const Submodule& b) {
    for (size_t v = 0; v < a.per_vertex.size(); ++v)
        if (!a.per_vertex[v].contains(b.per_vertex[v])) return false;
    return true;
}

Submodule submodule_sum(const Representation&, const Submodule& a, const Submodule& b) {
    Submodule s;
    for (size_t v = 0; v < a.per_vertex.size(); ++v) s.per_vertex.push_back(a.per_vertex[v] + b.per_vertex[v]);
    return s;
}

Submodule submodule_intersect(const Representation&, const Submodule& a, const Submodule& b) {
    Submodule s;
    for (size_t v = 0; v < a.per_vertex.size(); ++v)
        s.per_vertex.push_back(a.per_vertex[v].intersect(b.per_vertex[v]));
    return s;
}

Submodule submodule_generated(const Representation& m, const std::vector<Subspace>& seed) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<Subspace> cur = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow_data(static_cast<int>(a));
            Subspace img = cur[ar.source].image_under(m.arrow_action(static_cast<int>(a)));
            Subspace next = cur[ar.target] + img;
            if (next.dim() != cur[ar.target].dim()) {
                cur[ar.target] = next;
                changed = true;
            }
        }
    }
    return Submodule{std::move(cur)};
}

Submodule largest_submodule_inside(const Representation& m, const std::vector<Subspace>& bound) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<Subspace> cur = bound;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow_data(static_cast<int>(a));
            Matrix ann = cur[ar.target].basis().kernel_basis();
            Matrix comp = ann * m.arrow_action(static_cast<int>(a));
            Subspace pre = Subspace::span_of_rows(comp.kernel_basis());
            Subspace next = cur[ar.source].intersect(pre);
            if (next.dim() != cur[ar.source].dim()) {
                cur[ar.source] = next;
                changed = true;
            }
        }
    }
    return Submodule{std::move(cur)};
}

SubQuotient submodule_as_module(const Representation& m, const Submodule& s) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<int> dims;
    for (size_t v = 0; v < m.num_vertices(); ++v) dims.push_back(static_cast<int>(s.per_vertex[v].dim()));
    std::vector<Matrix> acts;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        const Matrix& Bs = s.per_vertex[ar.source].basis();
        const Matrix& Bt = s.per_vertex[ar.target].basis();
        Matrix img = m.arrow_action(static_cast<int>(a)) * Bs.transpose();
        auto coords = Bt.transpose().solve(img);
        if (!coords || !(Bt.transpose() * *coords == img))
            throw err_dimension("submodule_as_module: not closed under arrows");
        acts.push_back(*coords);
    }
    Representation rep(m.algebra(), std::move(dims), std::move(acts));
    std::vector<Matrix> inc;
    for (size_t v = 0; v < m.num_vertices(); ++v) inc.push_back(s.per_vertex[v].basis().transpose());
    ModuleMap inclusion = make_map(rep, m, std::move(inc));
    return SubQuotient{rep, inclusion};
}

SubQuotient quotient_module(const Representation& m, const Submodule& s) {
    const Quiver& q = m.algebra()->quiver();
    size_t nv = m.num_vertices();
    std::vector<Matrix> proj(nv);
    std::vector<Matrix> section(nv);
    std::vector<int> dims(nv);
    for (size_t v = 0; v < nv; ++v) {
        const Matrix& B = s.per_vertex[v].basis(); // RREF rows
        size_t dim = m.dim_at(static_cast<int>(v));
        auto [red, pivots] = B.rref();
        std::vector<bool> is_pivot(dim, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<size_t> free_cols;
        for (size_t c = 0; c < dim; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        dims[v] = static_cast<int>(free_cols.size());
        // coordinates mod the subspace: free part of x - B^T * x_pivots
        Matrix P(free_cols.size(), dim);
        for (size_t i = 0; i < free_cols.size(); ++i) {
            P.at(i, free_cols[i]) = Rational(1);
            for (size_t r = 0; r < pivots.size(); ++r) P.at(i, pivots[r]) = -B.at(r, free_cols[i]);
        }
        proj[v] = P;
        Matrix S(dim, free_cols.size());
        for (size_t i = 0; i < free_cols.size(); ++i) S.at(free_cols[i], i) = Rational(1);
        section[v] = S;
    }
    std::vector<Matrix> acts;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        acts.push_back(proj[ar.target] * (m.arrow_action(static_cast<int>(a)) * section[ar.source]));
    }
    Representation rep(m.algebra(), std::move(dims), std::move(acts));
    ModuleMap projection = make_map(m, rep, std::move(proj));
    return SubQuotient{rep, projection};
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
    size_t nv = a->quiver().num_vertices();
    std::vector<int> dims(nv, 0);
    for (const auto& p : parts) {
        if (!(*p.algebra() == *a)) throw err_dimension("direct_sum: algebra mismatch");
        for (size_t v = 0; v < nv; ++v) dims[v] += p.dim_at(static_cast<int>(v));
    }
    const Quiver& q = a->quiver();
    std::vector<Matrix> acts;
    for (size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const Arrow& arr = q.arrow_data(static_cast<int>(ar));
        Matrix blk(dims[arr.target], dims[arr.source]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            const Matrix& sub = p.arrow_action(static_cast<int>(ar));
            for (size_t r = 0; r < sub.rows(); ++r)
                for (size_t c = 0; c < sub.cols(); ++c) blk.at(ro + r, co + c) = sub.at(r, c);
            ro += p.dim_at(arr.target);
            co += p.dim_at(arr.source);
        }
        acts.push_back(std::move(blk));
    }
    Representation rep(a, dims, std::move(acts));
    DirectSum out{rep, {}, {}};
    std::vector<int> off(nv, 0);
    for (const auto& p : parts) {
        std::vector<Matrix> inc, prj;
        for (size_t v = 0; v < nv; ++v) {
            Matrix I(dims[v], p.dim_at(static_cast<int>(v)));
            Matrix P(p.dim_at(static_cast<int>(v)), dims[v]);
            for (int r = 0; r < p.dim_at(static_cast<int>(v)); ++r) {
                I.at(off[v] + r, r) = Rational(1);
                P.at(r, off[v] + r) = Rational(1);
            }
            inc.push_back(std::move(I));
            prj.push_back(std::move(P));
        }
        out.inclusions.push_back(ModuleMap{p, rep, std::move(inc)});
        out.projections.push_back(ModuleMap{rep, p, std::move(prj)});
        for (size_t v = 0; v < nv; ++v) off[v] += p.dim_at(static_cast<int>(v));
    }
    return out;
}

Representation simple_module(const AlgebraPtr& a, int vertex) {
    const Quiver& q = a->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    dims[vertex] = 1;
    std::vector<Matrix> acts;
    for (size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const Arrow& arr = q.arrow_data(static_cast<int>(ar));
        acts.emplace_back(dims[arr.target], dims[arr.source]);
    }
    return Representation(a, std::move(dims), std::move(acts));
}

namespace {

struct ProjBasis {
    std::vector<std::vector<int>> by_vertex;
    std::vector<int> position;
};

ProjBasis projective_basis(const AlgebraPtr& a, int vertex) {
    ProjBasis pb;
    pb.by_vertex.assign(a->quiver().num_vertices(), {});
    pb.position.assign(a->dim(), -1);
    for (size_t i = 0; i < a->dim(); ++i) {
        const auto& bp = a->basis_path(static_cast<int>(i));
        if (bp.source != vertex) continue;
        pb.position[i] = static_cast<int>(pb.by_vertex[bp.target].size());
        pb.by_vertex[bp.target].push_back(static_cast<int>(i));
    }
    return pb;
}

} // namespace

Representation projective_module(const AlgebraPtr& a, int vertex) {
    const Quiver& q = a->quiver();
    ProjBasis pb = projective_basis(a, vertex);
    std::vector<int> dims;
    for (const auto& v : pb.by_vertex) dims.push_back(static_cast<int>(v.size()));
    std::vector<Matrix> acts;
    for (size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const Arrow& arr = q.arrow_data(static_cast<int>(ar));
        Matrix blk(dims[arr.target], dims[arr.source]);
        int arrow_idx = a->arrow_basis_index(static_cast<int>(ar));
        for (size_t c = 0; c < pb.by_vertex[arr.source].size(); ++c) {
            int pidx = pb.by_vertex[arr.source][c];
            for (const auto& [k, coef] : a->product(pidx, arrow_idx)) {
                int pos = pb.position[k];
                if (pos < 0) throw err_internal("projective: product left the source fiber");
                blk.at(pos, c) = blk.at(pos, c) + coef;
            }
        }
        acts.push_back(std::move(blk));
    }
    return Representation(a, std::move(dims), std::move(acts));
}

ModuleMap projective_left_multiplication(const AlgebraPtr& a, int basis_index) {
    const auto& x = a->basis_path(basis_index);
    Representation pv = projective_module(a, x.target);
    Representation pu = projective_module(a, x.source);
    ProjBasis pbv = projective_basis(a, x.target);
    ProjBasis pbu = projective_basis(a, x.source);
    std::vector<Matrix> blocks;
    for (size_t w = 0; w < a->quiver().num_vertices(); ++w) {
        Matrix blk(pu.dim_at(static_cast<int>(w)), pv.dim_at(static_cast<int>(w)));
        for (size_t c = 0; c < pbv.by_vertex[w].size(); ++c) {
            int pidx = pbv.by_vertex[w][c];
            for (const auto& [k, coef] : a->product(basis_index, pidx)) {
                int pos = pbu.position[k];
                if (pos < 0) throw err_internal("left multiplication left the fiber");
                blk.at(pos, c) = blk.at(pos, c) + coef;
            }
        }
        blocks.push_back(std::move(blk));
    }
    return make_map(pv, pu, std::move(blocks));
}

Representation injective_module(const AlgebraPtr& a, int vertex) {
    return dualize(projective_module(a->opposite(), vertex));
}

Representation dualize(const Representation& m) {
    AlgebraPtr opp = m.algebra()->opposite();
    std::vector<int> dims = m.dims();
    std::vector<Matrix> acts;
    for (size_t ar = 0; ar < m.algebra()->quiver().num_arrows(); ++ar)
        acts.push_back(m.arrow_action(static_cast<int>(ar)).transpose());
    return Representation(opp, std::move(dims), std::move(acts));
}

ModuleMap dualize_map(const ModuleMap& f) {
    Representation ds = dualize(f.target);
    Representation dt = dualize(f.source);
    std::vector<Matrix> blocks;
    for (const auto& b : f.blocks) blocks.push_back(b.transpose());
    return make_map(ds, dt, std::move(blocks));
}

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) {
    ensure_same_algebra(m, n, "hom");
    const Quiver& q = m.algebra()->quiver();
    size_t nv = m.num_vertices();
    std::vector<size_t> var_off(nv, 0);
    size_t nvars = 0;
    for (size_t v = 0; v < nv; ++v) {
        var_off[v] = nvars;
        nvars += static_cast<size_t>(n.dim_at(static_cast<int>(v))) * m.dim_at(static_cast<int>(v));
    }
    if (nvars == 0) return {};
    size_t neq = 0;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        neq += static_cast<size_t>(n.dim_at(ar.target)) * m.dim_at(ar.source);
    }
    Matrix sys(neq, nvars);
    size_t row = 0;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        const Matrix& Ma = m.arrow_action(static_cast<int>(a));
        const Matrix& Na = n.arrow_action(static_cast<int>(a));
        int nt = n.dim_at(ar.target), ms = m.dim_at(ar.source);
        int mt = m.dim_at(ar.target), ns = n.dim_at(ar.source);
        for (int r = 0; r < nt; ++r)
            for (int c = 0; c < ms; ++c) {
                for (int k = 0; k < mt; ++k) {
                    Rational& cell = sys.at(row, var_off[ar.target] + static_cast<size_t>(r) * mt + k);
                    cell += Ma.at(k, c);
                }
                for (int k = 0; k < ns; ++k) {
                    Rational& cell = sys.at(row, var_off[ar.source] + static_cast<size_t>(k) * ms + c);
                    cell -= Na.at(r, k);
                }
                ++row;
            }
    }
    Matrix ker = sys.kernel_basis();
    std::vector<ModuleMap> out;
    for (size_t s = 0; s < ker.rows(); ++s) {
        std::vector<Matrix> blocks;
        for (size_t v = 0; v < nv; ++v) {
            Matrix blk(n.dim_at(static_cast<int>(v)), m.dim_at(static_cast<int>(v)));
            for (size_t r = 0; r < blk.rows(); ++r)
                for (size_t c = 0; c < blk.cols(); ++c) blk.at(r, c) = ker.at(s, var_off[v] + r * blk.cols() + c);
            blocks.push_back(std::move(blk));
        }
        out.push_back(ModuleMap{m, n, std::move(blocks)});
    }
    return out;
}

std::vector<Rational> hom_coordinates(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
    if (basis.empty()) {
        if (!f.is_zero()) throw err_internal("hom_coordinates: nonzero map, empty basis");
        return {};
    }
    size_t total = 0;
    for (const auto& b : basis[0].blocks) total += b.rows() * b.cols();
    Matrix sys(total, basis.size());
    Matrix rhs(total, 1);
    size_t row = 0;
    for (size_t v = 0; v < basis[0].blocks.size(); ++v)
        for (size_t r = 0; r < basis[0].blocks[v].rows(); ++r)
            for (size_t c = 0; c < basis[0].blocks[v].cols(); ++c) {
                for (size_t k = 0; k < basis.size(); ++k) sys.at(row, k) = basis[k].blocks[v].at(r, c);
                rhs.at(row, 0) = f.blocks[v].at(r, c);
                ++row;
            }
    auto x = sys.solve(rhs);
    if (!x || !(sys * *x == rhs)) throw err_internal("hom_coordinates: map not in span of basis");
    std::vector<Rational> out;
    for (size_t k = 0; k < basis.size(); ++k) out.push_back(x->at(k, 0));
    return out;
}

Submodule kernel_submodule(const ModuleMap& f) {
    Submodule s;
    for (const auto& b : f.blocks) s.per_vertex.push_back(Subspace::span_of_rows(b.kernel_basis()));
    return s;
}

Submodule image_submodule(const ModuleMap& f) {
    Submodule s;
    for (const auto& b : f.blocks) s.per_vertex.push_back(Subspace::full(b.cols()).image_under(b));
    return s;
}

Submodule trace(const Representation& m, const Representation& n) {
    auto maps = hom_basis(m, n);
    Submodule acc = zero_submodule(n);
    for (const auto& f : maps) acc = submodule_sum(n, acc, image_submodule(f));
    return submodule_generated(n, acc.per_vertex);
}

Submodule trace_of_projectives(const std::vector<int>& vertex_labels, const Representation& n) {
    std::vector<Subspace> seed;
    for (size_t v = 0; v < n.num_vertices(); ++v) seed.emplace_back(n.dim_at(static_cast<int>(v)));
    for (int v : vertex_labels) seed[v] = Subspace::full(n.dim_at(v));
    return submodule_generated(n, seed);
}

Submodule radical_submodule(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<Subspace> seed;
    for (size_t v = 0; v < m.num_vertices(); ++v) seed.emplace_back(m.dim_at(static_cast<int>(v)));
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow_data(static_cast<int>(a));
        seed[ar.target] =
            seed[ar.target] + Subspace::full(m.dim_at(ar.source)).image_under(m.arrow_action(static_cast<int>(a)));
    }
    return submodule_generated(m, seed);
}

Submodule socle_submodule(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    Submodule s;
    for (size_t v = 0; v < m.num_vertices(); ++v) {
        Subspace killed = Subspace::full(m.dim_at(static_cast<int>(v)));
        for (size_t a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow_data(static_cast<int>(a)).source != static_cast<int>(v)) continue;
            killed = killed.intersect(
                Subspace::span_of_rows(m.arrow_action(static_cast<int>(a)).kernel_basis()));
        }
        s.per_vertex.push_back(std::move(killed));
    }
    return s;
}

std::vector<std::pair<int, int>> head_multiset(const Representation& m) {
    Submodule rad = radical_submodule(m);
    std::vector<std::pair<int, int>> out;
    for (size_t v = 0; v < m.num_vertices(); ++v) {
        int mult = m.dim_at(static_cast<int>(v)) - rad.dim_at(static_cast<int>(v));
        if (mult > 0) out.emplace_back(static_cast<int>(v), mult);
    }
    return out;
}

std::vector<std::pair<int, int>> socle_multiset(const Representation& m) {
    Submodule soc = socle_submodule(m);
    std::vector<std::pair<int, int>> out;
    for (size_t v = 0; v < m.num_vertices(); ++v)
        if (soc.dim_at(static_cast<int>(v)) > 0)
            out.emplace_back(static_cast<int>(v), soc.dim_at(static_cast<int>(v)));
    return out;
}

std::vector<int> composition_factors(const Representation& m) { return m.dims(); }

Cover projective_cover(const Representation& m) {
    const AlgebraPtr& a = m.algebra();
    Submodule rad = radical_submodule(m);
    std::vector<int> labels;
    std::vector<Matrix> gens;
    for (size_t v = 0; v < m.num_vertices(); ++v) {
        const Matrix& B = rad.per_vertex[v].basis();
        auto [red, pivots] = B.rref();
        std::vector<bool> is_pivot(m.dim_at(static_cast<int>(v)), false);
        for (size_t p : pivots) is_pivot[p] = true;
        for (int c = 0; c < m.dim_at(static_cast<int>(v)); ++c) {
            if (is_pivot[c]) continue;
            labels.push_back(static_cast<int>(v));
            Matrix g(m.dim_at(static_cast<int>(v)), 1);
            g.at(c, 0) = Rational(1);
            gens.push_back(std::move(g));
        }
    }
    std::vector<Representation> parts;
    for (int l : labels) parts.push_back(projective_module(a, l));
    DirectSum ds = direct_sum(a, parts);
    std::vector<Matrix> blocks;
    for (size_t v = 0; v < m.num_vertices(); ++v)
        blocks.emplace_back(m.dim_at(static_cast<int>(v)), ds.rep.dim_at(static_cast<int>(v)));
    std::vector<int> col_off(m.num_vertices(), 0);
    for (size_t s = 0; s < labels.size(); ++s) {
        ProjBasis pb = projective_basis(a, labels[s]);
        for (size_t v = 0; v < m.num_vertices(); ++v) {
            for (size_t c = 0; c < pb.by_vertex[v].size(); ++c) {
                const auto& bp = a->basis_path(pb.by_vertex[v][c]);
                Matrix img = m.path_action(bp.source, bp.arrows) * gens[s];
                for (size_t r = 0; r < img.rows(); ++r) blocks[v].at(r, col_off[v] + c) = img.at(r, 0);
            }
            col_off[v] += static_cast<int>(pb.by_vertex[v].size());
        }
    }
    ModuleMap cover = make_map(ds.rep, m, std::move(blocks));
    if (!cover.is_surjective()) throw err_internal("projective_cover: not surjective");
    return Cover{ds.rep, cover, labels};
}

Hull injective_hull(const Representation& m) {
    Representation dm = dualize(m);
    Cover c = projective_cover(dm);
    Representation hull = dualize(c.proj);
    ModuleMap emb = dualize_map(c.map);
    // dualize twice is the identity on the nose, so retarget the blocks
    ModuleMap fixed = make_map(m, hull, emb.blocks);
    return Hull{hull, fixed, c.labels};
}

bool is_projective(const Representation& m) {
    Cover c = projective_cover(m);
    return c.proj.total_dim() == m.total_dim();
}

bool is_injective(const Representation& m) {
    Hull h = injective_hull(m);
    return h.inj.total_dim() == m.total_dim();
}

MinimalResolution minimal_resolution(const Representation& m, int cap) {
    Cover c0 = projective_cover(m);
    std::vector<Representation> terms{c0.proj};
    std::vector<std::vector<int>> labels{c0.labels};
    std::vector<ModuleMap> diffs;
    bool terminated = false;
    Submodule ker = kernel_submodule(c0.map);
    while (true) {
        if (ker.total_dim() == 0) {
            terminated = true;
            break;
        }
        if (static_cast<int>(terms.size()) > cap) break;
        SubQuotient kq = submodule_as_module(terms.back(), ker);
        Cover c = projective_cover(kq.rep);
        diffs.push_back(compose(c.map, kq.map));
        terms.push_back(c.proj);
        labels.push_back(c.labels);
        ker = kernel_submodule(c.map);
    }
    return MinimalResolution{std::move(terms), std::move(labels), c0.map, std::move(diffs), terminated};
}

size_t ext_dim(const Representation& m, const Representation& n, int degree, int cap) {
    if (degree < 0) return 0;
    if (degree == 0) return hom_basis(m, n).size();
    MinimalResolution res = minimal_resolution(m, std::max(cap, degree + 1));
    if (!res.terminated && static_cast<int>(res.terms.size()) <= degree + 1)
        throw err_resolution_cap("resolution did not reach degree " + std::to_string(degree + 1));
    auto hom_at = [&](int i) -> std::vector<ModuleMap> {
        if (i < 0 || i >= static_cast<int>(res.terms.size())) return {};
        return hom_basis(res.terms[i], n);
    };
    auto hn = hom_at(degree);
    auto hn1 = hom_at(degree + 1);
    auto hprev = hom_at(degree - 1);
    auto delta_rank = [&](int i, const std::vector<ModuleMap>& dom, const std::vector<ModuleMap>& cod) -> size_t {
        if (dom.empty() || cod.empty() || i >= static_cast<int>(res.differentials.size())) return 0;
        Matrix mat(cod.size(), dom.size());
        for (size_t k = 0; k < dom.size(); ++k) {
            ModuleMap comp = compose(res.differentials[i], dom[k]);
            auto coords = hom_coordinates(cod, comp);
            for (size_t r = 0; r < cod.size(); ++r) mat.at(r, k) = coords[r];
        }
        return mat.rank();
    };
    size_t rank_out = delta_rank(degree, hn, hn1);
    size_t rank_in = delta_rank(degree - 1, hprev, hn);
    return hn.size() - rank_out - rank_in;
}

std::optional<int> global_dimension(const AlgebraPtr& a, int cap) {
    int gl = 0;
    for (size_t v = 0; v < a->quiver().num_vertices(); ++v) {
        MinimalResolution res = minimal_resolution(simple_module(a, static_cast<int>(v)), cap);
        if (!res.terminated) return std::nullopt;
        gl = std::max(gl, static_cast<int>(res.terms.size()) - 1);
    }
    return gl;
}

} // namespace qh

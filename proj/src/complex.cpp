#include "qh/complex.hpp"

#include "qh/error.hpp"

#include <algorithm>

namespace qh {

BoundedComplex BoundedComplex::zero(AlgebraPtr a) { return BoundedComplex(std::move(a), 0, {}, {}); }

BoundedComplex BoundedComplex::stalk(const Representation& m, int degree) {
    if (m.total_dim() == 0) return zero(m.algebra());
    return BoundedComplex(m.algebra(), degree, {m}, {});
}

BoundedComplex::BoundedComplex(AlgebraPtr a, int lo, std::vector<Representation> objects,
                               std::vector<ModuleMap> diffs)
    : algebra_(std::move(a)), lo_(lo), objects_(std::move(objects)), diffs_(std::move(diffs)) {
    if (!objects_.empty() && diffs_.size() + 1 != objects_.size())
        throw err_dimension("BoundedComplex: differential count");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (!(diffs_[i].source == objects_[i + 1]) || !(diffs_[i].target == objects_[i]))
            throw err_dimension("BoundedComplex: differential endpoints");
        if (i > 0 && !compose(diffs_[i], diffs_[i - 1]).is_zero())
            throw err_dimension("BoundedComplex: d.d is nonzero");
    }
}

Representation BoundedComplex::object(int degree) const {
    if (is_zero_complex() || degree < lo_ || degree > hi()) return Representation::zero(algebra_);
    return objects_[degree - lo_];
}

ModuleMap BoundedComplex::differential(int degree) const {
    if (!is_zero_complex() && degree > lo_ && degree <= hi()) return diffs_[degree - lo_ - 1];
    return zero_map(object(degree), object(degree - 1));
}

BoundedComplex BoundedComplex::shifted(int k) const {
    if (is_zero_complex()) return *this;
    std::vector<ModuleMap> diffs = diffs_;
    if (k % 2 != 0)
        for (auto& d : diffs) d = scale_map(Rational(-1), d);
    return BoundedComplex(algebra_, lo_ + k, objects_, std::move(diffs));
}

size_t BoundedComplex::homology_dim(int degree) const {
    ModuleMap dn = differential(degree);
    ModuleMap dn1 = differential(degree + 1);
    size_t cycles = kernel_submodule(dn).total_dim();
    size_t boundaries = image_submodule(dn1).total_dim();
    return cycles - boundaries;
}

Representation BoundedComplex::homology_module(int degree) const {
    ModuleMap dn = differential(degree);
    ModuleMap dn1 = differential(degree + 1);
    Submodule z = kernel_submodule(dn);
    Submodule b = image_submodule(dn1);
    SubQuotient zm = submodule_as_module(object(degree), z);
    // express the boundaries inside the cycle module
    Submodule b_in_z = zero_submodule(zm.rep);
    for (size_t v = 0; v < zm.rep.num_vertices(); ++v) {
        const Matrix& bi = b.per_vertex[v].basis();
        if (bi.rows() == 0) continue;
        auto coords = zm.map.blocks[v].solve(bi.transpose());
        if (!coords) throw err_internal("homology: boundaries not inside cycles");
        b_in_z.per_vertex[v] = Subspace::span_of_rows(coords->transpose());
    }
    return quotient_module(zm.rep, b_in_z).rep;
}

bool is_quasi_isomorphism(const ChainMap& f) {
    int lo = std::min(f.source.lo(), f.target.lo()) - 1;
    int hi = std::max(f.source.hi(), f.target.hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
        // induced map on homology must be invertible
        Submodule zc = kernel_submodule(f.source.differential(n));
        Submodule bc = image_submodule(f.source.differential(n + 1));
        Submodule zd = kernel_submodule(f.target.differential(n));
        Submodule bd = image_submodule(f.target.differential(n + 1));
        SubQuotient zcm = submodule_as_module(f.source.object(n), zc);
        SubQuotient zdm = submodule_as_module(f.target.object(n), zd);
        ModuleMap comp = f.components.count(n) ? f.components.at(n)
                                               : zero_map(f.source.object(n), f.target.object(n));
        // cycles map to cycles
        std::vector<Matrix> alpha;
        for (size_t v = 0; v < zcm.rep.num_vertices(); ++v) {
            Matrix img = comp.blocks[v] * zcm.map.blocks[v];
            auto coords = zdm.map.blocks[v].solve(img);
            if (!coords || !(zdm.map.blocks[v] * *coords == img)) return false;
            alpha.push_back(*coords);
        }
        // quotient by boundaries on both sides
        auto express_inside = [](const SubQuotient& zm, const Submodule& b) {
            Submodule out = zero_submodule(zm.rep);
            for (size_t v = 0; v < zm.rep.num_vertices(); ++v) {
                const Matrix& bi = b.per_vertex[v].basis();
                if (bi.rows() == 0) continue;
                auto coords = zm.map.blocks[v].solve(bi.transpose());
                if (!coords) throw err_internal("quasi-iso: boundaries not inside cycles");
                out.per_vertex[v] = Subspace::span_of_rows(coords->transpose());
            }
            return out;
        };
        SubQuotient hc = quotient_module(zcm.rep, express_inside(zcm, bc));
        SubQuotient hd = quotient_module(zdm.rep, express_inside(zdm, bd));
        for (size_t v = 0; v < hc.rep.num_vertices(); ++v) {
            if (hc.rep.dim_at(static_cast<int>(v)) != hd.rep.dim_at(static_cast<int>(v))) return false;
            // induced block: project target, include source through a section
            const Matrix& pc = hc.map.blocks[v];
            auto sec = pc.solve(Matrix::identity(pc.rows()));
            if (!sec) return false;
            Matrix induced = hd.map.blocks[v] * (alpha[v] * *sec);
            if (!induced.is_invertible() && induced.rows() > 0) return false;
        }
    }
    return true;
}

ResolutionComplex projective_resolution_complex(const BoundedComplex& c, int cap) {
    const AlgebraPtr& a = c.algebra();
    if (c.is_zero_complex())
        return ResolutionComplex{BoundedComplex::zero(a), ChainMap{BoundedComplex::zero(a), c, {}}, {}};
    int lo = c.lo();
    std::vector<Representation> pterms;
    std::vector<ModuleMap> pdiffs;
    std::map<int, std::vector<int>> labels;
    std::map<int, ModuleMap> phis;
    // walk degrees upward, covering the cycles of the mapping cone
    Representation prev_p = Representation::zero(a); // P_{n-1}
    ModuleMap prev_d = zero_map(prev_p, prev_p);     // d_{n-1}: P_{n-1} -> P_{n-2}
    ModuleMap prev_phi = zero_map(prev_p, c.object(lo - 1));
    int n = lo;
    while (true) {
        if (n - c.hi() > cap) throw err_cap_exceeded("projective resolution still nonzero at degree cap");
        // V = {(p, x) in P_{n-1} + C_n : d p = 0, phi p + d x = 0}
        DirectSum cone = direct_sum(a, {prev_p, c.object(n)});
        ModuleMap into_prev = compose(cone.projections[0], prev_d);
        ModuleMap into_c = add_maps(compose(cone.projections[0], prev_phi),
                                    compose(cone.projections[1], c.differential(n)));
        Submodule v = submodule_intersect(cone.rep, kernel_submodule(into_prev), kernel_submodule(into_c));
        if (v.total_dim() == 0 && n > c.hi()) break;
        SubQuotient vm = submodule_as_module(cone.rep, v);
        Cover cov = projective_cover(vm.rep);
        ModuleMap psi = compose(cov.map, vm.map); // P_n -> P_{n-1} + C_n
        ModuleMap psi1 = compose(psi, cone.projections[0]);
        ModuleMap psi2 = compose(psi, cone.projections[1]);
        Representation pn = cov.proj;
        ModuleMap dn = scale_map(Rational(-1), psi1); // P_n -> P_{n-1}
        if (n > lo) pdiffs.push_back(dn);
        pterms.push_back(pn);
        labels[n] = cov.labels;
        phis.insert_or_assign(n, psi2);
        prev_phi = psi2;
        prev_d = dn;
        prev_p = pn;
        ++n;
    }
    BoundedComplex pc(a, lo, pterms, pdiffs);
    ChainMap qis{pc, c, phis};
    if (!is_quasi_isomorphism(qis)) throw err_internal("resolution is not a quasi-isomorphism");
    return ResolutionComplex{pc, qis, labels};
}

size_t hom_homotopy(const BoundedComplex& cp, const BoundedComplex& d, int n) {
    if (cp.is_zero_complex() || d.is_zero_complex()) return 0;
    int k = -n;
    // hom level k: maps cp_i -> d_{i+k}
    auto level_basis = [&](int kk) {
        std::vector<std::pair<int, std::vector<ModuleMap>>> out; // (i, basis)
        for (int i = cp.lo(); i <= cp.hi(); ++i) {
            if (i + kk < d.lo() || i + kk > d.hi()) continue;
            auto hb = hom_basis(cp.object(i), d.object(i + kk));
            if (!hb.empty()) out.emplace_back(i, std::move(hb));
        }
        return out;
    };
    auto level_dim = [&](const std::vector<std::pair<int, std::vector<ModuleMap>>>& lb) {
        size_t s = 0;
        for (const auto& [i, b] : lb) s += b.size();
        return s;
    };
    // boundary Hom_k -> Hom_{k-1}: (Df)_i = d^D f_i - (-1)^k f_{i-1} d^C
    auto boundary = [&](int kk, const std::vector<std::pair<int, std::vector<ModuleMap>>>& from,
                        const std::vector<std::pair<int, std::vector<ModuleMap>>>& to) {
        size_t rows = level_dim(to), cols = level_dim(from);
        Matrix mat(rows, cols);
        size_t coff = 0;
        Rational sign = (kk % 2 == 0) ? Rational(-1) : Rational(1); // -(-1)^k
        for (const auto& [i, fb] : from) {
            for (size_t fj = 0; fj < fb.size(); ++fj) {
                // component at degree i: contributes to (i, k-1) via d^D and
                // to (i+1, k-1) via precomposition
                size_t roff = 0;
                for (const auto& [ti, tb] : to) {
                    if (ti == i && i + kk >= d.lo() && i + kk <= d.hi() && i + kk - 1 >= d.lo()) {
                        ModuleMap comp = compose(fb[fj], d.differential(i + kk));
                        auto coords = hom_coordinates(tb, comp);
                        for (size_t r = 0; r < tb.size(); ++r) mat.at(roff + r, coff + fj) += coords[r];
                    }
                    if (ti == i + 1) {
                        ModuleMap comp = compose(cp.differential(i + 1), fb[fj]);
                        auto coords = hom_coordinates(tb, comp);
                        for (size_t r = 0; r < tb.size(); ++r)
                            mat.at(roff + r, coff + fj) += sign * coords[r];
                    }
                    roff += tb.size();
                }
            }
            coff += fb.size();
        }
        return mat;
    };
    auto at_k = level_basis(k);
    auto at_km1 = level_basis(k - 1);
    auto at_kp1 = level_basis(k + 1);
    size_t dim_k = level_dim(at_k);
    if (dim_k == 0) return 0;
    Matrix d_out = boundary(k, at_k, at_km1);
    Matrix d_in = boundary(k + 1, at_kp1, at_k);
    size_t cycles = dim_k - d_out.rank();
    return cycles - d_in.rank();
}

BoundedComplex apply_functor_complex(const ProjFunctorTable& table, const BoundedComplex& cp,
                                     const std::map<int, std::vector<int>>& labels) {
    const AlgebraPtr& a = cp.algebra();
    if (cp.is_zero_complex()) return cp;
    // values per degree with their summand structure
    std::map<int, DirectSum> fsums;
    std::map<int, DirectSum> psums;
    for (int nn = cp.lo(); nn <= cp.hi(); ++nn) {
        auto it = labels.find(nn);
        std::vector<int> ls = it == labels.end() ? std::vector<int>{} : it->second;
        std::vector<Representation> fparts, pparts;
        for (int l : ls) {
            fparts.push_back(table.value[l]);
            pparts.push_back(projective_module(a, l));
        }
        fsums.emplace(nn, direct_sum(a, fparts));
        psums.emplace(nn, direct_sum(a, pparts));
        if (!(psums.at(nn).rep == cp.object(nn)))
            throw err_dimension("apply_functor_complex: labels do not match the complex");
    }
    std::vector<Representation> objs;
    std::vector<ModuleMap> diffs;
    for (int nn = cp.lo(); nn <= cp.hi(); ++nn) {
        objs.push_back(fsums.at(nn).rep);
        if (nn == cp.lo()) continue;
        const auto& src_labels = labels.at(nn);
        const auto& dst_labels = labels.at(nn - 1);
        ModuleMap d = cp.differential(nn);
        ModuleMap fd = zero_map(fsums.at(nn).rep, fsums.at(nn - 1).rep);
        for (size_t i = 0; i < src_labels.size(); ++i)
            for (size_t j = 0; j < dst_labels.size(); ++j) {
                ModuleMap comp = compose(compose(psums.at(nn).inclusions[i], d), psums.at(nn - 1).projections[j]);
                auto coords = hom_coordinates(table.dom[src_labels[i]][dst_labels[j]], comp);
                ModuleMap fcomp = zero_map(table.value[src_labels[i]], table.value[dst_labels[j]]);
                for (size_t t = 0; t < coords.size(); ++t)
                    if (!coords[t].is_zero())
                        fcomp = add_maps(fcomp, scale_map(coords[t], table.img[src_labels[i]][dst_labels[j]][t]));
                fd = add_maps(fd, compose(compose(fsums.at(nn).projections[i], fcomp),
                                          fsums.at(nn - 1).inclusions[j]));
            }
        diffs.push_back(fd);
    }
    return BoundedComplex(a, cp.lo(), std::move(objs), std::move(diffs));
}

std::vector<SerreTableRow> serre_duality_check(const AlgebraPtr& a, int label_l, int label_m, int n_lo, int n_hi,
                                               int cap) {
    if (!global_dimension(a, cap)) throw err_cap_exceeded("serre table requires finite global dimension");
    ProjFunctorTable h = nakayama_table(a);
    ResolutionComplex rl = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, label_l), 0), cap);
    ResolutionComplex rm = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, label_m), 0), cap);
    BoundedComplex hm = apply_functor_complex(h, rm.complex, rm.labels);
    std::vector<SerreTableRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        SerreTableRow r;
        r.n = n;
        // the shift in Hom(M, (LH N)[n]) is cohomological; homologically the
        // target moves down, which negates the hom-complex level
        r.lhs = hom_homotopy(rl.complex, hm, -n);
        r.rhs = n >= 0 ? ext_dim(simple_module(a, label_m), simple_module(a, label_l), n, cap) : 0;
        r.equal = r.lhs == r.rhs;
        rows.push_back(r);
    }
    return rows;
}

} // namespace qh

#include "qh/stratification.hpp"

#include "qh/error.hpp"

#include <algorithm>

namespace qh {

StratOrder::StratOrder(size_t num_labels, std::vector<std::pair<int, int>> pairs)
    : n_(num_labels), pairs_(std::move(pairs)), leq_(num_labels * num_labels, false) {
    for (size_t i = 0; i < n_; ++i) leq_[i * n_ + i] = true;
    for (const auto& [a, b] : pairs_) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n_) || b >= static_cast<int>(n_))
            throw err_dimension("StratOrder: label out of range");
        leq_[a * n_ + b] = true;
    }
    for (size_t k = 0; k < n_; ++k)
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (leq_[i * n_ + k] && leq_[k * n_ + j]) leq_[i * n_ + j] = true;
}

bool StratOrder::is_antisymmetric() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (i != j && leq_[i * n_ + j] && leq_[j * n_ + i]) return false;
    return true;
}

std::vector<int> StratOrder::descending_linear_extension() const {
    std::vector<int> out;
    std::vector<bool> used(n_, false);
    for (size_t step = 0; step < n_; ++step) {
        int pick = -1;
        for (size_t c = 0; c < n_ && pick < 0; ++c) {
            if (used[c]) continue;
            bool maximal = true;
            for (size_t d = 0; d < n_; ++d) {
                if (used[d] || d == c) continue;
                if (less(static_cast<int>(c), static_cast<int>(d))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) pick = static_cast<int>(c);
        }
        if (pick < 0) throw err_internal("descending_linear_extension: no maximal label");
        used[pick] = true;
        out.push_back(pick);
    }
    return out;
}

StratifiedAlgebra::StratifiedAlgebra(AlgebraPtr algebra, StratOrder order)
    : algebra_(std::move(algebra)), order_(std::move(order)) {
    size_t n = algebra_->quiver().num_vertices();
    if (order_.size() != n) throw err_dimension("StratifiedAlgebra: order size must match vertex count");
    proj_.resize(n);
    inj_.resize(n);
    delta_.resize(n);
    pdelta_.resize(n);
    nabla_.resize(n);
    pnabla_.resize(n);
}

StratPtr StratifiedAlgebra::make(AlgebraPtr algebra, StratOrder order) {
    return StratPtr(new StratifiedAlgebra(std::move(algebra), std::move(order)));
}

const Representation& StratifiedAlgebra::projective(int label) const {
    if (!proj_[label]) proj_[label] = projective_module(algebra_, label);
    return *proj_[label];
}

const Representation& StratifiedAlgebra::injective(int label) const {
    if (!inj_[label]) inj_[label] = injective_module(algebra_, label);
    return *inj_[label];
}

const Representation& StratifiedAlgebra::standard(int label) const {
    if (!delta_[label]) {
        std::vector<int> above;
        for (size_t m = 0; m < order_.size(); ++m)
            if (order_.less(label, static_cast<int>(m))) above.push_back(static_cast<int>(m));
        const Representation& p = projective(label);
        Submodule tr = trace_of_projectives(above, p);
        delta_[label] = quotient_module(p, tr).rep;
    }
    return *delta_[label];
}

const Representation& StratifiedAlgebra::proper_standard(int label) const {
    if (!pdelta_[label]) {
        std::vector<int> at_or_above;
        for (size_t m = 0; m < order_.size(); ++m)
            if (order_.leq(label, static_cast<int>(m))) at_or_above.push_back(static_cast<int>(m));
        const Representation& p = projective(label);
        Submodule rad = radical_submodule(p);
        SubQuotient radm = submodule_as_module(p, rad);
        Submodule tr = trace_of_projectives(at_or_above, radm.rep);
        // push the trace forward along the inclusion into P(label)
        Submodule inp;
        for (size_t v = 0; v < p.num_vertices(); ++v)
            inp.per_vertex.push_back(tr.per_vertex[v].image_under(radm.map.blocks[v]));
        pdelta_[label] = quotient_module(p, inp).rep;
    }
    return *pdelta_[label];
}

const Representation& StratifiedAlgebra::costandard(int label) const {
    if (!nabla_[label]) nabla_[label] = dualize(opposite()->standard(label));
    return *nabla_[label];
}

const Representation& StratifiedAlgebra::proper_costandard(int label) const {
    if (!pnabla_[label]) pnabla_[label] = dualize(opposite()->proper_standard(label));
    return *pnabla_[label];
}

StratPtr StratifiedAlgebra::opposite() const {
    if (auto back = opp_backlink_.lock()) return back;
    if (opp_) return opp_;
    auto opp = make(algebra_->opposite(), order_);
    opp->opp_backlink_ = shared_from_this();
    opp_ = opp;
    return opp;
}

namespace {

// Backtracking peel: quotient by a maximal-label (proper) standard module and
// recurse into the kernel. The choice of surjection matters for proper
// standard flags, so several deterministic candidates are tried per label.
struct PeelSearch {
    const StratPtr& s;
    bool proper;
    int budget = 4000;

    std::vector<ModuleMap> candidates(const Representation& cur, const Representation& factor) const {
        auto basis = hom_basis(cur, factor);
        std::vector<ModuleMap> out;
        for (const auto& f : basis)
            if (f.is_surjective()) out.push_back(f);
        // pairwise mixes of surjective members catch the remaining cases
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                ModuleMap sum = add_maps(basis[i], basis[j]);
                if (sum.is_surjective()) out.push_back(sum);
                ModuleMap diff = add_maps(basis[i], scale_map(Rational(-1), basis[j]));
                if (diff.is_surjective()) out.push_back(diff);
            }
        return out;
    }

    bool search(const Representation& cur, std::vector<int>& labels) {
        if (cur.total_dim() == 0) return true;
        if (--budget < 0) throw err_strat_invalid("flag search budget exhausted");
        auto heads = head_multiset(cur);
        // maximal head labels first (the canonical choice for standard
        // flags), then the rest: proper standard flags may need a
        // non-maximal label on top
        std::vector<int> tries;
        for (const auto& [lam, mult] : heads) {
            (void)mult;
            bool maximal = true;
            for (const auto& [mu, mult2] : heads) {
                (void)mult2;
                if (mu != lam && s->order().less(lam, mu)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) tries.push_back(lam);
        }
        for (const auto& [lam, mult] : heads) {
            (void)mult;
            if (std::find(tries.begin(), tries.end(), lam) == tries.end()) tries.push_back(lam);
        }
        for (int lam : tries) {
            const Representation& factor = proper ? s->proper_standard(lam) : s->standard(lam);
            for (const auto& f : candidates(cur, factor)) {
                labels.push_back(lam);
                Representation kernel = submodule_as_module(cur, kernel_submodule(f)).rep;
                if (search(kernel, labels)) return true;
                labels.pop_back();
            }
        }
        return false;
    }
};

std::optional<FlagCertificate> peel_flag(const StratPtr& s, const Representation& m, bool proper) {
    PeelSearch ps{s, proper};
    std::vector<int> labels;
    if (ps.search(m, labels)) return FlagCertificate{labels};
    return std::nullopt;
}

bool homological_standard_flag(const StratPtr& s, const Representation& m) {
    for (size_t mu = 0; mu < s->num_labels(); ++mu)
        if (ext_dim(m, s->proper_costandard(static_cast<int>(mu)), 1) != 0) return false;
    return true;
}

bool homological_proper_costandard_flag(const StratPtr& s, const Representation& m) {
    for (size_t mu = 0; mu < s->num_labels(); ++mu)
        if (ext_dim(s->standard(static_cast<int>(mu)), m, 1) != 0) return false;
    return true;
}

} // namespace

std::optional<FlagCertificate> has_flag(const StratPtr& s, const Representation& m, FlagFamily family,
                                        bool cross_check) {
    std::optional<FlagCertificate> cert;
    switch (family) {
    case FlagFamily::Standard:
        cert = peel_flag(s, m, false);
        break;
    case FlagFamily::ProperStandard:
        cert = peel_flag(s, m, true);
        break;
    case FlagFamily::Costandard:
        cert = peel_flag(s->opposite(), dualize(m), false);
        break;
    case FlagFamily::ProperCostandard:
        cert = peel_flag(s->opposite(), dualize(m), true);
        break;
    }
    if (cross_check) {
        if (family == FlagFamily::Standard) {
            bool homological = homological_standard_flag(s, m);
            if (homological != cert.has_value())
                throw err_strat_invalid("standard flag: constructive search and ext criterion disagree");
        } else if (family == FlagFamily::ProperCostandard) {
            bool homological = homological_proper_costandard_flag(s, m);
            if (homological != cert.has_value())
                throw err_strat_invalid("proper costandard flag: constructive search and ext criterion disagree");
        }
    }
    return cert;
}

Verdict is_standardly_stratified(const StratPtr& s) {
    const auto& q = s->algebra()->quiver();
    for (size_t lam = 0; lam < s->num_labels(); ++lam) {
        int l = static_cast<int>(lam);
        const Representation& p = s->projective(l);
        const Representation& d = s->standard(l);
        // kernel of P -> Delta must have a standard flag
        std::vector<int> above;
        for (size_t m = 0; m < s->num_labels(); ++m)
            if (s->order().less(l, static_cast<int>(m))) above.push_back(static_cast<int>(m));
        Submodule tr = trace_of_projectives(above, p);
        Representation ker = submodule_as_module(p, tr).rep;
        if (!has_flag(s, ker, FlagFamily::Standard, false))
            return {false, "kernel of P(" + q.vertex_label(l) + ") -> Delta(" + q.vertex_label(l) +
                               ") has no standard flag"};
        // kernel of Delta -> L has factors L(mu), mu <= lambda
        Submodule rad = radical_submodule(d);
        for (size_t v = 0; v < d.num_vertices(); ++v) {
            if (rad.dim_at(static_cast<int>(v)) == 0) continue;
            if (!s->order().leq(static_cast<int>(v), l))
                return {false, "rad Delta(" + q.vertex_label(l) + ") contains L(" +
                                   q.vertex_label(static_cast<int>(v)) + ") which is not below"};
        }
    }
    return {true, ""};
}

Verdict is_quasi_hereditary(const StratPtr& s) {
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) return ss;
    if (!s->order().is_antisymmetric()) return {false, "order is not antisymmetric"};
    const auto& q = s->algebra()->quiver();
    for (size_t lam = 0; lam < s->num_labels(); ++lam) {
        int l = static_cast<int>(lam);
        if (!module_iso(s->standard(l), s->proper_standard(l)))
            return {false, "Delta(" + q.vertex_label(l) + ") differs from the proper standard module"};
    }
    return {true, ""};
}

Verdict is_properly_stratified(const StratPtr& s) {
    Verdict ss = is_standardly_stratified(s);
    if (!ss.ok) return ss;
    if (!s->order().is_antisymmetric()) return {false, "order is not antisymmetric"};
    const auto& q = s->algebra()->quiver();
    for (size_t lam = 0; lam < s->num_labels(); ++lam) {
        int l = static_cast<int>(lam);
        if (!has_flag(s, s->standard(l), FlagFamily::ProperStandard, false))
            return {false, "Delta(" + q.vertex_label(l) + ") has no proper standard flag"};
    }
    return {true, ""};
}

} // namespace qh

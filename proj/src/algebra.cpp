#include "qh/algebra.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qh {

namespace {

struct EnumPath {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;
};

// Deterministic path enumeration by length, then extension order. The id of
// a path is its position in this list, so ids are ascending in (length, lex).
std::vector<EnumPath> enumerate_paths(const Quiver& q, int max_len, size_t guard) {
    std::vector<EnumPath> paths;
    std::vector<size_t> level_begin;
    for (size_t v = 0; v < q.num_vertices(); ++v)
        paths.push_back({static_cast<int>(v), static_cast<int>(v), {}});
    size_t lo = 0, hi = paths.size();
    for (int len = 1; len <= max_len; ++len) {
        for (size_t p = lo; p < hi; ++p) {
            for (size_t a = 0; a < q.num_arrows(); ++a) {
                if (q.arrow_data(static_cast<int>(a)).source != paths[p].target) continue;
                EnumPath ext = paths[p];
                ext.arrows.push_back(static_cast<int>(a));
                ext.target = q.arrow_data(static_cast<int>(a)).target;
                paths.push_back(std::move(ext));
                if (paths.size() > guard)
                    throw err_non_admissible("path count exceeds guard (" + std::to_string(guard) +
                                             ") before length cap; quiver too wild for dense enumeration");
            }
        }
        lo = hi;
        hi = paths.size();
        if (lo == hi) break; // no paths of this length at all
    }
    return paths;
}

using SparseVec = std::map<int, Rational>; // path id -> coefficient

// Incremental Gaussian elimination with pivot on the largest path id, so the
// normal form of any vector is supported on short surviving paths.
class Reducer {
public:
    void reduce(SparseVec& v) const {
        while (!v.empty()) {
            auto it = std::prev(v.end());
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                // largest term not reducible; lower terms may still be
                bool changed = false;
                for (auto rit = v.rbegin(); rit != v.rend(); ++rit) {
                    auto r2 = rows_.find(rit->first);
                    if (r2 != rows_.end()) {
                        subtract(v, rit->first, r2->second);
                        changed = true;
                        break;
                    }
                }
                if (!changed) return;
            } else {
                subtract(v, it->first, row->second);
            }
        }
    }

    void insert(SparseVec v) {
        reduce(v);
        if (v.empty()) return;
        auto it = std::prev(v.end());
        Rational inv = it->second.inverse();
        for (auto& [id, c] : v) c *= inv;
        int pivot = it->first;
        rows_[pivot] = std::move(v);
    }

    bool is_pivot(int id) const { return rows_.count(id) != 0; }

private:
    std::map<int, SparseVec> rows_; // pivot id -> normalized row

    static void subtract(SparseVec& v, int id, const SparseVec& row) {
        Rational f = v.at(id); // row is normalized on id
        for (const auto& [j, c] : row) {
            Rational& t = v[j];
            t -= f * c;
            if (t.is_zero()) v.erase(j);
        }
    }
};

int path_end(const Quiver& q, const std::vector<int>& arrows, int start) {
    int v = start;
    for (int a : arrows) {
        if (q.arrow_data(a).source != v) return -1;
        v = q.arrow_data(a).target;
    }
    return v;
}

void validate_relations(const Quiver& q, const std::vector<RelationElement>& rels) {
    for (const auto& rel : rels) {
        if (rel.terms.empty()) throw err_malformed_relation("empty relation");
        int src = -1, tgt = -1;
        for (const auto& t : rel.terms) {
            if (t.arrows.size() < 2)
                throw err_malformed_relation("relation term of length < 2");
            int s = q.arrow_data(t.arrows.front()).source;
            int e = path_end(q, t.arrows, s);
            if (e < 0) throw err_malformed_relation("non-composable path in relation");
            if (src == -1) {
                src = s;
                tgt = e;
            } else if (s != src || e != tgt) {
                throw err_malformed_relation("relation mixes non-parallel paths");
            }
        }
    }
}

struct PathIndex {
    std::map<std::vector<int>, int> by_arrows; // non-trivial paths
    std::vector<int> trivial;                  // vertex -> id

    int lookup(const EnumPath& p) const {
        if (p.arrows.empty()) return trivial[p.source];
        auto it = by_arrows.find(p.arrows);
        return it == by_arrows.end() ? -1 : it->second;
    }
};

PathIndex make_index(const Quiver& q, const std::vector<EnumPath>& paths) {
    PathIndex idx;
    idx.trivial.assign(q.num_vertices(), -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].arrows.empty())
            idx.trivial[paths[i].source] = static_cast<int>(i);
        else
            idx.by_arrows[paths[i].arrows] = static_cast<int>(i);
    }
    return idx;
}

Reducer build_reducer(const Quiver& q, const std::vector<RelationElement>& rels,
                      const std::vector<EnumPath>& paths, const PathIndex& idx, int max_len) {
    Reducer red;
    for (const auto& rel : rels) {
        int rel_src = q.arrow_data(rel.terms.front().arrows.front()).source;
        int rel_tgt = path_end(q, rel.terms.front().arrows, rel_src);
        size_t max_term = 0;
        for (const auto& t : rel.terms) max_term = std::max(max_term, t.arrows.size());
        for (const auto& u : paths) {
            if (u.target != rel_src) continue;
            for (const auto& v : paths) {
                if (v.source != rel_tgt) continue;
                if (u.arrows.size() + max_term + v.arrows.size() > static_cast<size_t>(max_len)) continue;
                SparseVec vec;
                for (const auto& t : rel.terms) {
                    std::vector<int> seq = u.arrows;
                    seq.insert(seq.end(), t.arrows.begin(), t.arrows.end());
                    seq.insert(seq.end(), v.arrows.begin(), v.arrows.end());
                    auto it = idx.by_arrows.find(seq);
                    if (it == idx.by_arrows.end()) throw err_internal("relation product path not enumerated");
                    Rational& c = vec[it->second];
                    c += t.coef;
                    if (c.is_zero()) vec.erase(it->second);
                }
                red.insert(std::move(vec));
            }
        }
    }
    return red;
}

} // namespace

AlgebraPtr BoundQuiverAlgebra::build(Quiver quiver, std::vector<RelationElement> relations, int length_cap) {
    if (length_cap < 1) throw err_non_admissible("lengthCap must be >= 1");
    validate_relations(quiver, relations);
    constexpr size_t kPathGuard = 100000;

    auto paths = enumerate_paths(quiver, length_cap, kPathGuard);
    auto idx = make_index(quiver, paths);
    Reducer red = build_reducer(quiver, relations, paths, idx, length_cap);

    // survivors per length; the first empty length is the Loewy bound
    std::vector<size_t> survivors_at(static_cast<size_t>(length_cap) + 1, 0);
    for (size_t i = 0; i < paths.size(); ++i)
        if (!red.is_pivot(static_cast<int>(i))) ++survivors_at[paths[i].arrows.size()];
    int lstar = -1;
    for (int l = 1; l <= length_cap; ++l)
        if (survivors_at[l] == 0) {
            lstar = l;
            break;
        }
    if (lstar < 0)
        throw err_non_admissible("paths of length " + std::to_string(length_cap) +
                                 " survive; ideal not detected nilpotent within the cap");
    for (int l = lstar + 1; l <= length_cap; ++l)
        if (survivors_at[l] != 0)
            throw err_non_admissible("survivors above the first empty length; relations too inhomogeneous for the cap");

    // products of basis paths reach length 2(lstar-1); rebuild in the wider
    // window when needed so reductions are exact
    int work_len = std::max(length_cap, 2 * (lstar - 1));
    if (work_len > length_cap) {
        paths = enumerate_paths(quiver, work_len, kPathGuard);
        idx = make_index(quiver, paths);
        red = build_reducer(quiver, relations, paths, idx, work_len);
    }

    auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
    alg->quiver_ = std::move(quiver);
    alg->relations_ = std::move(relations);
    alg->length_cap_ = length_cap;
    alg->loewy_length_ = lstar;

    std::vector<int> basis_of_path(paths.size(), -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].arrows.size() >= static_cast<size_t>(lstar)) break;
        if (red.is_pivot(static_cast<int>(i))) continue;
        basis_of_path[i] = static_cast<int>(alg->basis_.size());
        alg->basis_.push_back({paths[i].source, paths[i].target, paths[i].arrows});
    }
    alg->vertex_idem_.assign(alg->quiver_.num_vertices(), -1);
    alg->arrow_basis_.assign(alg->quiver_.num_arrows(), -1);
    for (size_t i = 0; i < alg->basis_.size(); ++i) {
        const auto& b = alg->basis_[i];
        if (b.arrows.empty()) alg->vertex_idem_[b.source] = static_cast<int>(i);
        if (b.arrows.size() == 1) alg->arrow_basis_[b.arrows[0]] = static_cast<int>(i);
    }
    for (size_t v = 0; v < alg->quiver_.num_vertices(); ++v)
        if (alg->vertex_idem_[v] < 0) throw err_internal("vertex idempotent killed by relations");
    for (size_t a = 0; a < alg->quiver_.num_arrows(); ++a)
        if (alg->arrow_basis_[a] < 0)
            throw err_non_admissible("arrow '" + alg->quiver_.arrow_data(static_cast<int>(a)).name +
                                     "' lies in the ideal; relations are not admissible");

    // multiplication table by concatenation + normal form
    size_t n = alg->basis_.size();
    alg->mult_.assign(n, std::vector<SparseElem>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const auto& p = alg->basis_[i];
            const auto& qq = alg->basis_[j];
            if (p.target != qq.source) continue;
            EnumPath cat;
            cat.source = p.source;
            cat.target = qq.target;
            cat.arrows = p.arrows;
            cat.arrows.insert(cat.arrows.end(), qq.arrows.begin(), qq.arrows.end());
            int id = idx.lookup(cat);
            if (id < 0) throw err_internal("concatenated path not enumerated");
            SparseVec v;
            v[id] = Rational(1);
            red.reduce(v);
            SparseElem out;
            for (const auto& [pid, c] : v) {
                int b = basis_of_path[pid];
                if (b < 0) throw err_internal("normal form hits non-basis path");
                out.emplace_back(b, c);
            }
            std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            alg->mult_[i][j] = std::move(out);
        }
    }

    alg->verify_table();
    return alg;
}

void BoundQuiverAlgebra::verify_table() const {
    size_t n = dim();
    auto mul_elem = [&](const Elem& a, const Elem& b) { return multiply(a, b); };
    auto basis_elem = [&](size_t i) {
        Elem e(n, Rational(0));
        e[i] = Rational(1);
        return e;
    };
    // associativity on all basis triples
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Elem ij(n, Rational(0));
            for (const auto& [k, c] : mult_[i][j]) ij[k] += c;
            for (size_t k = 0; k < n; ++k) {
                Elem left = mul_elem(ij, basis_elem(k));
                Elem jk(n, Rational(0));
                for (const auto& [m, c] : mult_[j][k]) jk[m] += c;
                Elem right = mul_elem(basis_elem(i), jk);
                if (left != right) throw err_internal("multiplication table not associative");
            }
        }
    // unit law
    Elem one = unit();
    for (size_t i = 0; i < n; ++i) {
        Elem b = basis_elem(i);
        if (mul_elem(one, b) != b || mul_elem(b, one) != b) throw err_internal("unit law fails");
    }
    // relations evaluate to zero through the table
    for (const auto& rel : relations_) {
        Elem total(n, Rational(0));
        for (const auto& t : rel.terms) {
            Elem cur = basis_elem(vertex_idem_[quiver_.arrow_data(t.arrows.front()).source]);
            for (int a : t.arrows) cur = mul_elem(cur, basis_elem(arrow_basis_[a]));
            for (size_t i = 0; i < n; ++i) total[i] += t.coef * cur[i];
        }
        for (const auto& c : total)
            if (!c.is_zero()) throw err_internal("relation does not vanish in the table");
    }
}

BoundQuiverAlgebra::Elem BoundQuiverAlgebra::unit() const {
    Elem e(dim(), Rational(0));
    for (int i : vertex_idem_) e[i] = Rational(1);
    return e;
}

BoundQuiverAlgebra::Elem BoundQuiverAlgebra::multiply(const Elem& a, const Elem& b) const {
    Elem out(dim(), Rational(0));
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            for (const auto& [k, c] : mult_[i][j]) out[k] += a[i] * b[j] * c;
        }
    }
    return out;
}

Subspace BoundQuiverAlgebra::radical_power(int k) const {
    std::vector<size_t> rows;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].length() >= static_cast<size_t>(k)) rows.push_back(i);
    Matrix m(rows.size(), dim());
    for (size_t r = 0; r < rows.size(); ++r) m.at(r, rows[r]) = Rational(1);
    return Subspace::span_of_rows(m);
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
    if (auto back = opposite_backlink_.lock()) return back;
    if (opposite_cache_) return opposite_cache_;
    Quiver rq = quiver_.reversed();
    std::vector<RelationElement> rrels;
    for (const auto& rel : relations_) {
        RelationElement rr;
        for (const auto& t : rel.terms) {
            PathTerm rt;
            rt.coef = t.coef;
            rt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
            rr.terms.push_back(std::move(rt));
        }
        rrels.push_back(std::move(rr));
    }
    auto opp = build(std::move(rq), std::move(rrels), length_cap_);
    opp->opposite_backlink_ = shared_from_this();
    opposite_cache_ = opp;
    return opp;
}

bool operator==(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
    if (&a == &b) return true;
    if (!(a.quiver_ == b.quiver_) || a.length_cap_ != b.length_cap_) return false;
    if (a.relations_.size() != b.relations_.size()) return false;
    for (size_t i = 0; i < a.relations_.size(); ++i) {
        const auto &x = a.relations_[i], &y = b.relations_[i];
        if (x.terms.size() != y.terms.size()) return false;
        for (size_t j = 0; j < x.terms.size(); ++j)
            if (x.terms[j].coef != y.terms[j].coef || x.terms[j].arrows != y.terms[j].arrows) return false;
    }
    return true;
}

AlgebraPtr dual_extension(const Quiver& q, int length_cap) {
    for (const auto& a : q.arrows())
        if (a.source <= a.target)
            throw err_not_directed("arrow '" + a.name + "' does not go from a later to an earlier vertex");
    Quiver dq;
    for (const auto& v : q.vertex_labels()) dq.add_vertex(v);
    for (const auto& a : q.arrows())
        dq.add_arrow(a.name, q.vertex_label(a.source), q.vertex_label(a.target));
    for (const auto& a : q.arrows())
        dq.add_arrow(a.name + "*", q.vertex_label(a.target), q.vertex_label(a.source));
    std::vector<RelationElement> rels;
    size_t na = q.num_arrows();
    for (size_t f = 0; f < na; ++f)
        for (size_t r = 0; r < na; ++r) {
            // forward arrow f then reversed arrow r*, composable when the
            // original arrows share their target
            if (q.arrow_data(static_cast<int>(f)).target != q.arrow_data(static_cast<int>(r)).target) continue;
            RelationElement rel;
            rel.terms.push_back({Rational(1), {static_cast<int>(f), static_cast<int>(na + r)}});
            rels.push_back(std::move(rel));
        }
    return BoundQuiverAlgebra::build(std::move(dq), std::move(rels), length_cap);
}

} // namespace qh

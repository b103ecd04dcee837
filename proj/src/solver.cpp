#include "qh/solver.hpp"

#include "qh/error.hpp"

#include <algorithm>
#include <numeric>

namespace qh {

MultiPoly::MultiPoly(Rational c, std::vector<int> exps) : nvars_(exps.size()) {
    if (!c.is_zero()) terms_[std::move(exps)] = std::move(c);
}

MultiPoly MultiPoly::variable(int var, int nvars) {
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    return MultiPoly(Rational(1), std::move(e));
}

void MultiPoly::add_term(std::vector<int> e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[std::move(e)] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(r.nvars_, 0);
            for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            r.add_term(std::move(e), c1 * c2);
        }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
    MultiPoly r;
    r.nvars_ = nvars_;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int k = 0; k < e[var]; ++k) t *= value;
        std::vector<int> e2 = e;
        e2[var] = 0;
        r.add_term(std::move(e2), t);
    }
    return r;
}

namespace {

MultiPoly symbolic_det(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return MultiPoly(Rational(1));
    if (n == 1) return m[0][0];
    MultiPoly det;
    for (size_t r = 0; r < n; ++r) {
        std::vector<std::vector<MultiPoly>> minor;
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<MultiPoly> row;
            for (size_t j = 1; j < n; ++j) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[r][0] * symbolic_det(minor);
        det = (r % 2 == 0) ? det + term : det - term;
    }
    return det;
}

bool all_blocks_invertible(const std::vector<std::vector<Matrix>>& families, const std::vector<Rational>& c) {
    for (const auto& fam : families) {
        if (fam.empty()) continue;
        Matrix sum(fam[0].rows(), fam[0].cols());
        for (size_t i = 0; i < fam.size(); ++i)
            if (!c[i].is_zero()) sum = sum + c[i] * fam[i];
        if (!sum.is_invertible()) return false;
    }
    return true;
}

} // namespace

std::optional<std::vector<Rational>> find_invertible_combination(
    size_t num_params, const std::vector<std::vector<Matrix>>& families, size_t symbolic_cap) {
    if (num_params == 0) {
        // only the empty combination; invertible iff all blocks are 0x0
        for (const auto& fam : families)
            if (!fam.empty() && fam[0].rows() > 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    for (const auto& fam : families) {
        if (fam.size() != num_params) throw err_internal("find_invertible_combination: family size");
        if (!fam.empty() && fam[0].rows() != fam[0].cols()) return std::nullopt; // non-square cannot be invertible
    }
    size_t total_size = 0;
    for (const auto& fam : families)
        if (!fam.empty()) total_size += fam[0].rows();
    if (total_size == 0) return std::vector<Rational>(num_params, Rational(0));

    std::vector<std::vector<Rational>> samples;
    for (size_t i = 0; i < num_params; ++i) {
        std::vector<Rational> e(num_params, Rational(0));
        e[i] = Rational(1);
        samples.push_back(std::move(e));
    }
    for (size_t i = 0; i < num_params; ++i)
        for (size_t j = i + 1; j < num_params; ++j) {
            std::vector<Rational> s(num_params, Rational(0)), d(num_params, Rational(0));
            s[i] = Rational(1);
            s[j] = Rational(1);
            d[i] = Rational(1);
            d[j] = Rational(-1);
            samples.push_back(std::move(s));
            samples.push_back(std::move(d));
        }
    samples.emplace_back(num_params, Rational(1));
    {
        std::vector<Rational> ramp;
        for (size_t i = 0; i < num_params; ++i) ramp.emplace_back(static_cast<long long>(i + 1));
        samples.push_back(std::move(ramp));
    }
    size_t bound = std::max<size_t>(8, 4 * total_size * num_params);
    for (size_t t = 2; t < 2 + bound; ++t) {
        std::vector<Rational> mom(num_params);
        Rational p(1);
        for (size_t i = 0; i < num_params; ++i) {
            mom[i] = p;
            p *= Rational(static_cast<long long>(t));
        }
        samples.push_back(std::move(mom));
    }
    for (const auto& c : samples)
        if (all_blocks_invertible(families, c)) return c;

    // Complete grid certificate: the product of the block determinants is a
    // homogeneous polynomial of total degree D in the parameters; it vanishes
    // identically iff it vanishes at every point with first nonzero
    // coordinate 1 and the remaining coordinates in {0..D}.
    size_t degree = 0;
    for (const auto& fam : families)
        if (!fam.empty()) degree += fam[0].rows();
    {
        double cost = 1;
        for (size_t i = 0; i + 1 < num_params; ++i) cost *= static_cast<double>(degree + 1);
        if (cost <= 300000.0) {
            std::vector<Rational> point(num_params, Rational(0));
            for (size_t lead = 0; lead < num_params; ++lead) {
                std::fill(point.begin(), point.end(), Rational(0));
                point[lead] = Rational(1);
                size_t free_vars = num_params - lead - 1;
                std::vector<size_t> idx(free_vars, 0);
                while (true) {
                    for (size_t i = 0; i < free_vars; ++i)
                        point[lead + 1 + i] = Rational(static_cast<long long>(idx[i]));
                    if (all_blocks_invertible(families, point)) return point;
                    size_t pos = 0;
                    while (pos < free_vars && ++idx[pos] > degree) {
                        idx[pos] = 0;
                        ++pos;
                    }
                    if (pos >= free_vars) break;
                }
            }
            return std::nullopt; // determinant product vanishes identically
        }
    }

    // symbolic cost is driven by block size and parameter count, not by the
    // total size of the family
    size_t max_block = 0;
    for (const auto& fam : families)
        if (!fam.empty()) max_block = std::max(max_block, fam[0].rows());
    if (max_block > std::max<size_t>(symbolic_cap / 2, 6) || num_params > symbolic_cap)
        throw err_internal("invertibility search inconclusive beyond symbolic cap (params " +
                           std::to_string(num_params) + ", max block " + std::to_string(max_block) + ", blocks " +
                           std::to_string(families.size()) + ")");

    // full symbolic product of determinants; zero polynomial certifies that
    // no invertible combination exists
    MultiPoly prod(Rational(1), std::vector<int>(num_params, 0));
    for (const auto& fam : families) {
        if (fam.empty() || fam[0].rows() == 0) continue;
        size_t n = fam[0].rows();
        std::vector<std::vector<MultiPoly>> sym(n, std::vector<MultiPoly>(n));
        for (size_t r = 0; r < n; ++r)
            for (size_t col = 0; col < n; ++col) {
                MultiPoly cell;
                for (size_t i = 0; i < num_params; ++i) {
                    if (fam[i].at(r, col).is_zero()) continue;
                    std::vector<int> e(num_params, 0);
                    e[i] = 1;
                    cell = cell + MultiPoly(fam[i].at(r, col), e);
                }
                sym[r][col] = std::move(cell);
            }
        prod = prod * symbolic_det(sym);
        if (prod.is_zero()) return std::nullopt;
        if (prod.term_count() > 200000) throw err_internal("symbolic determinant product exploded");
    }
    if (prod.is_zero()) return std::nullopt;
    // peel variables; a polynomial of degree d cannot vanish at d+1 points
    std::vector<Rational> point(num_params, Rational(0));
    MultiPoly cur = prod;
    for (size_t v = 0; v < num_params; ++v) {
        int d = cur.degree_in(static_cast<int>(v));
        for (int a = 0; a <= d; ++a) {
            MultiPoly sub = cur.substitute(static_cast<int>(v), Rational(a));
            if (!sub.is_zero()) {
                point[v] = Rational(a);
                cur = std::move(sub);
                break;
            }
        }
    }
    if (!all_blocks_invertible(families, point)) throw err_internal("symbolic witness point failed");
    return point;
}

std::vector<Rational> EndoAlgebra::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> out(dim(), Rational(0));
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            for (size_t k = 0; k < dim(); ++k) out[k] += a[i] * b[j] * mult[i][j][k];
        }
    }
    return out;
}

ModuleMap EndoAlgebra::realize(const std::vector<Rational>& coords) const {
    ModuleMap f = zero_map(module, module);
    for (size_t i = 0; i < dim(); ++i) {
        if (coords[i].is_zero()) continue;
        f = add_maps(f, scale_map(coords[i], basis[i]));
    }
    return f;
}

EndoAlgebra endo_algebra(const Representation& m) {
    std::vector<ModuleMap> basis = hom_basis(m, m);
    size_t n = basis.size();
    std::vector<std::vector<std::vector<Rational>>> mult(n, std::vector<std::vector<Rational>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) mult[i][j] = hom_coordinates(basis, compose(basis[i], basis[j]));
    std::vector<Rational> unit = n ? hom_coordinates(basis, identity_map(m)) : std::vector<Rational>{};
    // Dickson: over Q the radical is the kernel of the trace form of the
    // faithful action on the module
    Matrix gram(n, n);
    std::vector<Matrix> totals;
    for (const auto& b : basis) totals.push_back(b.total());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Matrix p = totals[i] * totals[j];
            Rational tr(0);
            for (size_t d = 0; d < p.rows(); ++d) tr += p.at(d, d);
            gram.at(i, j) = tr;
            gram.at(j, i) = tr;
        }
    Subspace rad = Subspace::span_of_rows(gram.kernel_basis());
    return EndoAlgebra{m, std::move(basis), std::move(mult), std::move(unit), std::move(rad)};
}

namespace {

// ----- semisimple quotient S = E/rad with coset arithmetic -----

struct SemisimpleQuotient {
    const EndoAlgebra* endo = nullptr;
    std::vector<size_t> coset_cols;  // complement coordinates indexing S basis
    Matrix rad_basis;                // RREF rows of the radical
    std::vector<size_t> rad_pivots;

    size_t dim() const { return coset_cols.size(); }

    // reduce an E-coordinate vector modulo the radical, then read the
    // complement coordinates
    std::vector<Rational> project(const std::vector<Rational>& e) const {
        std::vector<Rational> v = e;
        for (size_t r = 0; r < rad_basis.rows(); ++r) {
            Rational f = v[rad_pivots[r]];
            if (f.is_zero()) continue;
            for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rad_basis.at(r, c);
        }
        std::vector<Rational> out;
        for (size_t c : coset_cols) out.push_back(v[c]);
        return out;
    }

    std::vector<Rational> lift(const std::vector<Rational>& s) const {
        std::vector<Rational> out(endo->dim(), Rational(0));
        for (size_t i = 0; i < coset_cols.size(); ++i) out[coset_cols[i]] = s[i];
        return out;
    }

    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        return project(endo->multiply(lift(a), lift(b)));
    }

    std::vector<Rational> unit() const { return project(endo->unit); }

    bool is_scalar(const std::vector<Rational>& s) const {
        // spanned by the image of 1
        Matrix m(2, dim());
        auto one = unit();
        for (size_t c = 0; c < dim(); ++c) {
            m.at(0, c) = one[c];
            m.at(1, c) = s[c];
        }
        return m.rank() <= 1;
    }
};

SemisimpleQuotient make_quotient(const EndoAlgebra& e) {
    SemisimpleQuotient q;
    q.endo = &e;
    q.rad_basis = e.radical.basis();
    auto [red, piv] = q.rad_basis.rref();
    q.rad_pivots = piv;
    std::vector<bool> is_piv(e.dim(), false);
    for (size_t p : piv) is_piv[p] = true;
    for (size_t c = 0; c < e.dim(); ++c)
        if (!is_piv[c]) q.coset_cols.push_back(c);
    return q;
}

// minimal polynomial of s inside S, monic, coefficients low to high
std::vector<Rational> min_poly(const SemisimpleQuotient& S, const std::vector<Rational>& s) {
    std::vector<std::vector<Rational>> powers;
    powers.push_back(S.unit());
    while (true) {
        // dependence test
        Matrix m(powers.size(), S.dim());
        for (size_t r = 0; r < powers.size(); ++r)
            for (size_t c = 0; c < S.dim(); ++c) m.at(r, c) = powers[r][c];
        if (m.rank() < powers.size()) {
            // last power depends on the previous ones
            Matrix sys(S.dim(), powers.size() - 1);
            Matrix rhs(S.dim(), 1);
            for (size_t c = 0; c < S.dim(); ++c) {
                for (size_t k = 0; k + 1 < powers.size(); ++k) sys.at(c, k) = powers[k][c];
                rhs.at(c, 0) = powers.back()[c];
            }
            auto x = sys.solve(rhs);
            if (!x) throw err_internal("min_poly: dependence not solvable");
            std::vector<Rational> coeffs;
            for (size_t k = 0; k + 1 < powers.size(); ++k) coeffs.push_back(-x->at(k, 0));
            coeffs.emplace_back(1);
            return coeffs;
        }
        powers.push_back(S.multiply(powers.back(), s));
        if (powers.size() > S.dim() + 2) throw err_internal("min_poly: no dependence found");
    }
}

std::vector<Rational> poly_eval_elem(const SemisimpleQuotient& S, const std::vector<Rational>& coeffs,
                                     const std::vector<Rational>& s) {
    std::vector<Rational> acc(S.dim(), Rational(0));
    std::vector<Rational> pw = S.unit();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (size_t c = 0; c < S.dim(); ++c) acc[c] += coeffs[k] * pw[c];
        if (k + 1 < coeffs.size()) pw = S.multiply(pw, s);
    }
    return acc;
}

bool is_invertible_in(const SemisimpleQuotient& S, const std::vector<Rational>& s) {
    // left multiplication operator on S
    size_t n = S.dim();
    Matrix op(n, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> ej(n, Rational(0));
        ej[j] = Rational(1);
        auto img = S.multiply(s, ej);
        for (size_t i = 0; i < n; ++i) op.at(i, j) = img[i];
    }
    return op.is_invertible();
}

bool vec_is_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// squarefree radical by gcd with the derivative, univariate exact
std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long long>(k)) * p[k]);
    return d;
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !b.empty()) {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.size() < b.size()) break;
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Rational inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

Rational poly_value(const std::vector<Rational>& p, const Rational& x) {
    Rational acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// Find a nonzero non-invertible element of S, assuming dim S >= 2. Returns
// empty vector when the deterministic sequence is exhausted.
std::vector<Rational> find_zero_divisor(const SemisimpleQuotient& S) {
    size_t n = S.dim();
    std::vector<std::vector<Rational>> candidates;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = Rational(1);
        candidates.push_back(std::move(e));
    }
    size_t base = candidates.size();
    for (size_t i = 0; i < base; ++i)
        for (size_t j = i + 1; j < base; ++j) {
            std::vector<Rational> s(n), d(n);
            for (size_t c = 0; c < n; ++c) {
                s[c] = candidates[i][c] + candidates[j][c];
                d[c] = candidates[i][c] - candidates[j][c];
            }
            candidates.push_back(std::move(s));
            candidates.push_back(std::move(d));
        }
    for (size_t i = 0; i < base; ++i)
        for (size_t j = 0; j < base; ++j) {
            if (i == j) continue;
            candidates.push_back(S.multiply(candidates[i], candidates[j]));
        }

    static const long long kRoots[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 12, -12};
    for (const auto& cand : candidates) {
        if (vec_is_zero(cand) || S.is_scalar(cand)) continue;
        if (!is_invertible_in(S, cand)) return cand;
        auto m = min_poly(S, cand);
        // repeated factors give a nilpotent evaluation of the radical part
        auto g = poly_gcd(m, poly_derivative(m));
        if (g.size() > 1) {
            // squarefree part m/g evaluates to a nonzero nilpotent
            std::vector<Rational> quotient;
            {
                // long division m / g
                std::vector<Rational> a = m;
                quotient.assign(a.size() - g.size() + 1, Rational(0));
                while (a.size() >= g.size() && !a.empty()) {
                    while (!a.empty() && a.back().is_zero()) a.pop_back();
                    if (a.size() < g.size()) break;
                    Rational f = a.back() / g.back();
                    size_t off = a.size() - g.size();
                    quotient[off] = f;
                    for (size_t k = 0; k < g.size(); ++k) a[off + k] -= f * g[k];
                }
            }
            auto u = poly_eval_elem(S, quotient, cand);
            if (!vec_is_zero(u) && !is_invertible_in(S, u)) return u;
        }
        // rational eigenvalue: s - root is a zero divisor
        for (long long r : kRoots) {
            if (poly_value(m, Rational(r)).is_zero()) {
                std::vector<Rational> shifted = cand;
                auto one = S.unit();
                for (size_t c = 0; c < n; ++c) shifted[c] -= Rational(r) * one[c];
                if (!vec_is_zero(shifted)) return shifted;
            }
        }
    }
    return {};
}

// nontrivial idempotent of semisimple S generating the right ideal of a zero
// divisor
std::optional<std::vector<Rational>> idempotent_from_zero_divisor(const SemisimpleQuotient& S,
                                                                  const std::vector<Rational>& u) {
    size_t n = S.dim();
    // right ideal u*S
    std::vector<std::vector<Rational>> gens;
    for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> ej(n, Rational(0));
        ej[j] = Rational(1);
        gens.push_back(S.multiply(u, ej));
    }
    Matrix g(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) g.at(r, c) = gens[r][c];
    Subspace ideal = Subspace::span_of_rows(g);
    size_t k = ideal.dim();
    if (k == 0) return std::nullopt;
    // solve e in ideal with e*b = b for a basis b of the ideal
    std::vector<std::vector<Rational>> ib;
    for (size_t r = 0; r < k; ++r) {
        std::vector<Rational> row;
        for (size_t c = 0; c < n; ++c) row.push_back(ideal.basis().at(r, c));
        ib.push_back(std::move(row));
    }
    Matrix sys(n * k, k);
    Matrix rhs(n * k, 1);
    for (size_t b = 0; b < k; ++b) {
        for (size_t i = 0; i < k; ++i) {
            auto prod = S.multiply(ib[i], ib[b]);
            for (size_t c = 0; c < n; ++c) sys.at(b * n + c, i) = prod[c];
        }
        for (size_t c = 0; c < n; ++c) rhs.at(b * n + c, 0) = ib[b][c];
    }
    auto x = sys.solve(rhs);
    if (!x || !(sys * *x == rhs)) return std::nullopt;
    std::vector<Rational> e(n, Rational(0));
    for (size_t i = 0; i < k; ++i)
        for (size_t c = 0; c < n; ++c) e[c] += x->at(i, 0) * ib[i][c];
    return e;
}

// Newton lifting of an idempotent along the nilpotent radical.
ModuleMap lift_idempotent(const EndoAlgebra& E, const SemisimpleQuotient& S, const std::vector<Rational>& ebar) {
    std::vector<Rational> f = S.lift(ebar);
    for (int iter = 0; iter < 64; ++iter) {
        auto ff = E.multiply(f, f);
        bool idem = true;
        for (size_t c = 0; c < E.dim(); ++c)
            if (!(ff[c] == f[c])) {
                idem = false;
                break;
            }
        if (idem) return E.realize(f);
        // f <- 3f^2 - 2f^3
        auto fff = E.multiply(ff, f);
        for (size_t c = 0; c < E.dim(); ++c) f[c] = Rational(3) * ff[c] - Rational(2) * fff[c];
    }
    throw err_internal("idempotent lifting did not converge");
}

void decompose_rec(const Representation& m, std::vector<Representation>& out) {
    if (m.total_dim() == 0) return;
    EndoAlgebra E = endo_algebra(m);
    SemisimpleQuotient S = make_quotient(E);
    if (S.dim() == 1) {
        out.push_back(m);
        return;
    }
    // split the centre first where possible, otherwise hunt a zero divisor
    std::vector<Rational> zd = find_zero_divisor(S);
    std::optional<std::vector<Rational>> ebar;
    if (!zd.empty()) ebar = idempotent_from_zero_divisor(S, zd);
    if (!ebar) {
        // no splitting found: local ring with residue division algebra != Q
        throw err_non_split("endomorphism ring modulo radical has dimension " + std::to_string(S.dim()) +
                            " and no splitting was found; module does not split over Q");
    }
    ModuleMap e = lift_idempotent(E, S, *ebar);
    // split into image and kernel of the idempotent
    Submodule img = image_submodule(e);
    Submodule ker = kernel_submodule(e);
    if (img.total_dim() == 0 || ker.total_dim() == 0 || img.total_dim() + ker.total_dim() != m.total_dim())
        throw err_internal("idempotent does not split the module");
    decompose_rec(submodule_as_module(m, img).rep, out);
    decompose_rec(submodule_as_module(m, ker).rep, out);
}

} // namespace

Decomposition decompose(const Representation& m) {
    std::vector<Representation> pieces;
    decompose_rec(m, pieces);
    Decomposition d;
    for (const auto& p : pieces) {
        bool found = false;
        for (size_t i = 0; i < d.summands.size(); ++i) {
            if (module_iso(d.summands[i], p)) {
                ++d.multiplicities[i];
                found = true;
                break;
            }
        }
        if (!found) {
            d.summands.push_back(p);
            d.multiplicities.push_back(1);
        }
    }
    return d;
}

Representation basic_part(const Representation& m) {
    Decomposition d = decompose(m);
    if (d.summands.empty()) return Representation::zero(m.algebra());
    return direct_sum(m.algebra(), d.summands).rep;
}

std::optional<ModuleMap> module_iso(const Representation& m, const Representation& n) {
    if (!(*m.algebra() == *n.algebra())) return std::nullopt;
    if (m.dims() != n.dims()) return std::nullopt;
    if (m.total_dim() == 0) return zero_map(m, n);
    auto basis = hom_basis(m, n);
    if (basis.empty()) return std::nullopt;
    std::vector<std::vector<Matrix>> families;
    for (size_t v = 0; v < m.num_vertices(); ++v) {
        if (m.dim_at(static_cast<int>(v)) == 0) continue;
        std::vector<Matrix> fam;
        for (const auto& b : basis) fam.push_back(b.blocks[v]);
        families.push_back(std::move(fam));
    }
    auto c = find_invertible_combination(basis.size(), families);
    if (!c) return std::nullopt;
    ModuleMap iso = zero_map(m, n);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!(*c)[i].is_zero()) iso = add_maps(iso, scale_map((*c)[i], basis[i]));
    return iso;
}

std::optional<std::vector<Rational>> symmetric_form_certificate(const AlgebraPtr& a) {
    size_t n = a->dim();
    // central forms: f(xy) = f(yx) on all basis pairs
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            std::vector<Rational> row(n, Rational(0));
            for (const auto& [k, c] : a->product(static_cast<int>(i), static_cast<int>(j))) row[k] += c;
            for (const auto& [k, c] : a->product(static_cast<int>(j), static_cast<int>(i))) row[k] -= c;
            bool nonzero = false;
            for (const auto& c : row)
                if (!c.is_zero()) nonzero = true;
            if (nonzero) rows.push_back(std::move(row));
        }
    Matrix sys(rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < n; ++c) sys.at(r, c) = rows[r][c];
    Matrix z = sys.kernel_basis(); // rows: central forms
    if (z.rows() == 0) return std::nullopt;
    // Gram matrices are linear in the form
    std::vector<Matrix> fam;
    for (size_t l = 0; l < z.rows(); ++l) {
        Matrix g(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rational val(0);
                for (const auto& [k, c] : a->product(static_cast<int>(i), static_cast<int>(j)))
                    val += c * z.at(l, k);
                g.at(i, j) = val;
            }
        fam.push_back(std::move(g));
    }
    auto c = find_invertible_combination(z.rows(), {fam});
    if (!c) return std::nullopt;
    std::vector<Rational> form(n, Rational(0));
    for (size_t l = 0; l < z.rows(); ++l)
        for (size_t k = 0; k < n; ++k) form[k] += (*c)[l] * z.at(l, k);
    return form;
}

std::optional<std::vector<int>> selfinjective_permutation(const AlgebraPtr& a) {
    size_t n = a->quiver().num_vertices();
    std::vector<Representation> projs, injs;
    for (size_t v = 0; v < n; ++v) {
        projs.push_back(projective_module(a, static_cast<int>(v)));
        injs.push_back(injective_module(a, static_cast<int>(v)));
    }
    std::vector<int> nu(n, -1);
    std::vector<bool> used(n, false);
    for (size_t v = 0; v < n; ++v) {
        for (size_t w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (module_iso(projs[v], injs[w])) {
                nu[v] = static_cast<int>(w);
                used[w] = true;
                break;
            }
        }
        if (nu[v] < 0) return std::nullopt;
    }
    return nu;
}

Subspace centre(const AlgebraPtr& a) {
    size_t n = a->dim();
    std::vector<std::vector<Rational>> rows;
    // z central iff z*b_i = b_i*z for all i; unknowns are coords of z
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            std::vector<Rational> row(n, Rational(0));
            bool nonzero = false;
            for (size_t j = 0; j < n; ++j) {
                Rational c(0);
                for (const auto& [idx, coef] : a->product(static_cast<int>(j), static_cast<int>(i)))
                    if (idx == static_cast<int>(k)) c += coef;
                for (const auto& [idx, coef] : a->product(static_cast<int>(i), static_cast<int>(j)))
                    if (idx == static_cast<int>(k)) c -= coef;
                row[j] = c;
                if (!c.is_zero()) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    Matrix sys(rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < n; ++c) sys.at(r, c) = rows[r][c];
    return Subspace::span_of_rows(sys.kernel_basis());
}

} // namespace qh

#pragma once

#include "qh/module.hpp"
#include "qh/solver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qh {

// Partial pre-order on simple labels (vertex indices), stored as the
// reflexive-transitive closure of the generator pairs.
class StratOrder {
public:
    StratOrder(size_t num_labels, std::vector<std::pair<int, int>> pairs); // (a,b) means a <= b

    size_t size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a * n_ + b]; }
    bool less(int a, int b) const { return leq(a, b) && !leq(b, a); }
    bool is_antisymmetric() const;
    const std::vector<std::pair<int, int>>& generator_pairs() const { return pairs_; }

    // labels from maximal to minimal, refined by label order
    std::vector<int> descending_linear_extension() const;

private:
    size_t n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<bool> leq_;
};

class StratifiedAlgebra;
using StratPtr = std::shared_ptr<const StratifiedAlgebra>;

// Algebra together with a fixed pre-order; computes and caches the standard,
// proper standard, costandard and proper costandard modules.
class StratifiedAlgebra : public std::enable_shared_from_this<StratifiedAlgebra> {
public:
    static StratPtr make(AlgebraPtr algebra, StratOrder order);

    const AlgebraPtr& algebra() const { return algebra_; }
    const StratOrder& order() const { return order_; }
    size_t num_labels() const { return order_.size(); }

    const Representation& projective(int label) const;
    const Representation& injective(int label) const;
    Representation simple(int label) const { return simple_module(algebra_, label); }

    const Representation& standard(int label) const;          // Delta
    const Representation& proper_standard(int label) const;   // Delta-bar
    const Representation& costandard(int label) const;        // Nabla
    const Representation& proper_costandard(int label) const; // Nabla-bar

    // same order over the opposite algebra
    StratPtr opposite() const;

private:
    StratifiedAlgebra(AlgebraPtr algebra, StratOrder order);

    AlgebraPtr algebra_;
    StratOrder order_;
    mutable std::vector<std::optional<Representation>> proj_, inj_, delta_, pdelta_, nabla_, pnabla_;
    mutable std::shared_ptr<const StratifiedAlgebra> opp_;
    mutable std::weak_ptr<const StratifiedAlgebra> opp_backlink_;
};

enum class FlagFamily { Standard, ProperStandard, Costandard, ProperCostandard };

struct FlagCertificate {
    std::vector<int> labels; // top subquotient first
};

// Constructive flag search by peeling maximal-label quotients. For standard
// and proper costandard flags on a standardly stratified algebra the result
// is cross-checked against the homological criterion; a disagreement throws
// StratificationInvalid.
std::optional<FlagCertificate> has_flag(const StratPtr& s, const Representation& m, FlagFamily family,
                                        bool cross_check = true);

struct Verdict {
    bool ok = false;
    std::string witness; // first violated condition when not ok
};

Verdict is_standardly_stratified(const StratPtr& s);
Verdict is_quasi_hereditary(const StratPtr& s);
Verdict is_properly_stratified(const StratPtr& s);

} // namespace qh

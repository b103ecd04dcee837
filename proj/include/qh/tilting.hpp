#pragma once

#include "qh/presentation.hpp"
#include "qh/stratification.hpp"

#include <optional>
#include <vector>

namespace qh {

// Middle term of the universal extension 0 -> byD^d -> E -> M -> 0 over a
// basis of Ext^1(M, byD); afterwards Ext^1(E, byD) = 0.
Representation universal_extension(const Representation& m, const Representation& by_d);

// Dual construction 0 -> M -> E -> byD^d -> 0 killing Ext^1(byD, M).
Representation universal_coextension(const Representation& m, const Representation& by_d);

// Indecomposable tilting module with Delta(label) at the bottom of its
// standard flag, by iterated universal coextensions.
Representation tilting_module(const StratPtr& s, int label, int sweep_cap = 20);

struct TiltingData {
    StratPtr strat;
    std::vector<Representation> indecomposable; // T(label) per label
    Representation characteristic;              // direct sum in label order
    std::vector<FlagCertificate> standard_certs;
    std::vector<FlagCertificate> proper_costandard_certs;
};

TiltingData build_tilting(const StratPtr& s, int sweep_cap = 20);

struct RingelDual {
    TiltingData tilting;
    PresentedAlgebra presented; // End(T), basic bound quiver presentation
    StratPtr dual_strat;        // presented algebra with the opposite order
};

RingelDual ringel_dual(const StratPtr& s);

// Hom(-, T) as a module over the Ringel dual; contravariant on maps.
Representation ringel_functor(const RingelDual& r, const Representation& m);
ModuleMap ringel_functor_map(const RingelDual& r, const ModuleMap& f);

struct DcTilting {
    Representation q;              // tilting with an embedding of the regular module
    std::vector<int> q_labels;     // tilting labels with multiplicity
    ModuleMap embedding;           // A as a module, embedded into q
    Representation coker;
    FlagCertificate coker_flag;
    std::vector<int> y_labels;     // basic tilting Y receiving the cokernel
    int m = 0;                     // coker embeds into Y^m
    std::vector<int> x_labels;     // basic part of Q + Y
    Representation x;
    bool double_centraliser = false;
    size_t commutant_dim = 0;
    bool x_equals_characteristic = false;
    bool x_in_add_q = false;
};

DcTilting dc_tilting(const RingelDual& r);
DcTilting dc_tilting(const StratPtr& s);

// Commutant of End(Q) inside the linear endomorphisms of Q, with the
// injectivity of the algebra action; the double centraliser property holds
// when the commutant dimension equals dim A and the action is faithful.
struct CommutantReport {
    size_t commutant_dim = 0;
    bool action_faithful = false;
};
CommutantReport commutant_of_endomorphisms(const Representation& q);

// The regular module, as the direct sum of the projectives in label order.
Representation regular_module(const AlgebraPtr& a);

} // namespace qh

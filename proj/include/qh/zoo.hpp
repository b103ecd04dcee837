#pragma once

#include "qh/json_io.hpp"
#include "qh/stratification.hpp"

#include <string>
#include <vector>

namespace qh {

// Built-in example algebras with pinned orders and expected report
// fragments. Every expected value is re-derivable by running the pipeline.
struct ZooEntry {
    std::string name;
    AlgebraPtr algebra;
    StratOrder order;
    Json expected; // fragment, subset-matched against the pipeline report
};

std::vector<std::string> zoo_list();
ZooEntry zoo_get(const std::string& name);

// Full pipeline over one entry: stratification, tilting, Ringel dual, double
// centraliser, Serre checks, derived table; guarded by preconditions.
Json zoo_report(const ZooEntry& entry);

// Runs the pipeline and diffs against the expected fragment; throws Mismatch
// on the first differing field.
Json zoo_verify(const std::string& name);

} // namespace qh

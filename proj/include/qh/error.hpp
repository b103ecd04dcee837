#pragma once

#include <stdexcept>
#include <string>

namespace qh {

// All toolkit failures carry a stable machine-readable code alongside the
// human message; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error err_non_admissible(const std::string& m) { return Error("NonAdmissible", m); }
inline Error err_malformed_relation(const std::string& m) { return Error("MalformedRelation", m); }
inline Error err_not_directed(const std::string& m) { return Error("NotDirected", m); }
inline Error err_non_split(const std::string& m) { return Error("NonSplit", m); }
inline Error err_resolution_cap(const std::string& m) { return Error("ResolutionCapExceeded", m); }
inline Error err_cap_exceeded(const std::string& m) { return Error("CapExceeded", m); }
inline Error err_q_not_projective(const std::string& m) { return Error("QNotProjective", m); }
inline Error err_not_proj_inj(const std::string& m) { return Error("NotProjectiveInjective", m); }
inline Error err_precondition(const std::string& m) { return Error("PreconditionFailed", m); }
inline Error err_dc_missing(const std::string& m) { return Error("DoubleCentraliserMissing", m); }
inline Error err_strat_invalid(const std::string& m) { return Error("StratificationInvalid", m); }
inline Error err_unknown_entry(const std::string& m) { return Error("UnknownEntry", m); }
inline Error err_mismatch(const std::string& m) { return Error("Mismatch", m); }
inline Error err_not_stratified(const std::string& m) { return Error("NotStratified", m); }
inline Error err_non_terminating(const std::string& m) { return Error("NonTerminating", m); }
inline Error err_dimension(const std::string& m) { return Error("DimensionMismatch", m); }
inline Error err_internal(const std::string& m) { return Error("InternalError", m); }

} // namespace qh

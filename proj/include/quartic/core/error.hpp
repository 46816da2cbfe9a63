#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

enum class ErrorKind {
    InvalidArgument,
    RingMismatch,
    NoCanonicalMap,
    NotPrime,
    Parse,
    Precondition,
    NotFinite,
    RetryExhausted,
    NotInflectionLine,
    NonIsolatedSingularLocus,
    Inconsistent,
    RankDeficient,
    VerificationFailed,
    Internal,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::RingMismatch: return "ring_mismatch";
    case ErrorKind::NoCanonicalMap: return "no_canonical_map";
    case ErrorKind::NotPrime: return "not_prime";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::Precondition: return "precondition_failed";
    case ErrorKind::NotFinite: return "non_finite_scheme";
    case ErrorKind::RetryExhausted: return "retry_budget_exhausted";
    case ErrorKind::NotInflectionLine: return "not_an_inflection_line";
    case ErrorKind::NonIsolatedSingularLocus: return "non_isolated_singular_locus";
    case ErrorKind::Inconsistent: return "inconsistent_system";
    case ErrorKind::RankDeficient: return "rank_deficient";
    case ErrorKind::VerificationFailed: return "verification_failed";
    case ErrorKind::Internal: return "internal_error";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const char* what) {
    if (!cond) throw Error(kind, what);
}

} // namespace quartic

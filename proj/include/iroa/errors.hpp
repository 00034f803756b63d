#pragma once

#include <stdexcept>
#include <string>

namespace iroa {

// Machine-readable failure codes. Preconditions and cap exceedances are kept
// apart because the CLI maps them to different exit codes (2 and 3).
enum class errc {
    not_prime,
    unsupported_order,
    reducible_modulus,
    field_mismatch,
    division_by_zero,
    dimension_mismatch,
    zero_matrix,
    degenerate_dual,
    duplicate_rows,
    duplicate_points,
    zero_multiplier,
    param_out_of_range,
    not_an_oa,
    not_mds,
    rho_not_exhaustive,
    parse_error,
    enumeration_cap,
    subset_cap,
    pair_cap,
    space_cap,
    search_cap,
    verification_failure,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// A caller violated a documented precondition (bad parameters, malformed
// input, degenerate object). CLI exit code 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The requested computation exceeds a configured work cap. The message names
// the cap and reports the required work. CLI exit code 3.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An internal cross-check failed: two independent routes to the same value
// disagreed. Always a bug (or a falsified theorem marked as asserted).
class VerificationFailure : public Error {
public:
    explicit VerificationFailure(const std::string& what)
        : Error(errc::verification_failure, what) {}
};

}  // namespace iroa

#pragma once

#include <stdexcept>
#include <string>

namespace cgasym {

enum class errc {
    constant_term_not_one,
    nonzero_constant_term,
    noninvertible_constant_term,
    nonzero_inner_constant,
    internal_inconsistency,
    underdetermined_system,
    residual_nonzero,
    non_monomial_divisor,
    zero_leading_coefficient,
    precision_unachievable,
    identity_violation,
    verification_failure,
    parity_violation,
    crosscheck_failure,
    insufficient_points,
    ill_conditioned,
    invalid_argument,
};

inline const char* to_string(errc c) noexcept {
    switch (c) {
    case errc::constant_term_not_one: return "ConstantTermNotOne";
    case errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case errc::noninvertible_constant_term: return "NonInvertibleConstantTerm";
    case errc::nonzero_inner_constant: return "NonzeroInnerConstant";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::underdetermined_system: return "UnderdeterminedSystem";
    case errc::residual_nonzero: return "ResidualNonzero";
    case errc::non_monomial_divisor: return "NonMonomialDivisor";
    case errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case errc::precision_unachievable: return "PrecisionUnachievable";
    case errc::identity_violation: return "IdentityViolation";
    case errc::verification_failure: return "VerificationFailure";
    case errc::parity_violation: return "ParityViolation";
    case errc::crosscheck_failure: return "CrosscheckFailure";
    case errc::insufficient_points: return "InsufficientPoints";
    case errc::ill_conditioned: return "IllConditioned";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// Verification failures (oracle mismatches) are distinguished from usage
/// errors by `is_verification()`, which the CLI maps to exit status 2.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

    bool is_verification() const noexcept {
        switch (code_) {
        case errc::internal_inconsistency:
        case errc::residual_nonzero:
        case errc::identity_violation:
        case errc::verification_failure:
        case errc::parity_violation:
        case errc::crosscheck_failure:
            return true;
        default:
            return false;
        }
    }

private:
    errc code_;
};

} // namespace cgasym

#pragma once

#include <stdexcept>
#include <string>

namespace dlsched {

enum class errc {
    non_positive_rate,
    length_mismatch,
    negative_availability,
    index_mismatch,
    missing_variable,
    too_large,
    singular_system,
    one_port_conflict,
    negative_payload,
    division_by_zero,
    domain_error,
    solver_failure,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_positive_rate: return "NonPositiveRate";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::negative_availability: return "NegativeAvailability";
        case errc::index_mismatch: return "IndexMismatch";
        case errc::missing_variable: return "MissingVariable";
        case errc::too_large: return "TooLarge";
        case errc::singular_system: return "SingularSystem";
        case errc::one_port_conflict: return "OnePortConflict";
        case errc::negative_payload: return "NegativePayload";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::domain_error: return "DomainError";
        case errc::solver_failure: return "SolverFailure";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

} // namespace dlsched

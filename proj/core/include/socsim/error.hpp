#ifndef SOCSIM_ERROR_HPP_
#define SOCSIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace socsim {

enum class ErrorCode {
    NegativeStrength,
    SelfLoop,
    OrderViolation,
    BadConfig,
    DuplicateEntity,
    UnknownEntity,
    EmptyGraph,
    BadK,
    NotMember,
    TooSmall,
    TooShort,
    EmptyTestSet,
    BadThresholds,
    EmptyPopulation,
    EmptySnapshot,
    CategoryMismatch,
    EmptyCohort,
    DegenerateSplit,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Thrown by every operation that rejects its input; carries a stable code
/// so callers can branch without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace socsim

#endif

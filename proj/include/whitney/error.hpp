#ifndef WHITNEY_ERROR_HPP
#define WHITNEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace whitney {

enum class ErrorKind {
    InvalidInput,
    NotGraded,
    NoUniqueMinimum,
    NoUniqueMaximum,
    CycleDetected,
    NotTransitivelyReduced,
    NotComparable,
    MissingLabel,
    InvalidLabelOrder,
    SwitchingViolation,
    NotWhitneyLabeling,
    NotCW,
    ClassMismatch,
    SizeLimit,
    NotGeometric,
    CrossingLabelSets,
    NonDisjoint,
    NotDecreasing,
    RankMismatch,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class WhitneyError : public std::runtime_error {
public:
    WhitneyError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace whitney

#endif

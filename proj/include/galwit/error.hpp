#ifndef GALWIT_ERROR_HPP
#define GALWIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace galwit {

enum class ErrorKind {
    DivisionByZero,
    OutOfRange,
    BothZero,
    ZeroInput,
    DegreeZero,
    NotSquarefree,
    NonIntegerCoefficients,
    DegenerateSpecialization,
    FieldMismatch,
    PrimitiveElementSearchExhausted,
    DegreeCapExceeded,
    NotIrreducible,
    DegreeOutOfRange,
    DegreeNotPrime,
    Undecidable,
    SturmMismatch,
    ReplayFailure,
    NotInQsolv,
    SyntaxError,
    IOFailure,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `detail()` carries a numeric payload
/// for kinds that have one (offending degree, parse position).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, long detail = -1)
        : std::runtime_error(what), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    long detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    long detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what, long detail = -1)
{
    throw Error(kind, what, detail);
}

} // namespace galwit

#endif

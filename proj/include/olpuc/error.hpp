#pragma once

#include <stdexcept>
#include <string>

namespace olpuc {

enum class ErrorKind {
    TruncationExceeded,
    OutsideAnnulus,
    LambdaOnCircle,
    SingularMinor,
    IndexOutOfRange,
    NoSuchIndex,
    SizeMismatch,
    OrderingNotCMV,
    DegenerateDiagonal,
    QuadratureNearCircle,
    OutsideRegion,
    TrustedLengthExhausted,
    ParseError
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, int index = -1)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

    ErrorKind kind() const { return kind_; }
    // level k for SingularMinor, offending index otherwise (-1 if none)
    int index() const { return index_; }

private:
    ErrorKind kind_;
    int index_;
};

} // namespace olpuc

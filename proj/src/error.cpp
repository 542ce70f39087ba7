#include "olpuc/error.hpp"

namespace olpuc {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::OutsideAnnulus: return "OutsideAnnulus";
    case ErrorKind::LambdaOnCircle: return "LambdaOnCircle";
    case ErrorKind::SingularMinor: return "SingularMinor";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoSuchIndex: return "NoSuchIndex";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OrderingNotCMV: return "OrderingNotCMV";
    case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorKind::QuadratureNearCircle: return "QuadratureNearCircle";
    case ErrorKind::OutsideRegion: return "OutsideRegion";
    case ErrorKind::TrustedLengthExhausted: return "TrustedLengthExhausted";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace olpuc

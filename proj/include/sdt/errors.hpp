#ifndef SDT_ERRORS_HPP
#define SDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankDeficientError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct DepthInfeasibleError : Error {
    using Error::Error;
};

struct SupportMismatchError : Error {
    using Error::Error;
};

// Raised when repeated information-set draws keep hitting singular
// submatrices (bounded retry, see decoders).
struct SingularStreakError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct OptimizerError : Error {
    using Error::Error;
};

}  // namespace sdt

#endif

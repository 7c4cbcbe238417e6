#pragma once

#include <stdexcept>
#include <string>

namespace chibound {

enum class Errc {
    CapacityExceeded,
    InvalidEdge,
    EmptySet,
    MalformedHeader,
    BadLength,
    BadByte,
    Sparse6Unsupported,
    Digraph6Unsupported,
    ParseError,
    PreconditionViolated,
    OracleScaleExceeded,
    ParityError,
    OutOfTable,
    UnknownRamsey,
    ConfigError,
    CanonScaleExceeded,
    ScaleExceeded,
    InvalidColoring,
    NotMaxDegree,
    InvalidDifference,
    InvalidParams,
    InternalConsistency,
};

const char* errc_name(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above. Callers that need to branch on the failure kind
/// inspect code(); the message is for humans.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what)
    {
    }

    Errc code() const noexcept { return code_; }
    /// Message without the leading code name.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

} // namespace chibound

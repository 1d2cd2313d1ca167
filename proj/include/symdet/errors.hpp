#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

/// Coarse classification of library errors, used by callers (the CLI in
/// particular) to map failures onto exit codes without inspecting types.
enum class ErrorKind {
    Io,        // unreadable bytes: bad header, truncated payload, out-of-range sample
    BadParam,  // caller passed an invalid parameter or mismatched rasters
    Degenerate // input was readable but carries too little content to proceed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct MalformedHeader : Error {
    explicit MalformedHeader(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};
struct TruncatedData : Error {
    explicit TruncatedData(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};
struct ValueOutOfRange : Error {
    explicit ValueOutOfRange(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(ErrorKind::BadParam, msg) {}
};
struct ImageTooSmall : Error {
    explicit ImageTooSmall(const std::string& msg) : Error(ErrorKind::BadParam, msg) {}
};
struct InvalidThreshold : Error {
    explicit InvalidThreshold(const std::string& msg) : Error(ErrorKind::BadParam, msg) {}
};
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error(ErrorKind::BadParam, msg) {}
};
struct EmptySeries : Error {
    explicit EmptySeries(const std::string& msg) : Error(ErrorKind::Degenerate, msg) {}
};
struct InsufficientPoints : Error {
    explicit InsufficientPoints(const std::string& msg) : Error(ErrorKind::Degenerate, msg) {}
};
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error(ErrorKind::Degenerate, msg) {}
};
struct EmptyForeground : Error {
    explicit EmptyForeground(const std::string& msg) : Error(ErrorKind::Degenerate, msg) {}
};

/// Raised by the end-to-end pipeline; wraps the failing stage's error so the
/// message names the stage while kind() still reflects the original failure.
class PipelineError : public Error {
public:
    PipelineError(const std::string& stage, const Error& cause)
        : Error(cause.kind(), stage + ": " + cause.what()), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace symdet

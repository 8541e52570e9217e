#ifndef CCMETRICS_ERRORS_HPP
#define CCMETRICS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccmetrics {

enum class ErrorKind {
    EmptyProgram,
    LengthMismatch,
    InsufficientData,
    ZeroVariance,
    FileNotFound,
    MissingColumn,
    EmptyDataset,
    UnknownFormat,
    WriteFailure,
};

// Thrown for conditions the caller must handle explicitly; recoverable
// per-file problems travel as Diagnostic lists instead.
class MetricsError : public std::runtime_error {
public:
    MetricsError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace ccmetrics

#endif

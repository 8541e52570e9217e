#include "ccmetrics/errors.hpp"

namespace ccmetrics {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyProgram: return "EmptyProgram";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::ZeroVariance: return "ZeroVariance";
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::MissingColumn: return "MissingColumn";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::UnknownFormat: return "UnknownFormat";
        case ErrorKind::WriteFailure: return "WriteFailure";
    }
    return "Unknown";
}

}  // namespace ccmetrics

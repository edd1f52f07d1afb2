#pragma once

#include <stdexcept>
#include <string>

namespace sigspec {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct ZeroWeightError : Error { using Error::Error; };
struct MissingVertexError : Error { using Error::Error; };
struct NotAnEdgeError : Error { using Error::Error; };
struct IsolatedVertexError : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct ZeroFunctionError : Error { using Error::Error; };
struct IndexOutOfRangeError : Error { using Error::Error; };
struct EmptyUnionError : Error { using Error::Error; };
struct EmptySetError : Error { using Error::Error; };
struct TooLargeForExactError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct NotUnitError : Error { using Error::Error; };
struct BadEpsilonError : Error { using Error::Error; };
struct ZeroMapError : Error { using Error::Error; };
struct PartitionFailureError : Error { using Error::Error; };
struct DisjointnessViolationError : Error { using Error::Error; };
struct EmptyEdgeSetError : Error { using Error::Error; };

/// Input-file error carrying the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace sigspec

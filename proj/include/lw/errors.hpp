#pragma once

#include <stdexcept>

namespace lw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The partial-quotient source cannot supply enough terms to decide a comparison.
struct PrecisionExhausted : Error { using Error::Error; };
// The big-integer work of a streamed source exceeded its configured bit budget.
struct BudgetExceeded : Error { using Error::Error; };
struct InvalidThetaSpec : Error { using Error::Error; };
struct InvalidFraction : Error { using Error::Error; };
struct UnknownLetter : Error { using Error::Error; };
struct UnknownConvergent : Error { using Error::Error; };
// Two independent routes to the same quantity disagreed; always a bug, never expected.
struct ConsistencyError : Error { using Error::Error; };
struct NotSorted : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct MalformedBFile : Error { using Error::Error; };
struct InsufficientBudget : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };

}  // namespace lw

#pragma once

#include <stdexcept>
#include <string>

namespace chordlab {

/// Base class for all chordlab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Some letter occurs a number of times other than exactly twice.
struct NotDoubleOccurrence : Error {
    using Error::Error;
};

/// A token in a word literal is neither a positive integer nor a letter a-z.
struct BadToken : Error {
    using Error::Error;
};

/// A word exceeds the configured chord limit for subset enumeration.
struct TooManyChords : Error {
    using Error::Error;
};

/// A requested depth exceeds the enumeration/generation cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Band bounds violate 2 <= b <= d <= available depth.
struct BadBand : Error {
    using Error::Error;
};

/// Cut positions do not split a base word into the required blocks.
struct BadCuts : Error {
    using Error::Error;
};

/// A move site does not match the word it is applied to.
struct StaleSite : Error {
    using Error::Error;
};

/// Vector/matrix dimensions disagree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// No built-in invariant with the given name.
struct UnknownName : Error {
    using Error::Error;
};

}  // namespace chordlab

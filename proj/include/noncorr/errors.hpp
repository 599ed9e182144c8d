#pragma once

#include <stdexcept>

namespace noncorr {

/// A sequence handed to reconstruct_pattern_set is not pattern-counting at the given length.
class NotPatternCounting : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace noncorr

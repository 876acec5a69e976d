#pragma once

#include <stdexcept>
#include <string>

namespace mmsflow {

// Bad input or broken call contract: invalid indices, empty subsets, k out of
// range, mismatched result/network pairs, and so on.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A desk-scale checker was asked to run above its documented bound. These
// checkers enumerate exponentially many objects and refuse rather than hang.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mmsflow

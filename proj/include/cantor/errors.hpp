// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorCode {
    argument,    // malformed input or precondition violation
    hypothesis,  // basic sequence fails a construction's hypothesis
    scan_bound,  // a minimality scan ran past its configured bound
    refinement,  // interval refinement could not certify a digit
    capacity,    // an internal table outgrew its configured limit
};

inline std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::argument: return "E_ARGUMENT";
    case ErrorCode::hypothesis: return "E_HYPOTHESIS";
    case ErrorCode::scan_bound: return "E_SCAN_BOUND";
    case ErrorCode::refinement: return "E_REFINEMENT";
    case ErrorCode::capacity: return "E_CAPACITY";
    }
    return "E_UNKNOWN";
}

/// Base of every exception thrown by the library. Carries a stable
/// machine-readable code alongside the human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& message)
        : Error(ErrorCode::argument, message) {}
};

class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& message)
        : Error(ErrorCode::hypothesis, message) {}
};

class ScanBoundError : public Error {
public:
    explicit ScanBoundError(const std::string& message)
        : Error(ErrorCode::scan_bound, message) {}
};

class RefinementError : public Error {
public:
    explicit RefinementError(const std::string& message)
        : Error(ErrorCode::refinement, message) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& message)
        : Error(ErrorCode::capacity, message) {}
};

} // namespace cantor

#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateTriple : Error {
    explicit DegenerateTriple(const std::string& w) : Error(w) {}
};
struct ConstantMap : Error {
    explicit ConstantMap(const std::string& w) : Error(w) {}
};
struct RootFindingFailure : Error {
    explicit RootFindingFailure(const std::string& w) : Error(w) {}
};
// Exact-mode root recovery hit an irreducible factor whose roots are not
// Gaussian rationals; callers fall back to the approximate backend.
struct ExactRootsUnavailable : Error {
    explicit ExactRootsUnavailable(const std::string& w) : Error(w) {}
};
struct DegenerateW : Error {
    explicit DegenerateW(const std::string& w) : Error(w) {}
};
struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& w) : Error(w) {}
};
struct MalformedPassport : Error {
    explicit MalformedPassport(const std::string& w) : Error(w) {}
};
struct PathThroughBranchValue : Error {
    explicit PathThroughBranchValue(const std::string& w) : Error(w) {}
};
struct TrackingCollision : Error {
    explicit TrackingCollision(const std::string& w) : Error(w) {}
};
struct CycleTypeMismatch : Error {
    explicit CycleTypeMismatch(const std::string& w) : Error(w) {}
};
struct UnknownValue : Error {
    explicit UnknownValue(const std::string& w) : Error(w) {}
};
struct UnknownValueClass : Error {
    explicit UnknownValueClass(const std::string& w) : Error(w) {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& w) : Error(w) {}
};
struct BoundsTooLarge : Error {
    explicit BoundsTooLarge(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

} // namespace ramify

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lagtori {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied input (bad parameters, malformed braid text, ...).
// The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// A computation contradicted a certified claim. Exit code 1 in the CLI.
struct FalsificationError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero polynomial") {}
};

struct NotDivisible : Error {
    NotDivisible() : Error("no exact Laurent quotient exists") {}
};

struct NonInvertibleImage : Error {
    explicit NonInvertibleImage(const std::string& what) : Error(what) {}
};

struct NotCenterable : Error {
    explicit NotCenterable(const std::string& var)
        : Error("variable '" + var + "' has odd exponent span") {}
};

struct StrandMismatch : InputError {
    StrandMismatch(int a, int b)
        : InputError("cannot compose braids on " + std::to_string(a) + " and " +
                     std::to_string(b) + " strands") {}
};

struct NotAKnot : InputError {
    explicit NotAKnot(int components)
        : InputError("braid closure has " + std::to_string(components) +
                     " components; expected a knot") {}
};

struct NotCoprime : InputError {
    NotCoprime(long long a, long long b)
        : InputError("gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") > 1") {}
};

struct InvalidParams : InputError {
    using InputError::InputError;
};

struct SurvivorCancelled : FalsificationError {
    std::int64_t exponent;
    explicit SurvivorCancelled(std::int64_t e)
        : FalsificationError("survivor term t^" + std::to_string(e) +
                             " has zero coefficient"),
          exponent(e) {}
};

struct ChainViolation : FalsificationError {
    using FalsificationError::FalsificationError;
};

}  // namespace lagtori

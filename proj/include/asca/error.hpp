#pragma once

#include <stdexcept>
#include <string>

namespace asca {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A temporal-rule word with a bad character or bad length.
class InvalidWord : public Error {
public:
    using Error::Error;
};

// A word that is syntactically fine but orders some cell before itself
// around the ring, e.g. "=<=".
class IllFormed : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(int expected, int actual)
        : Error("dimension mismatch: expected n=" + std::to_string(expected) + ", got n=" +
                std::to_string(actual)) {}
};

class NonBijectiveGenerator : public Error {
public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
public:
    DegreeTooLarge(std::size_t degree, std::size_t cap)
        : Error("permutation degree " + std::to_string(degree) + " exceeds cap " +
                std::to_string(cap) + " (raise the cap or pass --long-run)") {}
};

class BadParams : public Error {
public:
    using Error::Error;
};

class NotRepresentable : public Error {
public:
    using Error::Error;
};

class LimitsExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace asca

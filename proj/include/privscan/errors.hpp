#pragma once

#include <stdexcept>
#include <string>

namespace privscan {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- taxonomy / config ---
class SchemaError : public Error {
public:
    using Error::Error;
};
class ReferenceError : public Error {
public:
    using Error::Error;
};
class DuplicateIdError : public Error {
public:
    using Error::Error;
};

// --- image codec ---
class NotAPngError : public Error {
public:
    using Error::Error;
};
class CorruptImageError : public Error {
public:
    using Error::Error;
};

// --- filesystem ---
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace privscan

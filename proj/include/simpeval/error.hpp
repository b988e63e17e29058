#pragma once

#include <stdexcept>
#include <string>

namespace simpeval {

// Exception types shared by all modules. Callers that only care about
// failure can catch simpeval::Error; the CLI maps each kind to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class CorruptDataset : public Error {
public:
    using Error::Error;
};

// Network or transport failure while downloading; safe to retry.
class FetchError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace simpeval

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rpods {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range parameters, mismatched ambients, bad permutations.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// Unparseable or schema-violating instance/certificate files.
class ParseError : public Error
{
public:
    using Error::Error;
};

/// A search ran out of node or wall-clock budget before closing.
class BudgetExceeded : public Error
{
public:
    BudgetExceeded(const std::string & what, std::uint64_t nodes) :
        Error(what), nodes_(nodes)
    {
    }

    auto nodes() const -> std::uint64_t { return nodes_; }

private:
    std::uint64_t nodes_;
};

} // namespace rpods

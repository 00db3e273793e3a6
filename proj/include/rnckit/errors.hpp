#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rnckit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class BadDimension : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& location, const std::string& what)
        : Error(location.empty() ? what : location + ": " + what), location_(location) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/// Raised when a genericity requirement fails. `stage` names the check,
/// `witness` carries the indices (or other small integers) exhibiting it.
class NotGeneric : public Error {
public:
    NotGeneric(std::string stage, std::string detail, std::vector<long> witness = {})
        : Error("not generic [" + stage + "]: " + detail),
          stage_(std::move(stage)), detail_(std::move(detail)), witness_(std::move(witness)) {}

    const std::string& stage() const noexcept { return stage_; }
    const std::string& detail() const noexcept { return detail_; }
    const std::vector<long>& witness() const noexcept { return witness_; }

private:
    std::string stage_;
    std::string detail_;
    std::vector<long> witness_;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class BadShape : public Error {
public:
    using Error::Error;
};

class BothZero : public Error {
public:
    BothZero() : Error("gcd of two zero forms") {}
};

class ZeroForm : public Error {
public:
    ZeroForm() : Error("zero binary form") {}
};

class ZeroParameter : public Error {
public:
    ZeroParameter() : Error("parameter (0:0) is not a point of P^1") {}
};

class RepeatedParameter : public Error {
public:
    explicit RepeatedParameter(std::vector<long> indices)
        : Error("repeated curve parameter"), indices_(std::move(indices)) {}
    const std::vector<long>& indices() const noexcept { return indices_; }

private:
    std::vector<long> indices_;
};

class DegenerateSpan : public Error {
public:
    using Error::Error;
};

/// The Cremona image degenerates (point or line meets the indeterminacy locus).
class FundamentalLocus : public Error {
public:
    using Error::Error;
};

/// The obstruction quadric vanishes at the fourth point: the datum is special.
class ObstructionFails : public Error {
public:
    using Error::Error;
};

}  // namespace rnckit

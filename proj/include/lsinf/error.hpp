#pragma once

#include <stdexcept>
#include <string>

namespace lsinf {

// Base of everything the library throws on a violated contract.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Input text that does not match the grammar (CLI maps this to exit 2).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& w) : Error("PreconditionViolated", w) {}
};

class SizeCap : public Error {
public:
    explicit SizeCap(const std::string& w) : Error("SizeCap", w) {}
};

class UnsupportedCase : public Error {
public:
    explicit UnsupportedCase(const std::string& w) : Error("UnsupportedCase", w) {}
};

class CollisionError : public Error {
public:
    explicit CollisionError(const std::string& w) : Error("CollisionError", w) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionViolated(what);
}

} // namespace lsinf

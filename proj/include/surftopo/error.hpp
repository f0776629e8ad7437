#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surftopo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or structured input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A face cycle repeats a vertex.
class NotRegular : public ParseError {
public:
    using ParseError::ParseError;
};

/// A face cycle is shorter than three vertices.
class MalformedFace : public ParseError {
public:
    using ParseError::ParseError;
};

class EmptyComplex : public Error {
public:
    EmptyComplex() : Error("complex is empty") {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

/// A (χ, orientability, boundary) combination that no compact surface has.
class InvalidSurfaceType : public Error {
public:
    explicit InvalidSurfaceType(const std::string& what) : Error(what) {}
};

/// Raised by the classifiers when a component fails local planarity.
class NotSurface : public Error {
public:
    NotSurface(std::size_t component, const std::string& diagnostic)
        : Error("component " + std::to_string(component) + " is not a surface: " + diagnostic),
          component_(component), diagnostic_(diagnostic) {}

    std::size_t component() const noexcept { return component_; }
    const std::string& diagnostic() const noexcept { return diagnostic_; }

private:
    std::size_t component_;
    std::string diagnostic_;
};

class SizeMismatch : public Error {
public:
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

class NotIsomorphism : public Error {
public:
    explicit NotIsomorphism(const std::string& what) : Error(what) {}
};

class Disconnected : public Error {
public:
    Disconnected() : Error("underlying graph is disconnected") {}
};

class BoundExceeded : public Error {
public:
    explicit BoundExceeded(const std::string& what) : Error(what) {}
};

class UnknownFixture : public Error {
public:
    explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

} // namespace surftopo

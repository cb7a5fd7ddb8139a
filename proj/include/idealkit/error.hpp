#ifndef IDEALKIT_ERROR_HPP
#define IDEALKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealkit {

/// Byte range into the input text that produced a diagnostic.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible descriptors, division by zero, unsupported modulus.
class FieldError : public Error {
public:
    explicit FieldError(const std::string& msg) : Error(msg) {}
};

/// Ring mismatch, unknown variable, malformed ideal input.
class RingError : public Error {
public:
    explicit RingError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, SourceSpan span)
        : Error(msg), span_(span) {}
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

/// Curve whose Jacobian vanishes identically; no limit tangent exists.
class DegenerateCurveError : public Error {
public:
    explicit DegenerateCurveError(const std::string& msg) : Error(msg) {}
};

}  // namespace idealkit

#endif

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace selberg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a meromorphic function is evaluated at (or numerically on top of) one of its poles.
class PoleAt : public Error {
public:
    explicit PoleAt(std::complex<double> where, const std::string& what = "pole")
        : Error(what + " at (" + std::to_string(where.real()) + ", " + std::to_string(where.imag()) + ")"),
          location(where) {}
    std::complex<double> location;
};

class SingularAt : public Error {
public:
    explicit SingularAt(std::complex<double> where, const std::string& what = "singular point")
        : Error(what + " at beta=(" + std::to_string(where.real()) + ", " + std::to_string(where.imag()) + ")"),
          beta(where) {}
    std::complex<double> beta;
};

class ResonanceHit : public SingularAt {
public:
    explicit ResonanceHit(std::complex<double> where) : SingularAt(where, "resonance denominator vanishes") {}
};

class AsymmetryDetected : public Error { using Error::Error; };
class InvalidRow : public Error { using Error::Error; };
class NotInGroup : public Error { using Error::Error; };
class NoBracket : public Error { using Error::Error; };
class NonConvergence : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };
class NotContracting : public Error { using Error::Error; };
class SingularLine : public Error { using Error::Error; };
class DegenerateInput : public Error { using Error::Error; };
class UnknownTheorem : public Error { using Error::Error; };
class NonMonotone : public Error { using Error::Error; };
class NotConvergent : public Error { using Error::Error; };
class InvalidModel : public Error { using Error::Error; };
class EmptyInput : public Error { using Error::Error; };
class IllConditioned : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

class ParseError : public Error {
public:
    ParseError(std::size_t line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    std::size_t line;
};

}  // namespace selberg

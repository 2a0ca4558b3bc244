#pragma once

#include <stdexcept>
#include <string>

namespace subord {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Reciprocal of a series whose constant term is (numerically) zero.
class ZeroConstantTerm : public Error {
public:
    explicit ZeroConstantTerm(const std::string& what) : Error(what) {}
};

/// A third-order operator was requested without beta3.
class MissingBeta3 : public Error {
public:
    MissingBeta3() : Error("third-order operator requires beta3") {}
};

/// A third-order admissibility check was requested without u.
class MissingU : public Error {
public:
    MissingU() : Error("third-order admissibility requires u") {}
};

/// Tuple component s is too small to form the ratios t/s, u/s.
class DegenerateS : public Error {
public:
    explicit DegenerateS(const std::string& what) : Error(what) {}
};

/// Boundary quantity evaluated at an excluded angle (derivative blows up).
class SingularTheta : public Error {
public:
    explicit SingularTheta(const std::string& what) : Error(what) {}
};

/// Winding-number query point lies on (or within the band of) the sampled curve.
class TooCloseToBoundary : public Error {
public:
    explicit TooCloseToBoundary(const std::string& what) : Error(what) {}
};

/// Janowski parameters outside -1 < D < C <= 1.
class InvalidJanowskiParams : public Error {
public:
    explicit InvalidJanowskiParams(const std::string& what) : Error(what) {}
};

/// (m, k) violating k >= m >= 2.
class InvalidMK : public Error {
public:
    explicit InvalidMK(const std::string& what) : Error(what) {}
};

} // namespace subord

#ifndef WARING_ERRORS_HPP
#define WARING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace waring {

// Hard failures are exceptions; negative answers that callers are expected
// to branch on (NotBinary, NoSolution, GenericCase, OutOfRegime) are
// optionals / variant alternatives instead.

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("all coefficients are (numerically) zero") {}
};

struct ZeroForm : std::runtime_error {
    ZeroForm() : std::runtime_error("form is identically zero") {}
};

struct ZeroPoint : std::runtime_error {
    ZeroPoint() : std::runtime_error("projective point must not be the zero vector") {}
};

struct NotSymmetric : std::runtime_error {
    explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

struct PointOnLine : std::runtime_error {
    explicit PointOnLine(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubgeneric : std::runtime_error {
    explicit NotSubgeneric(const std::string& what) : std::runtime_error(what) {}
};

struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeTooLarge : std::runtime_error {
    explicit DegreeTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotZeroDimensional : std::runtime_error {
    explicit NotZeroDimensional(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotCurvilinear : std::runtime_error {
    explicit NotCurvilinear(const std::string& what) : std::runtime_error(what) {}
};

struct RegimeViolation : std::runtime_error {
    explicit RegimeViolation(const std::string& inequality)
        : std::runtime_error(inequality), violated(inequality) {}
    std::string violated;  // the inequality that failed, e.g. "t <= (d-1)/2"
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalInvariant : std::runtime_error {
    explicit InternalInvariant(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace waring

#endif

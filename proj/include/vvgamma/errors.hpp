#pragma once

#include <stdexcept>
#include <string>

namespace vvgamma {

/// Sum of two Gamma expressions whose canonical shift classes or
/// (4pi)-exponents differ; such sums have no single-term representation.
class IncompatibleExpr : public std::runtime_error {
public:
    explicit IncompatibleExpr(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation at a pole of the rational part or of the Gamma factor.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// limit_at: denominator vanishes to higher order than the numerator.
class DivergesError : public std::runtime_error {
public:
    explicit DivergesError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside the mathematical domain of the operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Finite-difference step is dominated by rounding noise.
class StepSizeError : public std::runtime_error {
public:
    explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vvgamma

#pragma once

#include <stdexcept>
#include <string>

namespace rlv {

/// Base class for every error raised by the vehicle model.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Function called outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class OutOfTableRange : public Error {
public:
    using Error::Error;
};

class CorrelationRangeExceeded : public Error {
public:
    using Error::Error;
};

class CyclePowerInfeasible : public Error {
public:
    using Error::Error;
};

class NonPhysicalGeometry : public Error {
public:
    using Error::Error;
};

/// A stage cannot deliver its delta-v at any size. `severity` is a
/// non-negative measure of how far the design is from closing.
class InfeasibleStage : public Error {
public:
    InfeasibleStage(const std::string& what, double severity)
        : Error(what), severity_(severity) {}
    double severity() const noexcept { return severity_; }

private:
    double severity_;
};

class NegativeAscentPropellant : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class LiftoffFailure : public Error {
public:
    LiftoffFailure(const std::string& what, double thrust_to_weight)
        : Error(what), thrust_to_weight_(thrust_to_weight) {}
    double thrust_to_weight() const noexcept { return thrust_to_weight_; }

private:
    double thrust_to_weight_;
};

/// Design rejected by a constraint. `constraint` is a stable identifier used
/// as penalty key and in CLI diagnostics; `violation` is normalized (>= 0).
class InfeasibleDesign : public Error {
public:
    InfeasibleDesign(std::string constraint, double violation, const std::string& detail)
        : Error(constraint + ": " + detail),
          constraint_(std::move(constraint)),
          violation_(violation) {}
    const std::string& constraint() const noexcept { return constraint_; }
    double violation() const noexcept { return violation_; }

private:
    std::string constraint_;
    double violation_;
};

class NoFeasibleIndividual : public Error {
public:
    using Error::Error;
};

/// Malformed configuration or calibration input.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace rlv

#pragma once

#include <stdexcept>
#include <string>

namespace dispz {

/// Base class for all library errors. `exit_code()` maps onto the CLI
/// contract: 2 = parse error, 3 = physics-guard violation, 4 = validation
/// failure.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, int exit_code = 1)
        : std::runtime_error(msg), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg, 2) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg, 2) {}
};

/// Physics-guard violations (exit code 3).
class PhysicsError : public Error {
public:
    explicit PhysicsError(const std::string& msg) : Error(msg, 3) {}
};

/// Direct impedance evaluation requested too close to a network resonance.
class ResonanceProximityError : public PhysicsError {
public:
    ResonanceProximityError(const std::string& msg, double nearest_pole_rad_s)
        : PhysicsError(msg), nearest_pole_(nearest_pole_rad_s) {}
    double nearest_pole_rad_s() const { return nearest_pole_; }

private:
    double nearest_pole_;
};

/// Dispersive-regime assumption broken (qubit too close to an internal mode).
class DispersiveViolationError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class SingularDenominatorError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// Pole-residue input has a nonzero A_inf stage; synthesis refuses it.
class UnsupportedInductiveStageError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// Non-diagonal A0 in strict-diagonal mode.
class UnsupportedDirectCapacitiveCouplingError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

/// Residue matrix fails the rank-1 requirement beyond tolerance.
class InvalidResidueError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class UnphysicalRenormalizationError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class ValidationFailure : public Error {
public:
    explicit ValidationFailure(const std::string& msg) : Error(msg, 4) {}
};

}  // namespace dispz

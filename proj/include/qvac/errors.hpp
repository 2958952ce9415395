#pragma once

#include <stdexcept>
#include <string>

namespace qvac {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed arguments: bad ranges, inconsistent grids, invalid model parameters.
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

/// Request outside the mathematical support of an operation
/// (off-resonance drives, off-shell wave vectors, out-of-range frequencies).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// Evaluation landed on a pole or a singular locus.
class singularity_error : public error {
public:
    explicit singularity_error(const std::string& what) : error(what) {}
};

/// Trajectory problems: spacelike segments, insufficient smoothness,
/// singular-locus crossings during a mapped sweep.
class kinematics_error : public domain_error {
public:
    explicit kinematics_error(const std::string& what) : domain_error(what) {}
};

/// Unreadable or unwritable sinks and sources.
class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

} // namespace qvac

#pragma once

#include <stdexcept>
#include <string>

namespace bj {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data could not be read or does not satisfy the dataset contract.
class DataError : public Error {
public:
    using Error::Error;
};

/// A numerical routine could not produce a result.
class ComputeError : public Error {
public:
    using Error::Error;
};

/// Operation precondition violated by the caller (series too short, bad lag, ...).
class InvalidArgument : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class DegenerateSeries : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class SingularDesign : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class FitFailed : public ComputeError {
public:
    using ComputeError::ComputeError;
};

/// An estimated AR or MA polynomial has a root too close to the unit circle.
class NearNonstationary : public FitFailed {
public:
    using FitFailed::FitFailed;
};

class UndefinedCriterion : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class SelectionFailed : public ComputeError {
public:
    using ComputeError::ComputeError;
};

}  // namespace bj

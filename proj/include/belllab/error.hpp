// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_ERROR_HPP
#define BELLLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace belllab
{

// Precondition violated by the caller (bad dimension, out-of-range parameter, ...).
class InvalidInput : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Bohmian velocity requested where |psi|^2 is below the node threshold.
class NodeSingularity : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// All four coincidence probabilities vanish, so the normalized correlation is undefined.
class UndefinedCorrelation : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// A numerical check exceeded its tolerance.
class NumericalFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace belllab

#endif  // BELLLAB_ERROR_HPP

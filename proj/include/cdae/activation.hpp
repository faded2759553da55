#pragma once

#include <string>

#include "cdae/matrix.hpp"

namespace cdae {

enum class Activation { sigmoid, tanh };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

double activate_scalar(Activation kind, double z);

/// Derivative of the activation expressed through its output value:
/// sigmoid -> h (1 - h), tanh -> (1 + h)(1 - h).
double activate_prime_scalar(Activation kind, double h);

/// Elementwise activation. sigmoid maps into (0,1), tanh into (-1,1).
Vector activate(Activation kind, const Vector& z);

/// Elementwise derivative from the activation's own output.
Vector activate_prime_from_output(Activation kind, const Vector& h);

}  // namespace cdae

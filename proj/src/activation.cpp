#include "cdae/activation.hpp"

#include <cmath>

namespace cdae {

std::string to_string(Activation a) {
    return a == Activation::sigmoid ? "sigmoid" : "tanh";
}

Activation activation_from_string(const std::string& s) {
    if (s == "sigmoid") return Activation::sigmoid;
    if (s == "tanh") return Activation::tanh;
    throw ConfigError("unknown activation '" + s + "' (expected sigmoid or tanh)");
}

double activate_scalar(Activation kind, double z) {
    if (kind == Activation::sigmoid) return 1.0 / (1.0 + std::exp(-z));
    return std::tanh(z);
}

double activate_prime_scalar(Activation kind, double h) {
    if (kind == Activation::sigmoid) return h * (1.0 - h);
    return (1.0 + h) * (1.0 - h);
}

Vector activate(Activation kind, const Vector& z) {
    Vector h(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) h[i] = activate_scalar(kind, z[i]);
    return h;
}

Vector activate_prime_from_output(Activation kind, const Vector& h) {
    Vector d(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) d[i] = activate_prime_scalar(kind, h[i]);
    return d;
}

}  // namespace cdae

#pragma once

#include "qneuron/neuron.hpp"

#include <filesystem>
#include <iosfwd>

namespace qneuron {

struct Model {
    Neuron neuron;
    Sigmoid activation;
};

// Text model format, one "key=value" per line:
//
//   kind=factored            linear | factored | general
//   n=2
//   beta=1
//   w_r=<n values>           factored: w_r, w_g, w_b, b1, b2, c
//   ...                      linear:   w, b
//                            general:  a (upper triangle, row-major), b, c
//
// Vectors are comma-separated, every number printed with 17 significant digits
// so a save/load round trip is exact. Blank lines and '#' comments are skipped.
void write_model(const Neuron& neuron, const Sigmoid& act, std::ostream& out);
void save_model(const Neuron& neuron, const Sigmoid& act, const std::filesystem::path& path);

/// Errors name the offending line.
Model read_model(std::istream& in);
Model load_model(const std::filesystem::path& path);

} // namespace qneuron

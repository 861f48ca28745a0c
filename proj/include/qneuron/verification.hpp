#pragma once

#include "qneuron/dataset.hpp"
#include "qneuron/neuron.hpp"
#include "qneuron/splitmix64.hpp"
#include "qneuron/trainer.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qneuron {

struct GradCheckTolerance {
    double h = 1e-6;
    double rel = 1e-6;
    double abs = 1e-9;
};

struct ParameterError {
    std::string name;
    double analytic = 0.0;
    double numeric = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0; // |a - n| / max(|a|, |n|, 1e-12)
    bool passed = false;    // rel_error <= tol.rel or abs_error <= tol.abs
};

struct GradCheckReport {
    double max_relative_error = 0.0;
    double max_absolute_error = 0.0;
    std::string worst_parameter; // largest relative error
    std::vector<ParameterError> per_parameter;

    bool passed() const;
};

/// Central differences of the single-sample loss 1/2 (h - y)^2, perturbing one
/// flat parameter at a time. Independent of the analytic gradient code.
Gradient finite_difference_gradient(const Neuron& neuron, const Sample& s, const Sigmoid& act,
                                    double h = 1e-6);

GradCheckReport compare_gradients(const std::vector<std::string>& names, const Gradient& analytic,
                                  const Gradient& numeric, const GradCheckTolerance& tol = {});

/// Analytic gradient of the neuron's kind against finite_difference_gradient.
GradCheckReport gradient_check(const Neuron& neuron, const Sample& s, const Sigmoid& act,
                               const GradCheckTolerance& tol = {});

std::vector<std::string> parameter_names(const Neuron& neuron);

/// Neuron with every parameter uniform in [lo, hi).
Neuron random_neuron(NeuronKind kind, std::size_t n, SplitMix64& rng, double lo = -2.0,
                     double hi = 2.0);

struct SweepResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// max over parameters of min(rel_error / tol.rel, abs_error / tol.abs);
    /// a parameter passes iff its ratio is <= 1.
    double max_tolerance_ratio = 0.0;
    std::string worst; // "n=<dim> trial=<k> <parameter>"
};

/// Random gradient checks: for each trial a dimension is taken round-robin from
/// `dims`, parameters and inputs are drawn uniformly from [-2, 2) and the label
/// uniformly from [0, 1).
SweepResult gradient_sweep(NeuronKind kind, std::span<const std::size_t> dims,
                           std::size_t trials, std::uint64_t seed,
                           const GradCheckTolerance& tol = {});

} // namespace qneuron

#pragma once

#include "qneuron/dataset.hpp"
#include "qneuron/neuron.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qneuron {

/// Partial derivatives of the loss, laid out like the neuron's flat parameters.
struct Gradient {
    std::vector<double> values;

    friend bool operator==(const Gradient&, const Gradient&) = default;
};

/// 1/2 * sum_k (forward(x_k) - y_k)^2
double sample_loss(const Neuron& neuron, const Sample& s, const Sigmoid& act);
double dataset_loss(const Neuron& neuron, const Dataset& data, const Sigmoid& act);

template <typename N>
double dataset_loss(const N& neuron, const Dataset& data, const Sigmoid& act) {
    return dataset_loss(Neuron{neuron}, data, act);
}

// Per-sample gradients of 1/2 (h - y)^2. With e = h - y and d = sigma'(f):
//   factored: dw_r = e d x (w_g.x + b2), dw_g = e d x (w_r.x + b1),
//             dw_b = e d x^2, db1 = e d (w_g.x + b2), db2 = e d (w_r.x + b1), dc = e d
//   general:  da_ij = e d x_i x_j (i <= j), db = e d x, dc = e d
Gradient grad_linear(const LinearNeuron& neuron, const Sample& s, const Sigmoid& act);
Gradient grad_factored(const FactoredQuadraticNeuron& neuron, const Sample& s, const Sigmoid& act);
Gradient grad_general(const GeneralQuadraticNeuron& neuron, const Sample& s, const Sigmoid& act);

inline Gradient sample_gradient(const LinearNeuron& n, const Sample& s, const Sigmoid& act) {
    return grad_linear(n, s, act);
}
inline Gradient sample_gradient(const FactoredQuadraticNeuron& n, const Sample& s,
                                const Sigmoid& act) {
    return grad_factored(n, s, act);
}
inline Gradient sample_gradient(const GeneralQuadraticNeuron& n, const Sample& s,
                                const Sigmoid& act) {
    return grad_general(n, s, act);
}
Gradient sample_gradient(const Neuron& n, const Sample& s, const Sigmoid& act);

/// Sum of per-sample gradients, accumulated in dataset order.
Gradient batch_gradient(const Neuron& n, const Dataset& data, const Sigmoid& act);

/// alpha <- alpha - eta * dE/dalpha for every parameter.
template <typename N>
N apply_update(const N& neuron, const Gradient& grad, double eta);
Neuron apply_update(const Neuron& neuron, const Gradient& grad, double eta);

enum class UpdateMode { Batch, PerSample };

struct TrainingConfig {
    double eta = 0.5;
    std::size_t max_iters = 10000;
    double loss_tol = 0.0; // stop once loss < loss_tol
    UpdateMode mode = UpdateMode::Batch;
    double beta = 1.0;

    void validate() const;
};

struct TrainReport {
    std::size_t iterations_run = 0;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    std::vector<double> loss_history; // loss after each iteration
    Neuron final_neuron;
};

/// Raised when the loss or a parameter becomes non-finite.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(std::size_t iteration, const std::string& what);
    std::size_t iteration() const noexcept { return iteration_; }

  private:
    std::size_t iteration_;
};

/// Gradient descent until max_iters or loss < loss_tol. In batch mode one
/// iteration is one update with the summed gradient; in per-sample mode one
/// iteration is a pass over the samples in dataset order.
TrainReport train(const Neuron& neuron, const Dataset& data, const TrainingConfig& config);

} // namespace qneuron

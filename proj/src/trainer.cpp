#include "qneuron/trainer.hpp"

#include <algorithm>
#include <cmath>

namespace qneuron {

namespace {

struct Residual {
    double e; // h - y
    double d; // sigma'(f)
};

template <typename N>
Residual residual(const N& neuron, const Sample& s, const Sigmoid& act) {
    const double f = preactivation(neuron, s.x);
    return {sigmoid(f, act) - s.y, sigmoid_derivative(f, act)};
}

double affine(std::span<const double> w, double bias, std::span<const double> x) {
    double s = bias;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i] * x[i];
    }
    return s;
}

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
}

} // namespace

double sample_loss(const Neuron& neuron, const Sample& s, const Sigmoid& act) {
    const double r = forward(neuron, s.x, act) - s.y;
    return 0.5 * r * r;
}

double dataset_loss(const Neuron& neuron, const Dataset& data, const Sigmoid& act) {
    check_dimension(dim(neuron), data.dim());
    double sum = 0.0;
    for (const auto& s : data) {
        const double r = forward(neuron, s.x, act) - s.y;
        sum += r * r;
    }
    return 0.5 * sum;
}

Gradient grad_linear(const LinearNeuron& neuron, const Sample& s, const Sigmoid& act) {
    const auto [e, d] = residual(neuron, s, act);
    const double ed = e * d;
    Gradient g;
    g.values.reserve(LinearNeuron::parameter_count(neuron.dim()));
    for (double xi : s.x) {
        g.values.push_back(ed * xi);
    }
    g.values.push_back(ed);
    return g;
}

Gradient grad_factored(const FactoredQuadraticNeuron& neuron, const Sample& s,
                       const Sigmoid& act) {
    const auto [e, d] = residual(neuron, s, act);
    const double ed = e * d;
    const std::size_t n = neuron.dim();
    const double r = affine(neuron.w_r(), neuron.b1(), s.x);
    const double g = affine(neuron.w_g(), neuron.b2(), s.x);

    std::vector<double> out(FactoredQuadraticNeuron::parameter_count(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = s.x[i];
        out[i] = ed * xi * g;
        out[n + i] = ed * xi * r;
        out[2 * n + i] = ed * xi * xi;
    }
    out[3 * n] = ed * g;
    out[3 * n + 1] = ed * r;
    out[3 * n + 2] = ed;
    return {std::move(out)};
}

Gradient grad_general(const GeneralQuadraticNeuron& neuron, const Sample& s,
                      const Sigmoid& act) {
    const auto [e, d] = residual(neuron, s, act);
    const double ed = e * d;
    const std::size_t n = neuron.dim();

    std::vector<double> out;
    out.reserve(GeneralQuadraticNeuron::parameter_count(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out.push_back(ed * s.x[i] * s.x[j]);
        }
    }
    for (double xk : s.x) {
        out.push_back(ed * xk);
    }
    out.push_back(ed);
    return {std::move(out)};
}

Gradient sample_gradient(const Neuron& n, const Sample& s, const Sigmoid& act) {
    return std::visit([&](const auto& neuron) { return sample_gradient(neuron, s, act); }, n);
}

Gradient batch_gradient(const Neuron& n, const Dataset& data, const Sigmoid& act) {
    check_dimension(dim(n), data.dim());
    Gradient total;
    for (const auto& s : data) {
        const auto g = sample_gradient(n, s, act);
        if (total.values.empty()) {
            total.values.assign(g.values.size(), 0.0);
        }
        for (std::size_t i = 0; i < g.values.size(); ++i) {
            total.values[i] += g.values[i];
        }
    }
    return total;
}

template <typename N>
N apply_update(const N& neuron, const Gradient& grad, double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("learning rate must be finite and > 0");
    }
    auto p = neuron.parameters();
    if (grad.values.size() != p.size()) {
        throw std::invalid_argument("gradient has " + std::to_string(grad.values.size()) +
                                    " entries, neuron has " + std::to_string(p.size()) +
                                    " parameters");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] -= eta * grad.values[i];
    }
    return N::from_parameters(neuron.dim(), p);
}

template LinearNeuron apply_update(const LinearNeuron&, const Gradient&, double);
template FactoredQuadraticNeuron apply_update(const FactoredQuadraticNeuron&, const Gradient&,
                                              double);
template GeneralQuadraticNeuron apply_update(const GeneralQuadraticNeuron&, const Gradient&,
                                             double);

Neuron apply_update(const Neuron& neuron, const Gradient& grad, double eta) {
    return std::visit([&](const auto& n) -> Neuron { return apply_update(n, grad, eta); },
                      neuron);
}

void TrainingConfig::validate() const {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("eta must be finite and > 0");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("max_iters must be >= 1");
    }
    if (!(loss_tol >= 0.0)) {
        throw std::invalid_argument("loss_tol must be >= 0");
    }
    Sigmoid{beta};
}

DivergenceError::DivergenceError(std::size_t iteration, const std::string& what)
    : std::runtime_error("training diverged at iteration " + std::to_string(iteration) + ": " +
                         what),
      iteration_(iteration) {}

namespace {

template <typename N>
TrainReport train_impl(const N& initial, const Dataset& data, const TrainingConfig& config) {
    const Sigmoid act(config.beta);
    check_dimension(initial.dim(), data.dim());

    // apply_update re-validates through the constructor, which rejects
    // non-finite values; step manually so the failing iteration is reported.
    auto step = [&](const N& neuron, const Gradient& grad, std::size_t it) {
        auto p = neuron.parameters();
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] -= config.eta * grad.values[i];
        }
        if (!all_finite(p)) {
            throw DivergenceError(it, "non-finite parameter");
        }
        return N::from_parameters(neuron.dim(), p);
    };

    TrainReport report{.final_neuron = initial};
    N current = initial;
    double loss = dataset_loss(current, data, act);
    if (!std::isfinite(loss)) {
        throw DivergenceError(0, "non-finite initial loss");
    }
    report.initial_loss = loss;
    report.final_loss = loss;
    if (loss < config.loss_tol) {
        return report;
    }
    report.loss_history.reserve(config.max_iters);

    for (std::size_t it = 1; it <= config.max_iters; ++it) {
        if (config.mode == UpdateMode::Batch) {
            current = step(current, batch_gradient(current, data, act), it);
        } else {
            for (const auto& s : data) {
                current = step(current, sample_gradient(current, s, act), it);
            }
        }
        loss = dataset_loss(current, data, act);
        if (!std::isfinite(loss)) {
            throw DivergenceError(it, "non-finite loss");
        }
        report.loss_history.push_back(loss);
        report.iterations_run = it;
        if (loss < config.loss_tol) {
            break;
        }
    }
    report.final_loss = loss;
    report.final_neuron = current;
    return report;
}

} // namespace

TrainReport train(const Neuron& neuron, const Dataset& data, const TrainingConfig& config) {
    config.validate();
    return std::visit([&](const auto& n) { return train_impl(n, data, config); }, neuron);
}

} // namespace qneuron

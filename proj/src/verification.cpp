#include "qneuron/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qneuron {

bool GradCheckReport::passed() const {
    return std::all_of(per_parameter.begin(), per_parameter.end(),
                       [](const ParameterError& p) { return p.passed; });
}

std::vector<std::string> parameter_names(const Neuron& neuron) {
    return std::visit([](const auto& n) { return n.parameter_names(); }, neuron);
}

namespace {

template <typename N>
Gradient central_differences(const N& neuron, const Sample& s, const Sigmoid& act, double h) {
    const std::size_t n = neuron.dim();
    check_dimension(n, s.x.size());
    auto p = neuron.parameters();
    auto loss_at = [&](const std::vector<double>& params) {
        const double r = forward(N::from_parameters(n, params), s.x, act) - s.y;
        return 0.5 * r * r;
    };
    Gradient out;
    out.values.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double saved = p[i];
        p[i] = saved + h;
        const double up = loss_at(p);
        p[i] = saved - h;
        const double down = loss_at(p);
        p[i] = saved;
        out.values[i] = (up - down) / (2.0 * h);
    }
    return out;
}

} // namespace

Gradient finite_difference_gradient(const Neuron& neuron, const Sample& s, const Sigmoid& act,
                                    double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite-difference step must be > 0");
    }
    return std::visit([&](const auto& n) { return central_differences(n, s, act, h); }, neuron);
}

GradCheckReport compare_gradients(const std::vector<std::string>& names, const Gradient& analytic,
                                  const Gradient& numeric, const GradCheckTolerance& tol) {
    if (analytic.values.size() != numeric.values.size() ||
        names.size() != analytic.values.size()) {
        throw std::invalid_argument("gradient shapes differ");
    }
    GradCheckReport report;
    report.per_parameter.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        ParameterError pe;
        pe.name = names[i];
        pe.analytic = analytic.values[i];
        pe.numeric = numeric.values[i];
        pe.abs_error = std::abs(pe.analytic - pe.numeric);
        pe.rel_error =
            pe.abs_error / std::max({std::abs(pe.analytic), std::abs(pe.numeric), 1e-12});
        pe.passed = pe.rel_error <= tol.rel || pe.abs_error <= tol.abs;
        if (report.per_parameter.empty() || pe.rel_error > report.max_relative_error) {
            report.max_relative_error = pe.rel_error;
            report.worst_parameter = pe.name;
        }
        report.max_absolute_error = std::max(report.max_absolute_error, pe.abs_error);
        report.per_parameter.push_back(std::move(pe));
    }
    return report;
}

GradCheckReport gradient_check(const Neuron& neuron, const Sample& s, const Sigmoid& act,
                               const GradCheckTolerance& tol) {
    return compare_gradients(parameter_names(neuron), sample_gradient(neuron, s, act),
                             finite_difference_gradient(neuron, s, act, tol.h), tol);
}

Neuron random_neuron(NeuronKind kind, std::size_t n, SplitMix64& rng, double lo, double hi) {
    const Neuron shape = zero_neuron(kind, n);
    std::vector<double> p(std::visit([](const auto& z) { return z.parameters().size(); }, shape));
    for (auto& v : p) {
        v = rng.uniform(lo, hi);
    }
    switch (kind) {
    case NeuronKind::Linear: return LinearNeuron::from_parameters(n, p);
    case NeuronKind::Factored: return FactoredQuadraticNeuron::from_parameters(n, p);
    case NeuronKind::General: return GeneralQuadraticNeuron::from_parameters(n, p);
    }
    throw std::invalid_argument("unknown neuron kind");
}

SweepResult gradient_sweep(NeuronKind kind, std::span<const std::size_t> dims,
                           std::size_t trials, std::uint64_t seed, const GradCheckTolerance& tol) {
    if (dims.empty()) {
        throw std::invalid_argument("gradient sweep needs at least one dimension");
    }
    SplitMix64 rng(seed);
    const Sigmoid act;
    SweepResult result;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = dims[t % dims.size()];
        const Neuron neuron = random_neuron(kind, n, rng);
        Sample s;
        for (std::size_t i = 0; i < n; ++i) {
            s.x.push_back(rng.uniform(-2.0, 2.0));
        }
        s.y = rng.next_unit();
        const auto report = gradient_check(neuron, s, act, tol);
        ++result.trials;
        if (!report.passed()) {
            ++result.failures;
        }
        for (const auto& pe : report.per_parameter) {
            const double ratio = std::min(pe.rel_error / tol.rel, pe.abs_error / tol.abs);
            if (result.worst.empty() || ratio > result.max_tolerance_ratio) {
                result.max_tolerance_ratio = ratio;
                result.worst = "n=" + std::to_string(n) + " trial=" + std::to_string(t) + " " +
                               pe.name;
            }
        }
    }
    return result;
}

} // namespace qneuron

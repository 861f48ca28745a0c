#include "qneuron/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qneuron {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
        throw std::invalid_argument(std::string(what) + ": parameters must be finite");
    }
}

void require_finite(double v, const char* what) {
    require_finite(std::span<const double>(&v, 1), what);
}

double dot(std::span<const double> w, std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i] * x[i];
    }
    return s;
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(prefix + "[" + std::to_string(i + 1) + "]");
    }
    return names;
}

void require_count(std::size_t expected, std::size_t given) {
    if (expected != given) {
        throw std::invalid_argument("parameter vector has " + std::to_string(given) +
                                    " entries, expected " + std::to_string(expected));
    }
}

} // namespace

void check_dimension(std::size_t expected, std::size_t given) {
    if (expected != given) {
        throw std::invalid_argument("dimension mismatch: expected n=" + std::to_string(expected) +
                                    ", got n=" + std::to_string(given));
    }
}

// ---------------------------------------------------------------------------
// Activation

Sigmoid::Sigmoid(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw std::invalid_argument("sigmoid beta must be finite and > 0");
    }
}

double sigmoid(double t, const Sigmoid& act) {
    const double z = act.beta() * t;
    // Evaluate on the side where exp() cannot overflow.
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double sigmoid_derivative(double t, const Sigmoid& act) {
    const double s = sigmoid(t, act);
    return act.beta() * s * (1.0 - s);
}

int classify(double output, double threshold) { return output > threshold ? 1 : 0; }

// ---------------------------------------------------------------------------
// LinearNeuron

LinearNeuron::LinearNeuron(std::vector<double> w, double b) : w_(std::move(w)), b_(b) {
    if (w_.empty()) {
        throw std::invalid_argument("LinearNeuron: dimension must be >= 1");
    }
    require_finite(w_, "LinearNeuron");
    require_finite(b_, "LinearNeuron");
}

LinearNeuron LinearNeuron::zeros(std::size_t n) { return {std::vector<double>(n, 0.0), 0.0}; }

std::vector<double> LinearNeuron::parameters() const {
    std::vector<double> p(w_);
    p.push_back(b_);
    return p;
}

std::vector<std::string> LinearNeuron::parameter_names() const {
    auto names = indexed_names("w", dim());
    names.emplace_back("b");
    return names;
}

LinearNeuron LinearNeuron::from_parameters(std::size_t n, std::span<const double> p) {
    require_count(parameter_count(n), p.size());
    return {std::vector<double>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)), p[n]};
}

double preactivation(const LinearNeuron& neuron, std::span<const double> x) {
    check_dimension(neuron.dim(), x.size());
    return dot(neuron.w(), x) + neuron.b();
}

// ---------------------------------------------------------------------------
// FactoredQuadraticNeuron

FactoredQuadraticNeuron::FactoredQuadraticNeuron(std::vector<double> w_r, std::vector<double> w_g,
                                                 std::vector<double> w_b, double b1, double b2,
                                                 double c)
    : w_r_(std::move(w_r)), w_g_(std::move(w_g)), w_b_(std::move(w_b)), b1_(b1), b2_(b2), c_(c) {
    if (w_r_.empty()) {
        throw std::invalid_argument("FactoredQuadraticNeuron: dimension must be >= 1");
    }
    if (w_g_.size() != w_r_.size() || w_b_.size() != w_r_.size()) {
        throw std::invalid_argument("FactoredQuadraticNeuron: w_r, w_g, w_b lengths differ (" +
                                    std::to_string(w_r_.size()) + ", " +
                                    std::to_string(w_g_.size()) + ", " +
                                    std::to_string(w_b_.size()) + ")");
    }
    require_finite(w_r_, "FactoredQuadraticNeuron");
    require_finite(w_g_, "FactoredQuadraticNeuron");
    require_finite(w_b_, "FactoredQuadraticNeuron");
    const double scalars[] = {b1_, b2_, c_};
    require_finite(scalars, "FactoredQuadraticNeuron");
}

FactoredQuadraticNeuron FactoredQuadraticNeuron::zeros(std::size_t n) {
    std::vector<double> z(n, 0.0);
    return {z, z, z, 0.0, 0.0, 0.0};
}

std::vector<double> FactoredQuadraticNeuron::parameters() const {
    std::vector<double> p;
    p.reserve(parameter_count(dim()));
    p.insert(p.end(), w_r_.begin(), w_r_.end());
    p.insert(p.end(), w_g_.begin(), w_g_.end());
    p.insert(p.end(), w_b_.begin(), w_b_.end());
    p.push_back(b1_);
    p.push_back(b2_);
    p.push_back(c_);
    return p;
}

std::vector<std::string> FactoredQuadraticNeuron::parameter_names() const {
    auto names = indexed_names("w_r", dim());
    for (const char* group : {"w_g", "w_b"}) {
        auto more = indexed_names(group, dim());
        names.insert(names.end(), more.begin(), more.end());
    }
    names.emplace_back("b1");
    names.emplace_back("b2");
    names.emplace_back("c");
    return names;
}

FactoredQuadraticNeuron FactoredQuadraticNeuron::from_parameters(std::size_t n,
                                                                 std::span<const double> p) {
    require_count(parameter_count(n), p.size());
    auto group = [&](std::size_t k) {
        auto first = p.begin() + static_cast<std::ptrdiff_t>(k * n);
        return std::vector<double>(first, first + static_cast<std::ptrdiff_t>(n));
    };
    return {group(0), group(1), group(2), p[3 * n], p[3 * n + 1], p[3 * n + 2]};
}

double preactivation(const FactoredQuadraticNeuron& neuron, std::span<const double> x) {
    check_dimension(neuron.dim(), x.size());
    const double r = dot(neuron.w_r(), x) + neuron.b1();
    const double g = dot(neuron.w_g(), x) + neuron.b2();
    double squares = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        squares += neuron.w_b()[i] * x[i] * x[i];
    }
    return r * g + squares + neuron.c();
}

// ---------------------------------------------------------------------------
// GeneralQuadraticNeuron

GeneralQuadraticNeuron::GeneralQuadraticNeuron(std::size_t n, std::vector<double> triangle,
                                               std::vector<double> b, double c)
    : a_(std::move(triangle)), b_(std::move(b)), c_(c) {
    if (n == 0) {
        throw std::invalid_argument("GeneralQuadraticNeuron: dimension must be >= 1");
    }
    if (b_.size() != n) {
        throw std::invalid_argument("GeneralQuadraticNeuron: expected " + std::to_string(n) +
                                    " linear terms, got " + std::to_string(b_.size()));
    }
    if (a_.size() != triangle_size(n)) {
        throw std::invalid_argument("GeneralQuadraticNeuron: expected " +
                                    std::to_string(triangle_size(n)) +
                                    " triangle entries, got " + std::to_string(a_.size()));
    }
    require_finite(a_, "GeneralQuadraticNeuron");
    require_finite(b_, "GeneralQuadraticNeuron");
    require_finite(c_, "GeneralQuadraticNeuron");
}

GeneralQuadraticNeuron GeneralQuadraticNeuron::zeros(std::size_t n) {
    return {n, std::vector<double>(triangle_size(n), 0.0), std::vector<double>(n, 0.0), 0.0};
}

std::size_t GeneralQuadraticNeuron::triangle_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    if (j >= n) {
        throw std::out_of_range("coefficient index out of range");
    }
    // Rows 0..i-1 occupy n + (n-1) + ... + (n-i+1) slots.
    return i * n - i * (i - 1) / 2 + (j - i);
}

double GeneralQuadraticNeuron::coefficient(std::size_t i, std::size_t j) const {
    return a_[triangle_index(dim(), i, j)];
}

std::vector<double> GeneralQuadraticNeuron::parameters() const {
    std::vector<double> p(a_);
    p.insert(p.end(), b_.begin(), b_.end());
    p.push_back(c_);
    return p;
}

std::vector<std::string> GeneralQuadraticNeuron::parameter_names() const {
    std::vector<std::string> names;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            names.push_back("a[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
        }
    }
    auto linear = indexed_names("b", n);
    names.insert(names.end(), linear.begin(), linear.end());
    names.emplace_back("c");
    return names;
}

GeneralQuadraticNeuron GeneralQuadraticNeuron::from_parameters(std::size_t n,
                                                               std::span<const double> p) {
    require_count(parameter_count(n), p.size());
    const auto t = static_cast<std::ptrdiff_t>(triangle_size(n));
    return {n, std::vector<double>(p.begin(), p.begin() + t),
            std::vector<double>(p.begin() + t, p.begin() + t + static_cast<std::ptrdiff_t>(n)),
            p[triangle_size(n) + n]};
}

double preactivation(const GeneralQuadraticNeuron& neuron, std::span<const double> x) {
    const std::size_t n = neuron.dim();
    check_dimension(n, x.size());
    const auto& a = neuron.triangle();
    double quad = 0.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            quad += a[k++] * x[i] * x[j];
        }
    }
    return quad + dot(neuron.b(), x) + neuron.c();
}

// ---------------------------------------------------------------------------

double preactivation(const Neuron& neuron, std::span<const double> x) {
    return std::visit([&](const auto& n) { return preactivation(n, x); }, neuron);
}

std::size_t dim(const Neuron& neuron) {
    return std::visit([](const auto& n) { return n.dim(); }, neuron);
}

NeuronKind kind_of(const Neuron& neuron) { return static_cast<NeuronKind>(neuron.index()); }

std::string_view kind_name(NeuronKind kind) {
    switch (kind) {
    case NeuronKind::Linear: return "linear";
    case NeuronKind::Factored: return "factored";
    case NeuronKind::General: return "general";
    }
    return "?";
}

std::string kind_name(const Neuron& neuron) { return std::string(kind_name(kind_of(neuron))); }

std::optional<NeuronKind> parse_kind(std::string_view name) {
    for (auto k : {NeuronKind::Linear, NeuronKind::Factored, NeuronKind::General}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

Neuron zero_neuron(NeuronKind kind, std::size_t n) {
    switch (kind) {
    case NeuronKind::Linear: return LinearNeuron::zeros(n);
    case NeuronKind::Factored: return FactoredQuadraticNeuron::zeros(n);
    case NeuronKind::General: return GeneralQuadraticNeuron::zeros(n);
    }
    throw std::invalid_argument("unknown neuron kind");
}

GeneralQuadraticNeuron factored_to_general(const FactoredQuadraticNeuron& neuron) {
    const std::size_t n = neuron.dim();
    const auto& wr = neuron.w_r();
    const auto& wg = neuron.w_g();
    const auto& wb = neuron.w_b();

    std::vector<double> tri(GeneralQuadraticNeuron::triangle_size(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        tri[k++] = wr[i] * wg[i] + wb[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            tri[k++] = wr[i] * wg[j] + wr[j] * wg[i];
        }
    }
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = neuron.b2() * wr[i] + neuron.b1() * wg[i];
    }
    return {n, std::move(tri), std::move(b), neuron.b1() * neuron.b2() + neuron.c()};
}

FactoredQuadraticNeuron linear_to_factored(const LinearNeuron& neuron) {
    const std::vector<double> z(neuron.dim(), 0.0);
    return {neuron.w(), z, z, neuron.b(), 1.0, 0.0};
}

} // namespace qneuron

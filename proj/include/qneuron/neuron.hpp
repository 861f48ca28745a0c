#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qneuron {

/// Logistic excitation 1 / (1 + exp(-beta * t)).
class Sigmoid {
  public:
    explicit Sigmoid(double beta = 1.0);

    double beta() const noexcept { return beta_; }

  private:
    double beta_;
};

double sigmoid(double t, const Sigmoid& act = Sigmoid{});

/// beta * s * (1 - s) with s = sigmoid(t).
double sigmoid_derivative(double t, const Sigmoid& act = Sigmoid{});

/// Binary decision for a neuron output. Exactly `threshold` maps to 0.
int classify(double output, double threshold = 0.5);

/// First-order unit: w . x + b.
class LinearNeuron {
  public:
    LinearNeuron(std::vector<double> w, double b);
    static LinearNeuron zeros(std::size_t n);

    std::size_t dim() const noexcept { return w_.size(); }
    const std::vector<double>& w() const noexcept { return w_; }
    double b() const noexcept { return b_; }

    static std::size_t parameter_count(std::size_t n) { return n + 1; }
    std::vector<double> parameters() const;
    std::vector<std::string> parameter_names() const;
    static LinearNeuron from_parameters(std::size_t n, std::span<const double> p);

    friend bool operator==(const LinearNeuron&, const LinearNeuron&) = default;

  private:
    std::vector<double> w_;
    double b_;
};

/// Second-order unit in factored form:
///   (w_r . x + b1) * (w_g . x + b2) + w_b . x^2 + c
///
/// Flat parameter layout: w_r[0..n), w_g[0..n), w_b[0..n), b1, b2, c.
class FactoredQuadraticNeuron {
  public:
    FactoredQuadraticNeuron(std::vector<double> w_r, std::vector<double> w_g,
                            std::vector<double> w_b, double b1, double b2, double c);
    static FactoredQuadraticNeuron zeros(std::size_t n);

    std::size_t dim() const noexcept { return w_r_.size(); }
    const std::vector<double>& w_r() const noexcept { return w_r_; }
    const std::vector<double>& w_g() const noexcept { return w_g_; }
    const std::vector<double>& w_b() const noexcept { return w_b_; }
    double b1() const noexcept { return b1_; }
    double b2() const noexcept { return b2_; }
    double c() const noexcept { return c_; }

    static std::size_t parameter_count(std::size_t n) { return 3 * n + 3; }
    std::vector<double> parameters() const;
    std::vector<std::string> parameter_names() const;
    static FactoredQuadraticNeuron from_parameters(std::size_t n, std::span<const double> p);

    friend bool operator==(const FactoredQuadraticNeuron&,
                           const FactoredQuadraticNeuron&) = default;

  private:
    std::vector<double> w_r_, w_g_, w_b_;
    double b1_, b2_, c_;
};

/// Full quadratic polynomial: sum_{i<=j} a_ij x_i x_j + b . x + c.
///
/// The coefficient matrix is stored as its upper triangle (diagonal included),
/// row-major: a_11, a_12, ..., a_1n, a_22, ..., a_nn. An off-diagonal entry
/// holds the coefficient of the monomial x_i x_j, i.e. the sum a_ij + a_ji of a
/// symmetric double-sum formulation.
///
/// Flat parameter layout: triangle, b[0..n), c.
class GeneralQuadraticNeuron {
  public:
    GeneralQuadraticNeuron(std::size_t n, std::vector<double> triangle,
                           std::vector<double> b, double c);
    static GeneralQuadraticNeuron zeros(std::size_t n);

    std::size_t dim() const noexcept { return b_.size(); }
    const std::vector<double>& triangle() const noexcept { return a_; }
    const std::vector<double>& b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    /// Coefficient of x_i x_j (symmetric in i, j).
    double coefficient(std::size_t i, std::size_t j) const;

    static std::size_t triangle_size(std::size_t n) { return n * (n + 1) / 2; }
    static std::size_t triangle_index(std::size_t n, std::size_t i, std::size_t j);
    static std::size_t parameter_count(std::size_t n) { return triangle_size(n) + n + 1; }
    std::vector<double> parameters() const;
    std::vector<std::string> parameter_names() const;
    static GeneralQuadraticNeuron from_parameters(std::size_t n, std::span<const double> p);

    friend bool operator==(const GeneralQuadraticNeuron&,
                           const GeneralQuadraticNeuron&) = default;

  private:
    std::vector<double> a_;
    std::vector<double> b_;
    double c_;
};

using Neuron = std::variant<LinearNeuron, FactoredQuadraticNeuron, GeneralQuadraticNeuron>;

enum class NeuronKind { Linear, Factored, General };

NeuronKind kind_of(const Neuron& neuron);
std::string_view kind_name(NeuronKind kind);
std::optional<NeuronKind> parse_kind(std::string_view name);
Neuron zero_neuron(NeuronKind kind, std::size_t n);

double preactivation(const LinearNeuron& neuron, std::span<const double> x);
double preactivation(const FactoredQuadraticNeuron& neuron, std::span<const double> x);
double preactivation(const GeneralQuadraticNeuron& neuron, std::span<const double> x);
double preactivation(const Neuron& neuron, std::span<const double> x);

inline double linear_preactivation(const LinearNeuron& n, std::span<const double> x) {
    return preactivation(n, x);
}
inline double factored_preactivation(const FactoredQuadraticNeuron& n,
                                     std::span<const double> x) {
    return preactivation(n, x);
}
inline double general_preactivation(const GeneralQuadraticNeuron& n,
                                    std::span<const double> x) {
    return preactivation(n, x);
}

template <typename N>
double forward(const N& neuron, std::span<const double> x, const Sigmoid& act = Sigmoid{}) {
    return sigmoid(preactivation(neuron, x), act);
}

std::size_t dim(const Neuron& neuron);
std::string kind_name(const Neuron& neuron);

/// Exact expansion of the factored product into monomial coefficients.
GeneralQuadraticNeuron factored_to_general(const FactoredQuadraticNeuron& neuron);

/// Embeds w . x + b as (w . x + b) * (0 . x + 1).
FactoredQuadraticNeuron linear_to_factored(const LinearNeuron& neuron);

/// Throws std::invalid_argument naming expected and given dimensions.
void check_dimension(std::size_t expected, std::size_t given);

} // namespace qneuron

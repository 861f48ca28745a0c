#include "qneuron/generators.hpp"

#include "qneuron/splitmix64.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qneuron {

namespace {
constexpr int kCorners[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
}

int gate_output(GateKind gate, int a, int b) {
    switch (gate) {
    case GateKind::Xor: return a ^ b;
    case GateKind::Nand: return (a & b) ^ 1;
    case GateKind::Nor: return (a | b) ^ 1;
    case GateKind::Or: return a | b;
    case GateKind::And: return a & b;
    }
    throw std::invalid_argument("unknown gate");
}

std::string_view gate_name(GateKind gate) {
    switch (gate) {
    case GateKind::Xor: return "xor";
    case GateKind::Nand: return "nand";
    case GateKind::Nor: return "nor";
    case GateKind::Or: return "or";
    case GateKind::And: return "and";
    }
    return "?";
}

std::optional<GateKind> parse_gate(std::string_view name) {
    for (auto g : {GateKind::Xor, GateKind::Nand, GateKind::Nor, GateKind::Or, GateKind::And}) {
        if (gate_name(g) == name) {
            return g;
        }
    }
    return std::nullopt;
}

Dataset gate_truth_table(GateKind gate) {
    std::vector<Sample> samples;
    for (const auto& corner : kCorners) {
        samples.push_back({{double(corner[0]), double(corner[1])},
                           double(gate_output(gate, corner[0], corner[1]))});
    }
    return Dataset(std::move(samples));
}

Dataset fuzzy_gate_cloud(const CloudSpec& spec) {
    if (spec.points_per_corner == 0) {
        throw std::invalid_argument("cloud: points_per_corner must be >= 1");
    }
    if (!(spec.jitter >= 0.0 && spec.jitter < 0.5)) {
        throw std::invalid_argument("cloud: jitter must lie in [0, 0.5)");
    }
    SplitMix64 rng(spec.seed);
    std::vector<Sample> samples;
    samples.reserve(4 * spec.points_per_corner);
    for (const auto& corner : kCorners) {
        const double label = gate_output(spec.gate, corner[0], corner[1]);
        for (std::size_t k = 0; k < spec.points_per_corner; ++k) {
            const double u1 = rng.uniform(-spec.jitter, spec.jitter);
            const double u2 = rng.uniform(-spec.jitter, spec.jitter);
            samples.push_back({{corner[0] + u1, corner[1] + u2}, label});
        }
    }
    return Dataset(std::move(samples));
}

Dataset concentric_rings(const RingSpec& spec) {
    if (spec.n_inner == 0 || spec.n_outer == 0) {
        throw std::invalid_argument("rings: point counts must be >= 1");
    }
    if (!(spec.r_inner > 0.0 && spec.r_inner < spec.r_outer)) {
        throw std::invalid_argument("rings: need 0 < r_inner < r_outer");
    }
    if (!(spec.radial_noise >= 0.0) ||
        !(spec.r_inner + spec.radial_noise < spec.r_outer - spec.radial_noise)) {
        throw std::invalid_argument("rings: radial noise would make the rings overlap");
    }
    SplitMix64 rng(spec.seed);
    std::vector<Sample> samples;
    samples.reserve(spec.n_inner + spec.n_outer);
    auto emit = [&](std::size_t count, double radius, double label) {
        for (std::size_t k = 0; k < count; ++k) {
            const double r = radius + rng.uniform(-spec.radial_noise, spec.radial_noise);
            const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
            samples.push_back({{r * std::cos(theta), r * std::sin(theta)}, label});
        }
    };
    emit(spec.n_inner, spec.r_inner, 1.0);
    emit(spec.n_outer, spec.r_outer, 0.0);
    return Dataset(std::move(samples));
}

} // namespace qneuron

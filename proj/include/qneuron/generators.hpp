#pragma once

#include "qneuron/dataset.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qneuron {

enum class GateKind { Xor, Nand, Nor, Or, And };

int gate_output(GateKind gate, int a, int b);
std::string_view gate_name(GateKind gate);
std::optional<GateKind> parse_gate(std::string_view name);

/// The four corners [0,0], [0,1], [1,0], [1,1] with Boolean labels.
Dataset gate_truth_table(GateKind gate);

/// Uniformly jittered copies of each unit-square corner.
struct CloudSpec {
    GateKind gate = GateKind::Xor;
    std::size_t points_per_corner = 25;
    double jitter = 0.2; // half-width; must stay below 0.5 so corners never mix
    std::uint64_t seed = 1;
};

/// Corners in truth-table order; per point the generator draws the x1 offset
/// then the x2 offset.
Dataset fuzzy_gate_cloud(const CloudSpec& spec);

/// Two concentric rings around the origin. Inner ring is class 1.
struct RingSpec {
    std::size_t n_inner = 100;
    std::size_t n_outer = 100;
    double r_inner = 0.5;
    double r_outer = 1.0;
    double radial_noise = 0.05;
    std::uint64_t seed = 7;
};

/// Inner points first. Per point the generator draws the radial offset then
/// the angle, from a single stream shared by both rings.
Dataset concentric_rings(const RingSpec& spec);

} // namespace qneuron

#pragma once

#include "qneuron/dataset.hpp"
#include "qneuron/neuron.hpp"
#include "qneuron/raster.hpp"
#include "qneuron/trainer.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qneuron {

/// Fraction of samples whose thresholded output matches the label (labels are
/// thresholded at 0.5 first).
double evaluate_accuracy(const Neuron& neuron, const Sigmoid& act, const Dataset& data,
                         double threshold = 0.5);

/// A reproducible run: published initialization, dataset recipe, training
/// config and rendering frame.
struct ExperimentSpec {
    std::string name;
    std::string figure;                            // figure the run mirrors
    std::optional<std::size_t> published_iterations; // reported count, not enforced
    Neuron initial;
    Dataset data;
    TrainingConfig config;
    Bounds bounds;
    std::size_t resolution = 200;
};

const std::vector<std::string>& experiment_names();

/// Throws std::invalid_argument for an unknown name.
ExperimentSpec experiment_spec(std::string_view name);

struct CornerOutput {
    double x1 = 0.0;
    double x2 = 0.0;
    double output = 0.0;
};

struct ExperimentSummary {
    std::string name;
    TrainReport report;
    double accuracy = 0.0;
    std::vector<CornerOutput> corners; // unit-square corners, gate experiments only
    std::vector<std::pair<int, double>> class_accuracy;
    bool passed = false;
};

/// Trains and evaluates without touching the filesystem.
ExperimentSummary evaluate_experiment(const ExperimentSpec& spec);

/// evaluate_experiment plus artifacts in out_dir:
///   <name>.data.csv, <name>.model, <name>.raster.csv, <name>.raster.pgm, <name>.summary.txt
ExperimentSummary run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir);

std::string format_summary(const ExperimentSpec& spec, const ExperimentSummary& summary);

} // namespace qneuron

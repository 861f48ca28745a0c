#include "qneuron/experiments.hpp"

#include "qneuron/generators.hpp"
#include "qneuron/model_io.hpp"
#include "qneuron/text.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qneuron {

double evaluate_accuracy(const Neuron& neuron, const Sigmoid& act, const Dataset& data,
                         double threshold) {
    check_dimension(dim(neuron), data.dim());
    std::size_t correct = 0;
    for (const auto& s : data) {
        if (classify(forward(neuron, s.x, act), threshold) == classify(s.y, 0.5)) {
            ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {"xor",  "xor-like", "nand",
                                                   "nor",  "rings",    "or-general"};
    return names;
}

namespace {

constexpr Bounds kGateBounds{-0.5, 1.5, -0.5, 1.5};
constexpr Bounds kRingBounds{-1.25, 1.25, -1.25, 1.25};

// The batch gradient is a sum over samples, so the step is scaled by 4/m: the
// four-row gate tables train at 0.5 and larger sets keep the same per-sample step.
TrainingConfig experiment_config(const Dataset& data) {
    TrainingConfig config;
    config.eta = 2.0 / static_cast<double>(data.size());
    config.max_iters = 10000;
    config.loss_tol = 1e-3;
    config.mode = UpdateMode::Batch;
    return config;
}

bool is_gate_experiment(const ExperimentSpec& spec) { return spec.name != "rings"; }

ExperimentSpec make_spec(std::string_view name) {
    const TrainingConfig config;
    if (name == "xor") {
        return {"xor", "Fig. 4", 180,
                FactoredQuadraticNeuron({-0.4, -0.4}, {0.2, 1.0}, {0.0, 0.0}, -0.9095, -0.6426, 0.0),
                gate_truth_table(GateKind::Xor), config, kGateBounds};
    }
    if (name == "xor-like") {
        return {"xor-like", "Fig. 5", 100,
                FactoredQuadraticNeuron({0.07994, -0.2119}, {0.06049, -0.144}, {0.0, 0.0}, -0.9095,
                                        -0.6426, 0.0),
                fuzzy_gate_cloud(CloudSpec{GateKind::Xor, 25, 0.2, 1}), config, kGateBounds};
    }
    if (name == "nand") {
        return {"nand", "Fig. 6", 300,
                FactoredQuadraticNeuron({0.4, -0.1}, {0.3, 0.1}, {0.0, 0.0}, 0.0, 0.0, 1.3),
                gate_truth_table(GateKind::Nand), config, kGateBounds};
    }
    if (name == "nor") {
        return {"nor", "Fig. 7", 100,
                FactoredQuadraticNeuron({-1.0, 1.0}, {1.0, -2.0}, {0.0, 0.0}, -0.5, 1.0, 0.0),
                gate_truth_table(GateKind::Nor), config, kGateBounds};
    }
    if (name == "rings") {
        return {"rings", "Fig. 8 (rings)", std::nullopt,
                FactoredQuadraticNeuron({0.04, 0.01}, {0.03, -0.01}, {0.0, 0.4}, 0.1, 0.2, 1.3),
                concentric_rings(RingSpec{}), config, kRingBounds};
    }
    if (name == "or-general") {
        // Triangle order a11, a12, a22; a12 holds the whole x1*x2 coefficient.
        return {"or-general", "Fig. 8 (OR-like)", std::nullopt,
                GeneralQuadraticNeuron(2, {0.1, 0.1, 0.1}, {1.0, 1.0}, 0.1),
                gate_truth_table(GateKind::Or), config, kGateBounds};
    }
    throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

} // namespace

ExperimentSpec experiment_spec(std::string_view name) {
    ExperimentSpec spec = make_spec(name);
    spec.config = experiment_config(spec.data);
    return spec;
}

ExperimentSummary evaluate_experiment(const ExperimentSpec& spec) {
    ExperimentSummary summary{.name = spec.name,
                              .report = train(spec.initial, spec.data, spec.config)};

    const Neuron& trained = summary.report.final_neuron;
    const Sigmoid act(spec.config.beta);
    summary.accuracy = evaluate_accuracy(trained, act, spec.data);

    if (is_gate_experiment(spec)) {
        for (const auto& s : gate_truth_table(GateKind::Xor)) {
            summary.corners.push_back({s.x[0], s.x[1], forward(trained, s.x, act)});
        }
    }
    std::map<int, std::pair<std::size_t, std::size_t>> per_class; // correct, total
    for (const auto& s : spec.data) {
        const int label = classify(s.y);
        auto& [correct, total] = per_class[label];
        ++total;
        if (classify(forward(trained, s.x, act)) == label) {
            ++correct;
        }
    }
    for (const auto& [label, counts] : per_class) {
        summary.class_accuracy.emplace_back(
            label, static_cast<double>(counts.first) / static_cast<double>(counts.second));
    }
    summary.passed = summary.accuracy == 1.0;
    return summary;
}

std::string format_summary(const ExperimentSpec& spec, const ExperimentSummary& summary) {
    std::ostringstream out;
    const auto& cfg = spec.config;
    out << "experiment=" << spec.name << '\n';
    out << "figure=" << spec.figure << '\n';
    out << "published_iterations="
        << (spec.published_iterations ? std::to_string(*spec.published_iterations) : "n/a")
        << '\n';
    out << "neuron=" << kind_name(spec.initial) << '\n';
    out << "samples=" << spec.data.size() << '\n';
    out << "eta=" << text::format_double(cfg.eta) << '\n';
    out << "mode=" << (cfg.mode == UpdateMode::Batch ? "batch" : "sample") << '\n';
    out << "max_iters=" << cfg.max_iters << '\n';
    out << "loss_tol=" << text::format_double(cfg.loss_tol) << '\n';
    out << "beta=" << text::format_double(cfg.beta) << '\n';
    out << "iterations=" << summary.report.iterations_run << '\n';
    out << "initial_loss=" << text::format_double(summary.report.initial_loss) << '\n';
    out << "final_loss=" << text::format_double(summary.report.final_loss) << '\n';
    for (const auto& c : summary.corners) {
        out << "output[" << c.x1 << ',' << c.x2 << "]=" << text::format_double(c.output) << '\n';
    }
    for (const auto& [label, acc] : summary.class_accuracy) {
        out << "class_accuracy[" << label << "]=" << text::format_double(acc) << '\n';
    }
    out << "accuracy=" << text::format_double(summary.accuracy) << '\n';
    out << "passed=" << (summary.passed ? "true" : "false") << '\n';
    return out.str();
}

ExperimentSummary run_experiment(const ExperimentSpec& spec,
                                 const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    auto summary = evaluate_experiment(spec);
    const Sigmoid act(spec.config.beta);
    const auto base = out_dir / spec.name;
    auto with_suffix = [&](const char* suffix) {
        return std::filesystem::path(base.string() + suffix);
    };

    save_csv(spec.data, with_suffix(".data.csv"));
    save_model(summary.report.final_neuron, act, with_suffix(".model"));
    const auto raster = grid_raster(summary.report.final_neuron, act, spec.bounds, spec.resolution);
    export_raster_csv(raster, with_suffix(".raster.csv"));
    export_raster_pgm(raster, with_suffix(".raster.pgm"));

    std::ofstream out(with_suffix(".summary.txt"), std::ios::binary);
    out << format_summary(spec, summary);
    if (!out) {
        throw std::runtime_error("failed writing " + with_suffix(".summary.txt").string());
    }
    return summary;
}

} // namespace qneuron

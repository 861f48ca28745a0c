// qneuron: train, evaluate, rasterize and gradient-check quadratic neurons.
//
// Exit codes: 0 success, 1 acceptance predicate failed, 2 usage or I/O error.

#include "qneuron/dataset.hpp"
#include "qneuron/experiments.hpp"
#include "qneuron/model_io.hpp"
#include "qneuron/raster.hpp"
#include "qneuron/text.hpp"
#include "qneuron/trainer.hpp"
#include "qneuron/verification.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace qneuron;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

UpdateMode parse_mode(const std::string& mode) {
    if (mode == "batch") {
        return UpdateMode::Batch;
    }
    if (mode == "sample") {
        return UpdateMode::PerSample;
    }
    throw UsageError("--mode must be batch or sample");
}

NeuronKind require_kind(const std::string& name) {
    const auto kind = parse_kind(name);
    if (!kind) {
        throw UsageError("--neuron must be linear, factored or general");
    }
    return *kind;
}

Bounds parse_bounds(const std::string& spec) {
    const auto fields = text::split(spec);
    if (fields.size() != 4) {
        throw UsageError("--bounds expects xmin,xmax,ymin,ymax");
    }
    double v[4];
    for (std::size_t i = 0; i < 4; ++i) {
        const auto parsed = text::parse_double(fields[i]);
        if (!parsed) {
            throw UsageError("--bounds: '" + std::string(fields[i]) + "' is not a number");
        }
        v[i] = *parsed;
    }
    return {v[0], v[1], v[2], v[3]};
}

struct TrainArgs {
    std::string data;
    std::string neuron = "factored";
    std::string init = "zeros";
    double eta = 0.5;
    std::size_t iters = 10000;
    double tol = 0.0;
    std::string mode = "batch";
    std::optional<double> beta;
    std::string out;
};

int run_train(const TrainArgs& args, bool neuron_given) {
    const Dataset data = load_csv(args.data);
    Neuron initial = zero_neuron(require_kind(args.neuron), data.dim());
    double beta = 1.0;
    if (args.init != "zeros") {
        const Model model = load_model(args.init);
        if (neuron_given && kind_of(model.neuron) != require_kind(args.neuron)) {
            throw UsageError("--init model is kind " + kind_name(model.neuron) +
                             " but --neuron is " + args.neuron);
        }
        initial = model.neuron;
        beta = model.activation.beta();
    }
    TrainingConfig config;
    config.eta = args.eta;
    config.max_iters = args.iters;
    config.loss_tol = args.tol;
    config.mode = parse_mode(args.mode);
    config.beta = args.beta.value_or(beta);

    const auto report = train(initial, data, config);
    const Sigmoid act(config.beta);
    save_model(report.final_neuron, act, args.out);
    std::cout << "iterations=" << report.iterations_run << '\n'
              << "initial_loss=" << text::format_double(report.initial_loss) << '\n'
              << "final_loss=" << text::format_double(report.final_loss) << '\n'
              << "accuracy=" << text::format_double(evaluate_accuracy(report.final_neuron, act, data))
              << '\n'
              << "model=" << args.out << '\n';
    return kExitOk;
}

int run_eval(const std::string& model_path, const std::string& data_path, double threshold) {
    const Model model = load_model(model_path);
    const Dataset data = load_csv(data_path);
    std::cout << "samples=" << data.size() << '\n'
              << "loss=" << text::format_double(dataset_loss(model.neuron, data, model.activation))
              << '\n'
              << "accuracy="
              << text::format_double(evaluate_accuracy(model.neuron, model.activation, data, threshold))
              << '\n';
    return kExitOk;
}

int run_grid(const std::string& model_path, const std::string& bounds, std::size_t res,
             const std::string& format, const std::string& out) {
    const Model model = load_model(model_path);
    const auto raster = grid_raster(model.neuron, model.activation, parse_bounds(bounds), res);
    if (format == "csv") {
        export_raster_csv(raster, out);
    } else if (format == "pgm") {
        export_raster_pgm(raster, out);
    } else {
        throw UsageError("--format must be csv or pgm");
    }
    return kExitOk;
}

int run_gradcheck(const std::string& neuron, std::size_t n, std::uint64_t seed,
                  std::size_t trials) {
    const std::size_t dims[] = {n};
    const auto result = gradient_sweep(require_kind(neuron), dims, trials, seed);
    std::cout << "neuron=" << neuron << " n=" << n << " seed=" << seed << '\n'
              << "trials=" << result.trials << " failures=" << result.failures << '\n'
              << "max_tolerance_ratio=" << text::format_double(result.max_tolerance_ratio) << " ("
              << result.worst << ")\n";
    return result.failures == 0 ? kExitOk : kExitFailed;
}

struct ExperimentArgs {
    std::string name;
    std::string outdir = "experiments_out";
    std::optional<double> eta;
    std::optional<std::size_t> iters;
    std::optional<double> tol;
    std::optional<std::string> mode;
    std::optional<std::size_t> res;
};

int run_experiment_command(const ExperimentArgs& args) {
    std::vector<std::string> names;
    if (args.name == "all") {
        names = experiment_names();
    } else {
        names = {args.name};
    }
    bool all_passed = true;
    for (const auto& name : names) {
        ExperimentSpec spec = [&] {
            try {
                return experiment_spec(name);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        if (args.eta) spec.config.eta = *args.eta;
        if (args.iters) spec.config.max_iters = *args.iters;
        if (args.tol) spec.config.loss_tol = *args.tol;
        if (args.mode) spec.config.mode = parse_mode(*args.mode);
        if (args.res) spec.resolution = *args.res;

        const auto summary = run_experiment(spec, args.outdir);
        std::cout << format_summary(spec, summary) << '\n';
        all_passed = all_passed && summary.passed;
    }
    return all_passed ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-order neuron toolkit"};
    app.require_subcommand(1);

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand("train", "Train a neuron on a CSV dataset");
    train_cmd->add_option("--data", train_args.data, "Dataset CSV")->required();
    auto* neuron_opt = train_cmd->add_option("--neuron", train_args.neuron,
                                             "linear | factored | general");
    train_cmd->add_option("--init", train_args.init, "Model file or 'zeros'");
    train_cmd->add_option("--eta", train_args.eta, "Learning rate");
    train_cmd->add_option("--iters", train_args.iters, "Iteration budget");
    train_cmd->add_option("--tol", train_args.tol, "Stop once loss < tol");
    train_cmd->add_option("--mode", train_args.mode, "batch | sample");
    train_cmd->add_option("--beta", train_args.beta, "Sigmoid slope");
    train_cmd->add_option("--out", train_args.out, "Output model file")->required();

    std::string eval_model, eval_data;
    double eval_threshold = 0.5;
    auto* eval_cmd = app.add_subcommand("eval", "Loss and accuracy of a model on a dataset");
    eval_cmd->add_option("--model", eval_model)->required();
    eval_cmd->add_option("--data", eval_data)->required();
    eval_cmd->add_option("--threshold", eval_threshold);

    std::string grid_model, grid_bounds = "-0.5,1.5,-0.5,1.5", grid_format = "csv", grid_out;
    std::size_t grid_res = 200;
    auto* grid_cmd = app.add_subcommand("grid", "Rasterize a 2-input model's output");
    grid_cmd->add_option("--model", grid_model)->required();
    grid_cmd->add_option("--bounds", grid_bounds, "xmin,xmax,ymin,ymax");
    grid_cmd->add_option("--res", grid_res, "Cells per axis");
    grid_cmd->add_option("--format", grid_format, "csv | pgm");
    grid_cmd->add_option("--out", grid_out)->required();

    std::string gc_neuron = "factored";
    std::size_t gc_n = 2, gc_trials = 100;
    std::uint64_t gc_seed = 1;
    auto* gc_cmd = app.add_subcommand("gradcheck", "Analytic vs finite-difference gradients");
    gc_cmd->add_option("--neuron", gc_neuron, "linear | factored | general");
    gc_cmd->add_option("--n", gc_n, "Input dimension")->check(CLI::PositiveNumber);
    gc_cmd->add_option("--seed", gc_seed);
    gc_cmd->add_option("--trials", gc_trials);

    ExperimentArgs exp_args;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a published experiment (or 'all')");
    exp_cmd->add_option("name", exp_args.name, "xor | xor-like | nand | nor | rings | or-general | all")
        ->required();
    exp_cmd->add_option("--outdir", exp_args.outdir);
    exp_cmd->add_option("--eta", exp_args.eta);
    exp_cmd->add_option("--iters", exp_args.iters);
    exp_cmd->add_option("--tol", exp_args.tol);
    exp_cmd->add_option("--mode", exp_args.mode);
    exp_cmd->add_option("--res", exp_args.res);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*train_cmd) {
            return run_train(train_args, neuron_opt->count() > 0);
        }
        if (*eval_cmd) {
            return run_eval(eval_model, eval_data, eval_threshold);
        }
        if (*grid_cmd) {
            return run_grid(grid_model, grid_bounds, grid_res, grid_format, grid_out);
        }
        if (*gc_cmd) {
            return run_gradcheck(gc_neuron, gc_n, gc_seed, gc_trials);
        }
        if (*exp_cmd) {
            return run_experiment_command(exp_args);
        }
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

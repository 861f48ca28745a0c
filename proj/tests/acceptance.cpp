// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "qneuron/experiments.hpp"
#include "qneuron/model_io.hpp"
#include "qneuron/raster.hpp"
#include "qneuron/text.hpp"
#include "qneuron/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

using namespace qneuron;
namespace fs = std::filesystem;

namespace {

// Tolerances and limits.
constexpr double kGradH = 1e-6;
constexpr double kGradRel = 1e-6;
constexpr double kGradAbs = 1e-9;
constexpr int kGradDraws = 200;
constexpr double kNegativeRel = 1e-3;
constexpr double kNegativeRejectRate = 0.95;
constexpr int kNegativeDraws = 1000;
constexpr double kContainmentAbs = 1e-10;
constexpr int kContainmentPoints = 1000;
constexpr double kFastSeconds = 1.0;
constexpr double kRingsSeconds = 2.0;

struct Outcome {
    bool passed = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.passed) {
        ++failures;
    }
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", out.passed ? "PASS" : "FAIL", id,
                title.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

std::vector<double> random_point(SplitMix64& rng, std::size_t n) {
    std::vector<double> x(n);
    for (auto& v : x) {
        v = rng.uniform(-2.0, 2.0);
    }
    return x;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Trains a named experiment and checks accuracy plus a time budget.
Outcome trained_experiment(const std::string& name, double budget) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto summary = evaluate_experiment(experiment_spec(name));
    const double secs = seconds_since(t0);
    return {summary.passed && secs < budget,
            fmt("%s accuracy=%.4f iterations=%zu final_loss=%.3g time=%.3fs", name.c_str(),
                summary.accuracy, summary.report.iterations_run, summary.report.final_loss, secs)};
}

Gradient printed_wb_gradient(const FactoredQuadraticNeuron& n, const Sample& s, const Sigmoid& act) {
    auto g = grad_factored(n, s, act);
    const double f = preactivation(n, s.x);
    const double ed = (sigmoid(f, act) - s.y) * sigmoid_derivative(f, act);
    const std::size_t dim = n.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        g.values[2 * dim + i] = 2.0 * ed * n.w_b()[i] * s.x[i];
    }
    return g;
}

Outcome gradient_oracle() {
    const std::size_t dims[] = {1, 2, 3, 5};
    const GradCheckTolerance tol{kGradH, kGradRel, kGradAbs};
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    for (auto kind : {NeuronKind::Factored, NeuronKind::General, NeuronKind::Linear}) {
        const auto r = gradient_sweep(kind, dims, kGradDraws, 20240601, tol);
        ok = ok && r.failures == 0 && r.trials == static_cast<std::size_t>(kGradDraws);
        detail += fmt("%s %zu/%zu ok (worst ratio %.3g); ", std::string(kind_name(kind)).c_str(),
                      r.trials - r.failures, r.trials, r.max_tolerance_ratio);
    }
    const double secs = seconds_since(t0);
    detail += fmt("time=%.3fs", secs);
    return {ok && secs < kFastSeconds, detail};
}

Outcome negative_control() {
    SplitMix64 rng(42);
    const Sigmoid act;
    const GradCheckTolerance tol{kGradH, kNegativeRel, kGradAbs};
    const std::size_t dims[] = {1, 2, 3, 5};
    int drawn = 0, rejected = 0;
    while (drawn < kNegativeDraws) {
        const std::size_t n = dims[static_cast<std::size_t>(drawn) % 4];
        const auto neuron =
            std::get<FactoredQuadraticNeuron>(random_neuron(NeuronKind::Factored, n, rng));
        const Sample s{random_point(rng, n), rng.next_unit()};
        const bool generic = std::ranges::none_of(neuron.w_b(), [](double w) { return w == 0.0; }) &&
                             std::ranges::none_of(s.x, [](double v) { return v == 0.0; });
        if (!generic) {
            continue;
        }
        ++drawn;
        const auto r = compare_gradients(neuron.parameter_names(), printed_wb_gradient(neuron, s, act),
                                         finite_difference_gradient(neuron, s, act, kGradH), tol);
        if (!r.passed()) {
            ++rejected;
        }
    }
    const double rate = static_cast<double>(rejected) / drawn;
    return {rate >= kNegativeRejectRate,
            fmt("printed w_b partial rejected on %d/%d draws (%.1f%%)", rejected, drawn, 100 * rate)};
}

Outcome xor_gate() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto base = experiment_spec("xor");
    std::string detail;
    for (double eta : {base.config.eta, 0.1, 1.0}) {
        auto spec = base;
        spec.config.eta = eta;
        const auto summary = evaluate_experiment(spec);
        const auto& c = summary.corners;
        const bool ordered = c.size() == 4 && std::min(c[1].output, c[2].output) >
                                                  std::max(c[0].output, c[3].output);
        detail = fmt("eta=%g accuracy=%.2f iterations=%zu outputs=[%.4f %.4f %.4f %.4f]", eta,
                     summary.accuracy, summary.report.iterations_run, c[0].output, c[1].output,
                     c[2].output, c[3].output);
        if (summary.passed && ordered) {
            const double secs = seconds_since(t0);
            return {secs < kFastSeconds, detail + fmt(" time=%.3fs", secs)};
        }
    }
    return {false, detail};
}

Outcome nand_nor() {
    const auto a = trained_experiment("nand", kFastSeconds);
    const auto b = trained_experiment("nor", kFastSeconds);
    return {a.passed && b.passed, a.detail + "; " + b.detail};
}

Outcome containment() {
    SplitMix64 rng(5150);
    const Sigmoid act;
    double worst = 0.0;
    for (std::size_t n : {1, 2, 3, 5}) {
        const auto lin = std::get<LinearNeuron>(random_neuron(NeuronKind::Linear, n, rng));
        const auto fac = std::get<FactoredQuadraticNeuron>(random_neuron(NeuronKind::Factored, n, rng));
        const auto lf = linear_to_factored(lin);
        const auto fg = factored_to_general(fac);
        for (int k = 0; k < kContainmentPoints; ++k) {
            const auto x = random_point(rng, n);
            worst = std::max(worst, std::abs(forward(lin, x, act) - forward(lf, x, act)));
            worst = std::max(worst, std::abs(forward(fac, x, act) - forward(fg, x, act)));
            worst = std::max(worst, std::abs(preactivation(lin, x) - preactivation(lf, x)));
            worst = std::max(worst, std::abs(preactivation(fac, x) - preactivation(fg, x)));
        }
    }
    return {worst <= kContainmentAbs, fmt("max |difference| = %.3g over 4x%d points", worst,
                                          kContainmentPoints)};
}

Outcome determinism_and_formats() {
    const fs::path root = fs::temp_directory_path() / "qneuron_acceptance";
    fs::remove_all(root);
    std::string problems;
    std::size_t compared = 0;

    for (const auto& name : experiment_names()) {
        auto spec = experiment_spec(name);
        spec.resolution = 64;
        run_experiment(spec, root / "a");
        run_experiment(spec, root / "b");
        for (const char* suffix : {".model", ".raster.csv", ".raster.pgm", ".data.csv", ".summary.txt"}) {
            const auto file = name + suffix;
            ++compared;
            if (slurp(root / "a" / file) != slurp(root / "b" / file)) {
                problems += file + " differs; ";
            }
        }

        // CSV and PGM describe the same cells.
        std::ifstream csv(root / "a" / (name + ".raster.csv"));
        std::ifstream pgm(root / "a" / (name + ".raster.pgm"));
        std::string magic;
        std::size_t w = 0, h = 0;
        int maxval = 0;
        pgm >> magic >> w >> h >> maxval;
        if (magic != "P2" || w != spec.resolution || h != spec.resolution || maxval != 255) {
            problems += name + " PGM header; ";
            continue;
        }
        std::vector<int> pixels(w * h);
        for (auto& p : pixels) {
            pgm >> p;
        }
        std::string line;
        for (std::size_t row = 0; row < h && std::getline(csv, line); ++row) {
            const auto fields = text::split(line, ',');
            if (fields.size() != w) {
                problems += name + " CSV width; ";
                break;
            }
            for (std::size_t col = 0; col < w; ++col) {
                const double v = *text::parse_double(fields[col]);
                if (pgm_pixel(v) != pixels[(h - 1 - row) * w + col]) {
                    problems += fmt("%s cell (%zu,%zu) mismatch; ", name.c_str(), row, col);
                }
            }
        }

        // Saved artifacts reload exactly.
        if (load_model(root / "a" / (name + ".model")).neuron != evaluate_experiment(spec).report.final_neuron) {
            problems += name + " model round trip; ";
        }
        if (!(load_csv(root / "a" / (name + ".data.csv")) == spec.data)) {
            problems += name + " dataset round trip; ";
        }
    }

    // Random models round-trip through text.
    SplitMix64 rng(31337);
    for (int t = 0; t < 300; ++t) {
        const auto kind = static_cast<NeuronKind>(t % 3);
        const Neuron n = random_neuron(kind, 1 + static_cast<std::size_t>(t % 5), rng, -1e6, 1e6);
        std::stringstream buf;
        write_model(n, Sigmoid{}, buf);
        if (read_model(buf).neuron != n) {
            problems += "random model round trip; ";
            break;
        }
    }
    fs::remove_all(root);
    return {problems.empty(), problems.empty()
                                  ? fmt("%zu artifact pairs byte-identical, rasters agree, round trips exact",
                                        compared)
                                  : problems};
}

} // namespace

int main() {
    report(1, "gradient oracle", gradient_oracle);
    report(2, "printed w_b partial negative control", negative_control);
    report(3, "XOR", xor_gate);
    report(4, "XOR-like cloud", [] { return trained_experiment("xor-like", kFastSeconds); });
    report(5, "NAND and NOR", nand_nor);
    report(6, "concentric rings", [] { return trained_experiment("rings", kRingsSeconds); });
    report(7, "OR with the general neuron", [] { return trained_experiment("or-general", kFastSeconds); });
    report(8, "representation containment", containment);
    report(9, "determinism and formats", determinism_and_formats);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

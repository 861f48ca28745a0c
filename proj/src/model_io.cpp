#include "qneuron/model_io.hpp"

#include "qneuron/text.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qneuron {

namespace {

struct Group {
    std::string key;
    std::vector<double> values;
};

std::vector<Group> groups_of(const Neuron& neuron) {
    struct Visitor {
        std::vector<Group> operator()(const LinearNeuron& n) const {
            return {{"w", n.w()}, {"b", {n.b()}}};
        }
        std::vector<Group> operator()(const FactoredQuadraticNeuron& n) const {
            return {{"w_r", n.w_r()}, {"w_g", n.w_g()}, {"w_b", n.w_b()},
                    {"b1", {n.b1()}}, {"b2", {n.b2()}}, {"c", {n.c()}}};
        }
        std::vector<Group> operator()(const GeneralQuadraticNeuron& n) const {
            return {{"a", n.triangle()}, {"b", n.b()}, {"c", {n.c()}}};
        }
    };
    return std::visit(Visitor{}, neuron);
}

struct Entry {
    std::string value;
    std::size_t line;
};

class ModelParseError : public std::runtime_error {
  public:
    ModelParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "model line " + std::to_string(line) + ": " + what
                                  : "model: " + what) {}
};

std::vector<double> parse_values(const Entry& e) {
    std::vector<double> out;
    for (auto field : text::split(e.value)) {
        const auto v = text::parse_double(field);
        if (!v) {
            throw ModelParseError(e.line, "non-numeric value '" + std::string(field) + "'");
        }
        out.push_back(*v);
    }
    return out;
}

} // namespace

void write_model(const Neuron& neuron, const Sigmoid& act, std::ostream& out) {
    out << "kind=" << kind_name(neuron) << '\n';
    out << "n=" << dim(neuron) << '\n';
    out << "beta=" << text::format_double(act.beta()) << '\n';
    for (const auto& g : groups_of(neuron)) {
        out << g.key << '=' << text::join(g.values) << '\n';
    }
}

void save_model(const Neuron& neuron, const Sigmoid& act, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_model(neuron, act, out);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

Model read_model(std::istream& in) {
    std::map<std::string, Entry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = text::trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ModelParseError(line_no, "expected key=value");
        }
        std::string key(text::trim(body.substr(0, eq)));
        if (entries.count(key)) {
            throw ModelParseError(line_no, "duplicate key '" + key + "'");
        }
        entries.emplace(std::move(key), Entry{std::string(body.substr(eq + 1)), line_no});
    }

    auto require = [&](const std::string& key) -> const Entry& {
        const auto it = entries.find(key);
        if (it == entries.end()) {
            throw ModelParseError(0, "missing '" + key + "'");
        }
        return it->second;
    };

    const Entry& kind = require("kind");
    const std::string kind_tag(text::trim(kind.value));

    const Entry& n_entry = require("n");
    const auto n_value = text::parse_double(n_entry.value);
    if (!n_value || *n_value < 1 || *n_value != static_cast<double>(static_cast<long>(*n_value))) {
        throw ModelParseError(n_entry.line, "n must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(*n_value);

    double beta = 1.0;
    if (auto it = entries.find("beta"); it != entries.end()) {
        const auto v = text::parse_double(it->second.value);
        if (!v || *v <= 0.0) {
            throw ModelParseError(it->second.line, "beta must be a positive number");
        }
        beta = *v;
    }

    std::vector<std::pair<std::string, std::size_t>> layout;
    std::size_t expected_total = 0;
    std::string count_rule;
    if (kind_tag == "linear") {
        layout = {{"w", n}, {"b", 1}};
        expected_total = LinearNeuron::parameter_count(n);
        count_rule = "n+1";
    } else if (kind_tag == "factored") {
        layout = {{"w_r", n}, {"w_g", n}, {"w_b", n}, {"b1", 1}, {"b2", 1}, {"c", 1}};
        expected_total = FactoredQuadraticNeuron::parameter_count(n);
        count_rule = "3n+3";
    } else if (kind_tag == "general") {
        layout = {{"a", GeneralQuadraticNeuron::triangle_size(n)}, {"b", n}, {"c", 1}};
        expected_total = GeneralQuadraticNeuron::parameter_count(n);
        count_rule = "n(n+1)/2+n+1";
    } else {
        throw ModelParseError(kind.line, "unknown kind '" + kind_tag + "'");
    }

    for (const auto& [key, entry] : entries) {
        const bool known = key == "kind" || key == "n" || key == "beta" ||
                           std::any_of(layout.begin(), layout.end(),
                                       [&](const auto& g) { return g.first == key; });
        if (!known) {
            throw ModelParseError(entry.line,
                                  "unexpected key '" + key + "' for kind=" + kind_tag);
        }
    }

    std::vector<double> flat;
    std::size_t found_total = 0;
    std::string missing;
    for (const auto& [key, count] : layout) {
        const auto it = entries.find(key);
        if (it == entries.end()) {
            missing += (missing.empty() ? "" : ", ") + key;
            continue;
        }
        auto values = parse_values(it->second);
        found_total += values.size();
        if (values.size() != count) {
            throw ModelParseError(it->second.line, "'" + key + "' expects " +
                                                       std::to_string(count) + " values, got " +
                                                       std::to_string(values.size()));
        }
        flat.insert(flat.end(), values.begin(), values.end());
    }
    if (!missing.empty()) {
        throw ModelParseError(0, "kind=" + kind_tag + " with n=" + std::to_string(n) +
                                     " needs " + std::to_string(expected_total) + " (" +
                                     count_rule + ") parameters, found " +
                                     std::to_string(found_total) + "; missing " + missing);
    }

    Neuron neuron = [&]() -> Neuron {
        if (kind_tag == "linear") {
            return LinearNeuron::from_parameters(n, flat);
        }
        if (kind_tag == "factored") {
            return FactoredQuadraticNeuron::from_parameters(n, flat);
        }
        return GeneralQuadraticNeuron::from_parameters(n, flat);
    }();
    return {std::move(neuron), Sigmoid(beta)};
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return read_model(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

} // namespace qneuron

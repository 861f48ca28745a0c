#include "qneuron/dataset.hpp"

#include "qneuron/text.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qneuron {

Dataset::Dataset(std::vector<Sample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw std::invalid_argument("dataset must contain at least one sample");
    }
    const std::size_t n = samples_.front().x.size();
    if (n == 0) {
        throw std::invalid_argument("dataset input dimension must be >= 1");
    }
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        const auto& s = samples_[k];
        if (s.x.size() != n) {
            throw std::invalid_argument("sample " + std::to_string(k) + " has dimension " +
                                        std::to_string(s.x.size()) + ", expected " +
                                        std::to_string(n));
        }
        for (double v : s.x) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("sample " + std::to_string(k) +
                                            " has a non-finite input");
            }
        }
        if (!(s.y >= 0.0 && s.y <= 1.0)) {
            throw std::invalid_argument("sample " + std::to_string(k) +
                                        " label outside [0, 1]");
        }
    }
}

void write_csv(const Dataset& data, std::ostream& out) {
    for (const auto& s : data) {
        out << text::join(s.x) << ',' << text::format_double(s.y) << '\n';
    }
}

void save_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_csv(data, out);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

Dataset read_csv(std::istream& in, std::optional<std::size_t> expected_dim) {
    std::vector<Sample> samples;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (text::trim(line).empty()) {
            continue;
        }
        const auto fields = text::split(line);
        if (fields.size() < 2) {
            fail("expected at least one feature and a label");
        }
        const std::size_t n = fields.size() - 1;
        if (!expected_dim) {
            expected_dim = n;
        } else if (n != *expected_dim) {
            fail("expected " + std::to_string(*expected_dim + 1) + " columns, got " +
                 std::to_string(fields.size()));
        }
        Sample s;
        s.x.reserve(n);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto v = text::parse_double(fields[i]);
            if (!v) {
                fail("non-numeric field '" + std::string(fields[i]) + "'");
            }
            if (i < n) {
                s.x.push_back(*v);
            } else {
                s.y = *v;
            }
        }
        if (!(s.y >= 0.0 && s.y <= 1.0)) {
            fail("label outside [0, 1]");
        }
        samples.push_back(std::move(s));
    }
    if (samples.empty()) {
        throw std::runtime_error("csv contains no samples");
    }
    return Dataset(std::move(samples));
}

Dataset load_csv(const std::filesystem::path& path, std::optional<std::size_t> expected_dim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return read_csv(in, expected_dim);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

} // namespace qneuron

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace qneuron {

/// One training pair. y is a fuzzy truth value in [0, 1].
struct Sample {
    std::vector<double> x;
    double y = 0.0;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Non-empty, dimension-consistent sequence of samples.
class Dataset {
  public:
    explicit Dataset(std::vector<Sample> samples);

    std::size_t size() const noexcept { return samples_.size(); }
    std::size_t dim() const noexcept { return samples_.front().x.size(); }
    const std::vector<Sample>& samples() const noexcept { return samples_; }
    const Sample& operator[](std::size_t k) const { return samples_[k]; }

    auto begin() const noexcept { return samples_.begin(); }
    auto end() const noexcept { return samples_.end(); }

    friend bool operator==(const Dataset&, const Dataset&) = default;

  private:
    std::vector<Sample> samples_;
};

/// CSV layout: no header, one sample per line, n feature columns followed by
/// the label, ',' separator, LF endings, 17 significant digits.
void write_csv(const Dataset& data, std::ostream& out);
void save_csv(const Dataset& data, const std::filesystem::path& path);

/// When `expected_dim` is empty the dimension is taken from the first row.
/// Errors carry the 1-based line number.
Dataset read_csv(std::istream& in, std::optional<std::size_t> expected_dim = std::nullopt);
Dataset load_csv(const std::filesystem::path& path,
                 std::optional<std::size_t> expected_dim = std::nullopt);

} // namespace qneuron

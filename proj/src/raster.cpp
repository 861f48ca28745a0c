#include "qneuron/raster.hpp"

#include "qneuron/text.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace qneuron {

double GridRaster::x_center(std::size_t col) const {
    return bounds.x_min + (static_cast<double>(col) + 0.5) * (bounds.x_max - bounds.x_min) /
                              static_cast<double>(resolution);
}

double GridRaster::y_center(std::size_t row) const {
    return bounds.y_min + (static_cast<double>(row) + 0.5) * (bounds.y_max - bounds.y_min) /
                              static_cast<double>(resolution);
}

GridRaster grid_raster(const Neuron& neuron, const Sigmoid& act, const Bounds& bounds,
                       std::size_t resolution) {
    if (!(bounds.x_min < bounds.x_max) || !(bounds.y_min < bounds.y_max)) {
        throw std::invalid_argument("raster bounds must satisfy min < max on both axes");
    }
    if (resolution < 2) {
        throw std::invalid_argument("raster resolution must be >= 2");
    }
    check_dimension(dim(neuron), 2);

    GridRaster raster{bounds, resolution, {}};
    raster.values.resize(resolution * resolution);
    for (std::size_t row = 0; row < resolution; ++row) {
        const double y = raster.y_center(row);
        for (std::size_t col = 0; col < resolution; ++col) {
            const double point[2] = {raster.x_center(col), y};
            raster.values[row * resolution + col] = forward(neuron, point, act);
        }
    }
    return raster;
}

int pgm_pixel(double value) { return static_cast<int>(std::lround(255.0 * value)); }

void write_raster_csv(const GridRaster& raster, std::ostream& out) {
    const std::size_t n = raster.resolution;
    for (std::size_t row = 0; row < n; ++row) {
        out << text::join(std::span(raster.values).subspan(row * n, n)) << '\n';
    }
}

void write_raster_pgm(const GridRaster& raster, std::ostream& out) {
    const std::size_t n = raster.resolution;
    out << "P2\n" << n << ' ' << n << "\n255\n";
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row = n - 1 - r;
        for (std::size_t col = 0; col < n; ++col) {
            if (col > 0) {
                out << ' ';
            }
            out << pgm_pixel(raster.at(row, col));
        }
        out << '\n';
    }
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    writer(out);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

} // namespace

void export_raster_csv(const GridRaster& raster, const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { write_raster_csv(raster, out); });
}

void export_raster_pgm(const GridRaster& raster, const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { write_raster_pgm(raster, out); });
}

} // namespace qneuron

#pragma once

#include "qneuron/neuron.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace qneuron {

struct Bounds {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
};

/// Neuron output sampled at cell centers of a square lattice.
/// values is row-major with row 0 at y_min.
struct GridRaster {
    Bounds bounds;
    std::size_t resolution = 0;
    std::vector<double> values;

    double at(std::size_t row, std::size_t col) const { return values[row * resolution + col]; }
    double x_center(std::size_t col) const;
    double y_center(std::size_t row) const;
};

GridRaster grid_raster(const Neuron& neuron, const Sigmoid& act, const Bounds& bounds,
                       std::size_t resolution);

/// round(255 * v), halves away from zero.
int pgm_pixel(double value);

/// `resolution` lines of comma-separated values, row 0 (y_min) first.
void write_raster_csv(const GridRaster& raster, std::ostream& out);
/// Plain P2, maxval 255, first image row is the highest y.
void write_raster_pgm(const GridRaster& raster, std::ostream& out);

void export_raster_csv(const GridRaster& raster, const std::filesystem::path& path);
void export_raster_pgm(const GridRaster& raster, const std::filesystem::path& path);

} // namespace qneuron

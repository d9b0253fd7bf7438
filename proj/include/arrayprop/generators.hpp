#ifndef ARRAYPROP_GENERATORS_HPP
#define ARRAYPROP_GENERATORS_HPP

#include "arrayprop/model.hpp"

#include <random>

namespace arrayprop {

struct RandomModelOptions {
    std::size_t max_arity = 3;
    std::size_t max_domain = 4;
    std::size_t max_cells = 64;
    std::size_t alphabet = 6;          // distinct cell/result values
    double constant_cell_ratio = 0.5;  // share of cells that are constants
    // Adds a second array constraint over the same array and a disequality
    // between the two results.
    bool extra_constraints = false;
};

/// A random validated linear model around x = a[y1, ..., yn].
Model random_array_model(std::mt19937_64& rng, const RandomModelOptions& opts = {});

/// x in {0..d-1}, y1, y2 in {1..d}, a[i, j] = (i + j) mod d as constants.
/// Every index instantiation is part of a solution.
Model latin_square_model(std::size_t d);

} // namespace arrayprop

#endif

// Minimum-MSE scalar quantizer design on gridded densities.
#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "wienerlab/pdf_grid.hpp"

namespace wienerlab {

/// A stationary scalar quantizer: M representatives, M-1 increasing
/// boundaries at the midpoints of adjacent representatives, each
/// representative the conditional mean of its cell under the design density.
struct Quantizer {
    std::vector<double> boundaries;
    std::vector<double> representatives;
    std::vector<double> cell_probabilities;
    double expected_sq_error = 0.0;
    bool converged = false;
    bool error_monotone = true; ///< expected error never rose across iterations
    int iterations = 0;

    int levels() const { return static_cast<int>(representatives.size()); }

    /// Cell index of x (boundaries partition the line into M half-open cells).
    int index_of(double x) const;

    double quantize(double x) const { return representatives[index_of(x)]; }
};

/// Alternates centroid and midpoint updates until the expected squared error
/// moves by less than `tol`. Degenerate (massless) cells are merged away and
/// the probability mass median of the heaviest cell is re-split instead.
/// Non-convergence within max_iter is reported through
/// Quantizer::converged, not as an error.
Quantizer lloyd_max(const PdfGrid& pdf, int levels, double tol = 1e-12, int max_iter = 500);

/// Density of X - q(X) for X ~ prior: every cell's mass shifted by its
/// representative and re-accumulated on a fresh grid of the same bin count.
PdfGrid induced_error_pdf(const PdfGrid& prior, const Quantizer& quantizer);

/// Rows `step,boundary_list,rep_list,error`; list entries joined with ';'.
void write_quantizers_csv(std::ostream& out, std::span<const Quantizer> quantizers);

} // namespace wienerlab

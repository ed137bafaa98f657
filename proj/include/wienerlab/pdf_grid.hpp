// Densities on uniform grids: the prior-tracking substrate of the greedy
// Lloyd-Max compressor.
#pragma once

#include <functional>
#include <vector>

namespace wienerlab {

/// A probability density sampled at the centers of `bins` equal-width cells
/// covering [lo, hi]. Normalized grids satisfy sum(density) * width = 1.
struct PdfGrid {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> density;

    int bins() const { return static_cast<int>(density.size()); }
    double width() const { return (hi - lo) / static_cast<double>(density.size()); }
    double center(int k) const { return lo + (static_cast<double>(k) + 0.5) * width(); }

    double mass() const;
    double mean() const;
    double variance() const;
    double second_moment() const;

    /// Rescales the density to unit mass. Throws if the mass is not positive.
    void normalize();
};

struct GridOptions {
    int bins = 4096;
    double span_sigmas = 8.0; ///< half-width of the support in standard deviations
};

/// Zero-mean Gaussian density on a grid spanning +-span_sigmas standard
/// deviations, normalized.
PdfGrid make_gaussian_grid(double variance, const GridOptions& options = {});

/// All mass in the single cell containing `at`, on a grid of the given span.
PdfGrid make_point_mass_grid(double at, double half_width, int bins);

/// Density of X + Z where X ~ error_pdf and Z is an independent zero-mean
/// Gaussian with the given variance. The result lives on a fresh grid
/// re-centered on the output mean and spanning +-span_sigmas output standard
/// deviations. If more than 1e-6 of the mass falls outside the grid, the
/// span is widened once and the convolution retried; a second failure is an
/// error.
PdfGrid innovation_prior_update(const PdfGrid& error_pdf, double increment_variance,
                                const GridOptions& options = {});

/// Half the integrated absolute difference against a reference density,
/// evaluated at the grid's cell centers. Test utility.
double tv_distance_to(const PdfGrid& grid, const std::function<double(double)>& reference_pdf);

} // namespace wienerlab

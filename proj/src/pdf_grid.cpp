#include "wienerlab/pdf_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wienerlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double PdfGrid::mass() const {
    double sum = 0.0;
    for (double d : density) sum += d;
    return sum * width();
}

double PdfGrid::mean() const {
    const double w = width();
    double sum = 0.0;
    for (int k = 0; k < bins(); ++k) sum += density[k] * center(k);
    return sum * w;
}

double PdfGrid::second_moment() const {
    const double w = width();
    double sum = 0.0;
    for (int k = 0; k < bins(); ++k) {
        const double x = center(k);
        sum += density[k] * x * x;
    }
    return sum * w;
}

double PdfGrid::variance() const {
    const double m = mean();
    return second_moment() - m * m;
}

void PdfGrid::normalize() {
    const double m = mass();
    if (!(m > 0.0)) throw std::runtime_error("PdfGrid::normalize: non-positive mass");
    const double inv = 1.0 / m;
    for (double& d : density) d *= inv;
}

PdfGrid make_gaussian_grid(double variance, const GridOptions& options) {
    if (!(variance > 0.0)) throw std::invalid_argument("make_gaussian_grid: variance must be > 0");
    if (options.bins < 8) throw std::invalid_argument("make_gaussian_grid: bins must be >= 8");

    const double sigma = std::sqrt(variance);
    PdfGrid grid;
    grid.lo = -options.span_sigmas * sigma;
    grid.hi = options.span_sigmas * sigma;
    grid.density.resize(options.bins);
    const double norm = 1.0 / std::sqrt(kTwoPi * variance);
    for (int k = 0; k < options.bins; ++k) {
        const double x = grid.center(k);
        grid.density[k] = norm * std::exp(-x * x / (2.0 * variance));
    }
    grid.normalize();
    return grid;
}

PdfGrid make_point_mass_grid(double at, double half_width, int bins) {
    if (!(half_width > 0.0))
        throw std::invalid_argument("make_point_mass_grid: half_width must be > 0");
    if (bins < 8) throw std::invalid_argument("make_point_mass_grid: bins must be >= 8");

    PdfGrid grid;
    grid.lo = at - half_width;
    grid.hi = at + half_width;
    grid.density.assign(bins, 0.0);
    const int k = bins / 2; // `at` sits in the middle cell by construction
    grid.density[k] = 1.0 / grid.width();
    return grid;
}

namespace {

// One smoothing pass: deposits each source mass, spread by a Gaussian kernel,
// onto the target grid. The kernel along a uniform grid is evaluated with the
// incremental recurrence
//   g_{j+1} = g_j * r_j,   r_{j+1} = r_j * q,   q = exp(-w^2 / v),
// which avoids one exp per (source, target) pair. Returns the captured mass.
double convolve_onto(const PdfGrid& source, double variance, PdfGrid& target) {
    const double w = target.width();
    const double source_w = source.width();
    const double norm = source_w / std::sqrt(kTwoPi * variance);
    const double q = std::exp(-w * w / variance);
    // Beyond ~8.6 sigma the kernel is below 1e-16 of its peak.
    const double reach = 8.6 * std::sqrt(variance);
    const int reach_cells = static_cast<int>(reach / w) + 1;
    const int target_bins = target.bins();

    for (int k = 0; k < source.bins(); ++k) {
        const double mass_scale = source.density[k] * norm;
        if (mass_scale == 0.0) continue;
        const double c = source.center(k);
        // Target cell nearest the source point, clipped to the grid.
        int j0 = static_cast<int>(std::floor((c - target.lo) / w));
        if (j0 < 0) j0 = 0;
        if (j0 >= target_bins) j0 = target_bins - 1;
        const int j_lo = std::max(0, j0 - reach_cells);
        const int j_hi = std::min(target_bins - 1, j0 + reach_cells);

        const double a0 = target.center(j_lo) - c;
        double g = std::exp(-a0 * a0 / (2.0 * variance));
        double r = std::exp(-(a0 + 0.5 * w) * w / variance);
        for (int j = j_lo; j <= j_hi; ++j) {
            target.density[j] += mass_scale * g;
            g *= r;
            r *= q;
        }
    }

    double captured = 0.0;
    for (double d : target.density) captured += d;
    return captured * w;
}

} // namespace

PdfGrid innovation_prior_update(const PdfGrid& error_pdf, double increment_variance,
                                const GridOptions& options) {
    if (!(increment_variance > 0.0))
        throw std::invalid_argument("innovation_prior_update: variance must be > 0");
    if (error_pdf.bins() < 8)
        throw std::invalid_argument("innovation_prior_update: degenerate input grid");

    const double out_mean = error_pdf.mean();
    const double out_sigma = std::sqrt(error_pdf.variance() + increment_variance);

    double span = options.span_sigmas;
    for (int attempt = 0; attempt < 2; ++attempt) {
        PdfGrid out;
        out.lo = out_mean - span * out_sigma;
        out.hi = out_mean + span * out_sigma;
        out.density.assign(options.bins, 0.0);
        const double captured = convolve_onto(error_pdf, increment_variance, out);
        const double lost = error_pdf.mass() - captured;
        if (lost <= 1e-6) {
            out.normalize();
            return out;
        }
        span *= 1.5;
    }
    throw std::runtime_error("innovation_prior_update: grid overflow after widening");
}

double tv_distance_to(const PdfGrid& grid, const std::function<double(double)>& reference_pdf) {
    const double w = grid.width();
    double total = 0.0;
    for (int k = 0; k < grid.bins(); ++k) {
        total += std::abs(grid.density[k] - reference_pdf(grid.center(k))) * w;
    }
    return 0.5 * total;
}

} // namespace wienerlab

#include "wienerlab/lloyd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wienerlab {

int Quantizer::index_of(double x) const {
    const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
    return static_cast<int>(it - boundaries.begin());
}

namespace {

constexpr double kEmptyCellMass = 1e-13;

struct CellStats {
    std::vector<double> mass;
    std::vector<double> centroid;
    std::vector<int> first_bin; // first bin index belonging to each cell
};

CellStats accumulate_cells(const PdfGrid& pdf, std::span<const double> boundaries) {
    const int levels = static_cast<int>(boundaries.size()) + 1;
    const double w = pdf.width();
    CellStats stats;
    stats.mass.assign(levels, 0.0);
    stats.centroid.assign(levels, 0.0);
    stats.first_bin.assign(levels, pdf.bins());

    int cell = 0;
    stats.first_bin[0] = 0;
    for (int k = 0; k < pdf.bins(); ++k) {
        const double x = pdf.center(k);
        while (cell < levels - 1 && x >= boundaries[cell]) {
            ++cell;
            stats.first_bin[cell] = k;
        }
        const double m = pdf.density[k] * w;
        stats.mass[cell] += m;
        stats.centroid[cell] += m * x;
    }
    for (int j = 0; j < levels; ++j) {
        if (stats.mass[j] > 0.0) stats.centroid[j] /= stats.mass[j];
    }
    return stats;
}

std::vector<double> midpoints(std::span<const double> representatives) {
    std::vector<double> boundaries(representatives.size() - 1);
    for (std::size_t j = 0; j + 1 < representatives.size(); ++j) {
        boundaries[j] = 0.5 * (representatives[j] + representatives[j + 1]);
    }
    return boundaries;
}

// Mass quantile within [first, last) bins: the center of the bin where the
// running mass first reaches `fraction` of the range's total.
double range_quantile(const PdfGrid& pdf, int first, int last, double fraction) {
    const double w = pdf.width();
    double total = 0.0;
    for (int k = first; k < last; ++k) total += pdf.density[k] * w;
    const double target = fraction * total;
    double running = 0.0;
    for (int k = first; k < last; ++k) {
        running += pdf.density[k] * w;
        if (running >= target) return pdf.center(k);
    }
    return pdf.center(last - 1);
}

// Drops the representative of a massless cell and re-splits the cell holding
// the bulk of the probability (the one containing the global mass median)
// into two representatives around its median.
bool repair_empty_cells(const PdfGrid& pdf, std::vector<double>& representatives) {
    auto boundaries = midpoints(representatives);
    const auto stats = accumulate_cells(pdf, boundaries);
    const int levels = static_cast<int>(representatives.size());

    int empty = -1;
    for (int j = 0; j < levels; ++j) {
        if (stats.mass[j] < kEmptyCellMass) {
            empty = j;
            break;
        }
    }
    if (empty < 0) return false;

    // Locate the cell containing the overall median.
    const double half = 0.5 * pdf.mass();
    double running = 0.0;
    int median_cell = levels - 1;
    for (int j = 0; j < levels; ++j) {
        running += stats.mass[j];
        if (running >= half) {
            median_cell = j;
            break;
        }
    }
    if (median_cell == empty) return false; // nothing sensible left to split

    const int first = stats.first_bin[median_cell];
    const int last = median_cell + 1 < levels ? stats.first_bin[median_cell + 1] : pdf.bins();

    std::vector<double> repaired;
    repaired.reserve(representatives.size());
    for (int j = 0; j < levels; ++j) {
        if (j == empty) continue;
        if (j == median_cell) {
            repaired.push_back(range_quantile(pdf, first, last, 0.25));
            repaired.push_back(range_quantile(pdf, first, last, 0.75));
        } else {
            repaired.push_back(representatives[j]);
        }
    }
    std::sort(repaired.begin(), repaired.end());
    representatives = std::move(repaired);
    return true;
}

} // namespace

Quantizer lloyd_max(const PdfGrid& pdf, int levels, double tol, int max_iter) {
    if (levels < 2) throw std::invalid_argument("lloyd_max: levels must be >= 2");
    if (pdf.bins() < 8) throw std::invalid_argument("lloyd_max: pdf grid too coarse");
    if (std::abs(pdf.mass() - 1.0) > 1e-6)
        throw std::invalid_argument("lloyd_max: pdf must be normalized");
    if (!(tol > 0.0)) throw std::invalid_argument("lloyd_max: tol must be > 0");

    // Initial representatives at the (k + 1/2)/M mass quantiles.
    std::vector<double> representatives(levels);
    {
        const double w = pdf.width();
        double running = 0.0;
        int k = 0;
        for (int j = 0; j < levels; ++j) {
            const double target = (static_cast<double>(j) + 0.5) / levels;
            while (k < pdf.bins() - 1 && running + pdf.density[k] * w < target) {
                running += pdf.density[k] * w;
                ++k;
            }
            representatives[j] = pdf.center(k);
        }
    }

    Quantizer q;
    double previous_error = -1.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (int repair = 0; repair < levels; ++repair) {
            if (!repair_empty_cells(pdf, representatives)) break;
        }
        auto boundaries = midpoints(representatives);
        const auto stats = accumulate_cells(pdf, boundaries);
        for (int j = 0; j < levels; ++j) {
            if (stats.mass[j] > 0.0) representatives[j] = stats.centroid[j];
        }
        boundaries = midpoints(representatives);

        // Expected squared error of the updated quantizer.
        double error = 0.0;
        {
            const double w = pdf.width();
            int cell = 0;
            for (int k = 0; k < pdf.bins(); ++k) {
                const double x = pdf.center(k);
                while (cell < levels - 1 && x >= boundaries[cell]) ++cell;
                const double d = x - representatives[cell];
                error += pdf.density[k] * w * d * d;
            }
        }

        q.iterations = iter;
        if (previous_error >= 0.0 &&
            error > previous_error + 1e-13 * std::max(1.0, previous_error)) {
            q.error_monotone = false;
        }
        if (previous_error >= 0.0 && std::abs(previous_error - error) < tol) {
            q.expected_sq_error = error;
            q.converged = true;
            break;
        }
        q.expected_sq_error = error;
        previous_error = error;
    }

    q.representatives = representatives;
    q.boundaries = midpoints(representatives);
    const auto stats = accumulate_cells(pdf, q.boundaries);
    q.cell_probabilities = stats.mass;
    return q;
}

PdfGrid induced_error_pdf(const PdfGrid& prior, const Quantizer& quantizer) {
    if (prior.bins() < 8) throw std::invalid_argument("induced_error_pdf: degenerate grid");

    const double w = prior.width();
    double min_error = 0.0;
    double max_error = 0.0;
    std::vector<double> errors(prior.bins());
    for (int k = 0; k < prior.bins(); ++k) {
        const double e = prior.center(k) - quantizer.quantize(prior.center(k));
        errors[k] = e;
        min_error = std::min(min_error, e);
        max_error = std::max(max_error, e);
    }

    PdfGrid out;
    const double pad = std::max((max_error - min_error) / prior.bins(), 1e-12);
    out.lo = min_error - pad;
    out.hi = max_error + pad;
    out.density.assign(prior.bins(), 0.0);
    const double out_w = out.width();

    // Linear deposit between the two nearest cells keeps mass and mean exact.
    for (int k = 0; k < prior.bins(); ++k) {
        const double m = prior.density[k] * w;
        if (m == 0.0) continue;
        const double pos = (errors[k] - out.lo) / out_w - 0.5;
        int j = static_cast<int>(std::floor(pos));
        double frac = pos - j;
        if (j < 0) {
            j = 0;
            frac = 0.0;
        } else if (j >= out.bins() - 1) {
            j = out.bins() - 2;
            frac = 1.0;
        }
        out.density[j] += m * (1.0 - frac) / out_w;
        out.density[j + 1] += m * frac / out_w;
    }
    return out;
}

void write_quantizers_csv(std::ostream& out, std::span<const Quantizer> quantizers) {
    out << "step,boundary_list,rep_list,error\n";
    char buffer[64];
    auto append_list = [&](std::span<const double> xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::snprintf(buffer, sizeof buffer, "%.12g", xs[i]);
            if (i) out << ';';
            out << buffer;
        }
    };
    for (std::size_t step = 0; step < quantizers.size(); ++step) {
        out << step << ',';
        append_list(quantizers[step].boundaries);
        out << ',';
        append_list(quantizers[step].representatives);
        std::snprintf(buffer, sizeof buffer, ",%.12g\n", quantizers[step].expected_sq_error);
        out << buffer;
    }
}

} // namespace wienerlab

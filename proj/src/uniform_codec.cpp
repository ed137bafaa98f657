#include "wienerlab/uniform_codec.hpp"

#include <cmath>
#include <stdexcept>

namespace wienerlab {

double UniformConfig::interval() const {
    if (!(rate > 0.0)) throw std::invalid_argument("UniformConfig: rate must be > 0");
    if (bits_per_sample < 1)
        throw std::invalid_argument("UniformConfig: bits_per_sample must be >= 1");
    return static_cast<double>(bits_per_sample) / rate;
}

double UniformConfig::frequency() const { return 1.0 / interval(); }

int UniformConfig::levels() const {
    if (bits_per_sample < 1 || bits_per_sample > 20)
        throw std::invalid_argument("UniformConfig: bits_per_sample out of range");
    return 1 << bits_per_sample;
}

QuantizerSchedule design_quantizer_schedule(double interval, int bits_per_sample, int steps,
                                            const GridOptions& options) {
    if (!(interval > 0.0))
        throw std::invalid_argument("design_quantizer_schedule: interval must be > 0");
    if (bits_per_sample < 1)
        throw std::invalid_argument("design_quantizer_schedule: bits_per_sample must be >= 1");
    if (steps < 1) throw std::invalid_argument("design_quantizer_schedule: steps must be >= 1");

    QuantizerSchedule schedule;
    schedule.interval = interval;
    schedule.bits_per_sample = bits_per_sample;
    schedule.quantizers.reserve(steps);
    schedule.prior_variances.reserve(steps);

    const int levels = 1 << bits_per_sample;
    // First innovation is a raw increment: the estimate starts at the known
    // initial value, so the prior is the increment density itself.
    PdfGrid prior = make_gaussian_grid(interval, options);
    for (int i = 0; i < steps; ++i) {
        schedule.prior_variances.push_back(prior.variance());
        schedule.quantizers.push_back(lloyd_max(prior, levels));
        if (i + 1 < steps) {
            PdfGrid error = induced_error_pdf(prior, schedule.quantizers.back());
            prior = innovation_prior_update(error, interval, options);
        }
    }
    return schedule;
}

GreedyEncodeResult greedy_lloyd_encode(const WienerPath& path, const UniformConfig& config,
                                       const QuantizerSchedule* precomputed) {
    const double interval = config.interval();
    const double h = path.step_h;
    const double steps_per_interval = interval / h;
    const auto stride = static_cast<std::size_t>(std::llround(steps_per_interval));
    if (stride < 1 || std::abs(steps_per_interval - static_cast<double>(stride)) > 1e-9)
        throw std::invalid_argument(
            "greedy_lloyd_encode: sampling interval must be a whole number of grid steps");
    const std::size_t num_samples = (path.values.size() - 1) / stride;
    if (num_samples < 1)
        throw std::invalid_argument("greedy_lloyd_encode: path shorter than one interval");

    GreedyEncodeResult result;
    if (precomputed != nullptr) {
        if (std::abs(precomputed->interval - interval) > 1e-12 ||
            precomputed->bits_per_sample != config.bits_per_sample ||
            precomputed->quantizers.size() < num_samples)
            throw std::invalid_argument("greedy_lloyd_encode: schedule does not match config");
        result.schedule = *precomputed;
    } else {
        result.schedule = design_quantizer_schedule(interval, config.bits_per_sample,
                                                    static_cast<int>(num_samples));
    }

    result.trace.breakpoints.push_back({0.0, 0.0});
    double estimate = 0.0;
    double error_acc = 0.0;
    std::size_t next_sample = stride;
    std::size_t sample_index = 0;
    const std::size_t total_steps = path.values.size() - 1;
    for (std::size_t k = 0; k < total_steps; ++k) {
        const double err = path.values[k] - estimate;
        error_acc += err * err * h;
        if (k + 1 == next_sample && sample_index < num_samples) {
            const double innovation = path.values[k + 1] - estimate;
            const auto& quantizer = result.schedule.quantizers[sample_index];
            estimate += quantizer.quantize(innovation);
            const double time = static_cast<double>(k + 1) * h;
            result.samples.push_back({time, path.values[k + 1]});
            result.trace.breakpoints.push_back({time, estimate});
            result.bits_emitted += config.bits_per_sample;
            ++sample_index;
            next_sample += stride;
        }
    }
    result.empirical_mse = error_acc / (static_cast<double>(total_steps) * h);
    return result;
}

} // namespace wienerlab

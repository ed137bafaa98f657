#include "wienerlab/soi.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wienerlab {

double SoiConfig::threshold() const {
    if (!(rate > 0.0)) throw std::invalid_argument("SoiConfig: rate must be > 0");
    return std::sqrt(1.0 / rate);
}

double ReconstructionTrace::level_at(double t) const {
    double level = 0.0;
    for (const auto& bp : breakpoints) {
        if (bp.time > t) break;
        level = bp.level;
    }
    return level;
}

double soi_analytic_distortion(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("soi_analytic_distortion: rate must be > 0");
    return 1.0 / (6.0 * rate);
}

SoiStream soi_encode(double horizon, const SoiConfig& config, SeedStream seed,
                     const SegmentOptions& options) {
    if (!(horizon >= 0.0)) throw std::invalid_argument("soi_encode: horizon must be >= 0");
    const double threshold = config.threshold();

    SoiStream stream;
    NormalSampler normal(seed);
    ThresholdWalker walker(threshold, options.step_h, options.bridge_correction);

    const auto total_steps = static_cast<std::uint64_t>(horizon / options.step_h);
    double sample_value = 0.0;
    for (std::uint64_t k = 1; k <= total_steps; ++k) {
        const int sign = walker.step(normal);
        if (sign != 0) {
            const double time = k * options.step_h;
            sample_value += sign * threshold;
            stream.samples.push_back({time, sample_value});
            stream.codewords.push_back({time, soi_bit(sign), 1});
        }
    }
    return stream;
}

ReconstructionTrace soi_decode(std::span<const CodewordRecord> codewords, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("soi_decode: threshold must be > 0");

    ReconstructionTrace trace;
    trace.breakpoints.push_back({0.0, 0.0});
    double level = 0.0;
    double previous_time = 0.0;
    for (const auto& codeword : codewords) {
        if (codeword.time < previous_time)
            throw std::invalid_argument("soi_decode: codeword times must be non-decreasing");
        if (codeword.length != 1)
            throw std::invalid_argument("soi_decode: codewords must be 1 bit long");
        previous_time = codeword.time;
        level += codeword.bits ? threshold : -threshold;
        trace.breakpoints.push_back({codeword.time, level});
    }
    return trace;
}

void write_codewords_csv(std::ostream& out, std::span<const CodewordRecord> codewords) {
    out << "time,bit\n";
    char buffer[64];
    for (const auto& codeword : codewords) {
        std::snprintf(buffer, sizeof buffer, "%.9f,%u\n", codeword.time, codeword.bits);
        out << buffer;
    }
}

SoiTrackingRun simulate_soi_tracking(double horizon, const SoiConfig& config, SeedStream seed,
                                     const SegmentOptions& options) {
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_soi_tracking: horizon must be > 0");
    const double threshold = config.threshold();

    SoiTrackingRun run;
    NormalSampler normal(seed);
    ThresholdWalker walker(threshold, options.step_h, options.bridge_correction);

    const auto total_steps = static_cast<std::uint64_t>(horizon / options.step_h);
    run.path.step_h = options.step_h;
    run.path.seed = seed;
    run.path.values.reserve(total_steps + 1);
    run.path.values.push_back(0.0);
    run.trace.breakpoints.push_back({0.0, 0.0});

    // The path carries the restart convention: each sampled value is exactly
    // the previous one +- threshold, and intra-segment values ride on top.
    double sample_value = 0.0;
    for (std::uint64_t k = 1; k <= total_steps; ++k) {
        const int sign = walker.step(normal);
        if (sign != 0) {
            const double time = k * options.step_h;
            sample_value += sign * threshold;
            run.path.values.push_back(sample_value);
            run.stream.samples.push_back({time, sample_value});
            run.stream.codewords.push_back({time, soi_bit(sign), 1});
            run.trace.breakpoints.push_back({time, sample_value});
        } else {
            run.path.values.push_back(sample_value + walker.offset());
        }
    }
    return run;
}

} // namespace wienerlab

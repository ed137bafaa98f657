#include "wienerlab/wiener.hpp"

#include <cmath>
#include <stdexcept>

namespace wienerlab {

WienerPath generate_path(double horizon, double step_h, SeedStream seed) {
    if (!(horizon > 0.0)) throw std::invalid_argument("generate_path: horizon must be > 0");
    if (!(step_h > 0.0)) throw std::invalid_argument("generate_path: step_h must be > 0");
    if (step_h > horizon) throw std::invalid_argument("generate_path: step_h must be <= horizon");

    const auto steps = static_cast<std::size_t>(horizon / step_h);
    WienerPath path;
    path.step_h = step_h;
    path.seed = seed;
    path.values.resize(steps + 1);
    path.values[0] = 0.0;

    NormalSampler normal(seed);
    const double scale = std::sqrt(step_h);
    double value = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        value += scale * normal();
        path.values[k] = value;
    }
    return path;
}

std::optional<ExitEvent> find_first_exit(std::span<const double> values, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("find_first_exit: threshold must be > 0");
    if (values.empty()) return std::nullopt;
    const double origin = values.front();
    for (std::size_t k = 1; k < values.size(); ++k) {
        const double offset = values[k] - origin;
        if (std::abs(offset) >= threshold) {
            return ExitEvent{static_cast<std::int64_t>(k), offset >= 0.0 ? +1 : -1, 0.0, false};
        }
    }
    return std::nullopt;
}

ExitEvent next_exit(NormalSampler& normal, double threshold, const SegmentOptions& options) {
    if (!(threshold > 0.0)) throw std::invalid_argument("next_exit: threshold must be > 0");
    if (!(options.step_h > 0.0)) throw std::invalid_argument("next_exit: step_h must be > 0");

    ThresholdWalker walker(threshold, options.step_h, options.bridge_correction);
    for (std::uint64_t k = 1; k <= options.max_steps; ++k) {
        const int sign = walker.step(normal);
        if (sign != 0)
            return ExitEvent{static_cast<std::int64_t>(k), sign, k * options.step_h, false};
    }
    return ExitEvent{static_cast<std::int64_t>(options.max_steps), 0,
                     options.max_steps * options.step_h, true};
}

ExitSegment segment_until_exit(double threshold, const SegmentOptions& options, SeedStream seed) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("segment_until_exit: threshold must be > 0");
    if (!(options.step_h > 0.0))
        throw std::invalid_argument("segment_until_exit: step_h must be > 0");

    NormalSampler normal(seed);
    ThresholdWalker walker(threshold, options.step_h, options.bridge_correction);

    ExitSegment segment;
    segment.values.push_back(0.0);
    for (std::uint64_t k = 1; k <= options.max_steps; ++k) {
        const int sign = walker.step(normal);
        segment.values.push_back(walker.last_raw());
        if (sign != 0) {
            segment.event =
                ExitEvent{static_cast<std::int64_t>(k), sign, k * options.step_h, false};
            return segment;
        }
    }
    segment.event = ExitEvent{static_cast<std::int64_t>(options.max_steps), 0,
                              options.max_steps * options.step_h, true};
    return segment;
}

} // namespace wienerlab

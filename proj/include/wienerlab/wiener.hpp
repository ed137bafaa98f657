// Discretized standard Wiener paths and threshold first-exit segments.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wienerlab/rng.hpp"

namespace wienerlab {

/// A sample path on the uniform grid 0, h, 2h, ...  values[0] is always 0.
struct WienerPath {
    double step_h = 0.0;
    std::vector<double> values;
    SeedStream seed;

    double horizon() const { return step_h * static_cast<double>(values.size() - 1); }
};

/// First crossing of a symmetric threshold by a segment started at 0.
struct ExitEvent {
    std::int64_t exit_step = 0; ///< grid index of the first crossing
    int sign = 0;               ///< +1 or -1
    double elapsed = 0.0;       ///< seconds from segment start
    bool truncated = false;     ///< max_steps reached before any crossing
};

/// A first-exit segment: the raw grid values from 0 up to and including the
/// step at which the exit was detected. Under the segment-restart convention
/// the sampled value is sign * threshold, not values.back().
struct ExitSegment {
    ExitEvent event;
    std::vector<double> values;
};

/// Simulation controls for threshold segments.
///
/// With bridge_correction enabled, a crossing that happens inside a step and
/// retreats by the next grid point is detected by sampling the Brownian
/// bridge crossing probability exp(-2ab/h). Detection then lags the true
/// crossing by at most one step, so the timing bias is O(h) instead of the
/// O(sqrt(h)) bias of plain grid scanning.
struct SegmentOptions {
    double step_h = 1e-4;
    std::uint64_t max_steps = 1'000'000'000;
    bool bridge_correction = false;
};

/// Advances a fresh Wiener segment one grid step at a time and reports the
/// step at which it first leaves (-threshold, threshold). After an exit the
/// walker restarts at 0, so a single walker produces the whole renewal
/// sequence of segments.
class ThresholdWalker {
public:
    ThresholdWalker(double threshold, double step_h, bool bridge_correction)
        : threshold_(threshold),
          scale_(std::sqrt(step_h)),
          step_h_(step_h),
          bridge_margin_(4.6 * scale_),
          bridge_(bridge_correction) {}

    /// One grid step. Returns +1/-1 when this step ends the segment (the
    /// walker restarts at 0), or 0 when the segment continues.
    int step(NormalSampler& normal) {
        const double previous = offset_;
        const double next = previous + scale_ * normal();
        raw_ = next;
        int sign = 0;
        if (next >= threshold_) {
            sign = +1;
        } else if (next <= -threshold_) {
            sign = -1;
        } else if (bridge_) {
            // Test the in-step excursion only near a barrier; farther away the
            // crossing probability is below ~1e-18.
            if (threshold_ - std::max(previous, next) < bridge_margin_ ||
                threshold_ + std::min(previous, next) < bridge_margin_) {
                const double p_up = std::exp(
                    -2.0 * (threshold_ - previous) * (threshold_ - next) / step_h_);
                const double p_down = std::exp(
                    -2.0 * (threshold_ + previous) * (threshold_ + next) / step_h_);
                const double u = normal.uniform();
                if (u < p_up + p_down) sign = u < p_up ? +1 : -1;
            }
        }
        offset_ = sign == 0 ? next : 0.0;
        return sign;
    }

    /// Innovation accumulated since the last sample (0 right after an exit).
    double offset() const { return offset_; }

    /// Raw grid value of the most recent step, overshoot included.
    double last_raw() const { return raw_; }

    void restart() {
        offset_ = 0.0;
        raw_ = 0.0;
    }

    double threshold() const { return threshold_; }

private:
    double threshold_;
    double scale_;
    double step_h_;
    double bridge_margin_;
    bool bridge_;
    double offset_ = 0.0;
    double raw_ = 0.0;
};

WienerPath generate_path(double horizon, double step_h, SeedStream seed);

/// Scans a path for the first index k with |values[k] - values[0]| >= threshold.
std::optional<ExitEvent> find_first_exit(std::span<const double> values, double threshold);

ExitSegment segment_until_exit(double threshold, const SegmentOptions& options, SeedStream seed);

/// Streaming form of segment_until_exit: advances the sampler to the next
/// exit without materializing the path. Returns the event only.
ExitEvent next_exit(NormalSampler& normal, double threshold, const SegmentOptions& options);

} // namespace wienerlab

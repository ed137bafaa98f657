// Sign-of-innovation codec: symmetric threshold sampler, 1-bit compressor,
// accumulate-and-hold decoder.
#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "wienerlab/wiener.hpp"

namespace wienerlab {

/// Rate budget of the threshold codec. The sampling threshold is tied to the
/// rate by threshold = sqrt(1/rate), so that one bit is spent per mean
/// crossing time.
struct SoiConfig {
    double rate = 1.0; ///< bits per second, > 0

    double threshold() const;
};

/// One emitted codeword: a timestamp and a bit string of `length` bits.
/// The threshold codec always emits length 1.
struct CodewordRecord {
    double time = 0.0;
    unsigned bits = 0;
    int length = 1;
};

/// A sampling instant together with the sampled process value.
struct SampleEvent {
    double time = 0.0;
    double value = 0.0;
};

/// Piecewise-constant, right-continuous reconstruction. Starts at (0, 0).
struct ReconstructionTrace {
    struct Breakpoint {
        double time;
        double level;
    };
    std::vector<Breakpoint> breakpoints;

    /// Level in force at time t.
    double level_at(double t) const;
};

struct SoiStream {
    std::vector<SampleEvent> samples;
    std::vector<CodewordRecord> codewords;
};

/// The innovation-to-bit map: 1 for a non-negative innovation, else 0.
inline unsigned soi_bit(double innovation) { return innovation >= 0.0 ? 1u : 0u; }

/// Runs the threshold sampler over fresh Wiener segments until the horizon
/// and compresses each innovation to its sign bit. A horizon shorter than the
/// first crossing yields an empty stream.
SoiStream soi_encode(double horizon, const SoiConfig& config, SeedStream seed,
                     const SegmentOptions& options);

/// Accumulates received innovations into the running estimate.
ReconstructionTrace soi_decode(std::span<const CodewordRecord> codewords, double threshold);

/// Mean-square tracking error achieved by the codec at rate R: 1/(6R).
double soi_analytic_distortion(double rate);

/// Codeword stream as CSV lines `time,bit` (time with 9 decimal digits).
void write_codewords_csv(std::ostream& out, std::span<const CodewordRecord> codewords);

/// A materialized tracking run on one grid: the restart-convention path, the
/// emitted stream, and the decoder trace. Used for distortion decomposition
/// and the error-process checks; the Monte Carlo harness streams instead.
struct SoiTrackingRun {
    WienerPath path;
    SoiStream stream;
    ReconstructionTrace trace;
};

SoiTrackingRun simulate_soi_tracking(double horizon, const SoiConfig& config, SeedStream seed,
                                     const SegmentOptions& options);

} // namespace wienerlab

// Uniform-sampling codec: deterministic sampler at a fixed interval plus the
// greedy Lloyd-Max innovation compressor with pdf tracking by convolution.
#pragma once

#include <vector>

#include "wienerlab/lloyd.hpp"
#include "wienerlab/soi.hpp"
#include "wienerlab/wiener.hpp"

namespace wienerlab {

/// Rate split of the deterministic pipeline: samples every Rs/R seconds and
/// spends Rs whole bits on each sample, so f * Rs = R.
struct UniformConfig {
    double rate = 1.0;       ///< bits per second, > 0
    int bits_per_sample = 1; ///< Rs >= 1

    double interval() const;  ///< sampling interval Rs / R
    double frequency() const; ///< samples per second R / Rs
    int levels() const;       ///< 2^Rs quantizer cells
};

/// The per-step quantizers of the greedy compressor. The sequence depends
/// only on (interval, Rs, steps) - never on a realized path - so one schedule
/// serves every replication.
///
/// Step i quantizes the innovation against the tracked prior; the next prior
/// is the induced quantization-error density convolved with a zero-mean
/// Gaussian of variance `interval`. The first prior is that Gaussian itself.
struct QuantizerSchedule {
    double interval = 0.0;
    int bits_per_sample = 1;
    std::vector<Quantizer> quantizers;
    std::vector<double> prior_variances; ///< variance of each step's design prior
};

QuantizerSchedule design_quantizer_schedule(double interval, int bits_per_sample, int steps,
                                            const GridOptions& options = {});

struct GreedyEncodeResult {
    ReconstructionTrace trace;
    std::vector<SampleEvent> samples;
    QuantizerSchedule schedule;
    double empirical_mse = 0.0; ///< time-averaged squared tracking error
    long bits_emitted = 0;
};

/// Runs the uniform sampler over a materialized path, quantizing each
/// innovation with the scheduled Lloyd-Max quantizer. Pass a precomputed
/// schedule to amortize the design across replications; it must match the
/// config's interval and bit budget.
GreedyEncodeResult greedy_lloyd_encode(const WienerPath& path, const UniformConfig& config,
                                       const QuantizerSchedule* precomputed = nullptr);

} // namespace wienerlab

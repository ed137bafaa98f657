// Distortion-rate quantities for causally coded Wiener processes: the
// finite-horizon program over sampling intervals and per-sample distortions,
// its lower/upper bounds with multiplier bisection, the large-horizon limit,
// and the closed forms the codecs are measured against.
//
// All logarithms are base 2 (rates are in bits); the natural-log conversion
// factor log2(e) is kept explicit wherever the stationarity conditions
// require it.
#pragma once

#include <vector>

namespace wienerlab {
namespace idrf {

/// Sampling intervals T_0..T_N of a deterministic policy with N interior
/// samples. Feasible allocations satisfy mean(T) * f = N / (N * f) ... i.e.
/// (1/N) * sum(T) = 1/f.
struct IntervalAllocation {
    std::vector<double> intervals;
    double frequency = 0.0;

    int sample_count() const { return static_cast<int>(intervals.size()) - 1; }
};

/// Per-sample mean-square distortions D_1..D_N.
struct DistortionAllocation {
    std::vector<double> values;
};

enum class SolutionKind { lower_bound, upper_bound, limit, closed_form };

struct IdrfSolution {
    IntervalAllocation allocation;
    DistortionAllocation distortions;
    double lambda_star = 0.0;
    double value = 0.0;
    SolutionKind kind = SolutionKind::closed_form;
};

/// The uniform allocation T_i = N / (f (N+1)), i = 0..N, which meets the
/// mean-interval constraint exactly.
IntervalAllocation uniform_allocation(double frequency, int sample_count);

/// Endpoint intervals pinned to `endpoint`, interior intervals equal and
/// chosen to meet the mean-interval constraint.
IntervalAllocation pinched_allocation(double frequency, int sample_count, double endpoint);

/// Average information content of a distortion allocation, in bits per
/// sample:
///   (1/N) (sum_{i=1}^{N-1} log2(1 + T_i / D_i) + log2(T_0 / D_N)).
/// Diverges (throws) when any D_i is zero.
double z_of(const DistortionAllocation& distortions, const IntervalAllocation& intervals);

/// Finite-horizon distortion of an allocation pair:
///   (f/N) (sum_i T_i^2 / 2 + sum_i T_i D_i).
double dn_objective(const IntervalAllocation& intervals, const DistortionAllocation& distortions,
                    double frequency);

struct LambdaSolution {
    double lambda_star = 0.0;
    DistortionAllocation distortions;
};

/// Finds the unique multiplier lambda >= 0 at which the stationary
/// distortions
///   D_i = (-T_i + sqrt(T_i^2 + 4 log2(e) lambda)) / 2   (i < N)
///   D_N = lambda log2(e) / T_N
/// consume exactly 2 Rs bits per sample: z(D(lambda)) = 2 Rs. Bracketing
/// doubling from [0, 1], then bisection to relative width 1e-12.
LambdaSolution solve_lambda(const IntervalAllocation& intervals, double bits_per_sample);

struct LowerBoundOptions {
    /// The bound's objective is symmetric in the two endpoint intervals, so
    /// the outer search runs over T_0 = T_N by default. The asymmetric
    /// search is kept for auditing that restriction.
    bool symmetric_endpoints = true;
};

/// Lower bound on the finite-horizon program: interior intervals equalized,
/// endpoint intervals optimized by golden-section search, multiplier
/// re-solved per candidate.
IdrfSolution lower_bound_dn(double frequency, double bits_per_sample, int sample_count,
                            const LowerBoundOptions& options = {});

/// Upper bound: the uniform feasible allocation evaluated at its stationary
/// distortions. Verifies feasibility of the nested-distortion constraints
/// D_{i-1} + T_{i-1} >= D_i (with D_0 = 0).
IdrfSolution upper_bound_dn(double frequency, double bits_per_sample, int sample_count);

/// Large-horizon limit of the deterministic-sampling tradeoff:
///   1/(2f) + 1 / (f (2^(2 Rs) - 1)).
double idrf_limit(double frequency, double bits_per_sample);

/// Closed-form distortion-rate curves at rate R.
struct ClosedForms {
    double rate = 1.0;

    double dop() const;                    ///< threshold codec: 1/(6R)
    double ddet() const;                   ///< deterministic-sampling floor: 5/(6R)
    double dop_f_rs(double frequency) const; ///< threshold codec at fixed frequency: 1/(6f)
    double dnoncausal() const;             ///< infinite-delay floor: 2 log2(e) / (pi^2 R)
    double dch(double delay) const;        ///< fixed channel delay: 1/(6R) + delay
};

ClosedForms closed_forms(double rate);

enum class CurveKind { odfrf, idfrf };

struct FrequencyRateArgmin {
    double frequency = 0.0;
    int bits_per_sample = 1;
    double value = 0.0;
};

/// Grid search over Rs in {1..8} with f = R / Rs: the best split of a rate
/// budget between sampling frequency and bits per sample.
FrequencyRateArgmin minimize_over_f_rs(double rate, CurveKind which);

} // namespace idrf
} // namespace wienerlab

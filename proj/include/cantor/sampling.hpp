// Monte Carlo engine for the Bernoulli convolution: digit-stream sampling of
// the random series sum_k s_k lambda^k with fair independent signs, the
// empirical characteristic function against the cosine product, Hutchinson
// invariance, and the x5 / x4 pushforward comparisons.
//
// Two support pictures with an exact affine bridge: points are generated in
// the symmetric frame (attractor [-1/3, 1/3] for lambda = 1/4); the
// unit-embedded {0,2}-digit frame on [0, 2/3] is reached by adding 1/3.
// For lambda = 1/4 and depth <= 31 each point is built from an exact int64
// numerator and rounded once, so no sample ever exceeds fl(1/3) (nor, after
// the shift, fl(2/3)).

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cantor/transform.hpp"

namespace cantor {

struct SampleBatch {
    double lambda;
    int depth;
    std::uint64_t seed;
    std::vector<double> points;  // symmetric frame
};

struct IntervalQuery {
    double a, b;  // half-open (a, b]
    enum class Frame { Symmetric, UnitEmbedded } frame = Frame::UnitEmbedded;
};

/// n points of sum_{k=1}^{D} s_k lambda^k with signs from the counter-based
/// stream (seed, point index). Bit-reproducible at any thread count.
SampleBatch sample_batch(ScaleRatio lambda, int depth, std::size_t n, std::uint64_t seed);

/// Sample mean of e^{2 pi i t x}; approximates the cosine product at t.
std::complex<double> empirical_char(double t, const SampleBatch& batch);

/// sup over a gridM-point grid of |F(x) - F(x/lambda - 1)/2 - F(x/lambda + 1)/2|
/// for the empirical CDF F: the self-similarity residual of the batch.
double hutchinson_residual(const SampleBatch& batch, int gridM);

struct MassEstimate {
    double estimate;
    double wilson_lo, wilson_hi;  // 95% Wilson score interval
    std::size_t count, n;
};

/// Fraction of the batch landing in q after the n_scale-fold circle map
/// y -> n y mod 1 (applied in the unit-embedded frame when selected).
MassEstimate pushforward_mass(const SampleBatch& batch, int n_scale, const IntervalQuery& q);

struct Figure1Data {
    struct Point {
        double x, y;
    };
    struct Interval {
        int level;  // 0 for the tau5 preimage intervals
        double lo, hi;
    };
    std::vector<Point> sawtooth;          // gridM samples of tau_5 on [0,1]
    std::vector<Interval> cantor_levels;  // IFS refinements of [0, 2/3]
    std::vector<Interval> preimages;      // tau_5^{-1}((2/3, 1]), five pieces
};

/// Plot-ready data for the graph of tau_5 over the refinements of the
/// unit-embedded attractor. levels > 12 is refused (4^levels intervals).
Figure1Data figure1_data(int levels, int gridM);

}  // namespace cantor

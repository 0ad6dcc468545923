#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pps/sequence.hpp"
#include "pps/transform.hpp"

namespace pps {

struct SpectrumEntry {
    std::size_t period;
    double power;
    double snr;
};

/// Periodic power over a contiguous range of periodicities, ascending by p.
struct PeriodicitySpectrum {
    std::string id;
    std::size_t length = 0;
    std::size_t p_min = 0;
    std::size_t p_max = 0;
    std::vector<SpectrumEntry> entries;

    const SpectrumEntry& at(std::size_t period) const;
};

struct PeakEntry {
    std::size_t period;
    double snr;
    bool local_max;  // strictly above both in-range neighbours
};

/// Every entry at or above the threshold, flagged when it is a strict local
/// maximum of the scanned spectrum.
struct PeakReport {
    double threshold = 1.0;
    std::vector<PeakEntry> entries;

    std::vector<PeakEntry> peaks() const;  // local maxima only
    bool contains(std::size_t period) const;
};

struct WindowPoint {
    std::size_t start;
    double snr;
};

struct WindowProfile {
    std::size_t period = 0;
    std::size_t window = 0;
    std::size_t step = 0;
    std::vector<WindowPoint> points;
};

struct WalkPoint {
    std::size_t prefix_length;
    double power;
};

struct WalkProfile {
    std::size_t period = 0;
    std::vector<WalkPoint> points;
};

struct SequenceEdit {
    enum class Kind { Substitute, Delete };
    Kind kind;
    std::size_t position;  // coordinate in the unedited concatenation
    char base = 'N';       // replacement residue for Substitute
};

/// DNA scan: power = pps_dna, snr = power / N.
PeriodicitySpectrum scan(const IndicatorSet& ind, std::size_t p_min, std::size_t p_max,
                         std::string id = {});

/// Real-signal scan. snr is power divided by the mean Fourier power
/// (the signal energy sum x^2), which reduces to power / N for indicator data.
PeriodicitySpectrum scan_signal(const RealSignal& x, std::size_t p_min, std::size_t p_max);

/// ceil(sqrt(2 n)), the default upper periodicity for scans.
std::size_t default_p_max(std::size_t n);

PeakReport detect_peaks(const PeriodicitySpectrum& spec, double threshold = 1.0);

WindowProfile sliding_window(const IndicatorSet& ind, std::size_t p, std::size_t window,
                             std::size_t step = 1);

/// PPS of prefixes of length p, p + step*p, p + 2*step*p, ... and finally N.
WalkProfile dna_walk(const IndicatorSet& ind, std::size_t p, std::size_t step = 1);

// ---------------------------------------------------------------------------
// Fixture generators
//
// Random streams come from std::mt19937_64 (fully specified by the standard).
// A uniform deviate is ((r >> 11) + 0.5) * 2^-53, strictly inside (0, 1);
// Gaussian deviates are produced in pairs by the Box-Muller transform
// z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2).

/// Deterministic standard-normal stream.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed);
    double next();

private:
    double uniform();

    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// x(k) = sin(2 pi k / 20 + pi/4) + cos(2 pi k / 50 + pi/4) + sigma * g(k), k = 1..n.
RealSignal synth_fig1(std::size_t n, double noise_sigma = 0.0, std::uint64_t seed = 0);

/// `copies` concatenated motifs with `edits` applied. When
/// `substitution_rate` > 0, each position is additionally replaced by a
/// different random base with that probability, drawn from `seed`.
DnaSequence synth_repeat(const DnaSequence& motif, std::size_t copies,
                         const std::vector<SequenceEdit>& edits = {}, std::uint64_t seed = 0,
                         double substitution_rate = 0.0);

/// Uniform random ACGT sequence.
DnaSequence random_sequence(std::size_t n, std::uint64_t seed, std::string id = "random");

/// Fisher-Yates permutation of the residues (index = r mod (i + 1)).
DnaSequence shuffled(const DnaSequence& seq, std::uint64_t seed);

}  // namespace pps

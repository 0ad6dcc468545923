#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pps/sequence.hpp"

namespace pps {

/// Per-residue-class sums of a signal: entry q holds the sum of x(n) over
/// all n with n mod p == q. Positions are 0-based.
struct CongruenceVector {
    std::size_t period = 0;
    std::vector<double> values;

    double total() const noexcept;
};

/// Lower-triangular p x p matrix S_p with unit diagonal and entries
/// 2 cos(2 pi (k - j) / p) below it, so that f S_p f^T is the periodic power.
class SpectrumMatrix {
public:
    explicit SpectrumMatrix(std::size_t period);

    std::size_t period() const noexcept { return period_; }
    double operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * period_ + col];
    }

    /// f S_p f^T. `f` must have `period()` entries.
    double quadratic_form(std::span<const double> f) const;

private:
    std::size_t period_;
    std::vector<double> entries_;  // row-major
};

struct PeriodicTransformValue {
    double real = 0.0;
    double imag = 0.0;

    double power() const noexcept { return real * real + imag * imag; }
};

struct DftPowerSpectrum {
    std::vector<double> power;  // bins k = 0..N-1

    std::size_t length() const noexcept { return power.size(); }
    double operator[](std::size_t k) const noexcept { return power[k]; }
    double mean() const noexcept;
};

/// Congruence vectors of the four indicator channels, in A, T, C, G order.
using ChannelCongruence = std::array<CongruenceVector, 4>;

CongruenceVector congruence_vector(const RealSignal& x, std::size_t p);
ChannelCongruence congruence_vectors(const IndicatorSet& ind, std::size_t p);

/// Same as `congruence_vectors` but from `IndicatorSet::codes()` output.
/// Entries with code 4 are skipped. Requires 1 <= p <= codes.size().
ChannelCongruence congruence_vectors(std::span<const std::uint8_t> codes, std::size_t p);

SpectrumMatrix spectrum_matrix(std::size_t p);

PeriodicTransformValue periodic_transform(const RealSignal& x, std::size_t p);

double pps_real(const RealSignal& x, std::size_t p);
double pps_dna(const IndicatorSet& ind, std::size_t p);

/// Sum of f_a S f_a^T over the four channels, each term clamped at zero.
double pps_from_congruence(const ChannelCongruence& f, const SpectrumMatrix& s);

/// Explicit polynomial forms for p in {2, 3, 4}.
double pps_closed_form(const IndicatorSet& ind, std::size_t p);

/// Direct O(N^2) evaluation of |X(k)|^2 for k = 0..N-1.
DftPowerSpectrum dft_power_spectrum(std::span<const double> x);
DftPowerSpectrum dft_power_spectrum(const RealSignal& x);
DftPowerSpectrum dft_power_dna(const IndicatorSet& ind);

/// |X(k)|^2 at a single bin, O(N). k is reduced mod N.
double dft_power_bin(std::span<const double> x, std::size_t k);
double dft_power_dna_bin(const IndicatorSet& ind, std::size_t k);

IndicatorSet zero_pad_to_multiple(const IndicatorSet& ind, std::size_t p);

double snr(double pps_value, std::size_t n);

}  // namespace pps

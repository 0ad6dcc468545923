#include "pps/transform.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace pps {

namespace {

void require_period(std::size_t p, std::size_t n) {
    if (p < 1 || p > n)
        throw Error(ErrorCode::PeriodOutOfRange,
                    "periodicity " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
}

// Quadratic-form round-off leaves residues of either sign around an exact zero.
double clamp_power(double value, std::span<const double> f) {
    const double norm2 = std::inner_product(f.begin(), f.end(), f.begin(), 0.0);
    return std::abs(value) <= 1e-9 * norm2 ? 0.0 : value;
}

// cos/sin of 2 pi m / n for m = 0..n-1.
struct Twiddles {
    std::vector<double> cos;
    std::vector<double> sin;

    explicit Twiddles(std::size_t n) : cos(n), sin(n) {
        for (std::size_t m = 0; m < n; ++m) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
            cos[m] = std::cos(angle);
            sin[m] = std::sin(angle);
        }
    }
};

}  // namespace

double CongruenceVector::total() const noexcept {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

double DftPowerSpectrum::mean() const noexcept {
    if (power.empty()) return 0.0;
    return std::accumulate(power.begin(), power.end(), 0.0) / static_cast<double>(power.size());
}

// ---------------------------------------------------------------------------
// Spectrum transform matrix

SpectrumMatrix::SpectrumMatrix(std::size_t period) : period_(period) {
    if (period < 1) throw Error(ErrorCode::PeriodOutOfRange, "periodicity must be at least 1");
    const std::size_t p = period;

    // C and V are the cosine and sine rows of the p-th roots of unity;
    // U = C^T C + V^T V is folded onto its lower triangle.
    const Twiddles roots(p);
    std::vector<double> u(p * p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < p; ++j)
            u[k * p + j] = roots.cos[k] * roots.cos[j] + roots.sin[k] * roots.sin[j];

    entries_.assign(p * p, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t j = 0; j < k; ++j) entries_[k * p + j] = u[k * p + j] + u[j * p + k];
        entries_[k * p + k] = 1.0;
    }
}

double SpectrumMatrix::quadratic_form(std::span<const double> f) const {
    if (f.size() != period_)
        throw Error(ErrorCode::PeriodOutOfRange, "congruence vector length does not match matrix");
    double total = 0.0;
    for (std::size_t k = 0; k < period_; ++k) {
        const double* row = entries_.data() + k * period_;
        double acc = f[k];
        for (std::size_t j = 0; j < k; ++j) acc += row[j] * f[j];
        total += f[k] * acc;
    }
    return total;
}

SpectrumMatrix spectrum_matrix(std::size_t p) { return SpectrumMatrix(p); }

// ---------------------------------------------------------------------------
// Congruence vectors

CongruenceVector congruence_vector(const RealSignal& x, std::size_t p) {
    require_period(p, x.length());
    CongruenceVector out{p, std::vector<double>(p, 0.0)};
    std::size_t q = 0;
    for (double v : x.samples()) {
        out.values[q] += v;
        if (++q == p) q = 0;
    }
    return out;
}

ChannelCongruence congruence_vectors(std::span<const std::uint8_t> codes, std::size_t p) {
    require_period(p, codes.size());
    std::vector<std::size_t> counts(4 * p, 0);
    std::size_t q = 0;
    for (std::uint8_t c : codes) {
        if (c < 4) ++counts[c * p + q];
        if (++q == p) q = 0;
    }
    ChannelCongruence out;
    for (std::size_t c = 0; c < 4; ++c) {
        out[c].period = p;
        out[c].values.assign(counts.begin() + static_cast<std::ptrdiff_t>(c * p),
                             counts.begin() + static_cast<std::ptrdiff_t>((c + 1) * p));
    }
    return out;
}

ChannelCongruence congruence_vectors(const IndicatorSet& ind, std::size_t p) {
    const auto codes = ind.codes();
    return congruence_vectors(std::span<const std::uint8_t>(codes), p);
}

// ---------------------------------------------------------------------------
// Periodic power

PeriodicTransformValue periodic_transform(const RealSignal& x, std::size_t p) {
    const CongruenceVector f = congruence_vector(x, p);
    const Twiddles roots(p);
    PeriodicTransformValue out;
    for (std::size_t q = 0; q < p; ++q) {
        out.real += f.values[q] * roots.cos[q];
        out.imag -= f.values[q] * roots.sin[q];
    }
    return out;
}

double pps_real(const RealSignal& x, std::size_t p) {
    const CongruenceVector f = congruence_vector(x, p);
    const SpectrumMatrix s(p);
    return clamp_power(s.quadratic_form(f.values), f.values);
}

double pps_from_congruence(const ChannelCongruence& f, const SpectrumMatrix& s) {
    double total = 0.0;
    for (const auto& channel : f) total += clamp_power(s.quadratic_form(channel.values), channel.values);
    return total;
}

double pps_dna(const IndicatorSet& ind, std::size_t p) {
    require_period(p, ind.length());
    return pps_from_congruence(congruence_vectors(ind, p), SpectrumMatrix(p));
}

double pps_closed_form(const IndicatorSet& ind, std::size_t p) {
    if (p < 2 || p > 4)
        throw Error(ErrorCode::UnsupportedClosedForm,
                    "closed form available only for periodicities 2, 3 and 4");
    require_period(p, ind.length());

    double total = 0.0;
    for (const auto& channel : congruence_vectors(ind, p)) {
        const auto& f = channel.values;
        switch (p) {
            case 2:
                total += f[0] * f[0] + f[1] * f[1] - 2.0 * f[0] * f[1];
                break;
            case 3:
                total += f[0] * f[0] + f[1] * f[1] + f[2] * f[2]
                       - f[0] * f[1] - f[0] * f[2] - f[1] * f[2];
                break;
            case 4:
                total += f[0] * f[0] + f[1] * f[1] + f[2] * f[2] + f[3] * f[3]
                       - 2.0 * f[0] * f[2] - 2.0 * f[1] * f[3];
                break;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Fourier power spectrum

DftPowerSpectrum dft_power_spectrum(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 0) throw Error(ErrorCode::EmptyInput, "signal has no samples");
    const Twiddles tw(n);
    DftPowerSpectrum out{std::vector<double>(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
        double re = 0.0, im = 0.0;
        std::size_t idx = 0;  // k * t mod n
        for (std::size_t t = 0; t < n; ++t) {
            re += x[t] * tw.cos[idx];
            im -= x[t] * tw.sin[idx];
            idx += k;
            if (idx >= n) idx -= n;
        }
        out.power[k] = re * re + im * im;
    }
    return out;
}

DftPowerSpectrum dft_power_spectrum(const RealSignal& x) { return dft_power_spectrum(x.samples()); }

DftPowerSpectrum dft_power_dna(const IndicatorSet& ind) {
    const std::size_t n = ind.length();
    if (n == 0) throw Error(ErrorCode::EmptyInput, "sequence has no residues");
    const auto codes = ind.codes();
    const Twiddles tw(n);
    DftPowerSpectrum out{std::vector<double>(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::array<double, 5> re{}, im{};
        std::size_t idx = 0;
        for (std::size_t t = 0; t < n; ++t) {
            re[codes[t]] += tw.cos[idx];
            im[codes[t]] -= tw.sin[idx];
            idx += k;
            if (idx >= n) idx -= n;
        }
        double total = 0.0;
        for (std::size_t c = 0; c < 4; ++c) total += re[c] * re[c] + im[c] * im[c];
        out.power[k] = total;
    }
    return out;
}

double dft_power_bin(std::span<const double> x, std::size_t k) {
    const std::size_t n = x.size();
    if (n == 0) throw Error(ErrorCode::EmptyInput, "signal has no samples");
    k %= n;
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        // (k * t) mod n computed without overflow for any realistic n.
        const std::size_t m = (k * t) % n;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        re += x[t] * std::cos(angle);
        im -= x[t] * std::sin(angle);
    }
    return re * re + im * im;
}

double dft_power_dna_bin(const IndicatorSet& ind, std::size_t k) {
    double total = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
        const auto ch = ind.channel(c);
        const std::vector<double> x(ch.begin(), ch.end());
        total += dft_power_bin(x, k);
    }
    return total;
}

// ---------------------------------------------------------------------------

IndicatorSet zero_pad_to_multiple(const IndicatorSet& ind, std::size_t p) {
    if (p < 1) throw Error(ErrorCode::PeriodOutOfRange, "periodicity must be at least 1");
    const std::size_t n = ind.length();
    const std::size_t padded = (n + p - 1) / p * p;
    if (padded == n) return ind;
    std::array<IndicatorSet::Channel, 4> channels;
    for (std::size_t c = 0; c < 4; ++c) {
        const auto ch = ind.channel(c);
        channels[c].assign(ch.begin(), ch.end());
        channels[c].resize(padded, 0);
    }
    return IndicatorSet(std::move(channels));
}

double snr(double pps_value, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptyInput, "sequence length must be positive");
    return pps_value / static_cast<double>(n);
}

}  // namespace pps

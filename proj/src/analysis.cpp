#include "pps/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace pps {

namespace {

void require_range(std::size_t p_min, std::size_t p_max, std::size_t n) {
    if (p_min < 1 || p_min > p_max || p_max > n)
        throw Error(ErrorCode::PeriodOutOfRange,
                    "invalid periodicity range [" + std::to_string(p_min) + ", " +
                        std::to_string(p_max) + "] for length " + std::to_string(n));
}

std::uint64_t next_index(std::mt19937_64& engine, std::uint64_t bound) { return engine() % bound; }

}  // namespace

const SpectrumEntry& PeriodicitySpectrum::at(std::size_t period) const {
    if (period < p_min || period > p_max)
        throw Error(ErrorCode::PeriodOutOfRange, "periodicity " + std::to_string(period) + " not scanned");
    return entries[period - p_min];
}

std::vector<PeakEntry> PeakReport::peaks() const {
    std::vector<PeakEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
                 [](const PeakEntry& e) { return e.local_max; });
    return out;
}

bool PeakReport::contains(std::size_t period) const {
    return std::any_of(entries.begin(), entries.end(),
                       [period](const PeakEntry& e) { return e.period == period; });
}

// ---------------------------------------------------------------------------
// Scans

PeriodicitySpectrum scan(const IndicatorSet& ind, std::size_t p_min, std::size_t p_max,
                         std::string id) {
    const std::size_t n = ind.length();
    require_range(p_min, p_max, n);

    PeriodicitySpectrum out{std::move(id), n, p_min, p_max, {}};
    out.entries.reserve(p_max - p_min + 1);
    const auto codes = ind.codes();
    for (std::size_t p = p_min; p <= p_max; ++p) {
        const SpectrumMatrix s(p);
        const double power = pps_from_congruence(congruence_vectors(codes, p), s);
        out.entries.push_back({p, power, snr(power, n)});
    }
    return out;
}

PeriodicitySpectrum scan_signal(const RealSignal& x, std::size_t p_min, std::size_t p_max) {
    const std::size_t n = x.length();
    require_range(p_min, p_max, n);
    double energy = 0.0;
    for (double v : x.samples()) energy += v * v;

    PeriodicitySpectrum out{"signal", n, p_min, p_max, {}};
    for (std::size_t p = p_min; p <= p_max; ++p) {
        const double power = pps_real(x, p);
        out.entries.push_back({p, power, energy > 0.0 ? power / energy : 0.0});
    }
    return out;
}

std::size_t default_p_max(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptyInput, "sequence length must be positive");
    // smallest m with m^2 >= 2n
    auto m = static_cast<std::size_t>(std::sqrt(2.0 * static_cast<double>(n)));
    while (m * m < 2 * n) ++m;
    while (m > 1 && (m - 1) * (m - 1) >= 2 * n) --m;
    return m;
}

PeakReport detect_peaks(const PeriodicitySpectrum& spec, double threshold) {
    PeakReport report{threshold, {}};
    const auto& e = spec.entries;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!(e[i].snr >= threshold)) continue;
        const bool above_left = i == 0 || e[i].snr > e[i - 1].snr;
        const bool above_right = i + 1 == e.size() || e[i].snr > e[i + 1].snr;
        report.entries.push_back({e[i].period, e[i].snr, above_left && above_right});
    }
    return report;
}

WindowProfile sliding_window(const IndicatorSet& ind, std::size_t p, std::size_t window,
                             std::size_t step) {
    const std::size_t n = ind.length();
    if (window > n)
        throw Error(ErrorCode::WindowTooLarge,
                    "window " + std::to_string(window) + " exceeds length " + std::to_string(n));
    if (p < 1 || p > window)
        throw Error(ErrorCode::PeriodOutOfRange,
                    "periodicity " + std::to_string(p) + " outside [1, window]");
    if (step < 1) throw Error(ErrorCode::PeriodOutOfRange, "window step must be positive");

    WindowProfile out{p, window, step, {}};
    const auto codes = ind.codes();
    const SpectrumMatrix s(p);
    for (std::size_t start = 0; start + window <= n; start += step) {
        const std::span<const std::uint8_t> slice(codes.data() + start, window);
        const double power = pps_from_congruence(congruence_vectors(slice, p), s);
        out.points.push_back({start, snr(power, window)});
    }
    return out;
}

WalkProfile dna_walk(const IndicatorSet& ind, std::size_t p, std::size_t step) {
    const std::size_t n = ind.length();
    if (p < 1 || p > n)
        throw Error(ErrorCode::PeriodOutOfRange,
                    "periodicity " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
    if (step < 1) throw Error(ErrorCode::PeriodOutOfRange, "walk step must be positive");

    const auto codes = ind.codes();
    const SpectrumMatrix s(p);
    WalkProfile out{p, {}};

    // Counts grow with the prefix; the quadratic form is evaluated at each sample point.
    ChannelCongruence f;
    for (auto& ch : f) ch = {p, std::vector<double>(p, 0.0)};
    std::size_t next = p;
    std::size_t q = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (codes[t] < 4) f[codes[t]].values[q] += 1.0;
        if (++q == p) q = 0;
        const std::size_t len = t + 1;
        if (len == next || len == n) {
            out.points.push_back({len, pps_from_congruence(f, s)});
            next += step * p;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fixture generators

GaussianStream::GaussianStream(std::uint64_t seed) : engine_(seed) {}

double GaussianStream::uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

RealSignal synth_fig1(std::size_t n, double noise_sigma, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::EmptyInput, "signal length must be positive");
    constexpr double pi = std::numbers::pi;
    GaussianStream noise(seed);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<double>(i + 1);
        x[i] = std::sin(2.0 * pi * k / 20.0 + pi / 4.0) + std::cos(2.0 * pi * k / 50.0 + pi / 4.0);
        if (noise_sigma != 0.0) x[i] += noise_sigma * noise.next();
    }
    return RealSignal(std::move(x));
}

DnaSequence synth_repeat(const DnaSequence& motif, std::size_t copies,
                         const std::vector<SequenceEdit>& edits, std::uint64_t seed,
                         double substitution_rate) {
    if (copies < 1) throw Error(ErrorCode::InvalidEdit, "copies must be at least 1");
    if (substitution_rate < 0.0 || substitution_rate > 1.0)
        throw Error(ErrorCode::InvalidEdit, "substitution rate must lie in [0, 1]");

    std::string residues;
    residues.reserve(motif.length() * copies);
    for (std::size_t c = 0; c < copies; ++c) residues += motif.residues();

    if (substitution_rate > 0.0) {
        std::mt19937_64 engine(seed);
        for (char& r : residues) {
            const double u = (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
            if (u >= substitution_rate) continue;
            const int current = channel_index(r);
            std::string others;
            for (char b : kNucleotideSymbols)
                if (channel_index(b) != current) others.push_back(b);
            r = others[next_index(engine, others.size())];
        }
    }

    std::vector<bool> deleted(residues.size(), false);
    std::vector<bool> touched(residues.size(), false);
    for (const auto& edit : edits) {
        if (edit.position >= residues.size())
            throw Error(ErrorCode::InvalidEdit,
                        "edit position " + std::to_string(edit.position) + " beyond length " +
                            std::to_string(residues.size()));
        if (touched[edit.position])
            throw Error(ErrorCode::InvalidEdit,
                        "position " + std::to_string(edit.position) + " edited twice");
        touched[edit.position] = true;
        if (edit.kind == SequenceEdit::Kind::Delete) {
            deleted[edit.position] = true;
        } else {
            if (!std::isalpha(static_cast<unsigned char>(edit.base)))
                throw Error(ErrorCode::InvalidEdit, "substitution base must be a letter");
            residues[edit.position] = static_cast<char>(std::toupper(static_cast<unsigned char>(edit.base)));
        }
    }

    std::string kept;
    kept.reserve(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i)
        if (!deleted[i]) kept.push_back(residues[i]);
    if (kept.empty()) throw Error(ErrorCode::InvalidEdit, "edits delete every residue");

    return DnaSequence(motif.id() + "_x" + std::to_string(copies), kept);
}

DnaSequence random_sequence(std::size_t n, std::uint64_t seed, std::string id) {
    if (n < 1) throw Error(ErrorCode::EmptyRecord, "random sequence length must be positive");
    std::mt19937_64 engine(seed);
    std::string residues(n, 'A');
    for (char& r : residues) r = kNucleotideSymbols[next_index(engine, 4)];
    return DnaSequence(std::move(id), residues);
}

DnaSequence shuffled(const DnaSequence& seq, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::string residues = seq.residues();
    for (std::size_t i = residues.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(next_index(engine, i));
        std::swap(residues[i - 1], residues[j]);
    }
    return DnaSequence(seq.id() + "_shuffled", residues);
}

}  // namespace pps

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pps/error.hpp"

namespace pps {

enum class AmbiguityPolicy {
    Strict,   // anything outside ACGT is an error
    Lenient,  // non-ACGT columns become all-zero; U is read as T
};

/// Channel order follows the A, T, C, G convention used throughout.
enum class Nucleotide : std::uint8_t { A = 0, T = 1, C = 2, G = 3 };

inline constexpr std::array<Nucleotide, 4> kNucleotides{
    Nucleotide::A, Nucleotide::T, Nucleotide::C, Nucleotide::G};
inline constexpr std::array<char, 4> kNucleotideSymbols{'A', 'T', 'C', 'G'};

/// Channel index of an uppercase residue, or -1 when it is not one of ACGT.
constexpr int channel_index(char residue) noexcept {
    switch (residue) {
        case 'A': return 0;
        case 'T': return 1;
        case 'C': return 2;
        case 'G': return 3;
        default: return -1;
    }
}

class DnaSequence {
public:
    /// Residues are uppercased. Throws EmptyRecord for an empty residue
    /// string and, under the strict policy, InvalidResidue.
    DnaSequence(std::string id, std::string_view residues,
                AmbiguityPolicy policy = AmbiguityPolicy::Lenient,
                std::string source = {});

    const std::string& id() const noexcept { return id_; }
    const std::string& residues() const noexcept { return residues_; }
    const std::string& source() const noexcept { return source_; }
    std::size_t length() const noexcept { return residues_.size(); }

    /// Count of residues outside {A,C,G,T}.
    std::size_t ambiguous_count() const noexcept;

    friend bool operator==(const DnaSequence&, const DnaSequence&) = default;

private:
    std::string id_;
    std::string residues_;
    std::string source_;
};

/// Four 0/1 indicator channels of a sequence.
class IndicatorSet {
public:
    using Channel = std::vector<std::uint8_t>;

    IndicatorSet() = default;
    explicit IndicatorSet(std::array<Channel, 4> channels);

    std::size_t length() const noexcept { return channels_[0].size(); }
    std::span<const std::uint8_t> channel(Nucleotide n) const noexcept {
        return channels_[static_cast<std::size_t>(n)];
    }
    std::span<const std::uint8_t> channel(std::size_t index) const noexcept {
        return channels_[index];
    }

    /// Per-position channel index, 4 for an all-zero column.
    std::vector<std::uint8_t> codes() const;

    /// Number of columns with no channel set (non-ACGT under lenient mapping).
    std::size_t empty_columns() const noexcept;

    /// Restricts to positions [start, start + count).
    IndicatorSet slice(std::size_t start, std::size_t count) const;

    friend bool operator==(const IndicatorSet&, const IndicatorSet&) = default;

private:
    std::array<Channel, 4> channels_;
};

/// Finite real-valued samples, at least one.
class RealSignal {
public:
    explicit RealSignal(std::vector<double> samples);

    std::size_t length() const noexcept { return samples_.size(); }
    std::span<const double> samples() const noexcept { return samples_; }
    double operator[](std::size_t i) const noexcept { return samples_[i]; }

private:
    std::vector<double> samples_;
};

std::vector<DnaSequence> parse_fasta(std::istream& input,
                                     AmbiguityPolicy policy = AmbiguityPolicy::Lenient,
                                     const std::string& source = {});
std::vector<DnaSequence> parse_fasta(std::string_view text,
                                     AmbiguityPolicy policy = AmbiguityPolicy::Lenient,
                                     const std::string& source = {});

/// Writes `>id` followed by residues wrapped at `line_width` columns.
void write_fasta(std::ostream& out, const DnaSequence& seq, std::size_t line_width = 70);

IndicatorSet voss_map(const DnaSequence& seq,
                      AmbiguityPolicy policy = AmbiguityPolicy::Lenient);

/// Inverse of the mapping for pure-ACGT data; empty columns become 'N'.
std::string residues_from_indicators(const IndicatorSet& ind);

/// The 0/1 channel as doubles, for use with the real-signal transforms.
RealSignal channel_signal(const IndicatorSet& ind, Nucleotide n);

}  // namespace pps

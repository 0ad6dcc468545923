#include "pps/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace pps {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::EmptyRecord: return "EmptyRecord";
        case ErrorCode::InvalidResidue: return "InvalidResidue";
        case ErrorCode::InvalidSignal: return "InvalidSignal";
        case ErrorCode::PeriodOutOfRange: return "PeriodOutOfRange";
        case ErrorCode::UnsupportedClosedForm: return "UnsupportedClosedForm";
        case ErrorCode::WindowTooLarge: return "WindowTooLarge";
        case ErrorCode::InvalidEdit: return "InvalidEdit";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string residue_message(std::size_t position, char residue) {
    std::ostringstream os;
    os << "invalid residue '" << residue << "' at position " << position;
    return os.str();
}

}  // namespace

InvalidResidueError::InvalidResidueError(std::size_t position, char residue)
    : Error(ErrorCode::InvalidResidue, residue_message(position, residue)),
      position_(position),
      residue_(residue) {}

// ---------------------------------------------------------------------------
// DnaSequence

DnaSequence::DnaSequence(std::string id, std::string_view residues,
                         AmbiguityPolicy policy, std::string source)
    : id_(std::move(id)), source_(std::move(source)) {
    if (residues.empty())
        throw Error(ErrorCode::EmptyRecord, "record '" + id_ + "' has no residues");
    residues_.reserve(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(residues[i])));
        if (policy == AmbiguityPolicy::Strict && channel_index(c) < 0)
            throw InvalidResidueError(i, c);
        residues_.push_back(c);
    }
}

std::size_t DnaSequence::ambiguous_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        residues_.begin(), residues_.end(), [](char c) { return channel_index(c) < 0; }));
}

// ---------------------------------------------------------------------------
// IndicatorSet

IndicatorSet::IndicatorSet(std::array<Channel, 4> channels) : channels_(std::move(channels)) {
    const std::size_t n = channels_[0].size();
    for (const auto& ch : channels_) {
        if (ch.size() != n)
            throw Error(ErrorCode::InvalidSignal, "indicator channels differ in length");
    }
    for (std::size_t i = 0; i < n; ++i) {
        unsigned column = 0;
        for (const auto& ch : channels_) {
            if (ch[i] > 1)
                throw Error(ErrorCode::InvalidSignal, "indicator values must be 0 or 1");
            column += ch[i];
        }
        if (column > 1)
            throw Error(ErrorCode::InvalidSignal, "more than one channel set at a position");
    }
}

std::vector<std::uint8_t> IndicatorSet::codes() const {
    std::vector<std::uint8_t> out(length(), 4);
    for (std::size_t c = 0; c < 4; ++c) {
        const auto& ch = channels_[c];
        for (std::size_t i = 0; i < ch.size(); ++i)
            if (ch[i]) out[i] = static_cast<std::uint8_t>(c);
    }
    return out;
}

std::size_t IndicatorSet::empty_columns() const noexcept {
    std::size_t set = 0;
    for (const auto& ch : channels_) set += static_cast<std::size_t>(std::count(ch.begin(), ch.end(), 1));
    return length() - set;
}

IndicatorSet IndicatorSet::slice(std::size_t start, std::size_t count) const {
    if (start > length() || count > length() - start)
        throw Error(ErrorCode::WindowTooLarge, "slice exceeds sequence length");
    IndicatorSet out;
    for (std::size_t c = 0; c < 4; ++c) {
        const auto first = channels_[c].begin() + static_cast<std::ptrdiff_t>(start);
        out.channels_[c].assign(first, first + static_cast<std::ptrdiff_t>(count));
    }
    return out;
}

// ---------------------------------------------------------------------------
// RealSignal

RealSignal::RealSignal(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw Error(ErrorCode::EmptyInput, "signal has no samples");
    for (double v : samples_)
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidSignal, "signal contains a non-finite sample");
}

// ---------------------------------------------------------------------------
// FASTA

namespace {

bool is_residue_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return !std::isspace(u) && !std::isdigit(u);
}

std::string header_id(std::string_view header) {
    while (!header.empty() && std::isspace(static_cast<unsigned char>(header.front())))
        header.remove_prefix(1);
    const auto end = std::find_if(header.begin(), header.end(),
                                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    return std::string(header.begin(), end);
}

}  // namespace

std::vector<DnaSequence> parse_fasta(std::string_view text, AmbiguityPolicy policy,
                                     const std::string& source) {
    std::vector<DnaSequence> records;
    bool saw_content = false;
    bool in_record = false;
    std::string id;
    std::string residues;

    auto flush = [&] {
        if (!in_record) return;
        if (id.empty()) id = "seq" + std::to_string(records.size() + 1);
        records.emplace_back(id, residues, policy, source);
        id.clear();
        residues.clear();
        in_record = false;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        std::size_t lead = 0;
        while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
        if (lead == line.size()) continue;
        saw_content = true;

        if (line[lead] == '>') {
            flush();
            in_record = true;
            id = header_id(line.substr(lead + 1));
            continue;
        }
        // Headerless text, or residues ahead of the first header.
        in_record = true;
        for (char c : line)
            if (is_residue_char(c)) residues.push_back(c);
    }
    flush();

    if (!saw_content) throw Error(ErrorCode::EmptyInput, "empty input");
    return records;
}

std::vector<DnaSequence> parse_fasta(std::istream& input, AmbiguityPolicy policy,
                                     const std::string& source) {
    std::string text{std::istreambuf_iterator<char>(input), std::istreambuf_iterator<char>()};
    if (input.bad()) throw Error(ErrorCode::Io, "failed reading input");
    return parse_fasta(std::string_view(text), policy, source);
}

void write_fasta(std::ostream& out, const DnaSequence& seq, std::size_t line_width) {
    if (line_width == 0) line_width = seq.length();
    out << '>' << seq.id() << '\n';
    const std::string& r = seq.residues();
    for (std::size_t i = 0; i < r.size(); i += line_width)
        out << std::string_view(r).substr(i, line_width) << '\n';
}

// ---------------------------------------------------------------------------
// Indicator mapping

IndicatorSet voss_map(const DnaSequence& seq, AmbiguityPolicy policy) {
    const std::size_t n = seq.length();
    std::array<IndicatorSet::Channel, 4> channels;
    for (auto& ch : channels) ch.assign(n, 0);

    const std::string& r = seq.residues();
    for (std::size_t i = 0; i < n; ++i) {
        int c = channel_index(r[i]);
        if (c < 0) {
            if (policy == AmbiguityPolicy::Strict) throw InvalidResidueError(i, r[i]);
            if (r[i] == 'U') c = channel_index('T');
        }
        if (c >= 0) channels[static_cast<std::size_t>(c)][i] = 1;
    }
    return IndicatorSet(std::move(channels));
}

std::string residues_from_indicators(const IndicatorSet& ind) {
    std::string out;
    out.reserve(ind.length());
    for (std::uint8_t code : ind.codes()) out.push_back(code < 4 ? kNucleotideSymbols[code] : 'N');
    return out;
}

RealSignal channel_signal(const IndicatorSet& ind, Nucleotide n) {
    const auto ch = ind.channel(n);
    return RealSignal(std::vector<double>(ch.begin(), ch.end()));
}

}  // namespace pps

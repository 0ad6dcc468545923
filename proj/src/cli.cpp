#include "pps/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pps/analysis.hpp"
#include "pps/report.hpp"
#include "pps/sequence.hpp"
#include "pps/transform.hpp"

namespace pps::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string input = "-";
    std::size_t p_min = 2;
    std::size_t p_max = 0;  // 0: default_p_max(N)
    std::vector<std::size_t> periods;
    std::size_t window = 60;
    std::size_t step = 1;
    double threshold = 1.0;
    bool peaks_only = false;
    bool strict = false;
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 0;
    double sigma = 0.0;

    // synth
    std::string synth_kind;
    std::size_t n = 300;
    std::string motif = "ATCGA";
    std::size_t copies = 6;
    std::vector<std::string> substitutions;
    std::vector<std::size_t> deletions;
    double rate = 0.0;

    AmbiguityPolicy policy() const { return strict ? AmbiguityPolicy::Strict : AmbiguityPolicy::Lenient; }
};

/// Failure carrying a process exit code and a one-line diagnostic.
struct Failure {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail_validation(const std::string& message) { throw Failure{kExitValidation, message}; }

int exit_code_for(ErrorCode code) {
    return code == ErrorCode::Io || code == ErrorCode::EmptyInput ? kExitIo : kExitValidation;
}

std::vector<DnaSequence> read_sequences(const RunConfig& cfg, std::istream& in, std::ostream& err) {
    std::vector<DnaSequence> records;
    if (cfg.input == "-") {
        records = parse_fasta(in, cfg.policy(), "-");
    } else {
        std::ifstream file(cfg.input, std::ios::binary);
        if (!file) throw Failure{kExitIo, "cannot open '" + cfg.input + "'"};
        records = parse_fasta(file, cfg.policy(), cfg.input);
    }
    for (const auto& r : records) {
        if (const auto amb = r.ambiguous_count())
            err << "pps: warning: record '" << r.id() << "' has " << amb
                << " non-ACGT residues mapped to empty columns\n";
    }
    return records;
}

Json base_meta(const RunConfig& cfg, const std::vector<DnaSequence>& records) {
    Json meta;
    meta["command"] = cfg.command;
    meta["input"] = cfg.input;
    meta["format"] = cfg.format;
    meta["policy"] = cfg.strict ? "strict" : "lenient";
    auto seqs = Json::array();
    for (const auto& r : records) seqs.push_back({{"id", r.id()}, {"length", r.length()}});
    if (records.size() == 1) {
        meta["sequence_id"] = records.front().id();
        meta["length"] = records.front().length();
    }
    meta["sequences"] = std::move(seqs);
    return meta;
}

// Multi-record inputs carry a leading id column in every encoding.
void add_columns(Table& t, bool multi, std::initializer_list<const char*> names) {
    if (multi) t.columns.emplace_back("id");
    for (const char* n : names) t.columns.emplace_back(n);
}

std::vector<Cell> row_for(bool multi, const DnaSequence& seq, std::initializer_list<Cell> cells) {
    std::vector<Cell> row;
    if (multi) row.emplace_back(seq.id());
    row.insert(row.end(), cells.begin(), cells.end());
    return row;
}

Cell int_cell(std::size_t v) { return static_cast<std::int64_t>(v); }

std::vector<std::size_t> require_periods(const RunConfig& cfg) {
    if (cfg.periods.empty()) fail_validation("at least one --p is required");
    return cfg.periods;
}

// ---------------------------------------------------------------------------

Table cmd_scan(const RunConfig& cfg, const std::vector<DnaSequence>& records) {
    if (!(cfg.threshold > 0.0)) fail_validation("threshold must be positive");
    const bool multi = records.size() > 1;
    Table t;
    t.meta = base_meta(cfg, records);
    t.meta["p_min"] = cfg.p_min;
    t.meta["p_max"] = cfg.p_max == 0 ? Json("default") : Json(cfg.p_max);
    t.meta["threshold"] = cfg.threshold;
    if (cfg.peaks_only)
        add_columns(t, multi, {"p", "snr", "local_max"});
    else
        add_columns(t, multi, {"p", "power", "snr"});

    for (const auto& seq : records) {
        const std::size_t n = seq.length();
        const std::size_t p_max = cfg.p_max == 0 ? std::min(default_p_max(n), n) : cfg.p_max;
        if (cfg.p_min < 1 || cfg.p_min > p_max || p_max > n) fail_validation("invalid periodicity range");
        const auto spec = scan(voss_map(seq, cfg.policy()), cfg.p_min, p_max, seq.id());
        if (cfg.peaks_only) {
            for (const auto& e : detect_peaks(spec, cfg.threshold).entries)
                t.rows.push_back(row_for(multi, seq, {int_cell(e.period), e.snr, int_cell(e.local_max ? 1 : 0)}));
        } else {
            for (const auto& e : spec.entries)
                t.rows.push_back(row_for(multi, seq, {int_cell(e.period), e.power, e.snr}));
        }
    }
    return t;
}

Table cmd_compare(const RunConfig& cfg, const std::vector<DnaSequence>& records) {
    const auto periods = require_periods(cfg);
    const bool multi = records.size() > 1;
    Table t;
    t.meta = base_meta(cfg, records);
    t.meta["periods"] = periods;
    add_columns(t, multi,
                {"p", "n", "pps", "padded_n", "padded_bin", "dft_padded", "lower_bin", "dft_lower",
                 "upper_bin", "dft_upper", "divergent"});

    for (const auto& seq : records) {
        const auto ind = voss_map(seq, cfg.policy());
        const std::size_t n = ind.length();
        for (std::size_t p : periods) {
            if (p < 1 || p > n) fail_validation("invalid periodicity range");
            const double power = pps_dna(ind, p);
            const auto padded = zero_pad_to_multiple(ind, p);
            const std::size_t padded_bin = padded.length() / p;
            const std::size_t lower = n / p;
            const std::size_t upper = (n + p - 1) / p;
            t.rows.push_back(row_for(
                multi, seq,
                {int_cell(p), int_cell(n), power, int_cell(padded.length()), int_cell(padded_bin),
                 dft_power_dna_bin(padded, padded_bin), int_cell(lower), dft_power_dna_bin(ind, lower),
                 int_cell(upper), dft_power_dna_bin(ind, upper), int_cell(n % p != 0 ? 1 : 0)}));
        }
    }
    return t;
}

Table cmd_window(const RunConfig& cfg, const std::vector<DnaSequence>& records) {
    const auto periods = require_periods(cfg);
    if (cfg.step < 1) fail_validation("step must be positive");
    const bool multi = records.size() > 1;
    Table t;
    t.meta = base_meta(cfg, records);
    t.meta["periods"] = periods;
    t.meta["window"] = cfg.window;
    t.meta["step"] = cfg.step;
    add_columns(t, multi, {"p", "start", "snr"});

    for (const auto& seq : records) {
        const auto ind = voss_map(seq, cfg.policy());
        if (cfg.window < 1 || cfg.window > ind.length()) fail_validation("window larger than sequence");
        for (std::size_t p : periods) {
            if (p < 1 || p > cfg.window) fail_validation("invalid periodicity range");
            for (const auto& pt : sliding_window(ind, p, cfg.window, cfg.step).points)
                t.rows.push_back(row_for(multi, seq, {int_cell(p), int_cell(pt.start), pt.snr}));
        }
    }
    return t;
}

Table cmd_walk(const RunConfig& cfg, const std::vector<DnaSequence>& records) {
    const auto periods = require_periods(cfg);
    if (cfg.step < 1) fail_validation("step must be positive");
    const bool multi = records.size() > 1;
    Table t;
    t.meta = base_meta(cfg, records);
    t.meta["periods"] = periods;
    t.meta["step"] = cfg.step;
    add_columns(t, multi, {"p", "prefix_len", "power"});

    for (const auto& seq : records) {
        const auto ind = voss_map(seq, cfg.policy());
        for (std::size_t p : periods) {
            if (p < 1 || p > ind.length()) fail_validation("invalid periodicity range");
            for (const auto& pt : dna_walk(ind, p, cfg.step).points)
                t.rows.push_back(row_for(multi, seq, {int_cell(p), int_cell(pt.prefix_length), pt.power}));
        }
    }
    return t;
}

SequenceEdit parse_substitution(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon + 2 != spec.size())
        fail_validation("substitution must look like POS:BASE, got '" + spec + "'");
    try {
        std::size_t used = 0;
        const auto pos = std::stoull(spec.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(spec);
        return {SequenceEdit::Kind::Substitute, static_cast<std::size_t>(pos), spec[colon + 1]};
    } catch (const std::logic_error&) {
        fail_validation("substitution must look like POS:BASE, got '" + spec + "'");
    }
}

void cmd_synth(const RunConfig& cfg, std::ostream& out) {
    if (cfg.synth_kind == "fig1") {
        if (cfg.n < 1) fail_validation("--n must be positive");
        if (!(cfg.sigma >= 0.0)) fail_validation("--sigma must be non-negative");
        const auto x = synth_fig1(cfg.n, cfg.sigma, cfg.seed);
        Table t;
        t.meta["command"] = "synth fig1";
        t.meta["n"] = cfg.n;
        t.meta["sigma"] = cfg.sigma;
        t.meta["seed"] = cfg.seed;
        t.columns = {"n", "value"};
        for (std::size_t i = 0; i < x.length(); ++i) t.rows.push_back({int_cell(i + 1), x[i]});
        emit(out, t, parse_format(cfg.format));
        return;
    }
    std::vector<SequenceEdit> edits;
    for (const auto& s : cfg.substitutions) edits.push_back(parse_substitution(s));
    for (std::size_t d : cfg.deletions) edits.push_back({SequenceEdit::Kind::Delete, d, 'N'});
    const DnaSequence motif("repeat_" + cfg.motif, cfg.motif, AmbiguityPolicy::Strict);
    write_fasta(out, synth_repeat(motif, cfg.copies, edits, cfg.seed, cfg.rate));
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& cfg, bool with_input = true) {
    if (with_input) sub->add_option("input", cfg.input, "FASTA or plain sequence file, '-' for stdin");
    sub->add_option("--format", cfg.format, "Output encoding")
        ->check(CLI::IsMember({"csv", "tsv", "json"}));
    sub->add_flag("--strict", cfg.strict, "Reject residues outside ACGT");
    sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Periodic power spectrum analysis of DNA sequences", "pps"};
    app.require_subcommand(1);

    auto* scan_cmd = app.add_subcommand("scan", "PPS and SNR over a periodicity range");
    add_common(scan_cmd, cfg);
    scan_cmd->add_option("--pmin", cfg.p_min, "Smallest periodicity");
    scan_cmd->add_option("--pmax", cfg.p_max, "Largest periodicity (default ceil(sqrt(2N)))");
    scan_cmd->add_option("--threshold", cfg.threshold, "SNR threshold for --peaks");
    scan_cmd->add_flag("--peaks", cfg.peaks_only, "Emit only entries with SNR at or above threshold");

    auto* compare_cmd = app.add_subcommand("compare", "PPS against padded and unpadded DFT bins");
    add_common(compare_cmd, cfg);
    compare_cmd->add_option("--p", cfg.periods, "Periodicity (repeatable)");

    auto* window_cmd = app.add_subcommand("window", "Sliding-window SNR profile");
    add_common(window_cmd, cfg);
    window_cmd->add_option("--p", cfg.periods, "Periodicity (repeatable)");
    window_cmd->add_option("--window", cfg.window, "Window size in bp");
    window_cmd->add_option("--step", cfg.step, "Window step in bp");

    auto* walk_cmd = app.add_subcommand("walk", "PPS of growing prefixes");
    add_common(walk_cmd, cfg);
    walk_cmd->add_option("--p", cfg.periods, "Periodicity (repeatable)");
    walk_cmd->add_option("--step", cfg.step, "Prefix increment in motif copies");

    auto* synth_cmd = app.add_subcommand("synth", "Emit synthetic fixtures");
    synth_cmd->add_option("kind", cfg.synth_kind, "fig1 or repeat")
        ->required()
        ->check(CLI::IsMember({"fig1", "repeat"}));
    add_common(synth_cmd, cfg, false);
    synth_cmd->add_option("--n", cfg.n, "fig1: number of samples");
    synth_cmd->add_option("--sigma", cfg.sigma, "fig1: Gaussian noise standard deviation");
    synth_cmd->add_option("--seed", cfg.seed, "Random seed");
    synth_cmd->add_option("--motif", cfg.motif, "repeat: motif");
    synth_cmd->add_option("--copies", cfg.copies, "repeat: number of copies");
    synth_cmd->add_option("--sub", cfg.substitutions, "repeat: substitution POS:BASE (repeatable)");
    synth_cmd->add_option("--del", cfg.deletions, "repeat: delete position (repeatable)");
    synth_cmd->add_option("--rate", cfg.rate, "repeat: random substitution rate");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "pps: " << e.what() << '\n';
        return kExitValidation;
    }

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    std::ostringstream buffer;
    try {
        if (cfg.command == "synth") {
            cmd_synth(cfg, buffer);
        } else {
            const auto records = read_sequences(cfg, in, err);
            Table t;
            if (cfg.command == "scan") t = cmd_scan(cfg, records);
            else if (cfg.command == "compare") t = cmd_compare(cfg, records);
            else if (cfg.command == "window") t = cmd_window(cfg, records);
            else t = cmd_walk(cfg, records);
            emit(buffer, t, parse_format(cfg.format));
        }
    } catch (const Failure& f) {
        err << "pps: " << f.message << '\n';
        return f.exit_code;
    } catch (const Error& e) {
        err << "pps: " << e.what() << '\n';
        return exit_code_for(e.code());
    }

    if (cfg.out.empty()) {
        out << buffer.str();
        out.flush();
        if (!out) {
            err << "pps: failed writing output\n";
            return kExitIo;
        }
        return kExitOk;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    file << buffer.str();
    file.close();
    if (!file) {
        err << "pps: cannot write '" << cfg.out << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace pps::cli

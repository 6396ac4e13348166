#include "antipow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "antipow/abelian.hpp"
#include "antipow/calculus.hpp"
#include "antipow/scan.hpp"
#include "antipow/word.hpp"

namespace antipow::cli {

namespace {

/// Raised for user errors that map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

struct RunConfig {
    std::string command;
    std::string word = "paperfolding";
    std::string instructions = "(+)";
    std::size_t length = 0;
    std::size_t order = 0;
    std::size_t d_max = 0;
    std::size_t max_n = 0;
    std::string kind;
    bool avoidance = false;
    std::string output;
    std::optional<Format> format;
    unsigned threads = 1;

    // delta
    std::string l = "0", d, m, n;
    bool combine = false;
    std::string l2, d2;
    std::optional<std::size_t> r;
};

InstructionSequence parse_instructions(const std::string& text) {
    try {
        return InstructionSequence::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

BigInt parse_big(const std::string& text, const char* flag) {
    try {
        return parse_decimal(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("invalid integer for ") + flag + ": '" + text + "'");
    }
}

FiniteWord make_word(const RunConfig& cfg, std::size_t length) {
    if (length == 0) throw UsageError("--length must be positive");
    if (cfg.word == "sierpinski") return sierpinski_prefix(length);
    if (cfg.word == "thue-morse") return thue_morse_prefix(length);
    if (cfg.word == "paperfolding") return toeplitz_paperfolding_prefix(parse_instructions(cfg.instructions), length);
    throw UsageError("unknown word '" + cfg.word + "'");
}

std::size_t default_complexity_length(const RunConfig& cfg) {
    if (cfg.word == "sierpinski") {
        // 3^{ceil(log3 n) + 1}: long enough to hold every Parikh class of length-n factors.
        std::size_t p = 1;
        while (p < cfg.max_n) p *= 3;
        return 3 * p;
    }
    return std::max<std::size_t>(16384, 4 * cfg.max_n);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    const auto w = make_word(cfg, cfg.length);
    if (cfg.format.value_or(Format::text) == Format::json)
        out << nlohmann::ordered_json{{"word", w.str()}}.dump() << '\n';
    else
        out << w.str() << '\n';
    return kSuccess;
}

int cmd_complexity(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_n == 0) throw UsageError("--max-n must be positive");
    ComplexityKind kind = ComplexityKind::abelian;
    if (cfg.kind == "factor")
        kind = ComplexityKind::factor;
    else if (!cfg.kind.empty() && cfg.kind != "abelian")
        throw UsageError("--kind must be abelian or factor");
    const std::size_t length = cfg.length ? cfg.length : default_complexity_length(cfg);
    if (cfg.max_n > length) throw UsageError("--max-n exceeds the prefix length");
    const auto table = complexity_table(make_word(cfg, length), cfg.max_n, kind);
    switch (cfg.format.value_or(Format::csv)) {
        case Format::csv: write_csv(out, table); break;
        case Format::json:
            for (const auto& [n, v] : table.rows) out << nlohmann::ordered_json{{"n", n}, {"value", v}}.dump() << '\n';
            break;
        case Format::text:
            for (const auto& [n, v] : table.rows) out << n << ' ' << v << '\n';
            break;
    }
    return kSuccess;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.order < 2) throw UsageError("--order must be at least 2");
    ScanKind kind;
    try {
        kind = parse_scan_kind(cfg.kind.empty() ? "abelian-antipower" : cfg.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto w = make_word(cfg, cfg.length);
    if (cfg.avoidance) {
        if (avoidance_scan(w, cfg.order, kind, cfg.threads)) {
            out << "none found: avoidance verified\n";
            return kSuccess;
        }
        out << "occurrence found: avoidance failed\n";
        return kDomainViolation;
    }
    const std::size_t d_max = cfg.d_max ? cfg.d_max : w.size();
    const auto hit = find_first(w, cfg.order, kind, d_max);
    if (!hit)
        out << "none\n";
    else if (cfg.format.value_or(Format::json) == Format::json)
        out << to_json(*hit) << '\n';
    else
        out << "start=" << hit->start << " d=" << hit->cell_width << " m=" << hit->order << " kind=" << to_string(kind)
            << '\n';
    return kSuccess;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
    if (cfg.order < 2) throw UsageError("--order must be at least 2");
    const auto b = parse_instructions(cfg.instructions);
    const auto cert = construct_antipower(b, cfg.order);
    if (cfg.format.value_or(Format::json) == Format::json) {
        out << to_json(cert) << '\n';
    } else {
        out << "instructions " << cert.instructions.str() << "\nm " << cert.order << "\nk " << cert.power_exponent
            << "\nu " << cert.block_exponent << "\nstart " << cert.start << "\ncell_width " << cert.cell_width
            << "\ncell_one_counts";
        for (const auto& c : cert.cell_one_counts) out << ' ' << c;
        out << "\nverified " << (cert.verified ? "true" : "false") << '\n';
    }
    return cert.verified ? kSuccess : kVerificationFailure;
}

nlohmann::ordered_json delta_json(const DeltaVector& v) {
    auto arr = nlohmann::ordered_json::array();
    for (auto c : v.components) arr.push_back(c);
    return arr;
}

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
    const auto b = parse_instructions(cfg.instructions);
    const bool json = cfg.format.value_or(Format::text) == Format::json;
    const BigInt l = parse_big(cfg.l, "--l");
    if (l < 0) throw UsageError("--l must be nonnegative");

    if (!cfg.n.empty()) {
        const BigInt n = parse_big(cfg.n, "--n");
        if (n <= l) throw UsageError("--n must exceed --l");
        const auto value = delta_interval(b, l, n);
        if (json)
            out << nlohmann::ordered_json{{"l", to_decimal(l)}, {"n", to_decimal(n)}, {"delta", value}}.dump() << '\n';
        else
            out << value << '\n';
        return kSuccess;
    }

    if (cfg.d.empty() || cfg.m.empty()) throw UsageError("delta needs --d and --m (or --n for a scalar)");
    const BigInt d = parse_big(cfg.d, "--d");
    const BigInt m_big = parse_big(cfg.m, "--m");
    if (d < 1 || m_big < 1 || m_big > 1'000'000) throw UsageError("--d must be positive and 1 <= --m <= 10^6");
    const auto m = static_cast<std::size_t>(m_big);

    if (!cfg.combine) {
        const auto v = delta_vector(b, l, d, m);
        if (json)
            out << nlohmann::ordered_json{{"l", to_decimal(l)}, {"d", to_decimal(d)}, {"m", m}, {"delta", delta_json(v)}}
                       .dump()
                << '\n';
        else
            out << to_string(v) << '\n';
        return kSuccess;
    }

    if (cfg.l2.empty() || cfg.d2.empty() || !cfg.r) throw UsageError("--combine needs --l2, --d2 and --r");
    const Geometry base{l, d};
    const Geometry addend{parse_big(cfg.l2, "--l2"), parse_big(cfg.d2, "--d2")};
    if (addend.start < 0 || addend.cell_width < 1) throw UsageError("--l2 must be nonnegative and --d2 positive");
    const auto report = additivity_precheck(b, base, addend, m, *cfg.r);
    if (!report.ok()) {
        if (json)
            out << nlohmann::ordered_json{{"precheck", "violation"}, {"report", report.describe()}}.dump() << '\n';
        else
            out << "precheck: violation: " << report.describe() << '\n';
        return kDomainViolation;
    }
    const auto combined = additivity_combine(b, base, addend, m, *cfg.r);
    const auto v = delta_vector(b, combined.start, combined.cell_width, m);
    if (json)
        out << nlohmann::ordered_json{{"precheck", "ok"},
                                      {"l", to_decimal(combined.start)},
                                      {"d", to_decimal(combined.cell_width)},
                                      {"m", m},
                                      {"delta", delta_json(v)}}
                   .dump()
            << '\n';
    else
        out << "precheck: ok\ncombined: l=" << combined.start << " d=" << combined.cell_width << "\ndelta: "
            << to_string(v) << '\n';
    return kSuccess;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "generate") return cmd_generate(cfg, out);
    if (cfg.command == "complexity") return cmd_complexity(cfg, out);
    if (cfg.command == "scan") return cmd_scan(cfg, out);
    if (cfg.command == "construct") return cmd_construct(cfg, out);
    if (cfg.command == "delta") return cmd_delta(cfg, out);
    throw UsageError("missing command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Abelian structure of Sierpinski, Thue-Morse and paperfolding words", "antipow"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    app.add_option("--output", cfg.output, "Write results to this file instead of standard output");
    app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("json|csv|text");
    app.add_option("--threads", cfg.threads, "Worker threads for avoidance scans")->check(CLI::Range(1u, 256u));

    const std::vector<std::string> words{"sierpinski", "thue-morse", "paperfolding"};
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("word", cfg.word, "sierpinski | thue-morse | paperfolding")->required()->check(
            CLI::IsMember(words));
        sub->add_option("--instructions", cfg.instructions, "Folding instructions PRE(PER), e.g. (+) or +-(-)");
    };

    auto* gen = app.add_subcommand("generate", "Print a prefix of a word");
    add_word(gen);
    gen->add_option("--length", cfg.length, "Prefix length")->required();

    auto* cx = app.add_subcommand("complexity", "Abelian or factor complexity table");
    add_word(cx);
    cx->add_option("--max-n", cfg.max_n, "Largest factor length")->required();
    cx->add_option("--kind", cfg.kind, "abelian (default) or factor");
    cx->add_option("--length", cfg.length, "Prefix length to analyze");

    auto* scan = app.add_subcommand("scan", "Search for powers and antipowers");
    add_word(scan);
    scan->add_option("--length", cfg.length, "Prefix length")->required();
    scan->add_option("--order", cfg.order, "Number of cells m")->required();
    scan->add_option("--kind", cfg.kind, "power | abelian-power | antipower | abelian-antipower");
    scan->add_option("--d-max", cfg.d_max, "Largest cell width for the first-hit search");
    scan->add_flag("--avoidance", cfg.avoidance, "Exhaustively verify that no occurrence exists");

    auto* con = app.add_subcommand("construct", "Synthesize a verified abelian antipower certificate");
    con->add_option("--instructions", cfg.instructions, "Folding instructions PRE(PER)");
    con->add_option("--order", cfg.order, "Antipower order m >= 2")->required();

    auto* del = app.add_subcommand("delta", "Extra-ones vectors and the additivity check");
    del->add_option("--instructions", cfg.instructions, "Folding instructions PRE(PER)");
    del->add_option("--l", cfg.l, "Start offset l");
    del->add_option("--d", cfg.d, "Cell width d");
    del->add_option("--m", cfg.m, "Number of cells m");
    del->add_option("--n", cfg.n, "Interval end for the scalar Delta(l, n)");
    del->add_flag("--combine", cfg.combine, "Combine (l, d) with (l2, d2) under exponent r");
    del->add_option("--l2", cfg.l2, "Addend start offset");
    del->add_option("--d2", cfg.d2, "Addend cell width");
    del->add_option("--r", cfg.r, "Additivity exponent r");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << '\n';
            return kUsage;
        }
    }
    std::ostream& sink = cfg.output.empty() ? out : file;

    try {
        return dispatch(cfg, sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const AdditivityViolation& e) {
        err << "error: " << e.what() << '\n';
        return kDomainViolation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailure;
    }
}

}  // namespace antipow::cli

#include "ncpart/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ncpart/bijection.hpp"
#include "ncpart/error.hpp"
#include "ncpart/oracles.hpp"
#include "ncpart/render.hpp"
#include "ncpart/verify.hpp"

namespace ncpart::cli {

namespace {

struct Config {
    std::string kind;
    int n = 0;
    int n_max = kDefaultNCeiling;
    bool count_only = false;
    bool trace = false;
    bool json = false;
    bool force = false;
    std::string format = "ascii";
    std::string out_path;
    std::string claim;
    int parallel = 1;
    std::vector<std::string> input;
};

std::string joined_input(const Config& c) {
    std::string text;
    for (std::size_t i = 0; i < c.input.size(); ++i) {
        if (i) text += ' ';
        text += c.input[i];
    }
    return text;
}

// Inputs come from the positional arguments, or one per stdin line.
std::vector<std::string> input_lines(const Config& c, std::istream& in) {
    if (!c.input.empty()) return {joined_input(c)};
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

CatSeq parse_catseq(const std::string& text) {
    auto entries = parse_sequence(text);
    if (auto why = sequence_violation(entries)) {
        throw ValidationError("sequence [" + text + "] is not in S_n: " + *why);
    }
    return CatSeq(std::move(entries));
}

Partition parse_special(const std::string& text) {
    Partition p = parse_partition(text);
    if (auto why = special_violation(p)) {
        throw ValidationError("partition " + p.to_string() + " is not special: " + *why);
    }
    return p;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    if (c.kind == "special") {
        const auto parts = enumerate_special(c.n);
        if (c.count_only) {
            out << parts.size() << '\n';
        } else {
            for (const Partition& p : parts) out << p.to_string() << '\n';
        }
    } else {
        std::uint64_t count = 0;
        for_each_sequence(c.n, [&](std::span<const int> s) {
            ++count;
            if (!c.count_only) out << format_sequence(s) << '\n';
        });
        if (c.count_only) out << count << '\n';
    }
    return kOk;
}

int cmd_map(const Config& c, std::istream& in, std::ostream& out, const Hooks& hooks) {
    for (const std::string& line : input_lines(c, in)) {
        const Partition p = parse_special(line);
        out << (hooks.forward_map ? hooks.forward_map(p) : forward(p)).to_string() << '\n';
    }
    return kOk;
}

int cmd_invert(const Config& c, std::istream& in, std::ostream& out) {
    nlohmann::json traces = nlohmann::json::array();
    for (const std::string& line : input_lines(c, in)) {
        const CatSeq s = parse_catseq(line);
        if (!c.trace) {
            out << inverse(s).to_string() << '\n';
            continue;
        }
        const ConstructionTrace t = inverse_trace(s);
        if (c.json) {
            traces.push_back({{"sequence", s.to_string()},
                              {"partition", from_arcs(t.diagrams().back()).to_string()},
                              {"steps", trace_to_json(t)}});
        } else {
            out << trace_to_text(t) << from_arcs(t.diagrams().back()).to_string() << '\n';
        }
    }
    if (c.trace && c.json) out << traces.dump(2) << '\n';
    return kOk;
}

VerifyOptions verify_options(const Config& c, const Hooks& hooks) {
    VerifyOptions o;
    o.n_max = c.n_max;
    o.threads = c.parallel;
    o.forward_map = hooks.forward_map;
    return o;
}

bool over_ceiling(const Config& c, std::ostream& err) {
    if (c.n_max <= kDefaultNCeiling) return false;
    if (!c.force) {
        err << "error: --n-max " << c.n_max << " exceeds the ceiling " << kDefaultNCeiling
            << "; pass --force to run anyway\n";
        return true;
    }
    err << "warning: --n-max " << c.n_max << " exceeds the ceiling " << kDefaultNCeiling
        << "; this may take a long time\n";
    return false;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    if (over_ceiling(c, err)) return kUsageError;
    const VerifyOptions o = verify_options(c, hooks);
    const auto reports = run_verify(o);
    const auto report = verify_report_json(o, reports);
    out << report.dump(2) << '\n';
    return report["status"] == "pass" ? kOk : kValidationFailure;
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    if (over_ceiling(c, err)) return kUsageError;
    const VerifyOptions o = verify_options(c, hooks);
    const auto report = run_claim(c.claim, o);
    if (!report) {
        err << "error: unknown claim '" << c.claim << "'\n";
        return kUsageError;
    }
    if (c.json) {
        auto j = to_json(*report);
        j["schema"] = 1;
        out << j.dump(2) << '\n';
    } else {
        out << (report->passed ? "PASS " : "FAIL ") << report->claim << ' ' << report->range
            << " checked=" << report->count_checked;
        if (report->counterexample) out << " counterexample=" << *report->counterexample;
        out << '\n';
    }
    return report->passed ? kOk : kValidationFailure;
}

bool looks_like_partition(const std::string& text) {
    if (text.find_first_of(",|") != std::string::npos) return true;
    return parse_sequence(text).size() == 1;
}

std::string render_output(const Config& c, const std::string& text) {
    const bool as_partition =
        c.kind == "partition" || (c.kind != "sequence" && looks_like_partition(text));
    if (as_partition) {
        const Partition p = parse_partition(text);
        if (!is_noncrossing(p)) throw ValidationError("partition " + p.to_string() + " crosses");
        const ArcDiagram d = to_arcs(p);
        return c.format == "svg" ? render_svg(d) : render_ascii(d);
    }
    const CatSeq s = parse_catseq(text);
    if (!c.trace) {
        const ArcDiagram d = to_arcs(inverse(s));
        return c.format == "svg" ? render_svg(d) : render_ascii(d);
    }
    const ConstructionTrace t = inverse_trace(s);
    if (c.format == "svg") return render_trace(t);
    std::string text_out;
    const auto diagrams = t.diagrams();
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        if (k > 0 && diagrams[k] == diagrams[k - 1]) continue;
        text_out += "D" + std::to_string(k + 1) + "\n" + render_ascii(diagrams[k]) + "\n";
    }
    return text_out;
}

int cmd_render(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto lines = input_lines(c, in);
    if (lines.size() != 1) {
        err << "error: render takes exactly one partition or sequence\n";
        return kUsageError;
    }
    const std::string rendered = render_output(c, lines.front());
    if (c.out_path.empty()) {
        out << rendered;
        return kOk;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    file << rendered;
    file.close();
    if (!file) {
        err << "I/O error: cannot write '" << c.out_path << "'\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Hooks& hooks) {
    Config c;
    CLI::App app{"Special non-crossing partitions and their Catalan sequences", "ncpart"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "List special partitions or sequences");
    enumerate->add_option("--kind", c.kind, "special | sequences")
        ->required()
        ->check(CLI::IsMember({"special", "sequences"}));
    enumerate->add_option("--n", c.n, "Size parameter n (ground set [2n+1])")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--count-only", c.count_only, "Print only the count");

    auto* map = app.add_subcommand("map", "Special partition -> sequence");
    map->add_option("input", c.input, "Partition text, e.g. 1,5|2,4|3 (stdin if omitted)");

    auto* invert = app.add_subcommand("invert", "Sequence -> special partition");
    invert->add_option("input", c.input, "Sequence text, e.g. \"1 2\" (stdin if omitted)");
    invert->add_flag("--trace", c.trace, "Print every construction step");
    invert->add_flag("--json", c.json, "Trace as JSON");

    auto* verify = app.add_subcommand("verify", "Run every claim check, JSON report");
    auto* check = app.add_subcommand("check", "Run one claim check");
    check->add_option("claim", c.claim, "Claim name")->required();
    check->add_flag("--json", c.json, "JSON report");
    for (auto* sub : {verify, check}) {
        sub->add_option("--n-max", c.n_max, "Largest n checked")->check(CLI::NonNegativeNumber);
        sub->add_option("--parallel", c.parallel, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--force", c.force, "Allow --n-max above the ceiling");
    }

    auto* render = app.add_subcommand("render", "Draw the arc diagram");
    render->add_option("input", c.input, "Partition or sequence (stdin if omitted)");
    render->add_option("--format", c.format, "ascii | svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", c.out_path, "Output file (stdout if omitted)");
    render->add_option("--kind", c.kind, "partition | sequence (guessed if omitted)")
        ->check(CLI::IsMember({"partition", "sequence"}));
    render->add_flag("--trace", c.trace, "For a sequence, draw every construction step");

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*enumerate) return cmd_enumerate(c, out);
        if (*map) return cmd_map(c, in, out, hooks);
        if (*invert) return cmd_invert(c, in, out);
        if (*verify) return cmd_verify(c, out, err, hooks);
        if (*check) return cmd_check(c, out, err, hooks);
        if (*render) return cmd_render(c, in, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kUsageError;
}

}  // namespace ncpart::cli

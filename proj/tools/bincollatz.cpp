#include "bincollatz/classify.hpp"
#include "bincollatz/collatz.hpp"
#include "bincollatz/compose.hpp"
#include "bincollatz/error.hpp"
#include "bincollatz/powersum.hpp"
#include "bincollatz/traceio.hpp"
#include "bincollatz/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <thread>

using namespace bincollatz;

namespace {

constexpr const char* kCapEnv = "BINCOLLATZ_CAP";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& text, const std::string& what)
{
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
    return value;
}

// Cap from the environment, or the built-in default.
std::size_t default_cap(std::size_t builtin)
{
    const char* env = std::getenv(kCapEnv);
    if (!env || !*env)
        return builtin;
    std::size_t cap = parse_count(env, kCapEnv);
    if (cap == 0)
        throw UsageError(std::string(kCapEnv) + " must be at least 1");
    return cap;
}

struct Globals {
    bool binary = false;
};

BinaryNat parse_nat(const Globals& g, const std::string& text)
{
    return g.binary ? BinaryNat::from_bits(text) : BinaryNat::from_decimal(text);
}

std::string join(const std::vector<BinaryNat>& values)
{
    std::string out;
    for (const auto& v : values) {
        if (!out.empty())
            out += ' ';
        out += v.to_decimal();
    }
    return out;
}

int cmd_trace(const Globals& g, const std::string& n_text, const std::string& format_text, std::size_t cap)
{
    auto format = parse_render_format(format_text);
    if (!format)
        throw UsageError("unknown format '" + format_text + "' (table, scratch, points, machine)");
    CollatzTrace trace = sequence(parse_nat(g, n_text), cap);
    switch (*format) {
    case RenderFormat::Table: {
        std::size_t end = trace.stopping_time ? *trace.stopping_time + 1 : trace.entries.size();
        std::vector<BinaryNat> odds;
        for (std::size_t i = 0; i < end; ++i) {
            if (trace.entries[i].value.is_odd())
                odds.push_back(trace.entries[i].value);
        }
        if (odds.empty())
            odds.push_back(trace.entries.back().value);
        std::cout << render_table(odds);
        break;
    }
    case RenderFormat::Scratch:
        std::cout << render_scratch(trace);
        break;
    case RenderFormat::Points:
        std::cout << render_points(trace);
        break;
    case RenderFormat::Machine:
        std::cout << render_machine(trace);
        return 0;
    }
    if (trace.truncated)
        std::cout << "truncated\n";
    return 0;
}

int cmd_classify(const Globals& g, const std::string& n_text)
{
    BinaryNat n = parse_nat(g, n_text);
    std::cout << to_string(classify(n)) << ' ' << n.to_bits() << '\n';
    return 0;
}

int cmd_path(const Globals& g, const std::string& n_text)
{
    BinaryNat n = parse_nat(g, n_text);
    std::cout << join(tree_path(n)) << " / " << decompose(n).to_string() << '\n';
    return 0;
}

int cmd_decompose(const Globals& g, const std::string& n_text, const std::string& format, std::size_t cap)
{
    if (format != "table" && format != "machine")
        throw UsageError("unknown format '" + format + "' (table, machine)");
    DerivationTrace d = derivation_trace(parse_nat(g, n_text), cap);
    std::cout << (format == "machine" ? render_machine(d) : render_derivation(d));
    return 0;
}

int cmd_stopping_time(const Globals& g, const std::string& n_text, std::size_t cap)
{
    auto st = stopping_time(parse_nat(g, n_text), cap);
    if (st)
        std::cout << *st << '\n';
    else
        std::cout << "truncated\n";
    return 0;
}

int cmd_hard(std::size_t k)
{
    HardClosedForm h = hard_closed_form(k);
    std::cout << "a_" << k << " = " << h.a_k.to_decimal() << " = (" << h.a_k.to_bits() << ")₂\n";
    std::cout << "T(a_" << k << ") = " << h.t_of_a_k.to_decimal() << " = 2^" << 2 * k << '\n';
    CollatzTrace t = sequence(h.a_k, 2 * k + 1);
    bool returns = t.entries.size() == 2 * k + 2 && t.entries.back().value.is_one();
    std::cout << "T^" << 2 * k + 1 << "(a_" << k << ") = " << t.entries.back().value.to_decimal() << '\n';
    auto st = stopping_time(h.a_k, 2 * k + 1);
    std::cout << "stopping-time " << (st ? std::to_string(*st) : "truncated") << '\n';
    if (!returns)
        throw ConsistencyError("T^(2k+1)(a_k) is not 1");
    return 0;
}

int cmd_tree(std::size_t depth)
{
    std::cout << render_subtree(subtree(depth));
    return 0;
}

struct VerifyArgs {
    std::string lo, hi;
    std::size_t cap = 0;
    std::uint64_t chunk = kDefaultChunkSize;
    std::string checkpoint;
    bool resume = false;
    unsigned jobs = 0;
    std::uint64_t stop_after = 0;
};

int cmd_verify(const Globals& g, const VerifyArgs& a)
{
    VerifyOptions o;
    o.step_cap = a.cap;
    o.chunk_size = a.chunk;
    o.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    if (!a.checkpoint.empty())
        o.checkpoint_path = a.checkpoint;
    else if (a.resume)
        throw UsageError("--resume needs --checkpoint");
    o.resume = a.resume;
    if (a.stop_after)
        o.stop_after_chunks = a.stop_after;
    VerifyOutcome out = verify_range(parse_nat(g, a.lo), parse_nat(g, a.hi), o);
    if (!out.complete) {
        std::cout << "incomplete: next " << out.next_unprocessed.to_decimal() << '\n';
        return 0;
    }
    std::cout << render_report(out.report);
    if (!out.report.stats.truncated_inputs.empty())
        std::cout << "truncated\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Binary-string tools for the Collatz map"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--binary", g.binary, "Read numbers as bit strings instead of decimal");

    std::size_t step_default = 0;
    std::size_t range_default = 0;
    try {
        step_default = default_cap(kDefaultStepCap);
        range_default = default_cap(kDefaultRangeStepCap);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::string n_text;
    std::string format = "table";
    std::size_t cap = step_default;
    std::size_t k = 0;
    VerifyArgs va;
    va.cap = range_default;

    auto* trace = app.add_subcommand("trace", "Print the Collatz sequence of n");
    trace->add_option("n", n_text)->required();
    trace->add_option("--format", format, "table, scratch, points or machine")->capture_default_str();
    trace->add_option("--cap", cap, "Maximum number of T-steps")->check(CLI::PositiveNumber);

    auto* cls = app.add_subcommand("classify", "Print the class tag and binary form of n");
    cls->add_option("n", n_text)->required();

    auto* path = app.add_subcommand("path", "Print the tree path and composition string of n");
    path->add_option("n", n_text)->required();

    auto* dec = app.add_subcommand("decompose", "Print the power-of-two merge derivation of odd n");
    dec->add_option("n", n_text)->required();
    dec->add_option("--format", format, "table or machine")->capture_default_str();
    dec->add_option("--cap", cap, "Maximum number of merges")->check(CLI::PositiveNumber);

    auto* st = app.add_subcommand("stopping-time", "Print the stopping time of n");
    st->add_option("n", n_text)->required();
    st->add_option("--cap", cap, "Maximum number of T-steps")->check(CLI::PositiveNumber);

    auto* hard = app.add_subcommand("hard", "Check the hard number a_k = (4^k - 1)/3");
    hard->add_option("k", k)->required()->check(CLI::PositiveNumber);

    auto* tree = app.add_subcommand("tree", "Print the first levels of the binary tree");
    tree->add_option("depth", k)->required();

    auto* ver = app.add_subcommand("verify", "Check every n in [lo, hi)");
    ver->add_option("lo", va.lo)->required();
    ver->add_option("hi", va.hi, "Exclusive upper bound")->required();
    ver->add_option("--cap", va.cap, "Maximum T-steps per input")->check(CLI::PositiveNumber);
    ver->add_option("--chunk", va.chunk, "Inputs per work unit")->check(CLI::PositiveNumber)->capture_default_str();
    ver->add_option("--checkpoint", va.checkpoint, "Checkpoint file");
    ver->add_flag("--resume", va.resume, "Continue from --checkpoint");
    ver->add_option("--jobs", va.jobs, "Worker threads (default: available processors)");
    ver->add_option("--stop-after", va.stop_after, "Stop after this many chunks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*trace)
            return cmd_trace(g, n_text, format, cap);
        if (*cls)
            return cmd_classify(g, n_text);
        if (*path)
            return cmd_path(g, n_text);
        if (*dec)
            return cmd_decompose(g, n_text, format, cap);
        if (*st)
            return cmd_stopping_time(g, n_text, cap);
        if (*hard)
            return cmd_hard(k);
        if (*tree)
            return cmd_tree(k);
        if (*ver)
            return cmd_verify(g, va);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

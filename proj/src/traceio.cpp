#include "bincollatz/traceio.hpp"

#include "bincollatz/error.hpp"

#include <algorithm>
#include <sstream>

namespace bincollatz {

namespace {

constexpr std::string_view kSub2 = "₂";  // subscript 2
constexpr std::string_view kArrow = "→"; // rightwards arrow

std::string subscripted(const BinaryNat& n)
{
    std::string out = "(" + n.to_bits() + ")";
    out += kSub2;
    return out;
}

std::string table_row(const BinaryNat& n, const RenderConfig& config, bool terminal)
{
    std::string row;
    if (config.show_decimal && config.show_binary)
        row = n.to_decimal() + "=" + subscripted(n);
    else if (config.show_decimal)
        row = n.to_decimal();
    else
        row = subscripted(n);
    if (terminal)
        return row;

    BinaryNat up = n.mul3_add1();
    row += " ";
    row += kArrow;
    row += " ";
    row += config.show_binary ? subscripted(up) : up.to_decimal();
    return row;
}

std::string brace_list(const std::vector<std::size_t>& exponents)
{
    std::string out = "{";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += std::to_string(exponents[i]);
    }
    return out + "}";
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        std::size_t end = text.find(sep, begin);
        if (end == std::string_view::npos) {
            parts.push_back(text.substr(begin));
            return parts;
        }
        parts.push_back(text.substr(begin, end - begin));
        begin = end + 1;
    }
}

} // namespace

std::optional<RenderFormat> parse_render_format(std::string_view text)
{
    if (text == "table")
        return RenderFormat::Table;
    if (text == "scratch")
        return RenderFormat::Scratch;
    if (text == "points")
        return RenderFormat::Points;
    if (text == "machine")
        return RenderFormat::Machine;
    return std::nullopt;
}

std::string render_table(std::span<const BinaryNat> chain, const RenderConfig& config)
{
    if (chain.empty())
        throw InvalidInput("cannot render an empty chain");
    if (!config.show_decimal && !config.show_binary)
        throw InvalidInput("table needs at least one of decimal or binary columns");
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        bool terminal = (i + 1 == chain.size()) && chain[i].is_one();
        out += table_row(chain[i], config, terminal);
        out += '\n';
    }
    return out;
}

std::string render_table(const OddChain& chain, const RenderConfig& config)
{
    return render_table(std::span<const BinaryNat>(chain.values), config);
}

std::string render_scratch(const CollatzTrace& trace, const RenderConfig& config)
{
    if (!config.show_decimal && !config.show_binary)
        throw InvalidInput("scratch layout needs at least one of decimal or binary columns");
    std::size_t width = config.column_width;
    if (width == 0) {
        for (const auto& e : trace.entries)
            width = std::max(width, e.value.to_decimal().size());
    }

    std::string out;
    for (const auto& e : trace.entries) {
        std::string line;
        if (!e.kind)
            line = " ";
        else
            line = (*e.kind == StepKind::OddStep) ? ">" : "|";
        if (config.show_decimal) {
            std::string dec = e.value.to_decimal();
            line += ' ';
            if (dec.size() < width)
                line.append(width - dec.size(), ' ');
            line += dec;
        }
        if (config.show_binary) {
            line += config.show_decimal ? "  " : " ";
            line += e.value.to_bits();
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_points(const CollatzTrace& trace)
{
    std::string out;
    for (std::size_t i = 0; i < trace.entries.size(); ++i)
        out += std::to_string(i) + "," + trace.entries[i].value.to_decimal() + "\n";
    return out;
}

std::string render_machine(const CollatzTrace& trace)
{
    std::string out;
    for (std::size_t i = 0; i < trace.entries.size(); ++i) {
        const BinaryNat& v = trace.entries[i].value;
        std::vector<std::string_view> tags;
        if (i == 0)
            tags.push_back("start");
        if (trace.stopping_time && *trace.stopping_time == i)
            tags.push_back("stop");
        if (trace.truncated && i + 1 == trace.entries.size())
            tags.push_back("truncated");
        std::string ann;
        for (std::size_t t = 0; t < tags.size(); ++t) {
            if (t != 0)
                ann += ';';
            ann += tags[t];
        }
        out += std::to_string(i) + "," + v.to_decimal() + "," + v.to_bits() + "," +
               std::string(to_string(v.is_odd() ? StepKind::OddStep : StepKind::EvenStep)) + "," + ann + "\n";
    }
    return out;
}

std::string render_machine(const OddChain& chain)
{
    std::string out;
    for (std::size_t i = 0; i < chain.values.size(); ++i) {
        const BinaryNat& v = chain.values[i];
        bool last = i + 1 == chain.values.size();
        out += std::to_string(i) + "," + v.to_decimal() + "," + v.to_bits() + ",";
        if (last && v.is_one() && !chain.truncated) {
            out += "terminal,\n";
            continue;
        }
        out += "reduced-step,";
        if (last && chain.truncated) {
            out += "truncated\n";
            continue;
        }
        ReducedStep rs = reduced_step(v);
        out += "exponent=" + std::to_string(rs.stripped_exponent) + ";t-steps=" + std::to_string(rs.t_steps) + "\n";
    }
    return out;
}

std::string render_machine(const DerivationTrace& derivation)
{
    std::string out;
    for (std::size_t i = 0; i < derivation.records.size(); ++i) {
        const auto& r = derivation.records[i];
        BinaryNat v = from_powersum(r.before);
        out += std::to_string(i) + "," + v.to_decimal() + "," + v.to_bits() + ",merge,";
        out += "before=" + brace_list(r.before.exponents());
        out += ";raw=" + brace_list(r.raw.exponents);
        out += ";after=" + brace_list(r.after.exponents());
        out += ";shift=" + std::to_string(r.shift);
        out += ";result=" + brace_list(r.result.exponents());
        if (derivation.truncated && i + 1 == derivation.records.size())
            out += ";truncated";
        out += "\n";
    }
    return out;
}

CollatzTrace parse_machine_trace(std::string_view text)
{
    std::vector<BinaryNat> values;
    std::optional<std::size_t> stop;
    bool truncated = false;

    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        if (line.empty())
            continue;
        auto fields = split(line, ',');
        if (fields.size() != 5)
            throw InvalidInput("machine record needs 5 fields: \"" + std::string(line) + "\"");
        if (fields[0] != std::to_string(line_no))
            throw InvalidInput("machine record out of order: \"" + std::string(line) + "\"");
        BinaryNat dec = BinaryNat::from_decimal(fields[1]);
        if (dec != BinaryNat::from_bits(fields[2]))
            throw InvalidInput("decimal and binary fields disagree: \"" + std::string(line) + "\"");
        std::string_view expected_kind = to_string(dec.is_odd() ? StepKind::OddStep : StepKind::EvenStep);
        if (fields[3] != expected_kind)
            throw InvalidInput("kind field does not match parity: \"" + std::string(line) + "\"");
        if (!values.empty() && step(values.back()).value != dec)
            throw InvalidInput("record does not follow T from the previous one: \"" + std::string(line) + "\"");
        if (!fields[4].empty()) {
            for (std::string_view tag : split(fields[4], ';')) {
                if (tag == "stop")
                    stop = line_no;
                else if (tag == "truncated")
                    truncated = true;
                else if (tag != "start")
                    throw InvalidInput("unknown annotation \"" + std::string(tag) + "\"");
            }
        }
        values.push_back(std::move(dec));
        ++line_no;
    }
    if (values.empty())
        throw InvalidInput("no machine records");

    CollatzTrace trace{values.front(), {}, stop, truncated};
    trace.entries.reserve(values.size());
    std::optional<StepKind> kind;
    for (auto& v : values) {
        std::optional<StepKind> next = v.is_odd() ? StepKind::OddStep : StepKind::EvenStep;
        trace.entries.push_back({std::move(v), kind});
        kind = next;
    }
    return trace;
}

std::string render_derivation(const DerivationTrace& derivation)
{
    if (derivation.records.empty())
        return "";
    std::ostringstream out;
    const auto& first = derivation.records.front().before;
    BinaryNat start = from_powersum(first);
    out << start.to_decimal() << "=" << subscripted(start) << "=" << first.to_power_string() << "\n";
    for (const auto& r : derivation.records) {
        std::string n = from_powersum(r.before).to_decimal();
        out << "3·" << n << "+1=2·" << n << "+" << n << "+1=" << r.raw.to_power_string() << "="
            << r.after.to_power_string() << " " << kArrow << " /2^" << r.shift << " " << kArrow << " "
            << from_powersum(r.result).to_decimal() << "\n";
    }
    if (derivation.truncated)
        out << "(truncated)\n";
    else
        out << "1\n";
    return out.str();
}

std::string render_subtree(const std::vector<std::vector<BinaryNat>>& levels)
{
    std::string out;
    for (std::size_t d = 0; d < levels.size(); ++d) {
        out += "level " + std::to_string(d + 1) + ":";
        for (const auto& v : levels[d])
            out += " " + v.to_decimal();
        out += "\n";
    }
    return out;
}

} // namespace bincollatz

#include "bincollatz/collatz.hpp"

#include "bincollatz/error.hpp"

namespace bincollatz {

std::string_view to_string(StepKind kind)
{
    return kind == StepKind::OddStep ? "odd-step" : "even-step";
}

Step step(const BinaryNat& n)
{
    if (n.is_odd())
        return {n.mul3_add1(), StepKind::OddStep};
    return {n.half(), StepKind::EvenStep};
}

ReducedStep reduced_step(const BinaryNat& n)
{
    if (n.is_odd()) {
        BinaryNat up = n.mul3_add1();
        std::size_t zeros = up.trailing_zeros();
        return {up.shift_right(zeros), zeros, zeros + 1};
    }
    std::size_t zeros = n.trailing_zeros();
    return {n.shift_right(zeros), zeros, zeros};
}

CollatzTrace sequence(const BinaryNat& n, std::size_t max_steps)
{
    CollatzTrace trace{n, {}, std::nullopt, false};
    trace.entries.push_back({n, std::nullopt});
    if (n.is_one())
        trace.stopping_time = 0;

    BinaryNat current = n;
    for (std::size_t i = 0; i < max_steps; ++i) {
        auto [next, kind] = step(current);
        bool reached_one = next.is_one();
        trace.entries.push_back({next, kind});
        current = std::move(next);
        if (reached_one) {
            if (!trace.stopping_time)
                trace.stopping_time = trace.entries.size() - 1;
            break;
        }
    }
    trace.truncated = !trace.stopping_time;
    return trace;
}

std::optional<std::size_t> stopping_time(const BinaryNat& n, std::size_t cap)
{
    if (cap == 0)
        throw DomainError("step cap must be at least 1");
    if (n.is_one())
        return 0;
    // Reduced steps never pass through 1 mid-step: the intermediate values
    // are even and above 1, so the count stays exact.
    BinaryNat current = n;
    std::size_t total = 0;
    while (true) {
        ReducedStep rs = reduced_step(current);
        total += rs.t_steps;
        if (total > cap)
            return std::nullopt;
        if (rs.odd_result.is_one())
            return total;
        current = std::move(rs.odd_result);
    }
}

OddChain odd_chain(const BinaryNat& n, std::size_t cap)
{
    OddChain chain;
    BinaryNat current = n.odd_part();
    chain.values.push_back(current);
    std::size_t steps = 0;
    while (!current.is_one()) {
        if (steps == cap) {
            chain.truncated = true;
            break;
        }
        current = reduced_step(current).odd_result;
        chain.values.push_back(current);
        ++steps;
    }
    return chain;
}

std::optional<bool> cycle_check(const BinaryNat& n, std::size_t cap)
{
    BinaryNat current = n;
    for (std::size_t steps = 0; !current.is_one(); ++steps) {
        if (steps == cap)
            return std::nullopt;
        current = step(current).value;
    }
    for (std::uint64_t expected : {4u, 2u, 1u}) {
        current = step(current).value;
        if (current != BinaryNat::from_u64(expected))
            return false;
    }
    return true;
}

EndSubstringTransition end_substring_transition(const BinaryNat& n)
{
    std::size_t run = n.end_substring_len();
    return {run, n.mul3_add1().trailing_zeros()};
}

} // namespace bincollatz

#include "bincollatz/verify.hpp"

#include "bincollatz/collatz.hpp"
#include "bincollatz/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace bincollatz {

namespace {

constexpr std::uint64_t kMaxU64 = std::numeric_limits<std::uint64_t>::max();
// Largest odd x for which 3x+1 still fits in 64 bits.
constexpr std::uint64_t kFastPathLimit = (kMaxU64 - 1) / 3;
// Fixed so that the sampled inputs depend only on the range.
constexpr std::uint64_t kCycleSampleSeed = 0x3e1f'2c4b'9a07'd615ull;

BinaryNat offset_from(const BinaryNat& base, std::uint64_t offset)
{
    return offset == 0 ? base : base + BinaryNat::from_u64(offset);
}

// hi - lo for lo <= hi; empty if the difference needs more than 64 bits.
std::optional<std::uint64_t> difference_u64(const BinaryNat& lo, const BinaryNat& hi)
{
    auto a = hi.limbs();
    auto b = lo.limbs();
    std::uint64_t low = 0;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t bi = i < b.size() ? b[i] : 0;
        std::uint64_t d = a[i] - bi - borrow;
        borrow = (a[i] < bi || (a[i] == bi && borrow != 0)) ? 1 : 0;
        if (i == 0)
            low = d;
        else if (d != 0)
            return std::nullopt;
    }
    return low;
}

// Continues an orbit with BinaryNat arithmetic once it leaves 64 bits.
// Returns the stopping time, or empty once it exceeds cap.
std::optional<std::size_t> finish_wide(BinaryNat x, std::size_t steps, std::size_t cap, BinaryNat& peak)
{
    while (!x.is_one()) {
        if (x.is_odd()) {
            BinaryNat up = x.mul3_add1();
            std::size_t tz = up.trailing_zeros();
            if (up > peak)
                peak = up;
            x = up.shift_right(tz);
            steps += 1 + tz;
        } else {
            std::size_t tz = x.trailing_zeros();
            x = x.shift_right(tz);
            steps += tz;
        }
        if (steps > cap)
            return std::nullopt;
    }
    return steps;
}

struct Orbit {
    std::optional<std::size_t> stopping_time;
    std::uint64_t peak = 0;            // valid when !wide_peak
    std::optional<BinaryNat> wide_peak; // set when the orbit left 64 bits
};

// The peak of an orbit is either its start or a 3x+1 value, so only those
// are compared.
Orbit run_orbit(std::uint64_t n, std::size_t cap)
{
    Orbit orbit;
    orbit.peak = n;
    std::uint64_t x = n;
    std::size_t steps = 0;
    while (x != 1) {
        if (x & 1u) {
            if (x > kFastPathLimit) {
                BinaryNat peak = BinaryNat::from_u64(orbit.peak);
                orbit.stopping_time = finish_wide(BinaryNat::from_u64(x), steps, cap, peak);
                orbit.wide_peak = std::move(peak);
                return orbit;
            }
            x = 3 * x + 1;
            orbit.peak = std::max(orbit.peak, x);
            auto tz = static_cast<std::size_t>(std::countr_zero(x));
            x >>= tz;
            steps += 1 + tz;
        } else {
            auto tz = static_cast<std::size_t>(std::countr_zero(x));
            x >>= tz;
            steps += tz;
        }
        if (steps > cap)
            return orbit;
    }
    orbit.stopping_time = steps;
    return orbit;
}

void offer_stopping_time(RangeAccumulator& acc, std::size_t m, const BinaryNat& at)
{
    if (!acc.max_stopping_time_at || m > acc.max_stopping_time ||
        (m == acc.max_stopping_time && at < *acc.max_stopping_time_at)) {
        acc.max_stopping_time = m;
        acc.max_stopping_time_at = at;
    }
}

void offer_excursion(RangeAccumulator& acc, const BinaryNat& peak, const BinaryNat& at)
{
    if (!acc.max_excursion || peak > *acc.max_excursion ||
        (peak == *acc.max_excursion && at < *acc.max_excursion_at)) {
        acc.max_excursion = peak;
        acc.max_excursion_at = at;
    }
}

RangeAccumulator verify_block_u64(std::uint64_t first, std::uint64_t count, std::size_t cap)
{
    RangeAccumulator acc;
    // Word-sized running maxima, folded into acc at the end.
    std::optional<std::uint64_t> best_time_at;
    std::size_t best_time = 0;
    std::optional<std::uint64_t> best_peak_at;
    std::uint64_t best_peak = 0;

    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t n = first + i;
        ++acc.class_histogram[static_cast<std::size_t>(classify_u64(n))];
        Orbit orbit = run_orbit(n, cap);
        if (!orbit.stopping_time) {
            acc.truncated_inputs.push_back(BinaryNat::from_u64(n));
            continue;
        }
        ++acc.verified_count;
        if (!best_time_at || *orbit.stopping_time > best_time) {
            best_time = *orbit.stopping_time;
            best_time_at = n;
        }
        if (orbit.wide_peak) {
            offer_excursion(acc, *orbit.wide_peak, BinaryNat::from_u64(n));
        } else if (!best_peak_at || orbit.peak > best_peak) {
            best_peak = orbit.peak;
            best_peak_at = n;
        }
    }
    if (best_time_at)
        offer_stopping_time(acc, best_time, BinaryNat::from_u64(*best_time_at));
    if (best_peak_at)
        offer_excursion(acc, BinaryNat::from_u64(best_peak), BinaryNat::from_u64(*best_peak_at));
    return acc;
}

RangeAccumulator verify_block_wide(const BinaryNat& start, std::uint64_t count, std::size_t cap)
{
    RangeAccumulator acc;
    BinaryNat n = start;
    for (std::uint64_t i = 0; i < count; ++i, n = n.successor()) {
        ++acc.class_histogram[static_cast<std::size_t>(classify(n))];
        BinaryNat peak = n;
        auto m = finish_wide(n, 0, cap, peak);
        if (!m) {
            acc.truncated_inputs.push_back(n);
            continue;
        }
        ++acc.verified_count;
        offer_stopping_time(acc, *m, n);
        offer_excursion(acc, peak, n);
    }
    return acc;
}

std::string optional_decimal(const std::optional<BinaryNat>& n)
{
    return n ? n->to_decimal() : "-";
}

} // namespace

void RangeAccumulator::merge(const RangeAccumulator& other)
{
    verified_count += other.verified_count;
    if (other.max_stopping_time_at)
        offer_stopping_time(*this, other.max_stopping_time, *other.max_stopping_time_at);
    if (other.max_excursion)
        offer_excursion(*this, *other.max_excursion, *other.max_excursion_at);
    for (std::size_t i = 0; i < class_histogram.size(); ++i)
        class_histogram[i] += other.class_histogram[i];
    std::vector<BinaryNat> merged;
    merged.reserve(truncated_inputs.size() + other.truncated_inputs.size());
    std::merge(truncated_inputs.begin(), truncated_inputs.end(), other.truncated_inputs.begin(),
               other.truncated_inputs.end(), std::back_inserter(merged));
    truncated_inputs = std::move(merged);
}

std::uint64_t RangeAccumulator::histogram_total() const
{
    std::uint64_t total = 0;
    for (auto c : class_histogram)
        total += c;
    return total;
}

RangeAccumulator verify_block(const BinaryNat& start, std::uint64_t count, std::size_t step_cap)
{
    if (count == 0)
        return {};
    auto first = start.to_u64();
    if (first && *first <= kMaxU64 - (count - 1))
        return verify_block_u64(*first, count, step_cap);
    return verify_block_wide(start, count, step_cap);
}

std::string render_report(const RangeReport& report)
{
    const auto& s = report.stats;
    std::ostringstream out;
    out << "range [" << report.lo.to_decimal() << ", " << report.hi.to_decimal() << ")\n";
    out << "step-cap " << report.step_cap << "\n";
    out << "verified " << s.verified_count << "\n";
    out << "truncated " << s.truncated_inputs.size() << "\n";
    out << "max-stopping-time " << s.max_stopping_time << " at " << optional_decimal(s.max_stopping_time_at) << "\n";
    out << "max-excursion " << optional_decimal(s.max_excursion) << " at " << optional_decimal(s.max_excursion_at)
        << "\n";
    for (NumberClass c : kAllNumberClasses)
        out << "class " << to_string(c) << " " << s.class_count(c) << "\n";
    out << "cycle-samples " << report.cycle_samples_checked << " failures " << report.cycle_failures.size() << "\n";
    for (const auto& n : report.cycle_failures)
        out << "cycle-failure " << n.to_decimal() << "\n";
    for (const auto& n : s.truncated_inputs)
        out << "truncated-input " << n.to_decimal() << "\n";
    return out.str();
}

std::string serialize_checkpoint(const Checkpoint& cp)
{
    const auto& s = cp.stats;
    std::ostringstream out;
    out << "bincollatz-checkpoint " << cp.format_version << "\n";
    out << "range " << cp.lo.to_decimal() << " " << cp.hi.to_decimal() << "\n";
    out << "step-cap " << cp.step_cap << "\n";
    out << "next " << cp.next_unprocessed.to_decimal() << "\n";
    out << "verified " << s.verified_count << "\n";
    out << "max-stopping-time " << s.max_stopping_time << " " << optional_decimal(s.max_stopping_time_at) << "\n";
    out << "max-excursion " << optional_decimal(s.max_excursion) << " " << optional_decimal(s.max_excursion_at)
        << "\n";
    for (NumberClass c : kAllNumberClasses)
        out << "class " << to_string(c) << " " << s.class_count(c) << "\n";
    out << "truncated " << s.truncated_inputs.size() << "\n";
    for (const auto& n : s.truncated_inputs)
        out << n.to_decimal() << "\n";
    out << "end\n";
    return out.str();
}

namespace {

class CheckpointReader {
public:
    explicit CheckpointReader(std::string_view text) : in_(std::string(text)) {}

    std::vector<std::string> line(std::string_view key, std::size_t values)
    {
        std::string raw;
        if (!std::getline(in_, raw))
            throw CheckpointError("checkpoint ends early, expected '" + std::string(key) + "'");
        ++line_no_;
        std::istringstream fields(raw);
        std::vector<std::string> out;
        std::string word;
        while (fields >> word)
            out.push_back(word);
        if (!key.empty()) {
            if (out.empty() || out.front() != key)
                throw CheckpointError(where() + "expected '" + std::string(key) + "'");
            out.erase(out.begin());
        }
        if (out.size() != values)
            throw CheckpointError(where() + "expected " + std::to_string(values) + " values");
        return out;
    }

    std::uint64_t number(const std::string& s)
    {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20)
            throw CheckpointError(where() + "bad count '" + s + "'");
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw CheckpointError(where() + "bad count '" + s + "'");
        }
    }

    BinaryNat nat(const std::string& s)
    {
        try {
            return BinaryNat::from_decimal(s);
        } catch (const InvalidInput& e) {
            throw CheckpointError(where() + e.what());
        }
    }

    std::optional<BinaryNat> optional_nat(const std::string& s)
    {
        if (s == "-")
            return std::nullopt;
        return nat(s);
    }

    bool at_eof()
    {
        std::string rest;
        while (std::getline(in_, rest)) {
            if (!rest.empty())
                return false;
        }
        return true;
    }

private:
    std::string where() const { return "checkpoint line " + std::to_string(line_no_) + ": "; }

    std::istringstream in_;
    std::size_t line_no_ = 0;
};

} // namespace

Checkpoint parse_checkpoint(std::string_view text)
{
    CheckpointReader r(text);
    Checkpoint cp;
    auto header = r.line("bincollatz-checkpoint", 1);
    auto version = r.number(header[0]);
    if (version != static_cast<std::uint64_t>(kCheckpointFormatVersion))
        throw CheckpointError("unsupported checkpoint version " + header[0] + " (supported: " +
                              std::to_string(kCheckpointFormatVersion) + ")");
    cp.format_version = kCheckpointFormatVersion;

    auto range = r.line("range", 2);
    cp.lo = r.nat(range[0]);
    cp.hi = r.nat(range[1]);
    cp.step_cap = r.number(r.line("step-cap", 1)[0]);
    cp.next_unprocessed = r.nat(r.line("next", 1)[0]);
    if (cp.next_unprocessed < cp.lo || cp.next_unprocessed > cp.hi)
        throw CheckpointError("checkpoint next value lies outside its range");

    auto& s = cp.stats;
    s.verified_count = r.number(r.line("verified", 1)[0]);
    auto st = r.line("max-stopping-time", 2);
    s.max_stopping_time = r.number(st[0]);
    s.max_stopping_time_at = r.optional_nat(st[1]);
    auto ex = r.line("max-excursion", 2);
    s.max_excursion = r.optional_nat(ex[0]);
    s.max_excursion_at = r.optional_nat(ex[1]);
    if (s.max_excursion.has_value() != s.max_excursion_at.has_value())
        throw CheckpointError("checkpoint max-excursion is half specified");
    for (NumberClass c : kAllNumberClasses) {
        auto fields = r.line("class", 2);
        if (fields[0] != to_string(c))
            throw CheckpointError("expected class '" + std::string(to_string(c)) + "', got '" + fields[0] + "'");
        s.class_histogram[static_cast<std::size_t>(c)] = r.number(fields[1]);
    }
    auto truncated = r.number(r.line("truncated", 1)[0]);
    for (std::uint64_t i = 0; i < truncated; ++i)
        s.truncated_inputs.push_back(r.nat(r.line("", 1)[0]));
    r.line("end", 0);
    if (!r.at_eof())
        throw CheckpointError("trailing data after checkpoint end marker");
    if (s.verified_count + s.truncated_inputs.size() != s.histogram_total())
        throw CheckpointError("checkpoint counts are inconsistent");
    return cp;
}

void checkpoint_save(const std::filesystem::path& path, const Checkpoint& cp)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw CheckpointError("cannot open " + tmp.string() + " for writing");
        out << serialize_checkpoint(cp);
        out.flush();
        if (!out)
            throw CheckpointError("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw CheckpointError("cannot move checkpoint into place at " + path.string() + ": " + ec.message());
}

Checkpoint checkpoint_load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CheckpointError("cannot read checkpoint " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_checkpoint(buf.str());
}

VerifyOutcome verify_range(const BinaryNat& lo, const BinaryNat& hi, const VerifyOptions& options)
{
    if (!(lo < hi))
        throw DomainError("empty range: need lo < hi, got [" + lo.to_decimal() + ", " + hi.to_decimal() + ")");
    if (options.step_cap == 0)
        throw DomainError("step cap must be at least 1");
    if (options.chunk_size == 0)
        throw DomainError("chunk size must be at least 1");
    if (!difference_u64(lo, hi))
        throw DomainError("range length must fit in 64 bits");

    RangeAccumulator acc;
    BinaryNat cursor = lo;
    if (options.resume) {
        if (!options.checkpoint_path)
            throw CheckpointError("resume requested without a checkpoint path");
        Checkpoint cp = checkpoint_load(*options.checkpoint_path);
        if (cp.lo != lo || cp.hi != hi || cp.step_cap != options.step_cap)
            throw CheckpointError("checkpoint was written for range [" + cp.lo.to_decimal() + ", " +
                                  cp.hi.to_decimal() + ") with step cap " + std::to_string(cp.step_cap));
        acc = std::move(cp.stats);
        cursor = std::move(cp.next_unprocessed);
    }

    const BinaryNat start = cursor;
    const std::uint64_t remaining = start == hi ? 0 : *difference_u64(start, hi);
    const std::uint64_t chunk = options.chunk_size;
    const std::uint64_t chunk_count = remaining / chunk + (remaining % chunk != 0 ? 1 : 0);

    auto save = [&](const BinaryNat& next) {
        if (options.checkpoint_path)
            checkpoint_save(*options.checkpoint_path, {kCheckpointFormatVersion, lo, hi, options.step_cap, next, acc});
    };

    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<RangeAccumulator>> finished(chunk_count);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> stop{false};
    std::exception_ptr failure;

    auto worker = [&] {
        while (!stop.load()) {
            std::uint64_t k = next_chunk.fetch_add(1);
            if (k >= chunk_count)
                return;
            try {
                std::uint64_t offset = k * chunk;
                std::uint64_t count = std::min(chunk, remaining - offset);
                RangeAccumulator part = verify_block(offset_from(start, offset), count, options.step_cap);
                std::lock_guard lock(mu);
                finished[k] = std::move(part);
            } catch (...) {
                std::lock_guard lock(mu);
                failure = std::current_exception();
                stop = true;
            }
            cv.notify_all();
        }
    };

    bool complete = true;
    {
        unsigned jobs = std::max(1u, options.jobs);
        std::vector<std::jthread> pool;
        if (chunk_count != 0) {
            for (unsigned j = 0; j < jobs && j < chunk_count; ++j)
                pool.emplace_back(worker);
        }

        // Merge strictly in chunk order so checkpoints always describe a
        // contiguous prefix of the range.
        for (std::uint64_t merged = 0; merged < chunk_count;) {
            RangeAccumulator part;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return finished[merged].has_value() || failure; });
                if (failure)
                    break;
                part = std::move(*finished[merged]);
                finished[merged].reset();
            }
            acc.merge(part);
            ++merged;
            cursor = offset_from(start, std::min(merged * chunk, remaining));
            bool last = merged == chunk_count;
            bool halt = !last && options.stop_after_chunks && merged >= *options.stop_after_chunks;
            if (halt || (!last && merged % std::max<std::uint64_t>(1, options.checkpoint_every) == 0))
                save(cursor);
            if (halt) {
                complete = false;
                stop = true;
                break;
            }
        }
        if (failure)
            stop = true;
    }
    if (failure)
        std::rethrow_exception(failure);

    if (complete)
        save(hi);
    VerifyOutcome outcome{{lo, hi, options.step_cap, std::move(acc), 0, {}}, complete, cursor};
    if (!complete)
        return outcome;

    // Check the 4, 2, 1 tail on a reproducible sample of converged inputs.
    const std::uint64_t length = *difference_u64(lo, hi);
    std::mt19937_64 rng(kCycleSampleSeed);
    auto& report = outcome.report;
    for (std::size_t i = 0; i < options.cycle_samples; ++i) {
        std::uint64_t offset = length <= options.cycle_samples ? i : rng() % length;
        if (offset >= length)
            break;
        BinaryNat n = offset_from(lo, offset);
        if (std::binary_search(report.stats.truncated_inputs.begin(), report.stats.truncated_inputs.end(), n))
            continue;
        auto ok = cycle_check(n, options.step_cap);
        ++report.cycle_samples_checked;
        if (!ok || !*ok)
            report.cycle_failures.push_back(n);
    }
    return outcome;
}

RangeReport verify_range(const BinaryNat& lo, const BinaryNat& hi, std::size_t step_cap, std::uint64_t chunk_size)
{
    VerifyOptions options;
    options.step_cap = step_cap;
    options.chunk_size = chunk_size;
    return verify_range(lo, hi, options).report;
}

} // namespace bincollatz

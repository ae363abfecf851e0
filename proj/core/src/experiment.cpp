#include "zemor/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "zemor/errors.hpp"
#include "zemor/hash.hpp"
#include "zemor/number_theory.hpp"
#include "zemor/preimage.hpp"

namespace zemor {

namespace {

// Literal evaluation of the expanded positive word is skipped above this size;
// the structural check (extended word and inverse words) always runs.
constexpr std::size_t kLiteralCheckRuns = std::size_t{1} << 22;

bool verify(const PositivePreimage& pre, const ModMatrix2& target) {
    const mpz_class& p = target.modulus();
    if (!(evaluate_word(pre.extended, p) == target)) return false;
    if (!pre.extended.is_positive()) {
        const Word a_check = pre.inverses.inv_a + Word{{Letter::A, 1}};
        const Word b_check = pre.inverses.inv_b + Word{{Letter::B, 1}};
        if (!pre.inverses.inv_a.is_positive() || !pre.inverses.inv_b.is_positive()) return false;
        if (!evaluate_word(a_check, p).is_identity() || !evaluate_word(b_check, p).is_identity()) return false;
    }
    try {
        const Word positive = pre.expand(kLiteralCheckRuns);
        return positive.is_positive() && evaluate_word(positive, p) == target;
    } catch (const std::length_error&) {
        return true;
    }
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, unsigned bits, std::size_t index) {
    return derive_seed(seed ^ (std::uint64_t{bits} << 40), index);
}

TrialRecord run_trial(unsigned bits, std::uint64_t seed, std::chrono::seconds timeout) {
    TrialRecord rec;
    rec.bits = bits;
    rec.seed = seed;
    Rng rng{seed};
    rec.p = random_prime(bits, rng);
    const ModMatrix2 target = random_sl2(rec.p, rng);

    const auto start = std::chrono::steady_clock::now();
    const Deadline deadline = Deadline::after(timeout);
    try {
        const PositivePreimage pre = positive_preimage(target, rng, deadline);
        rec.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        rec.word_length = pre.length();
        if (!verify(pre, target)) {
            rec.failure = "verification failed";
            return rec;
        }
        const double log_p = ln(rec.p);
        rec.normalized_length = static_cast<double>(rec.word_length) / (log_p * log_p);
        rec.success = true;
    } catch (const Timeout&) {
        rec.failure = "timeout";
    } catch (const RetryExhausted& e) {
        rec.failure = std::string("retry exhausted: ") + e.what();
    } catch (const std::overflow_error&) {
        rec.failure = "word length overflow";
    } catch (const Error& e) {
        rec.failure = e.what();
    }
    if (!rec.success) {
        rec.word_length = 0;
        rec.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return rec;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) {
    if (config.trials == 0) throw BadInput("experiment needs at least one trial");
    struct Job {
        unsigned bits;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (unsigned bits : config.bits)
        for (std::size_t i = 0; i < config.trials; ++i) jobs.push_back(Job{bits, trial_seed(config.seed, bits, i)});

    std::vector<TrialRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
            records[i] = run_trial(jobs[i].bits, jobs[i].seed, config.timeout);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return records;
}

ExperimentSummary summarize(const std::vector<TrialRecord>& records) {
    ExperimentSummary out;
    std::map<unsigned, std::size_t> index;
    std::vector<double> runtime_sum;
    for (const TrialRecord& r : records) {
        auto [it, inserted] = index.try_emplace(r.bits, out.size());
        if (inserted) {
            out.push_back(BitSizeSummary{});
            out.back().bits = r.bits;
            runtime_sum.push_back(0.0);
        }
        BitSizeSummary& s = out[it->second];
        ++s.trials;
        if (!r.success) continue;
        if (s.successes == 0) {
            s.min_normalized_length = r.normalized_length;
            s.max_normalized_length = r.normalized_length;
        }
        ++s.successes;
        s.avg_normalized_length += r.normalized_length;
        s.min_normalized_length = std::min(s.min_normalized_length, r.normalized_length);
        s.max_normalized_length = std::max(s.max_normalized_length, r.normalized_length);
        runtime_sum[it->second] += static_cast<double>(r.runtime_ms);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].successes == 0) continue;
        out[i].avg_normalized_length /= static_cast<double>(out[i].successes);
        out[i].avg_runtime_ms = runtime_sum[i] / static_cast<double>(out[i].successes);
    }
    return out;
}

std::string format_normalized(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << "bits,p,seed,success,word_length,normalized_length,runtime_ms\n";
    for (const TrialRecord& r : records) {
        os << r.bits << ',' << r.p.get_str() << ',' << r.seed << ',' << (r.success ? "true" : "false") << ','
           << r.word_length << ',' << format_normalized(r.normalized_length) << ',' << r.runtime_ms << '\n';
    }
}

void write_json(std::ostream& os, const std::vector<TrialRecord>& records, const ExperimentSummary& summary) {
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const TrialRecord& r : records) {
        nlohmann::ordered_json j;
        j["bits"] = r.bits;
        j["p"] = r.p.get_str();
        j["seed"] = r.seed;
        j["success"] = r.success;
        j["word_length"] = r.word_length;
        j["normalized_length"] = std::stod(format_normalized(r.normalized_length));
        j["runtime_ms"] = r.runtime_ms;
        if (!r.success) j["failure"] = r.failure;
        doc["records"].push_back(std::move(j));
    }
    doc["summary"] = nlohmann::ordered_json::array();
    for (const BitSizeSummary& s : summary) {
        nlohmann::ordered_json j;
        j["bits"] = s.bits;
        j["trials"] = s.trials;
        j["successes"] = s.successes;
        j["avg_normalized_length"] = s.avg_normalized_length;
        j["min_normalized_length"] = s.min_normalized_length;
        j["max_normalized_length"] = s.max_normalized_length;
        j["avg_runtime_ms"] = s.avg_runtime_ms;
        doc["summary"].push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
}

void write_summary_table(std::ostream& os, const ExperimentSummary& summary) {
    os << std::left << std::setw(8) << "bits" << std::setw(10) << "trials" << std::setw(11) << "successes"
       << std::setw(16) << "avg len/ln^2" << std::setw(16) << "min len/ln^2" << std::setw(16) << "max len/ln^2"
       << "avg runtime ms\n";
    for (const BitSizeSummary& s : summary) {
        os << std::left << std::setw(8) << s.bits << std::setw(10) << s.trials << std::setw(11) << s.successes
           << std::setw(16) << format_normalized(s.avg_normalized_length) << std::setw(16)
           << format_normalized(s.min_normalized_length) << std::setw(16)
           << format_normalized(s.max_normalized_length) << format_normalized(s.avg_runtime_ms) << '\n';
    }
}

}  // namespace zemor

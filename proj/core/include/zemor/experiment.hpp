#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zemor {

/// Outcome of one random-matrix preimage trial.
struct TrialRecord {
    unsigned bits = 0;
    mpz_class p;
    std::uint64_t seed = 0;
    bool success = false;
    std::uint64_t word_length = 0;
    double normalized_length = 0.0;  ///< word_length / (ln p)^2
    std::int64_t runtime_ms = 0;
    std::string failure;             ///< empty on success
};

struct BitSizeSummary {
    unsigned bits = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double avg_normalized_length = 0.0;
    double min_normalized_length = 0.0;
    double max_normalized_length = 0.0;
    double avg_runtime_ms = 0.0;
};

using ExperimentSummary = std::vector<BitSizeSummary>;

struct ExperimentConfig {
    std::vector<unsigned> bits{10, 20};
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::chrono::seconds timeout{60};
    unsigned threads = 1;
};

/// Seed of trial `index` at bit size `bits`.
std::uint64_t trial_seed(std::uint64_t seed, unsigned bits, std::size_t index);

/// Draws a random prime of `bits` bits and a random matrix in SL2(p), builds
/// a positive preimage and verifies it. Never throws for attack failures;
/// those come back as success = false.
TrialRecord run_trial(unsigned bits, std::uint64_t seed, std::chrono::seconds timeout);

/// Records ordered by (bit size, trial index) whatever the thread count.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

/// Successful trials only feed the length statistics.
ExperimentSummary summarize(const std::vector<TrialRecord>& records);

/// Header `bits,p,seed,success,word_length,normalized_length,runtime_ms`.
void write_csv(std::ostream& os, const std::vector<TrialRecord>& records);
void write_json(std::ostream& os, const std::vector<TrialRecord>& records,
                const ExperimentSummary& summary);
void write_summary_table(std::ostream& os, const ExperimentSummary& summary);

/// Six significant digits, as written to CSV/JSON.
std::string format_normalized(double value);

}  // namespace zemor

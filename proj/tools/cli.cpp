#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zemor/collision.hpp"
#include "zemor/errors.hpp"
#include "zemor/experiment.hpp"
#include "zemor/hash.hpp"
#include "zemor/number_theory.hpp"
#include "zemor/preimage.hpp"

namespace zemor::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpz_class parse_prime(const std::string& text) {
    mpz_class p;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || p.set_str(text, 10) != 0)
        throw UsageError("--prime must be a decimal integer, got '" + text + "'");
    if (p < 3 || !is_prime(p)) throw UsageError("--prime must be an odd prime, got " + text);
    return p;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (std::uint64_t{rd()} << 32) ^ rd();
    err << "seed: " << s << '\n';
    return s;
}

// Writes text to --out when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f.flush()) throw IoError("failed writing '" + path + "'");
}

std::string trim(std::string s) {
    const auto last = s.find_last_not_of(" \t\r\n");
    s.erase(last == std::string::npos ? 0 : last + 1);
    const auto first = s.find_first_not_of(" \t\r\n");
    s.erase(0, first == std::string::npos ? s.size() : first);
    return s;
}

struct Options {
    std::string prime;
    std::string matrix;
    std::string message;
    std::string word;
    std::string word_file;
    std::string out;
    std::string format = "csv";
    std::string alphabet = "positive";
    std::vector<unsigned> bits{10, 20, 40};
    std::size_t trials = 100;
    std::optional<std::uint64_t> seed;
    unsigned timeout_secs = 60;
    unsigned threads = 1;
};

int cmd_hash(const Options& o, std::ostream& out) {
    const mpz_class p = parse_prime(o.prime);
    std::vector<std::uint8_t> bits;
    for (char ch : o.message) {
        if (ch != '0' && ch != '1') throw UsageError("message must consist of '0' and '1' characters");
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    out << to_string(zemor_hash(bits, p)) << '\n';
    return kOk;
}

int cmd_collide(const Options& o, std::ostream& out, std::ostream& err) {
    const mpz_class p = parse_prime(o.prime);
    Rng rng{resolve_seed(o.seed, err)};
    const Word w = identity_word(p, rng, Deadline::after(std::chrono::seconds{o.timeout_secs}));
    if (w.empty() || !evaluate_word(w, p).is_identity()) throw Error("internal: identity word failed verification");
    emit(to_string(w) + "\n", o.out, out);
    return kOk;
}

int cmd_invgen(const Options& o, std::ostream& out, std::ostream& err) {
    const mpz_class p = parse_prime(o.prime);
    Rng rng{resolve_seed(o.seed, err)};
    const InverseWords inv = inverse_generator_words(p, rng, Deadline::after(std::chrono::seconds{o.timeout_secs}));
    if (!(evaluate_word(inv.inv_a, p) == generator(Letter::InvA, p)) ||
        !(evaluate_word(inv.inv_b, p) == generator(Letter::InvB, p)))
        throw Error("internal: inverse words failed verification");
    emit(to_string(inv.inv_a) + "\n" + to_string(inv.inv_b) + "\n", o.out, out);
    return kOk;
}

int cmd_preimage(const Options& o, std::ostream& out, std::ostream& err) {
    const mpz_class p = parse_prime(o.prime);
    const ModMatrix2 target = parse_matrix(o.matrix, p);
    const Alphabet alphabet = o.alphabet == "extended" ? Alphabet::Extended : Alphabet::Positive;
    Rng rng{resolve_seed(o.seed, err)};
    const Word w = preimage_word(target, rng, alphabet, Deadline::after(std::chrono::seconds{o.timeout_secs}));
    if (!(evaluate_word(w, p) == target) || (alphabet == Alphabet::Positive && !w.is_positive()))
        throw Error("internal: preimage failed verification");
    emit(to_string(w) + "\n", o.out, out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const mpz_class p = parse_prime(o.prime);
    const ModMatrix2 target = parse_matrix(o.matrix, p);
    std::string text = o.word;
    if (!o.word_file.empty()) {
        std::ifstream f(o.word_file, std::ios::binary);
        if (!f) throw IoError("cannot open '" + o.word_file + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    const Word w = parse_word(trim(text));
    if (evaluate_word(w, p) == target) {
        out << "ok\n";
        return kOk;
    }
    out << "mismatch: word evaluates to " << to_string(evaluate_word(w, p)) << '\n';
    return kMismatch;
}

int cmd_experiment(const Options& o, std::ostream& out) {
    if (o.trials == 0) throw UsageError("--trials must be at least 1");
    for (unsigned b : o.bits)
        if (b < 3) throw UsageError("--bits entries must be at least 3");
    ExperimentConfig config;
    config.bits = o.bits;
    config.trials = o.trials;
    config.seed = o.seed.value_or(1);
    config.timeout = std::chrono::seconds{o.timeout_secs};
    config.threads = o.threads;

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot open '" + o.out + "' for writing");
    }
    const std::vector<TrialRecord> records = run_experiment(config);
    const ExperimentSummary summary = summarize(records);

    std::ostream& sink = o.out.empty() ? out : static_cast<std::ostream&>(file);
    if (o.format == "json")
        write_json(sink, records, summary);
    else
        write_csv(sink, records);
    if (!o.out.empty()) {
        if (!file.flush()) throw IoError("failed writing '" + o.out + "'");
        write_summary_table(out, summary);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collision and preimage attacks on Zemor's SL2(p) Cayley hash"};
    app.require_subcommand(1);
    Options o;

    auto add_prime = [&](CLI::App* sub) { sub->add_option("--prime", o.prime, "odd prime modulus p")->required(); };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "RNG seed (random if omitted)"); };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output path (stdout if omitted)"); };
    auto add_timeout = [&](CLI::App* sub) {
        sub->add_option("--timeout-secs", o.timeout_secs, "wall-clock budget in seconds")->capture_default_str();
    };

    auto* hash = app.add_subcommand("hash", "hash a bit string: 0 -> A, 1 -> B");
    add_prime(hash);
    hash->add_option("message", o.message, "message bits, e.g. 0110");

    auto* collide = app.add_subcommand("collide", "word over {A, B} evaluating to the identity");
    add_prime(collide);
    add_seed(collide);
    add_out(collide);
    add_timeout(collide);

    auto* invgen = app.add_subcommand("invgen", "words over {A, B} for A^-1 (line 1) and B^-1 (line 2)");
    add_prime(invgen);
    add_seed(invgen);
    add_out(invgen);
    add_timeout(invgen);

    auto* preimage = app.add_subcommand("preimage", "word evaluating to a given matrix");
    add_prime(preimage);
    preimage->add_option("--matrix", o.matrix, "target a,b,c,d (row-major)")->required();
    preimage->add_option("--alphabet", o.alphabet, "extended (A,B,a,b) or positive (A,B)")
        ->check(CLI::IsMember({"extended", "positive"}))
        ->capture_default_str();
    add_seed(preimage);
    add_out(preimage);
    add_timeout(preimage);

    auto* verify = app.add_subcommand("verify", "exit 0 iff the word evaluates to the matrix");
    add_prime(verify);
    verify->add_option("--matrix", o.matrix, "expected a,b,c,d")->required();
    auto* word_opt = verify->add_option("word", o.word, "word text, e.g. B^3A^5B^2");
    verify->add_option("--word-file", o.word_file, "read the word from a file")->excludes(word_opt);

    auto* experiment = app.add_subcommand("experiment", "random-matrix preimage trials per prime size");
    experiment->add_option("--bits", o.bits, "prime sizes in bits")->delimiter(',')->capture_default_str();
    experiment->add_option("--trials", o.trials, "trials per bit size")->capture_default_str();
    experiment->add_option("--seed", o.seed, "base seed (default 1)");
    experiment->add_option("--format", o.format, "record format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_out(experiment);
    add_timeout(experiment);
    experiment->add_option("--threads", o.threads, "worker threads")->capture_default_str();

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*hash) return cmd_hash(o, out);
        if (*collide) return cmd_collide(o, out, err);
        if (*invgen) return cmd_invgen(o, out, err);
        if (*preimage) return cmd_preimage(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*experiment) return cmd_experiment(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BadInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const WordParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const RetryExhausted& e) {
        err << "attack failed: " << e.what() << '\n';
        return kAttackFailed;
    } catch (const Timeout& e) {
        err << "attack failed: " << e.what() << '\n';
        return kAttackFailed;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kUsage;
}

}  // namespace zemor::cli

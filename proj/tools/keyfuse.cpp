// Command-line front end: reproduces the toy-model table, the outage curves
// and thresholds, runs seeded Monte Carlo sessions, and verifies the
// structure of a key-fusing transformation.
//
// Exit codes: 0 success, 1 assertion/verification failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "keyfuse/exposure_sim.hpp"
#include "keyfuse/keyspace.hpp"
#include "keyfuse/kft.hpp"
#include "keyfuse/rng.hpp"
#include "keyfuse/sop_analytic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed output formatting: six significant digits, scientific below 1e-4.
std::string fmt_real(double x) {
    if (x == 0.0) {
        return "0";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    if (std::abs(x) < 1e-4) {
        std::snprintf(buf, sizeof(buf), "%.5e", x);
    } else {
        std::snprintf(buf, sizeof(buf), "%.6g", x);
    }
    return buf;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string token;
    while (std::getline(ss, token, sep)) {
        out.push_back(token);
    }
    return out;
}

double parse_real_token(const std::string& token) {
    const auto slash = token.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(token.substr(0, slash));
            const double den = std::stod(token.substr(slash + 1));
            if (den == 0.0) {
                throw UsageError("zero denominator in '" + token + "'");
            }
            return num / den;
        }
        return std::stod(token);
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse number '" + token + "'");
    }
}

std::vector<double> parse_real_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& token : split(s, ',')) {
        out.push_back(parse_real_token(token));
    }
    if (out.empty()) {
        throw UsageError("empty number list");
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& token : split(s, ',')) {
        try {
            out.push_back(std::stoi(token));
        } catch (const std::logic_error&) {
            throw UsageError("cannot parse integer '" + token + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("empty integer list");
    }
    return out;
}

// The 2-bit toy distributions, kept as exact ratios.
std::vector<double> preset_distribution(const std::string& name) {
    if (name == "paper-kA") {
        return {1.0 / 3, 1.0 / 4, 1.0 / 6, 1.0 / 4};
    }
    if (name == "paper-kB") {
        return {0.0, 0.0, 0.0, 1.0};
    }
    if (name == "paper-kC") {
        return {1.0 / 2, 1.0 / 5, 1.0 / 6, 2.0 / 15};
    }
    throw UsageError("unknown preset '" + name + "'");
}

std::vector<double> parse_distribution(const std::string& text) {
    if (text.rfind("paper-", 0) == 0) {
        return preset_distribution(text);
    }
    return parse_real_list(text);
}

keyfuse::KftKind parse_kind(const std::string& name) {
    if (name == "xor") {
        return keyfuse::KftKind::Xor;
    }
    if (name == "add") {
        return keyfuse::KftKind::AddMod;
    }
    if (name == "sub") {
        return keyfuse::KftKind::SubMod;
    }
    if (name == "permuted") {
        return keyfuse::KftKind::Permuted;
    }
    throw UsageError("unknown kft kind '" + name + "' (expected xor|add|sub|permuted)");
}

// Seeded Fisher-Yates fallback when --kft permuted is used without --perm.
std::vector<keyfuse::KeyValue> seeded_permutation(std::uint64_t size, std::uint64_t seed) {
    std::vector<keyfuse::KeyValue> perm(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        perm[i] = i;
    }
    keyfuse::SplitMix64 rng(keyfuse::mix64(seed ^ 0x7065726d75746564ULL));
    for (std::uint64_t i = size - 1; i > 0; --i) {
        const std::uint64_t j = rng.next() % (i + 1);
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

keyfuse::KftSpec build_kft(const keyfuse::KeySpace& space, const std::string& kind_name,
                           const std::string& perm_text, std::uint64_t seed) {
    const keyfuse::KftKind kind = parse_kind(kind_name);
    switch (kind) {
    case keyfuse::KftKind::Xor:
        return keyfuse::KftSpec::make_xor(space);
    case keyfuse::KftKind::AddMod:
        return keyfuse::KftSpec::make_add_mod(space);
    case keyfuse::KftKind::SubMod:
        return keyfuse::KftSpec::make_sub_mod(space);
    case keyfuse::KftKind::Permuted:
        break;
    }
    std::vector<keyfuse::KeyValue> perm;
    if (perm_text.empty()) {
        perm = seeded_permutation(space.size(), seed);
    } else {
        for (int v : parse_int_list(perm_text)) {
            if (v < 0) {
                throw UsageError("permutation entries must be non-negative");
            }
            perm.push_back(static_cast<keyfuse::KeyValue>(v));
        }
    }
    return keyfuse::KftSpec::make_permuted(space, keyfuse::KftKind::Xor, std::move(perm));
}

// --config JSON: flat object, snake_case keys matching the long flag names;
// values given on the command line win.
class ConfigOverlay {
public:
    ConfigOverlay(CLI::App* cmd, const std::string& path) : cmd_(cmd) {
        if (path.empty()) {
            return;
        }
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open config file '" + path + "'");
        }
        nlohmann::json parsed;
        try {
            in >> parsed;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("config parse error: " + std::string(e.what()));
        }
        if (!parsed.is_object()) {
            throw UsageError("config must be a flat JSON object");
        }
        config_ = std::move(parsed);
    }

    template <typename T>
    void apply(const std::string& flag, const std::string& key, T& value) {
        seen_.push_back(key);
        if (config_.is_null() || !config_.contains(key)) {
            return;
        }
        if (cmd_->count("--" + flag) > 0) {
            return; // flag wins
        }
        try {
            value = config_.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw UsageError("config key '" + key + "' has the wrong type");
        }
    }

    void reject_unknown() const {
        if (config_.is_null()) {
            return;
        }
        for (const auto& item : config_.items()) {
            if (std::find(seen_.begin(), seen_.end(), item.key()) == seen_.end()) {
                throw UsageError("unknown config key '" + item.key() + "'");
            }
        }
    }

private:
    CLI::App* cmd_;
    nlohmann::json config_;
    std::vector<std::string> seen_;
};

class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open output file '" + path + "'");
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void require_format(const std::string& format) {
    if (format != "csv" && format != "json") {
        throw UsageError("unknown format '" + format + "' (expected csv|json)");
    }
}

// ---------------------------------------------------------------- toy-model

struct ToyOptions {
    int bits = 2;
    std::string kft = "xor";
    std::string perm;
    std::uint64_t seed = 0;
    std::string ka = "paper-kA";
    std::string kb = "paper-kB";
    std::string kc = "paper-kC";
    std::string format = "table";
    std::string out;
    std::string config;
};

int run_toy_model(CLI::App* cmd, ToyOptions& opt) {
    ConfigOverlay overlay(cmd, opt.config);
    overlay.apply("bits", "bits", opt.bits);
    overlay.apply("kft", "kft", opt.kft);
    overlay.apply("perm", "perm", opt.perm);
    overlay.apply("seed", "seed", opt.seed);
    overlay.apply("ka", "ka", opt.ka);
    overlay.apply("kb", "kb", opt.kb);
    overlay.apply("kc", "kc", opt.kc);
    overlay.apply("format", "format", opt.format);
    overlay.apply("out", "out", opt.out);
    overlay.reject_unknown();
    if (opt.format != "table" && opt.format != "json") {
        throw UsageError("toy-model supports --format table|json");
    }

    const keyfuse::KeySpace space(opt.bits);
    const auto kft = build_kft(space, opt.kft, opt.perm, opt.seed);
    const keyfuse::KeyDistribution k_a(space, parse_distribution(opt.ka));
    const keyfuse::KeyDistribution k_b(space, parse_distribution(opt.kb));
    const keyfuse::KeyDistribution k_c(space, parse_distribution(opt.kc));
    const auto k_ab = fuse_dist(kft, k_a, k_b);
    const auto k_abc = fuse_dist(kft, k_ab, k_c);

    const double floor = std::max({min_entropy(k_a), min_entropy(k_b), min_entropy(k_c)});
    const bool holds = min_entropy(k_abc) >= floor - 1e-12;

    struct Row {
        const char* name;
        const keyfuse::KeyDistribution* dist;
    };
    const std::vector<Row> rows{
        {"k_A", &k_a}, {"k_B", &k_b}, {"k_C", &k_c}, {"k_AB", &k_ab}, {"k_ABC", &k_abc}};

    OutputSink sink(opt.out);
    std::ostream& os = sink.stream();
    if (opt.format == "json") {
        os << "{\n  \"kft\": \"" << opt.kft << "\",\n  \"variables\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << "    {\"name\": \"" << rows[i].name << "\", \"distribution\": [";
            const auto& probs = rows[i].dist->probs();
            for (std::size_t j = 0; j < probs.size(); ++j) {
                os << (j ? ", " : "") << fmt_real(probs[j]);
            }
            os << "], \"shannon_entropy\": " << fmt_real(shannon_entropy(*rows[i].dist))
               << ", \"min_entropy\": " << fmt_real(min_entropy(*rows[i].dist)) << "}"
               << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        os << "  ],\n  \"min_entropy_preserved\": " << fmt_bool(holds) << "\n}\n";
    } else {
        os << "variable  distribution";
        const std::string pad(space.size() <= 4 ? 34 : 10, ' ');
        os << pad << "shannon  min_entropy\n";
        for (const auto& row : rows) {
            std::string dist = "[";
            const auto& probs = row.dist->probs();
            for (std::size_t j = 0; j < probs.size(); ++j) {
                dist += (j ? ", " : "") + fmt_real(probs[j]);
            }
            dist += "]";
            char line[160];
            std::snprintf(line, sizeof(line), "%-9s %-46s %-8s %s\n", row.name, dist.c_str(),
                          fmt_real(shannon_entropy(*row.dist)).c_str(),
                          fmt_real(min_entropy(*row.dist)).c_str());
            os << line;
        }
        os << "min-entropy preserved (k_ABC >= max input): " << (holds ? "yes" : "NO") << "\n";
    }
    return holds ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- sop-curve

struct CurveOptions {
    std::string p;
    std::string w;
    int messages = 60;
    std::string format = "csv";
    std::string out;
    std::string config;
};

int run_sop_curve(CLI::App* cmd, CurveOptions& opt) {
    ConfigOverlay overlay(cmd, opt.config);
    overlay.apply("p", "p", opt.p);
    overlay.apply("w", "w", opt.w);
    overlay.apply("K", "K", opt.messages);
    overlay.apply("format", "format", opt.format);
    overlay.apply("out", "out", opt.out);
    overlay.reject_unknown();
    require_format(opt.format);

    std::vector<double> p_grid;
    if (opt.p.empty()) {
        for (int i = 1; i <= 19; ++i) {
            p_grid.push_back(0.05 * i);
        }
    } else {
        p_grid = parse_real_list(opt.p);
    }
    std::vector<int> w_grid;
    if (opt.w.empty()) {
        for (int w = 1; w <= 12; ++w) {
            w_grid.push_back(w);
        }
    } else {
        w_grid = parse_int_list(opt.w);
    }

    OutputSink sink(opt.out);
    std::ostream& os = sink.stream();
    if (opt.format == "json") {
        os << "{\n  \"message_count\": " << opt.messages << ",\n  \"rows\": [\n";
        bool first = true;
        for (double p : p_grid) {
            for (int w : w_grid) {
                const keyfuse::SopQuery fusing(p, opt.messages, w);
                const keyfuse::SopQuery nonfusing(p, opt.messages, 1);
                os << (first ? "" : ",\n") << "    {\"p\": " << fmt_real(p) << ", \"w\": " << w
                   << ", \"sop_fusing\": " << fmt_real(sop_closed_form(fusing))
                   << ", \"sop_nonfusing\": " << fmt_real(sop_closed_form(nonfusing))
                   << ", \"log10_sop_fusing\": " << fmt_real(sop_log10(fusing)) << "}";
                first = false;
            }
        }
        os << "\n  ]\n}\n";
    } else {
        os << "p,w,sop_fusing,sop_nonfusing,log10_sop_fusing\n";
        for (double p : p_grid) {
            for (int w : w_grid) {
                const keyfuse::SopQuery fusing(p, opt.messages, w);
                const keyfuse::SopQuery nonfusing(p, opt.messages, 1);
                os << fmt_real(p) << "," << w << "," << fmt_real(sop_closed_form(fusing)) << ","
                   << fmt_real(sop_closed_form(nonfusing)) << "," << fmt_real(sop_log10(fusing))
                   << "\n";
            }
        }
    }
    return kExitOk;
}

// --------------------------------------------------------- allowed-exposure

struct AllowedOptions {
    std::string target = "1e-6";
    std::string w;
    int messages = 60;
    std::string format = "csv";
    std::string out;
    std::string config;
};

int run_allowed_exposure(CLI::App* cmd, AllowedOptions& opt) {
    ConfigOverlay overlay(cmd, opt.config);
    overlay.apply("target-sop", "target_sop", opt.target);
    overlay.apply("w", "w", opt.w);
    overlay.apply("K", "K", opt.messages);
    overlay.apply("format", "format", opt.format);
    overlay.apply("out", "out", opt.out);
    overlay.reject_unknown();
    require_format(opt.format);

    const std::vector<double> targets = parse_real_list(opt.target);
    std::vector<int> w_grid;
    if (opt.w.empty()) {
        for (int w = 1; w <= 12; ++w) {
            w_grid.push_back(w);
        }
    } else {
        w_grid = parse_int_list(opt.w);
    }

    OutputSink sink(opt.out);
    std::ostream& os = sink.stream();
    if (opt.format == "json") {
        os << "{\n  \"message_count\": " << opt.messages << ",\n  \"rows\": [\n";
        bool first = true;
        for (double t : targets) {
            for (int w : w_grid) {
                os << (first ? "" : ",\n") << "    {\"target_sop\": " << fmt_real(t)
                   << ", \"w\": " << w
                   << ", \"allowed_p\": " << fmt_real(keyfuse::allowed_exposure(t, opt.messages, w))
                   << "}";
                first = false;
            }
        }
        os << "\n  ]\n}\n";
    } else {
        os << "target_sop,w,allowed_p\n";
        for (double t : targets) {
            for (int w : w_grid) {
                os << fmt_real(t) << "," << w << ","
                   << fmt_real(keyfuse::allowed_exposure(t, opt.messages, w)) << "\n";
            }
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- simulate

struct SimulateOptions {
    double p = 0.1;
    int messages = 60;
    int window = 1;
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    bool no_fusing = false;
    int workers = 0;
    std::string out;
    std::string config;
};

int run_simulate(CLI::App* cmd, SimulateOptions& opt) {
    ConfigOverlay overlay(cmd, opt.config);
    overlay.apply("p", "p", opt.p);
    overlay.apply("K", "K", opt.messages);
    overlay.apply("w", "w", opt.window);
    overlay.apply("trials", "trials", opt.trials);
    overlay.apply("seed", "seed", opt.seed);
    overlay.apply("no-fusing", "no_fusing", opt.no_fusing);
    overlay.apply("workers", "workers", opt.workers);
    overlay.apply("out", "out", opt.out);
    overlay.reject_unknown();

    keyfuse::SessionConfig cfg;
    cfg.message_count = opt.messages;
    cfg.window_size = opt.window;
    cfg.exposure = keyfuse::ExposureModel(opt.p);
    cfg.fusing_enabled = !opt.no_fusing;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;

    const auto outcome = keyfuse::simulate_session(cfg, opt.workers);
    const int analytic_w = cfg.fusing_enabled ? cfg.window_size : 1;
    const double analytic =
        keyfuse::sop_closed_form(keyfuse::SopQuery(opt.p, opt.messages, analytic_w));
    // z against the standard error implied by the analytic value, which stays
    // meaningful when the empirical estimate is 0 or 1
    const double analytic_se =
        std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(opt.trials));
    const bool z_defined = analytic_se > 0.0 || outcome.estimate == analytic;
    const double z = analytic_se > 0.0 ? (outcome.estimate - analytic) / analytic_se : 0.0;
    const bool consistent = z_defined && std::abs(z) <= 4.0;

    OutputSink sink(opt.out);
    std::ostream& os = sink.stream();
    os << "{\n"
       << "  \"p\": " << fmt_real(opt.p) << ",\n"
       << "  \"message_count\": " << opt.messages << ",\n"
       << "  \"window_size\": " << opt.window << ",\n"
       << "  \"fusing\": " << fmt_bool(cfg.fusing_enabled) << ",\n"
       << "  \"trials\": " << opt.trials << ",\n"
       << "  \"seed\": " << opt.seed << ",\n"
       << "  \"compromised_trials\": " << outcome.compromised_trials << ",\n"
       << "  \"estimate\": " << fmt_real(outcome.estimate) << ",\n"
       << "  \"std_error\": " << fmt_real(outcome.std_error) << ",\n"
       << "  \"analytic\": " << fmt_real(analytic) << ",\n"
       << "  \"z_score\": " << (z_defined ? fmt_real(z) : "null") << ",\n"
       << "  \"consistent\": " << fmt_bool(consistent) << "\n"
       << "}\n";
    return consistent ? kExitOk : kExitVerificationFailed;
}

// --------------------------------------------------------------- verify-kft

struct VerifyOptions {
    int bits = 2;
    std::string kft = "xor";
    std::string perm;
    std::uint64_t seed = 0;
    std::string out;
    std::string config;
};

int run_verify_kft(CLI::App* cmd, VerifyOptions& opt) {
    ConfigOverlay overlay(cmd, opt.config);
    overlay.apply("bits", "bits", opt.bits);
    overlay.apply("kft", "kft", opt.kft);
    overlay.apply("perm", "perm", opt.perm);
    overlay.apply("seed", "seed", opt.seed);
    overlay.apply("out", "out", opt.out);
    overlay.reject_unknown();
    if (opt.bits > keyfuse::kMaxLawCheckBits) {
        throw UsageError("verify-kft runs the exhaustive law check, --bits must be <= " +
                         std::to_string(keyfuse::kMaxLawCheckBits));
    }

    const keyfuse::KeySpace space(opt.bits);
    const auto kft = build_kft(space, opt.kft, opt.perm, opt.seed);
    const bool latin = verify_latin_square(kft);
    const auto laws = check_laws(kft);

    OutputSink sink(opt.out);
    sink.stream() << "{\n"
                  << "  \"bits\": " << opt.bits << ",\n"
                  << "  \"kft\": \"" << opt.kft << "\",\n"
                  << "  \"latin_square\": " << fmt_bool(latin) << ",\n"
                  << "  \"commutative\": " << fmt_bool(laws.commutative) << ",\n"
                  << "  \"associative\": " << fmt_bool(laws.associative) << "\n"
                  << "}\n";
    return latin ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"key-fusing toolkit: entropy accounting, fusion verification, "
                 "and secret outage analysis"};
    app.require_subcommand(1);

    ToyOptions toy;
    auto* toy_cmd = app.add_subcommand(
        "toy-model", "2-bit fusion table: distributions and entropies of k_A..k_ABC");
    toy_cmd->add_option("--bits", toy.bits, "key size in bits");
    toy_cmd->add_option("--kft", toy.kft, "transformation kind: xor|add|sub|permuted");
    toy_cmd->add_option("--perm", toy.perm, "permutation for kind 'permuted', e.g. 0,1,3,2");
    toy_cmd->add_option("--seed", toy.seed, "seed for a generated permutation");
    toy_cmd->add_option("--ka", toy.ka, "distribution of k_A (list, fractions ok, or paper-kA)");
    toy_cmd->add_option("--kb", toy.kb, "distribution of k_B");
    toy_cmd->add_option("--kc", toy.kc, "distribution of k_C");
    toy_cmd->add_option("--format", toy.format, "table|json");
    toy_cmd->add_option("--out", toy.out, "write output to a file");
    toy_cmd->add_option("--config", toy.config, "JSON config file; flags win");

    CurveOptions curve;
    auto* curve_cmd =
        app.add_subcommand("sop-curve", "closed-form outage over a (p, w) grid, CSV or JSON");
    curve_cmd->add_option("--p", curve.p, "comma list of exposure probabilities");
    curve_cmd->add_option("--w", curve.w, "comma list of window sizes");
    curve_cmd->add_option("--K", curve.messages, "messages per session");
    curve_cmd->add_option("--format", curve.format, "csv|json");
    curve_cmd->add_option("--out", curve.out, "write output to a file");
    curve_cmd->add_option("--config", curve.config, "JSON config file; flags win");

    AllowedOptions allowed;
    auto* allowed_cmd = app.add_subcommand(
        "allowed-exposure", "largest per-key exposure meeting a target outage");
    allowed_cmd->add_option("--target-sop", allowed.target, "comma list of target outages");
    allowed_cmd->add_option("--w", allowed.w, "comma list of window sizes");
    allowed_cmd->add_option("--K", allowed.messages, "messages per session");
    allowed_cmd->add_option("--format", allowed.format, "csv|json");
    allowed_cmd->add_option("--out", allowed.out, "write output to a file");
    allowed_cmd->add_option("--config", allowed.config, "JSON config file; flags win");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand(
        "simulate", "seeded Monte Carlo session, cross-checked against the closed form");
    sim_cmd->add_option("--p", sim.p, "per-key exposure probability");
    sim_cmd->add_option("--K", sim.messages, "messages per session");
    sim_cmd->add_option("--w", sim.window, "window size");
    sim_cmd->add_option("--trials", sim.trials, "Monte Carlo trials");
    sim_cmd->add_option("--seed", sim.seed, "base seed; trials derive from (seed, index)");
    sim_cmd->add_flag("--no-fusing", sim.no_fusing, "one raw key per message");
    sim_cmd->add_option("--workers", sim.workers, "worker hint; never changes the result");
    sim_cmd->add_option("--out", sim.out, "write output to a file");
    sim_cmd->add_option("--config", sim.config, "JSON config file; flags win");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand(
        "verify-kft", "Latin-square and law classification of a transformation");
    verify_cmd->add_option("--bits", verify.bits, "key size in bits (<= 8)");
    verify_cmd->add_option("--kft", verify.kft, "transformation kind: xor|add|sub|permuted");
    verify_cmd->add_option("--perm", verify.perm, "permutation for kind 'permuted'");
    verify_cmd->add_option("--seed", verify.seed, "seed for a generated permutation");
    verify_cmd->add_option("--out", verify.out, "write output to a file");
    verify_cmd->add_option("--config", verify.config, "JSON config file; flags win");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (toy_cmd->parsed()) {
            return run_toy_model(toy_cmd, toy);
        }
        if (curve_cmd->parsed()) {
            return run_sop_curve(curve_cmd, curve);
        }
        if (allowed_cmd->parsed()) {
            return run_allowed_exposure(allowed_cmd, allowed);
        }
        if (sim_cmd->parsed()) {
            return run_simulate(sim_cmd, sim);
        }
        if (verify_cmd->parsed()) {
            return run_verify_kft(verify_cmd, verify);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const keyfuse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

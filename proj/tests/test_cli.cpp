#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(KEYFUSE_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("toy-model defaults reproduce the 2-bit table") {
    const auto r = run("toy-model");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "k_A"));
    CHECK(contains(r.output, "1.58496"));
    CHECK(contains(r.output, "1.848"));
    CHECK(contains(r.output, "preserved"));
    CHECK(contains(r.output, "yes"));

    const auto j = run("toy-model --format json");
    CHECK(j.exit_code == 0);
    CHECK(contains(j.output, "\"min_entropy_preserved\": true"));
    CHECK(contains(j.output, "\"name\": \"k_ABC\""));

    // a different instance still preserves min-entropy, with a different table
    const auto add = run("toy-model --kft add --format json");
    CHECK(add.exit_code == 0);
    CHECK(contains(add.output, "\"min_entropy_preserved\": true"));
    CHECK(add.output != j.output);
}

TEST_CASE("sop-curve emits the anchor rows") {
    const auto r = run("sop-curve --p 0.1,0.5 --w 1,10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "p,w,sop_fusing,sop_nonfusing,log10_sop_fusing"));
    CHECK(contains(r.output, "0.1,10,6.00000e-09,0.998203,"));
    CHECK(contains(r.output, "0.5,10,0.0569372,"));
    CHECK(contains(r.output, "0.1,1,0.998203,0.998203,"));

    const auto zero = run("sop-curve --p 0 --w 1,5");
    CHECK(contains(zero.output, "0,1,0,0,-inf"));
}

TEST_CASE("allowed-exposure emits the threshold anchors") {
    const auto r = run("allowed-exposure --target-sop 1e-6 --w 1,9");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "target_sop,w,allowed_p"));
    CHECK(contains(r.output, "1.00000e-06,1,1.66667e-08"));
    CHECK(contains(r.output, "1.00000e-06,9,0.136698"));

    const auto single = run("allowed-exposure --target-sop 0.5 --w 1 --K 1");
    CHECK(contains(single.output, "0.5,1,0.5"));

    CHECK(run("allowed-exposure --target-sop 0").exit_code == 2);
    CHECK(run("allowed-exposure --target-sop 1").exit_code == 2);
}

TEST_CASE("simulate cross-checks the closed form") {
    const auto r = run("simulate --p 0.3 --w 3 --trials 100000 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"analytic\": 0.80646"));
    CHECK(contains(r.output, "\"consistent\": true"));

    const auto none = run("simulate --p 0 --w 2 --trials 1000");
    CHECK(none.exit_code == 0);
    CHECK(contains(none.output, "\"estimate\": 0"));
    CHECK(contains(none.output, "\"analytic\": 0"));
    CHECK(contains(none.output, "\"z_score\": 0"));

    const auto sure = run("simulate --p 1 --w 2 --trials 1000");
    CHECK(sure.exit_code == 0);
    CHECK(contains(sure.output, "\"estimate\": 1"));
}

TEST_CASE("verify-kft classifies the instances") {
    const auto x = run("verify-kft --kft xor --bits 2");
    CHECK(x.exit_code == 0);
    CHECK(contains(x.output, "\"latin_square\": true"));
    CHECK(contains(x.output, "\"commutative\": true"));
    CHECK(contains(x.output, "\"associative\": true"));

    const auto s = run("verify-kft --kft sub --bits 2");
    CHECK(s.exit_code == 0);
    CHECK(contains(s.output, "\"latin_square\": true"));
    CHECK(contains(s.output, "\"commutative\": false"));

    const auto a = run("verify-kft --kft add --bits 3");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "\"associative\": true"));

    const auto p = run("verify-kft --kft permuted --perm 0,1,3,2");
    CHECK(p.exit_code == 0);
    CHECK(contains(p.output, "\"commutative\": true"));
    CHECK(contains(p.output, "\"associative\": false"));

    CHECK(run("verify-kft --bits 9").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("simulate --p 2.0").exit_code == 2);
    CHECK(run("toy-model --ka 0.5,0.5,0.5").exit_code == 2);
    CHECK(run("toy-model --ka paper-kX").exit_code == 2);
    CHECK(run("sop-curve --format yaml").exit_code == 2);
    CHECK(run("sop-curve --w 0").exit_code == 2);
}

TEST_CASE("outputs are byte-stable across runs") {
    for (const char* cmd : {"sop-curve", "allowed-exposure --target-sop 1e-6,1e-4",
                            "simulate --p 0.25 --w 2 --trials 20000 --seed 7",
                            "toy-model --format json"}) {
        const auto first = run(cmd);
        const auto second = run(cmd);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK(!first.output.empty());
    }
    // worker hint must not change a single byte
    const auto one = run("simulate --p 0.25 --w 2 --trials 20000 --seed 7 --workers 1");
    const auto four = run("simulate --p 0.25 --w 2 --trials 20000 --seed 7 --workers 4");
    CHECK(one.output == four.output);
}

TEST_CASE("config file supplies values, flags win") {
    const auto cfg = temp_file("keyfuse_sim_cfg.json");
    {
        std::ofstream out(cfg);
        out << "{\"p\": 0.2, \"w\": 2, \"trials\": 5000, \"seed\": 3}\n";
    }
    const auto from_cfg = run("simulate --config " + cfg.string());
    CHECK(from_cfg.exit_code == 0);
    CHECK(contains(from_cfg.output, "\"p\": 0.2"));
    CHECK(contains(from_cfg.output, "\"window_size\": 2"));

    const auto overridden = run("simulate --config " + cfg.string() + " --p 0.4");
    CHECK(contains(overridden.output, "\"p\": 0.4"));
    CHECK(contains(overridden.output, "\"window_size\": 2"));

    const auto bad = temp_file("keyfuse_bad_cfg.json");
    {
        std::ofstream out(bad);
        out << "{\"p\": 0.2, \"windows\": 2}\n";
    }
    CHECK(run("simulate --config " + bad.string()).exit_code == 2);
    CHECK(run("simulate --config /no/such/file.json").exit_code == 2);
    std::filesystem::remove(cfg);
    std::filesystem::remove(bad);
}

TEST_CASE("--out writes the same bytes to a file") {
    const auto path = temp_file("keyfuse_curve.csv");
    const auto direct = run("sop-curve --p 0.1 --w 1,2,3");
    const auto to_file = run("sop-curve --p 0.1 --w 1,2,3 --out " + path.string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == direct.output);
    std::filesystem::remove(path);
}

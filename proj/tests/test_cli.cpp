#include <doctest.h>

#include <cstdio>
#include <cstdlib>

#include <unistd.h>
#include <fstream>
#include <string>
#include <vector>

#include "cbst/report.hpp"

using namespace cbst;

namespace {

#ifndef CBST_CLI_PATH
#define CBST_CLI_PATH "cbst"
#endif

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

std::string temp_path(const char* tag) {
    static int counter = 0;
    return "/tmp/cbst_cli_test_" + std::to_string(getpid()) + "_" +
           std::to_string(counter++) + tag;
}

RunResult run_cli(const std::string& args) {
    std::string out_path = temp_path(".out");
    std::string cmd = std::string(CBST_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    r.stdout_text.assign(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>());
    std::remove(out_path.c_str());
    return r;
}

std::string write_temp(const std::vector<std::uint8_t>& bytes, const char* tag) {
    std::string path = temp_path(tag);
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    return path;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("a constant bit file is rejected with exit code 2") {
    auto path = write_temp(std::vector<std::uint8_t>(1250, 0), ".zeros");
    auto r = run_cli("identity --input " + path + " --format bits --model uniform-iid "
                     "--codec kt:k=0 --alpha 0.01 --report json");
    CHECK(r.exit_code == 2);
    Report rep = report_from_json(r.stdout_text);
    CHECK(rep.decision == "reject");
    CHECK(rep.t == 10000);
    CHECK(rep.model_term_bits == 10000.0);
    CHECK(rep.statistic_bits > 9000.0);
    std::remove(path.c_str());
}

TEST_CASE("alternating bits accept independence at m=1 with exit code 0") {
    auto path = write_temp(std::vector<std::uint8_t>(125, 0x55), ".alt");
    auto r = run_cli("independence --input " + path +
                     " --m 1 --codec ctw:d=4 --alpha 0.05 --report json");
    CHECK(r.exit_code == 0);
    Report rep = report_from_json(r.stdout_text);
    CHECK(rep.decision == "accept");
    CHECK(rep.model_term_bits == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 1") {
    auto path = write_temp({0x00}, ".tiny");
    CHECK(run_cli("identity --input " + path + " --alpha 1.5").exit_code == 1);
    CHECK(run_cli("identity --input " + path + " --codec bogus").exit_code == 1);
    CHECK(run_cli("identity --input " + path + " --format trits").exit_code == 1);
    CHECK(run_cli("identity --input /nonexistent/file.bin").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("generate feeds identity end to end") {
    std::string data = temp_path(".octets");
    auto gen = run_cli("generate --lcg 2^31,65539,0,1 --octets 12500 --output " + data);
    CHECK(gen.exit_code == 0);

    auto r = run_cli("identity --input " + data +
                     " --format bytes --model uniform-iid --codec lz78 "
                     "--alpha 0.01 --report json");
    CHECK((r.exit_code == 0 || r.exit_code == 2));
    Report rep = report_from_json(r.stdout_text);
    CHECK(rep.t == 12500);
    std::remove(data.c_str());
}

TEST_CASE("power studies run from a model file alternative") {
    std::string model = temp_path(".model.json");
    {
        std::ofstream out(model);
        out << R"({"alphabet_size":2,"order":0,"transitions":{"":[0.7,0.3]}})";
    }
    auto r = run_cli("montecarlo --test identity --model uniform-iid --alternative " +
                     model + " --codec kt:k=0 --alpha 0.01 --t 20000 --trials 10 "
                     "--seed 4 --report json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"bound_checked\":false") != std::string::npos);
    CHECK(r.stdout_text.find("\"rejections\":10") != std::string::npos);

    // the same chain offered as an independence null of too-low order fails
    std::string chain = temp_path(".chain.json");
    {
        std::ofstream out(chain);
        out << R"({"alphabet_size":2,"order":1,"initial":"uniform",)"
            << R"("transitions":{"0":[0.9,0.1],"1":[0.1,0.9]}})";
    }
    auto bad = run_cli("montecarlo --test independence --model " + chain +
                       " --m 0 --codec kt:k=0 --t 1000 --trials 5 --seed 1");
    CHECK(bad.exit_code == 1);
    std::remove(model.c_str());
    std::remove(chain.c_str());
}

TEST_CASE("table1 refuses meaningless bit budgets") {
    CHECK(run_cli("table1 --bits 5000").exit_code == 1);
    CHECK(run_cli("table1 --bits 400001").exit_code == 1);
}

TEST_CASE("stdin input works through the dash convention") {
    auto path = write_temp(std::vector<std::uint8_t>(1250, 0), ".stdin");
    auto r = run_cli("identity --input - --format bits --codec kt:k=0 "
                     "--alpha 0.01 < " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("montecarlo respects the bound and reports json") {
    auto r = run_cli("montecarlo --test identity --model uniform-iid --codec kt:k=0 "
                     "--alpha 0.1 --t 512 --trials 50 --seed 3 --report json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"pass\":true") != std::string::npos);

    auto serial = run_cli("montecarlo --test identity --model uniform-iid --codec kt:k=0 "
                          "--alpha 0.1 --t 512 --trials 50 --seed 3 --serial --report json");
    CHECK(serial.stdout_text == r.stdout_text); // identical aggregation
}

TEST_SUITE_END();

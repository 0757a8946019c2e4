// Drives the installed command-line tool as a subprocess.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string command = std::string(SOLOW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "solow_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("solve") {
        const RunResult r = run("solve --samples 3 --t-max 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("t,k,trusted,method\n0,1,1,series\n", 0) == 0);

        const RunResult both = run("solve --method both --samples 5");
        CHECK(both.exit_code == 0);
        CHECK(both.out.find(",exact\n") != std::string::npos);
        CHECK(both.out.find(",series\n") != std::string::npos);

        const RunResult frac = run("solve --method both --alpha 0.8 --samples 5");
        CHECK(frac.exit_code == 0);
        CHECK(frac.out.find(",abm\n") != std::string::npos);
    }

    TEST_CASE("usage and validation errors exit with 2") {
        CHECK(run("").exit_code == 2);
        CHECK(run("frobnicate").exit_code == 2);
        CHECK(run("solve --q -1").exit_code == 2);
        CHECK(run("solve --mu 1").exit_code == 2);
        CHECK(run("solve --method exact --alpha 0.5").exit_code == 2);
        CHECK(run("solve --method rk4").exit_code == 2);
        CHECK(run("solve --samples abc").exit_code == 2);
        CHECK(run("sweep --preset nope").exit_code == 2);
        CHECK(run("sweep --config /nonexistent.cfg").exit_code == 2);
        CHECK(run("sweep --axis mu --axis-max 1.5").exit_code == 2);
    }

    TEST_CASE("equilibria") {
        const RunResult table = run("equilibria");
        CHECK(table.exit_code == 0);
        CHECK(table.out.find("asymptotically stable") != std::string::npos);
        const RunResult json = run("equilibria --json --p 1 --q 1");
        CHECK(json.exit_code == 0);
        CHECK(json.out.find("\"value\": 1.0") != std::string::npos);
    }

    TEST_CASE("verify passes and fails on the negative control") {
        const RunResult ok = run("verify");
        CHECK(ok.exit_code == 0);
        CHECK(ok.out.find("summary") != std::string::npos);
        CHECK(run("verify --tolerance 0").exit_code == 1);
    }

    TEST_CASE("compare") {
        CHECK(run("compare").exit_code == 0);
        CHECK(run("compare --alpha 0.8").exit_code == 0);
        const RunResult strict = run("compare --tolerance 1e-9");
        CHECK(strict.exit_code == 1);
        CHECK(strict.out.find("FAIL") != std::string::npos);
    }

    TEST_CASE("sweep output is reproducible") {
        const auto dir = scratch();
        const auto a = (dir / "a.csv").string();
        const auto b = (dir / "b.csv").string();
        const auto gp = (dir / "a.gp").string();
        REQUIRE(run("sweep --preset fig-ktq-frac --method both --threads 1 --out " + a + " --gnuplot-script " + gp)
                    .exit_code == 0);
        REQUIRE(run("sweep --preset fig-ktq-frac --method both --threads 4 --out " + b).exit_code == 0);
        const std::string first = slurp(a);
        CHECK(first.rfind("t,axis,k,trusted,method\n", 0) == 0);
        CHECK(first == slurp(b));
        CHECK(std::filesystem::exists(a + ".meta.json"));
        CHECK(slurp(gp).find(a) != std::string::npos);

        const RunResult streamed = run("sweep --preset fig-ktq-frac --method both");
        CHECK(streamed.out == first);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("config file plus flag overrides") {
        const auto dir = scratch();
        const auto cfg = dir / "sweep.cfg";
        std::ofstream(cfg) << "# two-by-two\naxis=p\naxis_min=0.4\naxis_max=0.6\naxis_count=2\nt_count=2\n";
        const RunResult r = run("sweep --config " + cfg.string() + " --t-max 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "t,axis,k,trusted,method\n"
                       "0,0.40000000000000002,1,1,series\n"
                       "0,0.59999999999999998,1,1,series\n"
                       "1,0.40000000000000002,1.1929661234567901,1,series\n"
                       "1,0.59999999999999998,1.3969485432098765,1,series\n");
        std::ofstream(cfg) << "axis=p\nspeed=3\n";
        CHECK(run("sweep --config " + cfg.string()).exit_code == 2);
        std::filesystem::remove_all(dir);
    }
}

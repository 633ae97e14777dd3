// End-to-end checks against the built CLI binary; the path arrives as
// argv[1] from ctest.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;

#define REQUIRE_MSG(cond, msg)                                                      \
    do {                                                                            \
        if (!(cond)) {                                                              \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg     \
                      << "\n";                                                      \
            ++g_failures;                                                           \
        }                                                                           \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        std::cerr << "[FAIL] popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-fanob>\n";
        return 2;
    }
    std::string bin = argv[1];

    // classify --n 3 emits the single row (3,4,3,1,1,2,-4,0,1)
    {
        auto r = run(bin + " classify --n 3 --emit table");
        REQUIRE_MSG(r.exit_code == 0, "classify exit code");
        REQUIRE_MSG(r.out.find("3  4    3    1  1   2    -4     0  1") != std::string::npos,
                    "classify row content: " << r.out);
    }

    // cremona spot values 4, 17/3, 47/8
    {
        auto r = run(bin + " cremona --k 9 --steps 2 --emit table");
        REQUIRE_MSG(r.exit_code == 0, "cremona exit code");
        REQUIRE_MSG(r.out.find("  4\n") != std::string::npos, "tau(l_0) = 4");
        REQUIRE_MSG(r.out.find("17/3") != std::string::npos, "tau(l_1) = 17/3");
        REQUIRE_MSG(r.out.find("47/8") != std::string::npos, "tau(l_2) = 47/8");
    }

    // analyze with tau = 0 reports the trivial bundle, exit 0
    {
        auto r = run("echo '{\"n\":3,\"i_X\":4,\"d\":1,\"d_X\":1,\"c1\":0,\"c2\":0,\"tau\":\"0\"}'"
                     " | " + bin + " analyze");
        REQUIRE_MSG(r.exit_code == 0, "trivial analyze exit code");
        REQUIRE_MSG(r.out.find("TrivialBundle") != std::string::npos, "trivial outcome");
    }

    // inconsistent data surfaces as Contradiction with exit 1
    {
        auto r = run("echo '{\"n\":2,\"i_X\":3,\"d\":1,\"d_X\":1,\"c1\":0,\"c2\":1,"
                     "\"tau\":\"1\",\"rho\":\"-2\"}' | " + bin + " analyze");
        REQUIRE_MSG(r.exit_code == 1, "contradiction exit code, got " << r.exit_code);
        REQUIRE_MSG(r.out.find("Contradiction") != std::string::npos, "contradiction outcome");
    }

    // malformed payload exits 2
    {
        auto r = run("echo 'not json' | " + bin + " analyze");
        REQUIRE_MSG(r.exit_code == 2, "schema violation exit code, got " << r.exit_code);
    }
    {
        auto r = run("echo '{\"n\":3}' | " + bin + " analyze");
        REQUIRE_MSG(r.exit_code == 2, "missing fields exit code, got " << r.exit_code);
    }

    // batch mode: JSON Lines in, one report per record, order preserved
    {
        auto r = run("printf '%s\\n%s\\n' "
                     "'{\"n\":3,\"i_X\":2,\"d\":1,\"d_X\":1,\"c1\":0,\"c2\":-1,\"tau\":\"2\","
                     "\"rho\":\"-2\"}' "
                     "'{\"n\":3,\"i_X\":4,\"d\":1,\"d_X\":1,\"c1\":0,\"c2\":0,\"tau\":\"0\"}'"
                     " | " + bin + " analyze --format table");
        REQUIRE_MSG(r.exit_code == 0, "batch exit code");
        size_t first = r.out.find("Decomposable");
        size_t second = r.out.find("TrivialBundle");
        REQUIRE_MSG(first != std::string::npos && second != std::string::npos &&
                        first < second,
                    "batch order preserved");
    }

    // byte-identical output on identical input
    {
        auto a = run(bin + " classify --emit json");
        auto b = run(bin + " classify --emit json");
        REQUIRE_MSG(a.out == b.out && !a.out.empty(), "classify determinism");
        auto c = run("echo '{\"n\":2,\"i_X\":3,\"d\":1,\"d_X\":1,\"c1\":-1,\"c2\":1,"
                     "\"tau\":\"1\",\"rho\":\"1\"}' | " + bin + " analyze");
        auto d = run("echo '{\"n\":2,\"i_X\":3,\"d\":1,\"d_X\":1,\"c1\":-1,\"c2\":1,"
                     "\"tau\":\"1\",\"rho\":\"1\"}' | " + bin + " analyze");
        REQUIRE_MSG(c.out == d.out && !c.out.empty(), "analyze determinism");
    }

    // every verdict line carries at least one justification detail
    {
        auto r = run("echo '{\"n\":2,\"i_X\":3,\"d\":1,\"d_X\":1,\"c1\":-1,\"c2\":1,"
                     "\"tau\":\"1\",\"rho\":\"1\"}' | " + bin + " analyze");
        REQUIRE_MSG(r.out.find("\"criterion\"") != std::string::npos, "justification present");
        REQUIRE_MSG(r.out.find("\"detail\"") != std::string::npos, "detail present");
    }

    // ring-eval dual routes agree and expose the j = 1 boundary
    {
        auto r = run(bin + " ring-eval --n 2 --delta -3 --tau 1 --rho-prime -1 --emit table");
        REQUIRE_MSG(r.exit_code == 0, "ring-eval exit code");
        REQUIRE_MSG(r.out.find("1  1  -1  0  0") != std::string::npos,
                    "ring-eval j=1 boundary: " << r.out);
    }

    // hartshorne on a type pair
    {
        auto r = run(bin + " hartshorne --n 8 --a 1 --b 100");
        REQUIRE_MSG(r.exit_code == 0, "hartshorne exit code");
        REQUIRE_MSG(r.out.find("CompleteIntersection") != std::string::npos,
                    "a=1 completes: " << r.out);
    }

    // raw classification solutions stay inspectable
    {
        auto r = run(bin + " classify --n 2 --solutions-only --no-plane-filter");
        REQUIRE_MSG(r.exit_code == 0, "solutions-only exit code");
        REQUIRE_MSG(r.out.find("\"mu\": 3") != std::string::npos,
                    "raw (1,1,3) branch visible: " << r.out);
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failure(s)\n";
    return 1;
}

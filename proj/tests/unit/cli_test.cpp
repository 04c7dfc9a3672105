#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TCOULOMB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
        r.stdout_text.append(buf, got);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) {
            cells.push_back(cell);
            cell.clear();
        } else cell += ch;
    }
    cells.push_back(cell);
    return cells;
}

fs::path temp_dir() {
    fs::path p = fs::temp_directory_path() / "tcoulomb_cli_test";
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("exact n=0 l=0 emits the alpha=1 beta=2 row") {
    RunResult r = run_cli("exact --n 0 --l 0");
    REQUIRE(r.exit_code == 0);
    auto lines = data_lines(r.stdout_text);
    REQUIRE(lines.size() == 2);  // header + one row
    CHECK(lines[0] == "n,l,i,alpha,beta,nu,energy_tilde,energy_breve,coeffs");
    auto cells = split_csv(lines[1]);
    REQUIRE(cells.size() == 9);
    CHECK(std::strtod(cells[3].c_str(), nullptr) == 1.0);
    CHECK(std::strtod(cells[4].c_str(), nullptr) == 2.0);
    CHECK(cells[5] == "0");
}

TEST_CASE("exact n=1 l=0 emits the two closed-form rows") {
    RunResult r = run_cli("exact --n 1 --l 0");
    REQUIRE(r.exit_code == 0);
    auto lines = data_lines(r.stdout_text);
    REQUIRE(lines.size() == 3);
    double a1 = std::strtod(split_csv(lines[1])[3].c_str(), nullptr);
    double a2 = std::strtod(split_csv(lines[2])[3].c_str(), nullptr);
    CHECK(a1 == doctest::Approx(0.63397459621556140).epsilon(1e-12));
    CHECK(a2 == doctest::Approx(2.3660254037844388).epsilon(1e-12));
}

TEST_CASE("exact n=3 l=1 emits four rows ascending in beta") {
    RunResult r = run_cli("exact --n 3 --l 1");
    REQUIRE(r.exit_code == 0);
    auto lines = data_lines(r.stdout_text);
    REQUIRE(lines.size() == 5);
    double prev = 0.0;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        double beta = std::strtod(split_csv(lines[k])[4].c_str(), nullptr);
        CHECK(beta > prev);
        prev = beta;
    }
}

TEST_CASE("csv and json routes agree to full double precision") {
    RunResult csv = run_cli("exact --n 2 --l 1");
    RunResult js = run_cli("exact --n 2 --l 1 --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    json doc = json::parse(js.stdout_text);
    auto lines = data_lines(csv.stdout_text);
    REQUIRE(doc["results"].size() == lines.size() - 1);
    for (std::size_t k = 0; k < doc["results"].size(); ++k) {
        auto cells = split_csv(lines[k + 1]);
        // CSV carries 17 significant digits: parsing it back must reproduce
        // the JSON doubles bit for bit
        CHECK(std::strtod(cells[3].c_str(), nullptr) == doc["results"][k]["alpha"].get<double>());
        CHECK(std::strtod(cells[6].c_str(), nullptr) ==
              doc["results"][k]["energy_tilde"].get<double>());
    }
}

TEST_CASE("identical invocations produce byte-identical output files") {
    fs::path dir = temp_dir();
    fs::path f1 = dir / "a.csv";
    auto slurp = [&]() {
        std::ifstream a(f1, std::ios::binary);
        std::stringstream sa;
        sa << a.rdbuf();
        return sa.str();
    };
    const std::string cmd = "exact --n 4 --l 2 --out " + f1.string();
    REQUIRE(run_cli(cmd).exit_code == 0);
    const std::string first = slurp();
    REQUIRE(run_cli(cmd).exit_code == 0);
    CHECK(first == slurp());
    CHECK(!first.empty());
}

TEST_CASE("curve command emits the requested spectral curve") {
    RunResult r = run_cli("curve --nu 1 --l 0 --n-max 3");
    REQUIRE(r.exit_code == 0);
    auto lines = data_lines(r.stdout_text);
    REQUIRE(lines.size() == 4);  // header + n = 1, 2, 3
    auto first = split_csv(lines[1]);
    CHECK(std::strtod(first[4].c_str(), nullptr) == doctest::Approx(1.9019237886466838));
}

TEST_CASE("interp reproduces the paper's beta=40 estimate") {
    RunResult r = run_cli("interp --nu 0 --l 0 --n-max 20 --beta 40 --format json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.stdout_text);
    CHECK(doc["results"][0]["alpha"].get<double>() == doctest::Approx(6.856).epsilon(2e-4));
}

TEST_CASE("oracle command emits the eigenvalue") {
    RunResult r = run_cli("oracle --beta 2 --l 0 --nu 0 --format json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.stdout_text);
    CHECK(doc["results"][0]["alpha"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("hydrogen preset: r0 of one reduced Bohr radius gives beta near 1") {
    RunResult r = run_cli("oracle --hydrogen-r0 5.2946541e-11 --l 0 --nu 0 --format json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.stdout_text);
    CHECK(doc["results"][0]["beta"].get<double>() == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("wavefn samples start at f(0) = 0") {
    RunResult r = run_cli("wavefn --n 1 --l 0 --i 2 --samples 5");
    REQUIRE(r.exit_code == 0);
    auto lines = data_lines(r.stdout_text);
    REQUIRE(lines.size() == 6);
    CHECK(std::strtod(split_csv(lines[1])[4].c_str(), nullptr) == 0.0);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("exact --l 0").exit_code == 1);             // missing --n
    CHECK(run_cli("interp --nu 0 --l 0").exit_code == 1);     // missing --beta
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("exact --n 0 --l 0 --tol 1").exit_code == 1);
    // extrapolation refused
    CHECK(run_cli("interp --nu 0 --l 0 --n-max 5 --beta 1000").exit_code == 1);
}

TEST_CASE("quick check passes and the fault hook trips it") {
    RunResult ok = run_cli("check --level quick");
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("all checks passed") != std::string::npos);

    RunResult bad = run_cli("check --level quick --inject-fault");
    CHECK(bad.exit_code == 2);
    CHECK(bad.stdout_text.find("FAIL") != std::string::npos);
}

TEST_CASE("check writes a JSON report when asked") {
    fs::path report = temp_dir() / "report.json";
    RunResult r = run_cli("check --level quick --out " + report.string());
    CHECK(r.exit_code == 0);
    std::ifstream f(report);
    REQUIRE(f.good());
    json doc = json::parse(f);
    CHECK(doc["passed"].get<bool>());
    CHECK(doc["checks"].size() >= 5);
}

TEST_CASE("figures command writes the three data files") {
    fs::path dir = temp_dir() / "figs";
    RunResult r = run_cli("figures --out-dir " + dir.string() + " --n-max 12");
    REQUIRE(r.exit_code == 0);
    for (const char* name : {"fig1.csv", "fig2.csv", "fig3.csv"}) {
        CHECK(fs::exists(dir / name));
    }

    // fig1 must contain the oracle cross at beta=40 on the ground curve
    std::ifstream f(dir / "fig1.csv");
    std::string line;
    bool found_cross = false;
    while (std::getline(f, line)) {
        if (line.rfind("nu0_l0,40,", 0) == 0 && line.find("oracle") != std::string::npos) {
            auto cells = split_csv(line);
            CHECK(std::strtod(cells[2].c_str(), nullptr) == doctest::Approx(6.854786377).epsilon(1e-6));
            found_cross = true;
        }
    }
    CHECK(found_cross);

    // fig2: at the shared exact beta = l+2 the n=0 points have alpha = 1
    std::ifstream f2(dir / "fig2.csv");
    int unit_alphas = 0;
    while (std::getline(f2, line)) {
        auto cells = split_csv(line);
        if (cells.size() == 4 && std::strtod(cells[2].c_str(), nullptr) == 1.0) ++unit_alphas;
    }
    CHECK(unit_alphas == 10);  // one per l = 0..9

    // fig3: k=2 block ordering alpha_{0,2} > alpha_{1,1} > alpha_{2,0} at a shared grid beta
    std::ifstream f3(dir / "fig3.csv");
    double a02 = 0.0, a11 = 0.0, a20 = 0.0;
    while (std::getline(f3, line)) {
        auto cells = split_csv(line);
        if (cells.size() != 4 || cells[3] != "interpolated") continue;
        double beta = std::strtod(cells[1].c_str(), nullptr);
        if (beta < 8.4 || beta > 8.6) continue;  // the k=2 grid hits 8.5 exactly
        double alpha = std::strtod(cells[2].c_str(), nullptr);
        if (cells[0] == "k2_nu0_l2") a02 = alpha;
        if (cells[0] == "k2_nu1_l1") a11 = alpha;
        if (cells[0] == "k2_nu2_l0") a20 = alpha;
    }
    CHECK(a02 > a11);
    CHECK(a11 > a20);
    CHECK(a20 > 0.0);
}

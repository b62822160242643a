// End-to-end checks of the casimir binary: exit codes, JSON output,
// CSV layout, determinism, and config round-trips. The binary path is
// injected by the build as CASIMIR_CLI_PATH.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/units.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

fs::path temp_file(const std::string& tag) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("casimir_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args) {
    const fs::path capture = temp_file("out");
    const std::string cmd =
        std::string("\"") + CASIMIR_CLI_PATH + "\" " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.output = slurp(capture);
    fs::remove(capture);
    return result;
}

struct Csv {
    std::vector<std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            csv.meta.push_back(line);
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream fl(line);
        std::string field;
        while (std::getline(fl, field, ',')) fields.push_back(field);
        if (!saw_header) {
            csv.header = fields;
            saw_header = true;
        } else {
            csv.rows.push_back(fields);
        }
    }
    return csv;
}

double to_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("force ideal matches the closed form") {
    const auto res = run_cli("force --mode ideal --a-prime 1 --json");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    const double expected = casimir::constants::pi * casimir::constants::pi / 240.0;
    CHECK(std::abs(j["force_per_area"].get<double>() - expected) < 1e-14);
    CHECK(j["converged"].get<bool>());

    // the same number through the folded geometry
    const auto via_ab = run_cli("force --mode ideal --a 8 --b 3 --json");
    REQUIRE(via_ab.exit_code == 0);
    const json j2 = json::parse(via_ab.output);
    CHECK(std::abs(j2["force_per_area"].get<double>() - expected / 16.0) < 1e-14);
}

TEST_CASE("usage errors name the offending field and exit 1") {
    const auto bad_mode = run_cli("force --mode bogus --a-prime 1");
    CHECK(bad_mode.exit_code == 1);
    CHECK(bad_mode.output.find("mode") != std::string::npos);

    const auto missing_geometry = run_cli("force --mode lifshitz");
    CHECK(missing_geometry.exit_code == 1);
    CHECK(missing_geometry.output.find("a/b") != std::string::npos);

    const auto bad_points = run_cli("sweep --mode ideal --b 3 --from 1 --to 2 --points 1");
    CHECK(bad_points.exit_code == 1);
    CHECK(bad_points.output.find("points") != std::string::npos);

    const auto no_subcommand = run_cli("");
    CHECK(no_subcommand.exit_code == 1);
}

TEST_CASE("force lifshitz reports a repulsive force with eta near one") {
    const auto res = run_cli(
        "force --mode lifshitz --model drude-gain --omega0 10 --a 3 --b 3 --json");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j["force_per_area"].get<double>() > 0.0);
    CHECK(j["eta"].get<double>() > 0.85);
    CHECK(j["eta"].get<double>() < 1.15);
}

TEST_CASE("force magnetic reports the repulsion window sign") {
    const auto res = run_cli(
        "force --mode magnetic --Omega 5 --omega0 10 --a 3.3 --b 3 --json");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j["force_per_area"].get<double>() > 0.0);
}

TEST_CASE("sweep output is byte-identical across runs") {
    const fs::path f1 = temp_file("sweep1");
    const fs::path f2 = temp_file("sweep2");
    const std::string args =
        "sweep --mode lifshitz --model drude-gain --omega0 10 --b 3 --from 3.5 --to 5 --points 6";
    CHECK(run_cli(args + " --out " + f1.string()).exit_code == 0);
    CHECK(run_cli(args + " --out " + f2.string()).exit_code == 0);
    const std::string first = slurp(f1);
    CHECK(!first.empty());
    CHECK(first == slurp(f2));
    fs::remove(f1);
    fs::remove(f2);
}

TEST_CASE("the echoed config reproduces the run") {
    const fs::path f1 = temp_file("orig");
    const fs::path f2 = temp_file("replay");
    const std::string args =
        "sweep --mode magnetic --Omega 5 --omega0 10 --b 3 --from 3.2 --to 4 --points 3";
    REQUIRE(run_cli(args + " --out " + f1.string()).exit_code == 0);

    const Csv csv = parse_csv(slurp(f1));
    std::string config_line;
    for (const auto& meta : csv.meta)
        if (meta.rfind("# config: ", 0) == 0) config_line = meta.substr(10);
    REQUIRE(!config_line.empty());

    const fs::path cfg = temp_file("cfg");
    {
        std::ofstream out(cfg);
        out << config_line;
    }
    REQUIRE(run_cli("sweep --config " + cfg.string() + " --out " + f2.string()).exit_code == 0);
    CHECK(slurp(f1) == slurp(f2));
    fs::remove(f1);
    fs::remove(f2);
    fs::remove(cfg);
}

TEST_CASE("sweep rows that cannot be computed are flagged and exit 2") {
    // the ideal sweep crosses a = 2b where the closed form diverges
    const auto res = run_cli("sweep --mode ideal --b 3 --from 5 --to 7 --points 3");
    CHECK(res.exit_code == 2);
    const Csv csv = parse_csv(res.output);
    REQUIRE(csv.rows.size() == 3);
    CHECK(csv.rows[1].back() == "nonconverged");
    CHECK(csv.rows[0].back() == "ok");
    CHECK(csv.rows[2].back() == "ok");

    // a singular row must not abort the rest of a quadrature sweep either:
    // at a = 2b the lens medium folds the mirrors onto each other
    const auto lif = run_cli(
        "sweep --mode lifshitz --model constant-lens --eps -1 --b 3 --from 5 --to 7 --points 3");
    CHECK(lif.exit_code == 2);
    const Csv lif_csv = parse_csv(lif.output);
    REQUIRE(lif_csv.rows.size() == 3);
    CHECK(lif_csv.rows[1].back() == "nonconverged");
    CHECK(lif_csv.rows[0].back() == "ok");
    CHECK(lif_csv.rows[2].back() == "ok");
    CHECK(to_double(lif_csv.rows[1][0]) == 6.0);  // parameter survives in the flagged row

    // well-posed sweeps still come back fully converged
    const auto ok = run_cli(
        "sweep --mode lifshitz --model constant-lens --eps -1 --b 3 --from 4 --to 5 --points 3");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("kernel table starts at zeta(3)/4") {
    const auto res = run_cli("kernel --from 0 --to 6 --points 4");
    REQUIRE(res.exit_code == 0);
    const Csv csv = parse_csv(res.output);
    REQUIRE(csv.header.size() == 3);  // q, h, status
    REQUIRE(csv.rows.size() == 4);
    CHECK(to_double(csv.rows[0][0]) == 0.0);
    CHECK(std::abs(to_double(csv.rows[0][1]) - 0.25 * casimir::constants::zeta3) < 1e-12);
    // decreasing column
    for (std::size_t r = 1; r < csv.rows.size(); ++r)
        CHECK(to_double(csv.rows[r][1]) < to_double(csv.rows[r - 1][1]));
}

TEST_CASE("permittivity table on the imaginary axis") {
    const auto res = run_cli(
        "permittivity --model drude-gain --omega0 10 --axis imag --from 0 --to 50 --points 6");
    REQUIRE(res.exit_code == 0);
    const Csv csv = parse_csv(res.output);
    REQUIRE(csv.rows.size() == 6);
    CHECK(to_double(csv.rows[0][1]) == doctest::Approx(-1.0));   // eps(i0)
    CHECK(to_double(csv.rows[1][1]) == doctest::Approx(0.0));    // eps(i omega0), grid hits 10
    for (std::size_t r = 1; r < csv.rows.size(); ++r)
        CHECK(to_double(csv.rows[r][1]) > to_double(csv.rows[r - 1][1]));
}

TEST_CASE("permittivity real-axis pole rows are flagged") {
    const auto res = run_cli(
        "permittivity --model drude-gain --omega0 10 --gamma 0 --axis real --from 0 --to 20 --points 3");
    CHECK(res.exit_code == 2);
    const Csv csv = parse_csv(res.output);
    REQUIRE(csv.rows.size() == 3);
    CHECK(csv.rows[1].back() == "nonconverged");
}

TEST_CASE("levitate reports the balance numbers") {
    const auto res = run_cli("levitate --json");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(std::abs(j["weight_per_area"].get<double>() - 0.0132435) < 1e-7);
    const double balance = j["balance_a_prime"].get<double>();
    CHECK(balance > 0.55e-6);
    CHECK(balance < 0.57e-6);

    const auto with_candidate = run_cli("levitate --a-prime 0.5e-6 --json");
    REQUIRE(with_candidate.exit_code == 0);
    const json j2 = json::parse(with_candidate.output);
    CHECK(j2["candidate_force"].get<double>() == doctest::Approx(2.08e-2).epsilon(2e-3));

    CHECK(run_cli("levitate --density 0").exit_code == 1);
    CHECK(run_cli("levitate --thickness -1e-6").exit_code == 1);
}

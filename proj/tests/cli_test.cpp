#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iroa/construct.hpp"
#include "iroa/io.hpp"
#include "test_codes.hpp"

namespace fs = std::filesystem;
using namespace iroa;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(IROA_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    return status < 0 ? status : (status >> 8) & 0xFF;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("iroa_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    fs::path operator/(const std::string& name) const { return dir / name; }
};

}  // namespace

TEST_CASE("construct rm reproduces the recursive matrix bit for bit") {
    Scratch tmp;
    const auto out = tmp / "rm13.txt";
    REQUIRE(run_cli("construct rm --r 1 --m 3 --out " + out.string()) == 0);
    std::ifstream f(out);
    const auto m = read_genmat(f);
    CHECK(m == rm_generator(1, 3));
    // config and version are embedded as comments
    CHECK(slurp(out).find("# tool: iroa") != std::string::npos);
    CHECK(slurp(out).find("# config:") != std::string::npos);
}

TEST_CASE("construct rejects bad parameters with exit 2") {
    CHECK(run_cli("construct rm --r 4 --m 3 --out /dev/null 2>/dev/null") == 2);
}

TEST_CASE("construct grs produces a validated mds generator") {
    Scratch tmp;
    const auto out = tmp / "grs.txt";
    REQUIRE(run_cli("construct grs --q 5 --n 4 --k 2 --out " + out.string()) == 0);
    std::ifstream f(out);
    const auto code = LinearCode::from_generator(read_genmat(f));
    CHECK(code.n() == 4);
    CHECK(code.k() == 2);
    CHECK(min_distance(code) == 3);
}

TEST_CASE("analyze reports the tetracode profile") {
    Scratch tmp;
    const auto gen = tmp / "tetra.txt";
    {
        std::ofstream f(gen);
        write_code(f, testing::tetracode());
    }
    const auto out = tmp / "report.json";
    REQUIRE(run_cli("analyze --genmat " + gen.string() + " --out " + out.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["d"] == 3);
    CHECK(j["t"] == 2);
    CHECK(j["lambda"] == 1);
    CHECK(j["irredundant"]["direct"] == true);
    CHECK(j["irredundant"]["agree"] == true);
    CHECK(j["rho"]["value"] == 1);
    CHECK(j["tool"]["name"] == "iroa");
    CHECK(j.contains("config"));
}

TEST_CASE("analyze maps cap exceedance to exit 3") {
    Scratch tmp;
    const auto gen = tmp / "ham.txt";
    {
        std::ofstream f(gen);
        write_code(f, testing::hamming74());
    }
    CHECK(run_cli("analyze --genmat " + gen.string() + " --cap-enum 4 --out /dev/null 2>/dev/null") == 3);
}

TEST_CASE("export round trips through the array format") {
    Scratch tmp;
    const auto gen = tmp / "tetra.txt";
    {
        std::ofstream f(gen);
        write_code(f, testing::tetracode());
    }
    const auto out = tmp / "tetra_oa.txt";
    REQUIRE(run_cli("export --genmat " + gen.string() + " --out " + out.string()) == 0);
    const auto text = slurp(out);
    CHECK(text.rfind("# IrOA M=9 n=4 q=3 t=2 lambda=1\n", 0) == 0);

    std::ifstream f(out);
    const auto back = read_array(f);
    const auto direct = OrthogonalArray::from_code(testing::tetracode());
    REQUIRE(back.rows() == direct.rows());
    for (unsigned long long r = 0; r < back.rows(); ++r)
        for (int c = 0; c < back.n(); ++c) REQUIRE(back.symbol(r, c) == direct.symbol(r, c));

    const auto out2 = tmp / "again.txt";
    REQUIRE(run_cli("export --array " + out.string() + " --out " + out2.string()) == 0);
    std::ifstream f2(out2);
    std::string header;
    std::getline(f2, header);
    CHECK(header == "# IrOA M=9 n=4 q=3 t=2 lambda=1");
}

TEST_CASE("verify sweeps exit cleanly and write per-subject certificates") {
    Scratch tmp;
    const auto dir = tmp / "rm_sweep";
    REQUIRE(run_cli("verify --family rm --max-m 4 --out " + dir.string() +
                    " > /dev/null") == 0);
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "rm(1,3).json"));
    const auto cert = nlohmann::json::parse(slurp(dir / "rm(1,3).json"));
    CHECK(cert["subject"] == "rm(1,3)");
    REQUIRE(cert["claims"].is_array());
    const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary["violated_gating"] == 0);
}

TEST_CASE("verify sdgrs accepts found-or-none outcomes") {
    CHECK(run_cli("verify --family sdgrs --q 4 --n 4 > /dev/null") == 0);
}

TEST_CASE("verify runs are byte-identical across repeats and thread counts") {
    Scratch tmp;
    const std::string base = "verify --family random --count 12 --seed 7 --out ";
    const auto d1 = tmp / "a", d2 = tmp / "b", d3 = tmp / "c";
    REQUIRE(run_cli(base + d1.string() + " > " + (tmp / "out1.txt").string()) == 0);
    REQUIRE(run_cli(base + d2.string() + " > " + (tmp / "out2.txt").string()) == 0);
    REQUIRE(run_cli(base + d3.string() + " --threads 3 > " + (tmp / "out3.txt").string()) == 0);
    CHECK(slurp(tmp / "out1.txt") == slurp(tmp / "out2.txt"));
    CHECK(slurp(tmp / "out1.txt") == slurp(tmp / "out3.txt"));
    CHECK(slurp(d1 / "summary.json") == slurp(d2 / "summary.json"));
    CHECK(slurp(d1 / "summary.json") == slurp(d3 / "summary.json"));
    for (const auto& entry : fs::directory_iterator(d1)) {
        const auto name = entry.path().filename();
        REQUIRE(slurp(d2 / name) == slurp(entry.path()));
        REQUIRE(slurp(d3 / name) == slurp(entry.path()));
    }
}

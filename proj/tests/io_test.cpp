#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "iroa/io.hpp"
#include "test_codes.hpp"

using namespace iroa;
using iroa::testing::hamming74;
using iroa::testing::tetracode;

TEST_CASE("matrix text round trip") {
    const auto g = rm_generator(1, 3);
    std::stringstream ss;
    write_matrix(ss, g);
    const auto back = read_matrix(ss);
    CHECK(back == g);

    std::istringstream bad("2 2\n0 1 1 0\n");
    CHECK_THROWS_MATCHES(read_matrix(bad), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::parse_error; }));
}

TEST_CASE("code files carry a tag line") {
    const auto c = tetracode();
    std::stringstream ss;
    write_code(ss, c);
    std::string first;
    std::getline(ss, first);
    CHECK(first == "# code");
    ss.seekg(0);
    const auto m = read_genmat(ss);
    CHECK(m == c.generator());
}

TEST_CASE("array export format and round trip") {
    const auto tetra = OrthogonalArray::from_code(tetracode());
    std::stringstream ss;
    write_array(ss, tetra, true);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "# IrOA M=9 n=4 q=3 t=2 lambda=1");
    int lines = 0;
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 9);

    std::stringstream again;
    write_array(again, tetra, true);
    const auto back = read_array(again);
    CHECK(back.rows() == tetra.rows());
    CHECK(back.n() == tetra.n());
    CHECK(back.alphabet() == tetra.alphabet());
    CHECK(back.t() == 2);
    CHECK(back.lambda() == 1);
    for (unsigned long long r = 0; r < back.rows(); ++r)
        for (int c = 0; c < back.n(); ++c) REQUIRE(back.symbol(r, c) == tetra.symbol(r, c));

    const auto rm13 = OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3)));
    std::stringstream rm;
    write_array(rm, rm13, true);
    std::getline(rm, header);
    CHECK(header == "# IrOA M=16 n=8 q=2 t=3 lambda=2");
}

TEST_CASE("certificate json carries the fixed claim schema") {
    const auto cert = check_rm_theorem(1, 3);
    const auto j = to_json(cert);
    REQUIRE(j.contains("subject"));
    REQUIRE(j.contains("claims"));
    for (const auto& claim : j["claims"]) {
        REQUIRE(claim.contains("name"));
        REQUIRE(claim.contains("anchor"));
        REQUIRE(claim.contains("status"));
        REQUIRE(claim.contains("lhs"));
        REQUIRE(claim.contains("rhs"));
        REQUIRE(claim.contains("witness"));
        REQUIRE(claim.size() == 6);
    }
    CHECK(j["subject"] == "rm(1,3)");
}

TEST_CASE("analysis reports match the worked examples") {
    Limits lim;
    const auto rm13 = OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3)));
    const auto j = analyze(rm13, lim);
    CHECK(j["d"] == 4);
    CHECK(j["d_perp"] == 4);
    CHECK(j["t"] == 3);
    CHECK(j["lambda"] == 2);
    CHECK(j["irredundant"]["direct"] == true);
    CHECK(j["irredundant"]["via_distance"] == true);
    CHECK(j["irredundant"]["agree"] == true);
    CHECK(j["rho"]["value"] == 2);

    const auto ham = analyze(OrthogonalArray::from_code(hamming74()), lim);
    CHECK(ham["d"] == 3);
    CHECK(ham["t"] == 3);
    CHECK(ham["irredundant"]["direct"] == false);

    const auto tetra = analyze(OrthogonalArray::from_code(tetracode()), lim);
    CHECK(tetra["d"] == 3);
    CHECK(tetra["t"] == 2);
    CHECK(tetra["lambda"] == 1);
    CHECK(tetra["irredundant"]["direct"] == true);
    CHECK(tetra["rho"]["value"] == 1);
}

TEST_CASE("analysis json is deterministic across thread counts") {
    Limits one, four;
    four.threads = 4;
    const auto a1 = analyze(OrthogonalArray::from_code(hamming74()), one).dump(2);
    const auto a4 = analyze(OrthogonalArray::from_code(hamming74()), four).dump(2);
    CHECK(a1 == a4);
}

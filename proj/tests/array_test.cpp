#include <catch2/catch_amalgamated.hpp>

#include "iroa/array.hpp"
#include "iroa/construct.hpp"
#include "test_codes.hpp"

using namespace iroa;
using iroa::testing::hamming74;
using iroa::testing::repetition;
using iroa::testing::tetracode;

namespace {

// Independent oracles, written against the definitions only.

int naive_covering_radius(const OrthogonalArray& a) {
    const long long q = a.alphabet().q();
    const int n = a.n();
    unsigned long long space = 1;
    for (int i = 0; i < n; ++i) space *= q;
    int worst = 0;
    std::vector<int> x(n, 0);
    for (unsigned long long idx = 0; idx < space; ++idx) {
        unsigned long long v = idx;
        for (int i = 0; i < n; ++i) {
            x[i] = static_cast<int>(v % q);
            v /= q;
        }
        int nearest = n + 1;
        for (unsigned long long r = 0; r < a.rows(); ++r) {
            int dist = 0;
            for (int c = 0; c < n; ++c) dist += x[c] != a.symbol(r, c);
            nearest = std::min(nearest, dist);
        }
        worst = std::max(worst, nearest);
    }
    return worst;
}

int naive_min_distance(const OrthogonalArray& a) {
    int best = a.n() + 1;
    for (unsigned long long i = 0; i < a.rows(); ++i)
        for (unsigned long long j = i + 1; j < a.rows(); ++j) {
            int dist = 0;
            for (int c = 0; c < a.n(); ++c) dist += a.symbol(i, c) != a.symbol(j, c);
            best = std::min(best, dist);
        }
    return best;
}

unsigned long long naive_ball_count(int n, int rho, long long q) {
    unsigned long long space = 1;
    for (int i = 0; i < n; ++i) space *= q;
    unsigned long long inside = 0;
    for (unsigned long long idx = 0; idx < space; ++idx) {
        unsigned long long v = idx;
        int weight = 0;
        for (int i = 0; i < n; ++i) {
            weight += v % q != 0;
            v /= q;
        }
        inside += weight <= rho;
    }
    return inside;
}

OrthogonalArray strip_origin(const OrthogonalArray& a) {
    std::vector<std::vector<int>> rows(a.rows(), std::vector<int>(a.n()));
    for (unsigned long long r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.n(); ++c) rows[r][c] = a.symbol(r, c);
    return OrthogonalArray::from_rows(a.alphabet(), a.n(), rows);
}

OrthogonalArray full_space(long long q, int n) {
    const Field f = Field::of_order(q);
    unsigned long long space = 1;
    for (int i = 0; i < n; ++i) space *= q;
    std::vector<std::vector<int>> rows(space, std::vector<int>(n));
    for (unsigned long long idx = 0; idx < space; ++idx) {
        unsigned long long v = idx;
        for (int i = n - 1; i >= 0; --i) {
            rows[idx][i] = static_cast<int>(v % q);
            v /= q;
        }
    }
    return OrthogonalArray::from_rows(f, n, rows);
}

}  // namespace

TEST_CASE("arrays from codes") {
    const auto rm13 = OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3)));
    CHECK(rm13.rows() == 16);
    CHECK(rm13.n() == 8);
    CHECK(rm13.t() == 3);
    CHECK(rm13.lambda() == 2);

    const auto tetra = OrthogonalArray::from_code(tetracode());
    CHECK(tetra.rows() == 9);
    CHECK(tetra.t() == 2);
    CHECK(tetra.lambda() == 1);

    const auto rep = OrthogonalArray::from_code(repetition(2, 4));
    CHECK(rep.rows() == 2);
    CHECK(rep.t() == 1);
    CHECK(rep.lambda() == 1);

    // Rows are the codewords in lexicographic message order.
    CHECK(rep.symbol(0, 0) == 0);
    CHECK(rep.symbol(1, 0) == 1);
}

TEST_CASE("array constructor rejects duplicate rows and bad symbols") {
    const Field f2 = Field::of_order(2);
    CHECK_THROWS_MATCHES(OrthogonalArray::from_rows(f2, 2, {{0, 1}, {0, 1}}), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::duplicate_rows; }));
    CHECK_THROWS(OrthogonalArray::from_rows(f2, 2, {{0, 2}}));
}

TEST_CASE("strength by direct projection scan") {
    const auto rm13 = strip_origin(
        OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3))));
    const auto st = strength(rm13);
    CHECK(st.t == 3);
    CHECK(st.lambda == 2);
    CHECK(st.exhaustive);

    const auto fs = full_space(2, 2);
    const auto st2 = strength(fs);
    CHECK(st2.t == 2);
    CHECK(st2.lambda == 1);

    const auto ham = strip_origin(OrthogonalArray::from_code(hamming74()));
    const auto st3 = strength(ham);
    CHECK(st3.t == 3);
    CHECK(st3.lambda == 2);

    const Field f2 = Field::of_order(2);
    const auto bad = OrthogonalArray::from_rows(f2, 2, {{0, 0}, {0, 1}});
    CHECK_THROWS_MATCHES(strength(bad), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::not_an_oa; }));
}

TEST_CASE("strength corroboration against the dual distance") {
    for (const auto& code : {hamming74(), tetracode(), repetition(2, 4)}) {
        const auto a = OrthogonalArray::from_code(code);
        const auto st = strength(a);
        CHECK(st.t == dual_distance(code) - 1);
        CHECK(st.exhaustive);
    }
}

TEST_CASE("direct irredundancy") {
    const auto rm13 = OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3)));
    const auto r1 = is_irredundant_direct(rm13);
    CHECK(r1.irredundant);
    CHECK(r1.exhaustive);

    const auto ham = OrthogonalArray::from_code(hamming74());
    const auto r2 = is_irredundant_direct(ham);
    CHECK_FALSE(r2.irredundant);
    REQUIRE(r2.witness.has_value());
    CHECK(r2.witness->columns.size() == 4);  // n - t = 4 columns witness the clash
    REQUIRE(r2.witness->rows.has_value());
    {
        // The witnessed rows really do agree on the witnessed columns.
        const auto [i, j] = *r2.witness->rows;
        for (int c : r2.witness->columns) CHECK(ham.symbol(i, c) == ham.symbol(j, c));
    }

    const auto tetra = OrthogonalArray::from_code(tetracode());
    CHECK(is_irredundant_direct(tetra).irredundant);
}

TEST_CASE("distance route to irredundancy agrees with the direct route") {
    for (const auto& code : {LinearCode::from_generator(rm_generator(1, 3)), hamming74(),
                             tetracode(), repetition(2, 4), repetition(3, 4)}) {
        const auto a = OrthogonalArray::from_code(code);
        REQUIRE(is_irredundant_via_distance(a) == is_irredundant_direct(a).irredundant);
    }
}

TEST_CASE("array minimum distance, both routes") {
    const auto rm13 = OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3)));
    CHECK(min_distance_array(rm13) == 4);
    CHECK(naive_min_distance(rm13) == 4);

    const auto fs = full_space(2, 2);
    CHECK(min_distance_array(fs) == 1);

    const auto tetra = OrthogonalArray::from_code(tetracode());
    CHECK(min_distance_array(tetra) == 3);
    CHECK(naive_min_distance(tetra) == 3);

    // Origin-free pairwise scan agrees with the linear shortcut.
    CHECK(min_distance_array(strip_origin(rm13)) == 4);

    Limits tiny;
    tiny.pairs = 3;
    CHECK_THROWS_MATCHES(min_distance_array(strip_origin(tetra), tiny), CapExceeded,
                         Catch::Matchers::Predicate<CapExceeded>(
                             [](const auto& e) { return e.code() == errc::pair_cap; }));
}

TEST_CASE("covering radius, exhaustive versus syndrome") {
    const auto cases = std::vector<std::pair<LinearCode, int>>{
        {tetracode(), 1},                                        // perfect code
        {repetition(2, 3), 1},                                   //
        {hamming74(), 1},                                        // perfect code
        {LinearCode::from_generator(rm_generator(1, 3)), 2},     //
    };
    for (const auto& [code, expected] : cases) {
        INFO(code.params_string());
        const auto a = OrthogonalArray::from_code(code);
        const auto ex = covering_radius(a, {}, CoveringMethod::exhaustive);
        const auto syn = covering_radius(a, {}, CoveringMethod::syndrome);
        REQUIRE(ex.rho == expected);
        REQUIRE(syn.rho == expected);
        REQUIRE(naive_covering_radius(a) == expected);
    }

    const auto fs = full_space(2, 4);
    CHECK(covering_radius(fs).rho == 0);

    Limits tiny;
    tiny.space = 8;
    const auto tetra = strip_origin(OrthogonalArray::from_code(tetracode()));
    CHECK_THROWS_MATCHES(covering_radius(tetra, tiny), CapExceeded,
                         Catch::Matchers::Predicate<CapExceeded>(
                             [](const auto& e) { return e.code() == errc::space_cap; }));
}

TEST_CASE("ball volumes") {
    CHECK(ball_volume(BallVariant::strength_form, 3, 3, 2).value == 8);  // equals q^t
    CHECK(ball_volume(BallVariant::strength_form, 5, 0, 4).value == 1);
    CHECK(ball_volume(BallVariant::ambient_form, 4, 1, 3).value == 9);
    // The ambient form counts vectors inside a Hamming ball; enumerate.
    for (long long q : {2ll, 3ll, 4ll})
        for (int n = 1; n <= 5; ++n)
            for (int rho = 0; rho <= n; ++rho)
                REQUIRE(ball_volume(BallVariant::ambient_form, n, rho, q).value ==
                        naive_ball_count(n, rho, q));
    CHECK_THROWS(ball_volume(BallVariant::ambient_form, 4, 5, 2));
}

TEST_CASE("balance holds at every level below the strength") {
    const auto rm13 = OrthogonalArray::from_code(LinearCode::from_generator(rm_generator(1, 3)));
    for (int level = 1; level <= 3; ++level) {
        const auto scan = detail::scan_balance_level(rm13, level, {});
        REQUIRE(scan.balanced);
    }
    CHECK_FALSE(detail::scan_balance_level(rm13, 4, {}).balanced);
}

TEST_CASE("index identity and size bounds on small instances") {
    for (const auto& code : {LinearCode::from_generator(rm_generator(1, 3)), hamming74(),
                             tetracode(), repetition(2, 4)}) {
        const auto a = OrthogonalArray::from_code(code);
        unsigned long long qt = 1;
        for (int i = 0; i < a.t(); ++i) qt *= a.alphabet().q();
        REQUIRE(a.lambda() * qt == a.rows());
        if (is_irredundant_via_distance(a)) {
            unsigned long long qnt = 1;
            for (int i = 0; i < a.n() - a.t(); ++i) qnt *= a.alphabet().q();
            REQUIRE(a.rows() <= qnt);
            REQUIRE(a.n() >= 2 * a.t());
        }
        // lambda = 1 exactly when d = n - t + 1
        REQUIRE((a.lambda() == 1) ==
                (min_distance_array(a) == a.n() - a.t() + 1));
    }
}

TEST_CASE("degenerate full-strength arrays are rejected by irredundancy analyzers") {
    const auto fs = full_space(2, 3);
    strength(fs);
    CHECK(fs.t() == 3);
    CHECK_THROWS_MATCHES(is_irredundant_direct(fs), PreconditionError,
                         Catch::Matchers::Predicate<PreconditionError>(
                             [](const auto& e) { return e.code() == errc::param_out_of_range; }));
}

TEST_CASE("projection scans are thread-count independent") {
    const auto code = LinearCode::from_generator(rm_generator(1, 4));
    const auto a = OrthogonalArray::from_code(code);
    Limits one, four;
    four.threads = 4;
    const auto r1 = is_irredundant_direct(a, one);
    const auto r4 = is_irredundant_direct(a, four);
    CHECK(r1.irredundant == r4.irredundant);
    const auto ham = OrthogonalArray::from_code(hamming74());
    const auto h1 = is_irredundant_direct(ham, one);
    const auto h4 = is_irredundant_direct(ham, four);
    REQUIRE(h1.witness.has_value());
    REQUIRE(h4.witness.has_value());
    CHECK(h1.witness->columns == h4.witness->columns);
    CHECK(h1.witness->rows == h4.witness->rows);
    CHECK(covering_radius(ham, one, CoveringMethod::exhaustive).rho ==
          covering_radius(ham, four, CoveringMethod::exhaustive).rho);
}

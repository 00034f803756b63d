#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "iroa/array.hpp"
#include "iroa/certify.hpp"
#include "iroa/code.hpp"
#include "iroa/errors.hpp"
#include "iroa/matrix.hpp"
#include "iroa/version.hpp"

namespace iroa {

// --- matrix / code text format ---------------------------------------------
// First line: `rows cols q`, then one line per row of space-separated
// integer-encoded entries. Code files carry a `# code` line on top.

inline void write_matrix(std::ostream& os, const Matrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << '\n';
    }
}

inline Matrix read_matrix(std::istream& is) {
    int rows = 0, cols = 0;
    long long q = 0;
    if (!(is >> rows >> cols >> q))
        throw PreconditionError(errc::parse_error, "matrix header must be `rows cols q`");
    if (rows < 1 || cols < 1)
        throw PreconditionError(errc::parse_error, "matrix must have positive dimensions");
    const Field f = Field::of_order(q);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long v;
            if (!(is >> v))
                throw PreconditionError(errc::parse_error, "matrix body ended early");
            if (v < 0 || v >= q)
                throw PreconditionError(errc::parse_error, "matrix entry out of range");
            m.set(i, j, static_cast<int>(v));
        }
    return m;
}

inline void write_code(std::ostream& os, const LinearCode& c) {
    os << "# code\n";
    write_matrix(os, c.generator());
}

// Accepts a bare matrix or a `# code`-tagged one; comment lines are skipped.
inline Matrix read_genmat(std::istream& is) {
    std::string line;
    std::ostringstream body;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '#') continue;
        body << line << '\n';
    }
    std::istringstream clean(body.str());
    return read_matrix(clean);
}

// --- array export -----------------------------------------------------------
// Header `# IrOA M=<M> n=<n> q=<q> t=<t> lambda=<l>` (tag `OA` when the
// array is not irredundant), then M rows of n space-separated symbols in
// canonical enumeration order.

inline void write_array(std::ostream& os, const OrthogonalArray& a, bool irredundant) {
    os << "# " << (irredundant ? "IrOA" : "OA") << " M=" << a.rows() << " n=" << a.n()
       << " q=" << a.alphabet().q() << " t=" << a.t() << " lambda=" << a.lambda() << '\n';
    for (unsigned long long r = 0; r < a.rows(); ++r) {
        for (int j = 0; j < a.n(); ++j) os << (j ? " " : "") << a.symbol(r, j);
        os << '\n';
    }
}

inline OrthogonalArray read_array(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# ", 0) != 0)
        throw PreconditionError(errc::parse_error, "array file must start with `# IrOA ...`");
    auto grab = [&](const std::string& key) -> long long {
        const auto pos = header.find(" " + key + "=");
        if (pos == std::string::npos)
            throw PreconditionError(errc::parse_error, "array header misses " + key + "=");
        return std::stoll(header.substr(pos + key.size() + 2));
    };
    const long long m = grab("M"), n = grab("n"), q = grab("q"), t = grab("t"),
                    lambda = grab("lambda");
    if (m < 1 || n < 1)
        throw PreconditionError(errc::parse_error, "array header has nonpositive size");
    const Field f = Field::of_order(q);
    // Body may be interleaved with further `#` comment lines (tool/config).
    std::ostringstream body;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '#') continue;
        body << line << '\n';
    }
    std::istringstream numbers(body.str());
    std::vector<std::vector<int>> rows(m, std::vector<int>(n));
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < n; ++j) {
            long long v;
            if (!(numbers >> v))
                throw PreconditionError(errc::parse_error, "array body ended early");
            rows[i][j] = static_cast<int>(v);
        }
    auto a = OrthogonalArray::from_rows(f, static_cast<int>(n), rows);
    a.set_strength(static_cast<int>(t), static_cast<unsigned long long>(lambda), false);
    return a;
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::json to_json(const Claim& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["status"] = to_string(c.status);
    j["lhs"] = c.lhs ? nlohmann::json(*c.lhs) : nlohmann::json();
    j["rhs"] = c.rhs ? nlohmann::json(*c.rhs) : nlohmann::json();
    j["witness"] = c.witness.empty() ? nlohmann::json() : nlohmann::json(c.witness);
    return j;
}

inline nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json j;
    j["subject"] = cert.subject;
    auto claims = nlohmann::json::array();
    for (const auto& c : cert.claims) claims.push_back(to_json(c));
    j["claims"] = claims;
    return j;
}

inline nlohmann::json to_json(const ClaimSummary& s) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [name, by_status] : s.counts) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto& [status, count] : by_status) row[status] = count;
        counts[name] = row;
    }
    return nlohmann::json{{"claims", counts}, {"violated_gating", s.violated_gating}};
}

// Full analysis report of one array: parameters, both irredundancy routes,
// covering radius, and the bound certificates.
inline nlohmann::json analyze(const OrthogonalArray& a, const Limits& lim = {}) {
    nlohmann::json j;
    const auto st = strength(a, lim);
    j["M"] = a.rows();
    j["n"] = a.n();
    j["q"] = a.alphabet().q();
    j["t"] = st.t;
    j["lambda"] = st.lambda;
    if (a.origin()) {
        j["k"] = a.origin()->k();
        j["d_perp"] = dual_distance(*a.origin(), lim);
    }
    j["d"] = min_distance_array(a, lim);

    nlohmann::json flags;
    flags["strength_exhaustive"] = st.exhaustive;

    auto certs = nlohmann::json::array();
    if (st.t < a.n()) {
        const auto agr = irredundancy_both_ways(a, lim);
        j["irredundant"] = {{"direct", agr.direct.irredundant},
                            {"via_distance", agr.via_distance},
                            {"agree", agr.agree}};
        flags["irredundant_direct_exhaustive"] = agr.direct.exhaustive;
        certs.push_back(to_json(check_extremal(a, lim)));
    } else {
        j["irredundant"] = nlohmann::json();  // degenerate at full strength
    }
    certs.push_back(to_json(check_distance_bounds(a, lim)));

    const auto rho = covering_radius(a, lim);
    j["rho"] = {{"value", rho.rho}, {"method", rho.method}};
    flags["rho_exhaustive"] = rho.exhaustive;
    certs.push_back(to_json(check_covering_bounds(a, rho, lim)));

    j["method_flags"] = flags;
    j["certificates"] = certs;
    return j;
}

}  // namespace iroa

// Command-line front end: construct code families, analyze codes and arrays,
// run the verification sweeps, export arrays. Exit codes: 0 ok, 1 asserted
// invariant violated, 2 precondition error, 3 work cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iroa/iroa.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    // field description
    long long q = 0;
    int p = 0, e = 1;
    std::string modulus;

    iroa::Limits lim;
    unsigned long long seed = 0;
    std::string out = "-";
    std::string format;

    // family parameters
    int r = -1, m = -1, k = -1, n = -1;
    int max_m = 5, max_n = -1, count = 200;
    std::string family;
    std::string genmat_path, array_path;
    std::string points, mults;
    std::string export_oa;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

iroa::Field resolve_field(const Options& opt) {
    if (opt.q > 0) return iroa::Field::of_order(opt.q);
    if (opt.p > 0) {
        std::optional<std::vector<int>> mod;
        if (!opt.modulus.empty()) mod = parse_int_list(opt.modulus);
        return iroa::Field::create(opt.p, opt.e, mod);
    }
    throw iroa::PreconditionError(iroa::errc::param_out_of_range,
                                  "a field is required: pass --q or --p/--e[/--modulus]");
}

json config_json(const Options& opt, const std::string& command) {
    // Deliberately excludes the thread count: outputs must be byte-identical
    // across worker configurations.
    json caps{{"enumeration", opt.lim.enumeration}, {"subsets", opt.lim.subsets},
              {"pairs", opt.lim.pairs},             {"space", opt.lim.space},
              {"search", opt.lim.search},           {"samples", opt.lim.samples}};
    json j{{"command", command}, {"caps", caps}, {"seed", opt.seed}};
    if (!opt.family.empty()) j["family"] = opt.family;
    if (opt.q > 0) j["q"] = opt.q;
    if (opt.r >= 0) j["r"] = opt.r;
    if (opt.m >= 0) j["m"] = opt.m;
    if (opt.k >= 0) j["k"] = opt.k;
    if (opt.n >= 0) j["n"] = opt.n;
    return j;
}

json tool_json() {
    return json{{"name", iroa::kToolName}, {"version", iroa::kToolVersion}};
}

std::string config_comment(const Options& opt, const std::string& command) {
    return "# tool: " + std::string(iroa::kToolName) + " " + iroa::kToolVersion +
           "\n# config: " + config_json(opt, command).dump() + "\n";
}

void write_text_output(const Options& opt, const std::string& text) {
    if (opt.out == "-" || opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f)
        throw iroa::PreconditionError(iroa::errc::parse_error,
                                      "cannot open output file " + opt.out);
    f << text;
}

int run_construct_common(const Options& opt, const std::string& command,
                         const iroa::Matrix& gen) {
    std::ostringstream os;
    os << config_comment(opt, command);
    os << "# code\n";
    iroa::write_matrix(os, gen);
    write_text_output(opt, os.str());

    if (!opt.export_oa.empty()) {
        const auto code = iroa::LinearCode::from_generator(gen);
        const auto a = iroa::OrthogonalArray::from_code(code, opt.lim);
        const bool irr = iroa::is_irredundant_via_distance(a, opt.lim);
        std::ofstream f(opt.export_oa);
        if (!f)
            throw iroa::PreconditionError(iroa::errc::parse_error,
                                          "cannot open output file " + opt.export_oa);
        iroa::write_array(f, a, irr);
        f << config_comment(opt, command);
    }
    return 0;
}

iroa::OrthogonalArray load_subject(const Options& opt) {
    if (!opt.genmat_path.empty()) {
        std::ifstream f(opt.genmat_path);
        if (!f)
            throw iroa::PreconditionError(iroa::errc::parse_error,
                                          "cannot read " + opt.genmat_path);
        const auto code = iroa::LinearCode::from_generator(iroa::read_genmat(f));
        return iroa::OrthogonalArray::from_code(code, opt.lim);
    }
    if (!opt.array_path.empty()) {
        std::ifstream f(opt.array_path);
        if (!f)
            throw iroa::PreconditionError(iroa::errc::parse_error,
                                          "cannot read " + opt.array_path);
        return iroa::read_array(f);
    }
    throw iroa::PreconditionError(iroa::errc::param_out_of_range,
                                  "pass --genmat <file> or --array <file>");
}

int run_analyze(const Options& opt) {
    const auto a = load_subject(opt);
    json report = iroa::analyze(a, opt.lim);
    report["tool"] = tool_json();
    report["config"] = config_json(opt, "analyze");
    write_text_output(opt, report.dump(2) + "\n");
    return 0;
}

int run_export(const Options& opt) {
    const auto a = load_subject(opt);
    const auto st = iroa::strength(a, opt.lim);
    const bool irr =
        st.t < a.n() ? iroa::is_irredundant_via_distance(a, opt.lim) : false;
    if (opt.format == "json") {
        json j{{"tool", tool_json()},
               {"config", config_json(opt, "export")},
               {"M", a.rows()},
               {"n", a.n()},
               {"q", a.alphabet().q()},
               {"t", st.t},
               {"lambda", st.lambda},
               {"irredundant", irr}};
        auto rows = json::array();
        for (unsigned long long r = 0; r < a.rows(); ++r) {
            auto row = json::array();
            for (int c = 0; c < a.n(); ++c) row.push_back(a.symbol(r, c));
            rows.push_back(row);
        }
        j["rows"] = rows;
        write_text_output(opt, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    iroa::write_array(os, a, irr);
    os << config_comment(opt, "export");
    write_text_output(opt, os.str());
    return 0;
}

std::string summary_table(const iroa::ClaimSummary& s, std::size_t subjects) {
    std::ostringstream os;
    os << "claim                                     holds  violated  not-applicable  sampled\n";
    for (const auto& [name, by_status] : s.counts) {
        auto count = [&](const char* key) {
            const auto it = by_status.find(key);
            return it == by_status.end() ? 0 : it->second;
        };
        os << name;
        for (std::size_t i = name.size(); i < 40; ++i) os << ' ';
        os << ' ';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%6d  %8d  %14d  %7d", count("holds"),
                      count("violated"), count("not-applicable"), count("sampled"));
        os << buf << '\n';
    }
    os << "subjects: " << subjects << "  gating violations: " << s.violated_gating << '\n';
    return os.str();
}

int run_verify(Options& opt) {
    std::vector<iroa::Certificate> certs;
    if (opt.family == "rm") {
        for (int m = 1; m <= opt.max_m; ++m)
            for (int r = 0; r <= m; ++r) certs.push_back(iroa::check_rm_theorem(r, m, opt.lim));
    } else if (opt.family == "grm") {
        std::vector<std::pair<long long, int>> grid;
        if (opt.q > 0) {
            grid.emplace_back(opt.q, opt.max_m);
        } else {
            grid = {{2, 4}, {3, 2}, {4, 2}};
        }
        for (const auto& [q, mm] : grid)
            for (int m = 1; m <= mm; ++m)
                for (int r = 0; r <= m * static_cast<int>(q - 1); ++r)
                    certs.push_back(iroa::check_grm_theorem(q, r, m, opt.lim));
    } else if (opt.family == "mds") {
        const auto field = resolve_field(opt);
        const int top = opt.max_n > 0 ? opt.max_n : static_cast<int>(field.q() - 1);
        for (int n = 2; n <= std::min<long long>(top, field.q() - 1); ++n)
            for (int k = 1; k < n; ++k) {
                std::ostringstream name;
                name << "grs(q=" << field.q() << ",n=" << n << ",k=" << k << ")";
                certs.push_back(iroa::check_mds_theorems(
                    iroa::grs_code(iroa::GrsSpec::standard(field, n, k)), opt.lim, name.str()));
            }
    } else if (opt.family == "sdgrs") {
        const auto field = resolve_field(opt);
        if (opt.n < 2)
            throw iroa::PreconditionError(iroa::errc::param_out_of_range,
                                          "sdgrs verification needs --n");
        std::ostringstream name;
        name << "sdgrs(q=" << field.q() << ",n=" << opt.n << ")";
        iroa::Certificate cert{name.str(), {}};
        const auto hit = iroa::search_self_dual_grs(field, opt.n, opt.lim);
        if (hit) {
            const auto& code = hit->code;
            cert.add(iroa::detail::claim_cmp("gram-matrix-zero", "G G^T = 0",
                                             iroa::is_self_orthogonal(code), true,
                                             iroa::is_self_orthogonal(code)));
            cert.add(iroa::detail::claim_cmp("self-dual", "n = 2k and G G^T = 0",
                                             iroa::is_self_dual(code), true,
                                             iroa::is_self_dual(code)));
            cert.add(iroa::detail::claim_cmp("distance", "d = n/2 + 1",
                                             iroa::min_distance(code, opt.lim), opt.n / 2 + 1,
                                             iroa::min_distance(code, opt.lim) ==
                                                 opt.n / 2 + 1));
            certs.push_back(cert);
            certs.push_back(iroa::check_mds_theorems(code, opt.lim, name.str() + "-mds"));
        } else {
            iroa::Claim none;
            none.name = "candidate-found";
            none.anchor = "exhaustive multiplier search";
            none.status = iroa::ClaimStatus::not_applicable;
            none.witness = "no self-dual candidate among the multiplier vectors";
            none.gating = false;
            cert.add(none);
            certs.push_back(cert);
        }
    } else if (opt.family == "random") {
        std::vector<std::string> subjects;
        const auto corpus = iroa::random_corpus(opt.count, opt.seed, &subjects);
        for (std::size_t i = 0; i < corpus.size(); ++i)
            certs.push_back(iroa::check_dual_pair(corpus[i], opt.lim, subjects[i]));
    } else {
        throw iroa::PreconditionError(iroa::errc::param_out_of_range,
                                      "unknown family: " + opt.family +
                                          " (expected rm|grm|mds|sdgrs|random)");
    }

    std::sort(certs.begin(), certs.end(),
              [](const iroa::Certificate& a, const iroa::Certificate& b) {
                  return a.subject < b.subject;
              });
    const auto summary = iroa::summarize(certs);

    if (!opt.out.empty() && opt.out != "-") {
        fs::create_directories(opt.out);
        for (const auto& cert : certs) {
            json j = iroa::to_json(cert);
            j["tool"] = tool_json();
            j["config"] = config_json(opt, "verify");
            std::ofstream f(fs::path(opt.out) / (cert.subject + ".json"));
            f << j.dump(2) << '\n';
        }
        json s = iroa::to_json(summary);
        s["tool"] = tool_json();
        s["config"] = config_json(opt, "verify");
        std::ofstream f(fs::path(opt.out) / "summary.json");
        f << s.dump(2) << '\n';
    }

    if (opt.format == "json") {
        json s = iroa::to_json(summary);
        s["tool"] = tool_json();
        s["config"] = config_json(opt, "verify");
        std::cout << s.dump(2) << '\n';
    } else {
        std::cout << summary_table(summary, certs.size());
    }
    return summary.violated_gating > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"finite-field coding toolkit for irredundant orthogonal arrays"};
    app.require_subcommand(1);

    app.add_option("--q", opt.q, "field order (prime power)");
    app.add_option("--p", opt.p, "field characteristic");
    app.add_option("--e", opt.e, "extension degree");
    app.add_option("--modulus", opt.modulus, "modulus coefficients, constant first (c0,c1,...)");
    app.add_option("--cap-enum", opt.lim.enumeration, "codeword enumeration cap");
    app.add_option("--cap-subsets", opt.lim.subsets, "column-subset scan cap");
    app.add_option("--cap-pairs", opt.lim.pairs, "pairwise distance cap");
    app.add_option("--cap-space", opt.lim.space, "ambient space scan cap");
    app.add_option("--cap-search", opt.lim.search, "multiplier search cap");
    app.add_option("--samples", opt.lim.samples, "subsets drawn in sampled mode");
    app.add_option("--seed", opt.seed, "seed for sampling and random corpora");
    app.add_option("--threads", opt.lim.threads, "worker threads (never changes results)");
    app.add_option("--out", opt.out, "output file, or directory for verify (- = stdout)");
    app.add_option("--format", opt.format, "output format where applicable (json|csv|text)");

    auto* construct = app.add_subcommand("construct", "build a code family generator matrix");
    construct->require_subcommand(1);
    auto* rm = construct->add_subcommand("rm", "binary Reed-Muller code");
    rm->add_option("--r", opt.r, "order")->required();
    rm->add_option("--m", opt.m, "log2 of the length")->required();
    rm->add_option("--export-oa", opt.export_oa, "also write the full array to this file");
    auto* grm = construct->add_subcommand("grm", "generalized Reed-Muller code");
    grm->add_option("--r", opt.r, "order")->required();
    grm->add_option("--m", opt.m, "number of variables")->required();
    grm->add_option("--export-oa", opt.export_oa, "also write the full array to this file");
    auto* grs = construct->add_subcommand("grs", "generalized Reed-Solomon code");
    grs->add_option("--n", opt.n, "length")->required();
    grs->add_option("--k", opt.k, "dimension")->required();
    grs->add_option("--points", opt.points, "evaluation points (defaults to 0..n-1)");
    grs->add_option("--mults", opt.mults, "column multipliers (defaults to all ones)");
    grs->add_option("--export-oa", opt.export_oa, "also write the full array to this file");

    auto* search = app.add_subcommand("search", "exhaustive searches");
    search->require_subcommand(1);
    auto* sdgrs = search->add_subcommand("sdgrs", "self-dual GRS multiplier search");
    sdgrs->add_option("--n", opt.n, "even length")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report of a code or array");
    analyze_cmd->add_option("--genmat", opt.genmat_path, "generator matrix file");
    analyze_cmd->add_option("--array", opt.array_path, "array export file");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--family", opt.family, "rm|grm|mds|sdgrs|random")->required();
    verify->add_option("--max-m", opt.max_m, "largest m for rm/grm sweeps");
    verify->add_option("--max-n", opt.max_n, "largest n for mds sweeps");
    verify->add_option("--n", opt.n, "length for sdgrs");
    verify->add_option("--count", opt.count, "random corpus size");

    auto* export_cmd = app.add_subcommand("export", "write an array export");
    export_cmd->add_option("--genmat", opt.genmat_path, "generator matrix file");
    export_cmd->add_option("--array", opt.array_path, "array export file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    opt.lim.seed = opt.seed;
    try {
        if (construct->parsed()) {
            if (rm->parsed()) return run_construct_common(opt, "construct rm",
                                                          iroa::rm_generator(opt.r, opt.m));
            if (grm->parsed()) {
                const auto field = resolve_field(opt);
                return run_construct_common(
                    opt, "construct grm",
                    iroa::grm_generator(field.q(), opt.r, opt.m, opt.lim));
            }
            if (grs->parsed()) {
                const auto field = resolve_field(opt);
                iroa::GrsSpec spec = iroa::GrsSpec::standard(field, opt.n,
                                                             opt.k < 0 ? 1 : opt.k);
                if (!opt.points.empty()) spec.points = parse_int_list(opt.points);
                if (!opt.mults.empty()) spec.multipliers = parse_int_list(opt.mults);
                return run_construct_common(opt, "construct grs", iroa::grs_generator(spec));
            }
        }
        if (search->parsed() && sdgrs->parsed()) {
            const auto field = resolve_field(opt);
            const auto hit = iroa::search_self_dual_grs(field, opt.n, opt.lim);
            json j{{"tool", tool_json()}, {"config", config_json(opt, "search sdgrs")}};
            j["found"] = hit.has_value();
            if (hit) {
                j["k"] = hit->code.k();
                j["n"] = hit->code.n();
                j["d"] = iroa::min_distance(hit->code, opt.lim);
                j["multipliers"] = hit->spec.multipliers;
                j["points"] = hit->spec.points;
                std::ostringstream os;
                iroa::write_code(os, hit->code);
                j["generator"] = os.str();
            }
            write_text_output(opt, j.dump(2) + "\n");
            return 0;
        }
        if (analyze_cmd->parsed()) return run_analyze(opt);
        if (verify->parsed()) return run_verify(opt);
        if (export_cmd->parsed()) return run_export(opt);
    } catch (const iroa::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const iroa::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const iroa::VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

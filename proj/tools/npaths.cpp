// npaths: enumeration, counting, generating functions, verification, DOT
// export, and OEIS cross-checks for standard paths in a composition poset.
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 verification/check failure, 2 usage error.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "npaths/dot.hpp"
#include "npaths/hasse.hpp"
#include "npaths/height2.hpp"
#include "npaths/oeis.hpp"
#include "npaths/path_enum.hpp"
#include "npaths/unrestricted.hpp"
#include "npaths/verify.hpp"
#include "npaths/width_gf.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using namespace npaths;

namespace fs = std::filesystem;

bool env_no_network() {
    const char* v = std::getenv("NO_NETWORK");
    return v != nullptr && std::string(v) == "1";
}

fs::path default_oeis_dir() {
    if (const char* v = std::getenv("OEIS_CACHE_DIR"); v != nullptr && *v != '\0') return fs::path(v);
    return fs::path("share") / "oeis";
}

std::string stats_key(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

json polynomial_json(const Polynomial& p) {
    json a = json::array();
    for (int d = 0; d <= p.degree(); ++d) a.push_back(p.coeff(d).str());
    return a;
}

// ---------------------------------------------------------------- paths

int run_paths_enumerate(int n, const std::string& format) {
    auto paths = enumerate_paths(n);
    if (format == "json") {
        json out = json::array();
        for (const StandardPath& p : paths) {
            json steps = json::array();
            for (const Composition& c : p) steps.push_back(c.str());
            out.push_back(std::move(steps));
        }
        std::cout << out.dump() << "\n";
    } else if (format == "text") {
        for (const StandardPath& p : paths) std::cout << path_str(p) << "\n";
    } else {
        std::cerr << "unsupported format for paths enumerate: " << format << "\n";
        return 2;
    }
    return 0;
}

int run_paths_count(int n, const std::string& group_by, int height_bound, const std::string& format) {
    // stats echoes the series bracket order (by j, then i); the others use
    // their natural key order
    std::vector<std::pair<std::string, Int>> rows;
    if (group_by == "endpoint") {
        for (const auto& [p, c] : count_by_endpoint(n, height_bound)) rows.emplace_back(p.str(), c);
    } else if (group_by == "stats") {
        std::map<std::pair<int, int>, Int> by_ji;
        for (const auto& [ij, c] : count_by_stats(n, height_bound)) by_ji[{ij.second, ij.first}] = c;
        for (const auto& [ji, c] : by_ji) rows.emplace_back(stats_key(ji.second, ji.first), c);
    } else if (group_by == "width" || group_by == "height") {
        std::map<int, Int> by_key;
        for (const auto& [p, c] : count_by_endpoint(n, height_bound))
            by_key[group_by == "width" ? p.width() : p.height()] += c;
        for (const auto& [k, c] : by_key) rows.emplace_back(std::to_string(k), c);
    } else {
        std::cerr << "unknown group-by: " << group_by << "\n";
        return 2;
    }
    if (format == "json") {
        json out = json::object();
        for (const auto& [k, c] : rows) out[k] = c.str();
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "key,count\n";
        for (const auto& [k, c] : rows) std::cout << k << "," << c.str() << "\n";
    } else if (format == "text") {
        for (const auto& [k, c] : rows) std::cout << k << ": " << c.str() << "\n";
    } else {
        std::cerr << "unsupported format for paths count: " << format << "\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------- gf

int run_gf_width(int k, int terms, const std::string& format) {
    WidthSeriesBundle b = width_series_bundle(k, terms);
    if (format == "json") {
        json out;
        out["k"] = k;
        out["L"] = {{"numerator", polynomial_json(b.L.num())}, {"denominator", polynomial_json(b.L.den())}};
        out["l_tilde"] = polynomial_json(b.L_tilde);
        json coeffs = json::array();
        for (const Int& a : b.coefficients) coeffs.push_back(a.str());
        out["coefficients"] = std::move(coeffs);
        std::cout << out.dump() << "\n";
    } else if (format == "text") {
        std::cout << "L_" << k << "(t) = " << b.L.str() << "\n";
        std::cout << "tilde L_" << k << "(t) = " << b.L_tilde.str() << "\n";
        std::cout << "a_{n," << k << "} for n = 0.." << terms << ":";
        for (const Int& a : b.coefficients) std::cout << " " << a.str();
        std::cout << "\n";
    } else {
        std::cerr << "unsupported format for gf width: " << format << "\n";
        return 2;
    }
    return 0;
}

int run_gf_height2(int i_max, int j_max, const std::string& format) {
    HeightTwoTable table(i_max, j_max);
    if (format == "json") {
        json out = json::object();
        for (int i = 0; i <= i_max; ++i)
            for (int j = 0; j <= j_max; ++j) out[stats_key(i, j)] = table.at(i, j).str();
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "i,j,count\n";
        for (int i = 0; i <= i_max; ++i)
            for (int j = 0; j <= j_max; ++j) std::cout << i << "," << j << "," << table.at(i, j).str() << "\n";
    } else if (format == "text") {
        for (int i = 0; i <= i_max; ++i) {
            std::cout << "i=" << i << ":";
            for (int j = 0; j <= j_max; ++j) std::cout << " " << table.at(i, j).str();
            std::cout << "\n";
        }
    } else {
        std::cerr << "unsupported format for gf height2: " << format << "\n";
        return 2;
    }
    return 0;
}

int run_gf_unrestricted(int n_max, const std::string& format) {
    auto slices = egf_slices(n_max);
    if (format == "json") {
        json out = json::array();
        for (const EgfSlice& s : slices) {
            json terms = json::object();
            std::map<std::pair<int, int>, Int> by_ji;
            for (const auto& [ij, c] : s.terms) by_ji[{ij.second, ij.first}] = c;
            for (const auto& [ji, c] : by_ji) terms[stats_key(ji.second, ji.first)] = c.str();
            out.push_back({{"n", s.n}, {"terms", std::move(terms)}, {"total", s.total().str()}});
        }
        std::cout << out.dump() << "\n";
    } else if (format == "text") {
        for (const EgfSlice& s : slices)
            std::cout << "n=" << s.n << ": " << s.str() << " (total " << s.total().str() << ")\n";
    } else {
        std::cerr << "unsupported format for gf unrestricted: " << format << "\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------- hasse

int run_hasse(const std::string& poset_name, int max_weight, const std::string& format) {
    if (format != "dot") {
        std::cerr << "hasse only supports --format dot\n";
        return 2;
    }
    Poset poset = poset_name == "Gamma" ? Poset::Gamma : Poset::N;
    std::cout << export_dot(hasse_graph(poset, max_weight));
    return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(int max_weight, const fs::path& oeis_dir, const fs::path& figure_fixture) {
    verify::VerifyOptions options;
    options.brute_max_weight = max_weight;
    options.oeis_dir = oeis_dir;
    options.figure_fixture = figure_fixture;
    bool all_ok = true;
    for (const verify::CheckResult& r : verify::run_all_checks(options)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        all_ok = all_ok && r.passed;
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- oeis

std::string fetch_bfile_online(const std::string& id) {
    if (env_no_network()) throw std::runtime_error("NO_NETWORK=1 forbids network access");
    httplib::SSLClient client("oeis.org", 443);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get(("/" + id + "/" + oeis::bfile_name(id)).c_str());
    if (!res) throw std::runtime_error("network failure fetching " + oeis::bfile_url(id));
    if (res->status != 200)
        throw std::runtime_error("HTTP " + std::to_string(res->status) + " fetching " + oeis::bfile_url(id));
    return res->body;
}

int run_oeis_check(const std::string& id, const std::string& against, int terms, bool offline,
                   const fs::path& cache_dir, const std::string& format) {
    if (terms < 0) {
        std::cerr << "--terms must be >= 0\n";
        return 2;
    }
    std::vector<Int> produced;
    long long start_index = 0;
    if (against == "c0n") {
        for (int n = 0; n < terms; ++n) produced.push_back(c0_closed_form(n));
        start_index = 0;
    } else if (against == "c1n") {
        for (int n = 0; n < terms; ++n) produced.push_back(c2_closed_forms(n).c1);
        start_index = 1;  // c_{1,n} = c_{0,n+1}: the same sequence shifted
    } else {
        std::cerr << "unknown --against (use c0n or c1n)\n";
        return 2;
    }
    bool forced_offline = offline || env_no_network();
    oeis::BFile bfile;
    try {
        auto cached = oeis::load_cached_bfile(cache_dir, id);
        if (cached) {
            bfile = *cached;
        } else if (forced_offline) {
            throw std::runtime_error("offline mode and no fixture " + (cache_dir / oeis::bfile_name(id)).string());
        } else {
            std::string body = fetch_bfile_online(id);
            bfile = oeis::parse_bfile(body, id);
            std::error_code ec;
            fs::create_directories(cache_dir, ec);
            std::ofstream out(cache_dir / oeis::bfile_name(id), std::ios::binary);
            out << body;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    oeis::MatchReport report = oeis::compare_terms(bfile, produced, start_index);
    if (format == "json") {
        json out;
        out["id"] = id;
        out["against"] = against;
        out["terms"] = terms;
        out["match"] = report.match;
        out["compared"] = report.compared;
        if (!report.match) {
            out["first_mismatch_index"] = report.first_mismatch_index;
            out["detail"] = report.detail;
        }
        std::cout << out.dump() << "\n";
    } else {
        if (report.match)
            std::cout << id << " vs " << against << ": " << report.compared << " terms match\n";
        else
            std::cout << id << " vs " << against << ": MISMATCH, " << report.detail << "\n";
    }
    return report.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard paths in a composition poset: exact enumeration and generating functions"};
    app.require_subcommand(1);
    int exit_code = 0;

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "enumerate or count standard paths");
    paths_cmd->require_subcommand(1);
    {
        auto* enumerate = paths_cmd->add_subcommand("enumerate", "list all standard paths of length n");
        auto n = std::make_shared<int>(0);
        auto format = std::make_shared<std::string>("text");
        enumerate->add_option("--n", *n, "path length")->required()->check(CLI::Range(0, 12));
        enumerate->add_option("--format", *format, "text or json");
        enumerate->callback([=, &exit_code] { exit_code = run_paths_enumerate(*n, *format); });

        auto* count = paths_cmd->add_subcommand("count", "count standard paths of length n");
        auto cn = std::make_shared<int>(0);
        auto group_by = std::make_shared<std::string>("endpoint");
        auto height_bound = std::make_shared<int>(0);
        auto cformat = std::make_shared<std::string>("text");
        count->add_option("--n", *cn, "path length")->required()->check(CLI::Range(0, 20));
        count->add_option("--group-by", *group_by, "endpoint, stats, width or height");
        count->add_option("--height-bound", *height_bound, "restrict endpoints to height <= bound")
            ->check(CLI::Range(0, 100));
        count->add_option("--format", *cformat, "text, json or csv");
        count->callback([=, &exit_code] { exit_code = run_paths_count(*cn, *group_by, *height_bound, *cformat); });
    }

    // gf
    auto* gf_cmd = app.add_subcommand("gf", "generating functions and coefficient tables");
    gf_cmd->require_subcommand(1);
    {
        auto* width = gf_cmd->add_subcommand("width", "width-k generating function L_k");
        auto k = std::make_shared<int>(1);
        auto terms = std::make_shared<int>(12);
        auto format = std::make_shared<std::string>("text");
        width->add_option("--k", *k, "width")->required()->check(CLI::Range(1, 16));
        width->add_option("--terms", *terms, "series coefficients to print")->check(CLI::Range(0, 200));
        width->add_option("--format", *format, "text or json");
        width->callback([=, &exit_code] { exit_code = run_gf_width(*k, *terms, *format); });

        auto* h2 = gf_cmd->add_subcommand("height2", "height-2 count table c_{i,j}");
        auto imax = std::make_shared<int>(8);
        auto jmax = std::make_shared<int>(7);
        auto h2format = std::make_shared<std::string>("text");
        h2->add_option("--imax", *imax, "largest i")->required()->check(CLI::Range(0, 200));
        h2->add_option("--jmax", *jmax, "largest j")->required()->check(CLI::Range(0, 200));
        h2->add_option("--format", *h2format, "text, json or csv");
        h2->callback([=, &exit_code] { exit_code = run_gf_height2(*imax, *jmax, *h2format); });

        auto* unrestricted = gf_cmd->add_subcommand("unrestricted", "EGF slices of F(u,v,x)");
        auto n = std::make_shared<int>(5);
        auto uformat = std::make_shared<std::string>("text");
        unrestricted->add_option("--n", *n, "largest weight")->required()->check(CLI::Range(0, 60));
        unrestricted->add_option("--format", *uformat, "text or json");
        unrestricted->callback([=, &exit_code] { exit_code = run_gf_unrestricted(*n, *uformat); });
    }

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->require_subcommand(1);
    {
        auto* all = verify_cmd->add_subcommand("all", "every acceptance check, one pass/fail line each");
        auto max_weight = std::make_shared<int>(12);
        auto oeis_dir = std::make_shared<std::string>(default_oeis_dir().string());
        auto figure = std::make_shared<std::string>((fs::path("share") / "fixtures" / "hasse_n_w4.dot").string());
        all->add_option("--max-weight", *max_weight, "bound for the brute-force sweep")->check(CLI::Range(0, 14));
        all->add_option("--oeis-dir", *oeis_dir, "directory with b001761.txt");
        all->add_option("--figure-fixture", *figure, "DOT fixture for the weight-4 diagram");
        all->callback([=, &exit_code] { exit_code = run_verify(*max_weight, *oeis_dir, *figure); });
    }

    // hasse
    {
        auto* hasse_cmd = app.add_subcommand("hasse", "export a Hasse diagram");
        auto poset = std::make_shared<std::string>("N");
        auto max_weight = std::make_shared<int>(4);
        auto format = std::make_shared<std::string>("dot");
        hasse_cmd->add_option("--poset", *poset, "N or Gamma")->check(CLI::IsMember({"N", "Gamma"}));
        hasse_cmd->add_option("--max-weight", *max_weight, "largest weight")->required()->check(CLI::Range(0, 12));
        hasse_cmd->add_option("--format", *format, "dot");
        hasse_cmd->callback([=, &exit_code] { exit_code = run_hasse(*poset, *max_weight, *format); });
    }

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "cross-check sequences against OEIS b-files");
    oeis_cmd->require_subcommand(1);
    {
        auto* check = oeis_cmd->add_subcommand("check", "compare produced terms with a b-file");
        auto id = std::make_shared<std::string>("A001761");
        auto against = std::make_shared<std::string>("c0n");
        auto terms = std::make_shared<int>(20);
        auto offline = std::make_shared<bool>(false);
        auto cache_dir = std::make_shared<std::string>(default_oeis_dir().string());
        auto format = std::make_shared<std::string>("text");
        check->add_option("--id", *id, "OEIS id, e.g. A001761");
        check->add_option("--against", *against, "c0n or c1n");
        check->add_option("--terms", *terms, "number of produced terms")->check(CLI::Range(0, 200));
        check->add_flag("--offline", *offline, "never touch the network");
        check->add_option("--cache-dir", *cache_dir, "b-file cache directory");
        check->add_option("--format", *format, "text or json");
        check->callback(
            [=, &exit_code] { exit_code = run_oeis_check(*id, *against, *terms, *offline, *cache_dir, *format); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

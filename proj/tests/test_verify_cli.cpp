#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <regex>

#include "oracles.hpp"
#include "pathdepth/cache.hpp"
#include "pathdepth/checks.hpp"
#include "pathdepth/sweep.hpp"

using namespace pathdepth;

namespace {

/// Scrub the runtime fields a warm cache is allowed to change.
std::string strip_runtimes(std::string text) {
    return std::regex_replace(text, std::regex("\"runtime_ms\":[0-9]+"), "\"runtime_ms\":0");
}

struct temp_dir {
    std::filesystem::path path;
    temp_dir() {
        path = std::filesystem::temp_directory_path() /
               ("pathdepth-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~temp_dir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

} // namespace

TEST_SUITE_BEGIN("verify-cli");

TEST_CASE("named checks pass on their reference instances") {
    CHECK(check_colon_power(3, 2, 2).status == check_status::pass);
    check_result tr = check_truncation(4, 2, 2, 2);
    CHECK(tr.status == check_status::pass);
    for (const auto& c : check_ladder(4, 2, 2)) CHECK(c.status == check_status::pass);
    CHECK(check_colon_witness(2, 2, 1, 0).status == check_status::pass);
    // the documented q=1, r>=1 gap in the witness identity is visible here
    check_result gap = check_colon_witness(2, 2, 1, 1);
    CHECK(gap.status == check_status::fail);
    CHECK(gap.detail.find("ring n=5") != std::string::npos); // both forms printed
    for (const auto& c : check_residue_suite(2, 2)) CHECK(c.status == check_status::pass);
    CHECK(check_scaled_colon(power(path_ideal(4, 2), 2), oracles::mono_of(4, "x2*x3")).status ==
          check_status::pass);
    CHECK_THROWS_AS(check_truncation(4, 2, 5, 2), parameter_error);
}

TEST_CASE("vIv identity holds on random ideals") {
    std::mt19937 rng(331);
    for (int it = 0; it < 40; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 4, 5, 2);
        monomial v = oracles::random_monomial(rng, 4, 2);
        CHECK(check_scaled_colon(I, v).status == check_status::pass);
    }
}

TEST_CASE("result cache stores, reloads and survives corruption") {
    temp_dir dir;
    result_cache cache(dir.path);
    CHECK_FALSE(cache.load("missing").has_value());
    cache.store("some-key", {{"depth", 3}});
    auto hit = cache.load("some-key");
    REQUIRE(hit.has_value());
    CHECK((*hit)["depth"] == 3);

    // different key, same file name cannot happen; corrupting the file
    // must make the entry unreadable rather than wrong
    for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
        std::ofstream out(entry.path());
        out << "{ not json";
    }
    CHECK_FALSE(cache.load("some-key").has_value());

    // a file whose recorded key disagrees is ignored too
    cache.store("other", {{"x", 1}});
    for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
        std::ofstream out(entry.path());
        out << R"({"key":"tampered","value":{"x":1}})";
    }
    CHECK_FALSE(cache.load("other").has_value());
}

TEST_CASE("sweep grid: depth checks all pass and rows are complete") {
    sweep_options opts;
    opts.n_max = 6;
    opts.t_max = 3;
    sweep_report report = run_sweep(opts);
    CHECK(report.all_required_passed());
    std::size_t cells = 0;
    for (int n = 1; n <= 6; ++n) cells += static_cast<std::size_t>(n) * 3;
    CHECK(report.rows.size() == cells);
    for (const auto& row : report.rows) {
        CHECK_FALSE(row.checks.empty());
        if (row.depth) {
            CHECK(*row.depth == row.depth_formula_value);
            CHECK(*row.pd == row.pd_formula_value);
        }
    }
}

TEST_CASE("sweep with sdepth: sandwich rows on a small grid") {
    sweep_options opts;
    opts.n_max = 4;
    opts.t_max = 2;
    opts.scope = sdepth_scope::quotient;
    opts.timeout = std::chrono::seconds(30);
    sweep_report report = run_sweep(opts);
    CHECK(report.all_required_passed());
    for (const auto& row : report.rows)
        if (row.sdepth_quotient) {
            CHECK(*row.sdepth_quotient >= row.depth_formula_value);
            CHECK(*row.sdepth_quotient <= depth_formula(row.n, row.m, 1).value);
        }
}

TEST_CASE("report rendering is deterministic and cache-warm identical") {
    temp_dir dir;
    result_cache cache(dir.path);
    sweep_options opts;
    opts.n_max = 4;
    opts.t_max = 2;
    opts.scope = sdepth_scope::both;
    opts.cache = &cache;
    std::string cold = render_jsonl(run_sweep(opts));
    CHECK(std::filesystem::directory_iterator(dir.path) !=
          std::filesystem::directory_iterator()); // cache populated
    std::string warm = render_jsonl(run_sweep(opts));
    CHECK(strip_runtimes(cold) == strip_runtimes(warm));

    opts.paranoid = true; // certificates re-verified before reuse
    std::string paranoid = render_jsonl(run_sweep(opts));
    CHECK(strip_runtimes(cold) == strip_runtimes(paranoid));

    // all three formats render every row
    sweep_report report = run_sweep(opts);
    std::string csv = render_csv(report);
    std::string md = render_markdown(report);
    std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == report.rows.size() + 1);
    CHECK(std::count(md.begin(), md.end(), '\n') ==
          static_cast<long>(report.rows.size() + 2));
}

TEST_CASE("sweep rows skip over caps instead of failing") {
    sweep_options opts;
    opts.n_min = opts.n_max = 8;
    opts.m_min = opts.m_max = 2;
    opts.t_min = opts.t_max = 4; // generator count far over the cap
    sweep_report report = run_sweep(opts);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.all_required_passed());
    bool skipped = false;
    for (const auto& c : report.rows[0].checks)
        skipped |= c.status == check_status::skipped;
    CHECK(skipped);
    CHECK_FALSE(report.rows[0].depth.has_value());
}

TEST_CASE("jsonl rows conform to the shipped schema") {
    // hand-rolled validation against docs/sweep-report.schema.json:
    // required keys, types, and enum values
    sweep_options opts;
    opts.n_max = 3;
    opts.t_max = 2;
    opts.scope = sdepth_scope::both;
    sweep_report report = run_sweep(opts);
    for (const auto& row : report.rows) {
        nlohmann::json j = row_to_json(row);
        for (const char* key :
             {"n", "m", "t", "depth", "depth_formula", "branch", "pd", "pd_formula",
              "sdepth_quotient", "sdepth_ideal", "bounds", "checks", "runtime_ms"})
            CHECK_MESSAGE(j.contains(key), key);
        CHECK(j["n"].is_number_integer());
        CHECK(j["m"].is_number_integer());
        CHECK(j["t"].is_number_integer());
        CHECK((j["depth"].is_number_integer() || j["depth"].is_null()));
        CHECK(j["depth_formula"].is_number_integer());
        bool branch_ok = j["branch"] == "general" || j["branch"] == "stable";
        CHECK(branch_ok);
        CHECK((j["sdepth_quotient"].is_number_integer() || j["sdepth_quotient"].is_null()));
        CHECK((j["sdepth_ideal"].is_number_integer() || j["sdepth_ideal"].is_null()));
        for (const char* key : {"ideal_upper", "quotient_upper", "remark_upper"})
            CHECK(j["bounds"][key].is_number_integer());
        CHECK(j["checks"].is_array());
        for (const auto& c : j["checks"]) {
            CHECK(c["name"].is_string());
            bool status_ok =
                c["status"] == "pass" || c["status"] == "fail" || c["status"] == "skipped";
            CHECK(status_ok);
        }
        CHECK(j["runtime_ms"].is_number_integer());
        CHECK(j["runtime_ms"].get<long long>() >= 0);
    }
}

TEST_CASE("stefan exploration labels rows and never throws") {
    sweep_options opts;
    opts.timeout = std::chrono::seconds(30);
    stefan_report report = explore_stefan(2, 4, 1, 1, opts);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
        CHECK(row.verdict == "agree"); // t = 1 agrees everywhere
        CHECK(row.formula == stefan_formula(row.n, row.t));
    }
    std::string text = render_stefan(report);
    CHECK(text.find("EXPLORATORY") != std::string::npos);
}

TEST_SUITE_END();

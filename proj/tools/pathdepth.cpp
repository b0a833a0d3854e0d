// Command-line front end: depth / sdepth / betti for a single ideal,
// parameter sweeps with per-row checks, named identity checks, and the
// exploratory m = 2 table.
//
// Exit codes: 0 success, 1 a required check failed or a certificate was
// rejected, 2 malformed input, 3 a resource cap was exceeded, 4 the
// wall-clock budget ran out, 5 bad usage or parameters.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathdepth/betti.hpp"
#include "pathdepth/cache.hpp"
#include "pathdepth/checks.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/formulas.hpp"
#include "pathdepth/ideal_io.hpp"
#include "pathdepth/sdepth.hpp"
#include "pathdepth/sweep.hpp"
#include "pathdepth/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_timeout = 4;
constexpr int exit_usage = 5;

struct ideal_flags {
    std::vector<int> path; // n m
    int power = 1;
    std::string file;
};

void add_ideal_flags(CLI::App* cmd, ideal_flags& flags) {
    auto* path = cmd->add_option("--path", flags.path,
                                 "path ideal parameters n m (generators of m consecutive "
                                 "variables out of n)")
                     ->expected(2);
    cmd->add_option("--t", flags.power, "raise the ideal to this power (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--file", flags.file, "read the ideal from a file in the text format")
        ->excludes(path);
}

pathdepth::monomial_ideal load_ideal(const ideal_flags& flags) {
    using namespace pathdepth;
    monomial_ideal I;
    if (!flags.file.empty()) {
        std::ifstream in(flags.file);
        if (!in) throw input_error("cannot open ideal file: " + flags.file);
        I = parse_ideal(in);
    } else if (flags.path.size() == 2) {
        I = path_ideal(flags.path[0], flags.path[1]);
    } else {
        throw parameter_error("an ideal source is required: --path n m or --file");
    }
    return flags.power == 1 ? I : power(I, flags.power);
}

std::optional<pathdepth::result_cache> open_cache(const std::string& flag_dir) {
    std::string dir = flag_dir;
    if (dir.empty())
        if (const char* env = std::getenv("PATHDEPTH_CACHE")) dir = env;
    if (dir.empty()) return std::nullopt;
    return pathdepth::result_cache(dir);
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw pathdepth::input_error("cannot write to " + out_file);
        out << text;
    }
}

int print_check_results(const std::vector<pathdepth::check_result>& results) {
    using pathdepth::check_status;
    bool failed = false;
    for (const auto& r : results) {
        std::cout << (r.status == check_status::pass
                          ? "[PASS] "
                          : (r.status == check_status::fail ? "[FAIL] " : "[SKIP] "))
                  << r.id << (r.params.empty() ? "" : " " + r.params);
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        failed |= r.status == check_status::fail;
    }
    return failed ? exit_check_failed : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    using namespace pathdepth;

    CLI::App app{"exact depth, Stanley depth and multigraded Betti numbers of monomial ideals"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    // shared engine knobs
    betti_options betti_opts;
    std::uint64_t max_poset = default_max_poset;
    long timeout_secs = 60;
    unsigned jobs = 1;
    std::string cache_dir;
    bool paranoid = false;
    std::string field_name = "char0";
    auto add_engine_flags = [&](CLI::App* cmd, bool with_sdepth_knobs) {
        cmd->add_option("--max-gens", betti_opts.max_generators,
                        "generator cap for lcm-lattice computations (default 22)");
        cmd->add_option("--max-lattice", betti_opts.max_lattice,
                        "lcm lattice size cap (default 200000)");
        cmd->add_option("--field", field_name, "coefficient field: char0 or char2")
            ->check(CLI::IsMember({"char0", "char2"}));
        cmd->add_option("--jobs", jobs, "worker threads (default 1)");
        cmd->add_option("--cache-dir", cache_dir,
                        "result cache directory (or set PATHDEPTH_CACHE)");
        if (with_sdepth_knobs) {
            cmd->add_option("--timeout-secs", timeout_secs,
                            "wall-clock budget per sdepth search (default 60, 0 = none)");
            cmd->add_option("--max-poset", max_poset,
                            "characteristic poset size cap (default 2000000)");
            cmd->add_flag("--paranoid", paranoid,
                          "re-verify cached certificates before reuse");
        }
    };

    // ---- depth ----
    auto* depth_cmd = app.add_subcommand("depth", "depth and projective dimension of S/I");
    ideal_flags depth_src;
    add_ideal_flags(depth_cmd, depth_src);
    add_engine_flags(depth_cmd, false);
    bool depth_json = false;
    depth_cmd->add_flag("--json", depth_json, "machine-readable output");

    // ---- sdepth ----
    auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth with certificate");
    ideal_flags sdepth_src;
    add_ideal_flags(sdepth_cmd, sdepth_src);
    add_engine_flags(sdepth_cmd, true);
    std::string mode_name = "quotient";
    sdepth_cmd->add_option("--mode", mode_name, "quotient (S/I) or ideal (I)")
        ->check(CLI::IsMember({"quotient", "ideal"}));
    std::vector<int> bound_exps;
    sdepth_cmd->add_option("--bound", bound_exps,
                           "override the poset bound exponents (must dominate all generators)");
    int sdepth_hint = -1;
    sdepth_cmd->add_option("--hint", sdepth_hint, "known lower bound to start the scan from");
    std::string cert_out, cert_check;
    sdepth_cmd->add_option("--cert-out", cert_out, "write the certificate JSON here");
    sdepth_cmd->add_option("--check-cert", cert_check,
                           "verify a serialized certificate against the ideal instead of "
                           "searching");
    bool sdepth_json = false;
    sdepth_cmd->add_flag("--json", sdepth_json, "machine-readable output");

    // ---- betti ----
    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers of S/I");
    ideal_flags betti_src;
    add_ideal_flags(betti_cmd, betti_src);
    add_engine_flags(betti_cmd, false);
    bool betti_json = false;
    betti_cmd->add_flag("--json", betti_json, "machine-readable output");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "grid of (n, m, t) cells with per-row checks");
    sweep_options sw;
    sweep_cmd->add_option("--n-min", sw.n_min);
    sweep_cmd->add_option("--n-max", sw.n_max)->required();
    sweep_cmd->add_option("--m-min", sw.m_min);
    sweep_cmd->add_option("--m-max", sw.m_max, "0 means up to n (default)");
    sweep_cmd->add_option("--t-min", sw.t_min);
    sweep_cmd->add_option("--t-max", sw.t_max);
    std::string scope_name = "none";
    sweep_cmd->add_option("--sdepth", scope_name, "none, quotient or both")
        ->check(CLI::IsMember({"none", "quotient", "both"}));
    std::string format = "md";
    sweep_cmd->add_option("--format", format, "md, jsonl or csv")
        ->check(CLI::IsMember({"md", "jsonl", "csv"}));
    std::string out_file;
    sweep_cmd->add_option("--out", out_file, "write the report here instead of stdout");
    add_engine_flags(sweep_cmd, true);

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "run a named identity or bound check");
    std::string check_id;
    check_cmd
        ->add_option("id", check_id,
                     "one of: colon-power, truncation, ladder, colon-w, umt, vIv")
        ->required();
    int cn = 0, cm = 0, ct = 2, ck = 2, cq = 1, cr = 0;
    check_cmd->add_option("--n", cn);
    check_cmd->add_option("--m", cm);
    check_cmd->add_option("--t", ct, "identity parameter t; also the power for the vIv source");
    check_cmd->add_option("--k", ck, "truncation length (2..m)");
    check_cmd->add_option("--q", cq);
    check_cmd->add_option("--r", cr);
    ideal_flags check_src;
    check_cmd->add_option("--path", check_src.path, "ideal source for vIv: path parameters n m")
        ->expected(2);
    check_cmd->add_option("--file", check_src.file, "ideal source for vIv: text-format file");
    std::string check_monomial;
    check_cmd->add_option("--monomial", check_monomial, "monomial v for the vIv check");
    add_engine_flags(check_cmd, true);

    // ---- explore-stefan ----
    auto* stefan_cmd =
        app.add_subcommand("explore-stefan", "exploratory m=2 table (reported, not asserted)");
    int sn_min = 2, sn_max = 5, st_min = 1, st_max = 1;
    stefan_cmd->add_option("--n-min", sn_min);
    stefan_cmd->add_option("--n-max", sn_max)->required();
    stefan_cmd->add_option("--t-min", st_min);
    stefan_cmd->add_option("--t-max", st_max);
    add_engine_flags(stefan_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        betti_opts.field = field_name == "char2" ? coeff_field::gf2 : coeff_field::rationals;
        betti_opts.jobs = jobs;
        auto cache = open_cache(cache_dir);

        if (app.got_subcommand(depth_cmd)) {
            monomial_ideal I = load_ideal(depth_src);
            int pd = quotient_pd(I, betti_opts);
            int depth = I.nvars() - pd;
            if (depth_json) {
                nlohmann::json j{{"depth", depth}, {"pd", pd}, {"ideal_depth", depth + 1}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "depth(S/I) = " << depth << "\n"
                          << "pd(S/I) = " << pd << "\n"
                          << "depth(I) = " << depth + 1 << "\n";
            }
            return exit_ok;
        }

        if (app.got_subcommand(sdepth_cmd)) {
            monomial_ideal I = load_ideal(sdepth_src);
            if (!cert_check.empty()) {
                std::ifstream in(cert_check);
                if (!in) throw input_error("cannot open certificate: " + cert_check);
                nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
                if (j.is_discarded()) throw input_error("certificate is not valid JSON");
                verify_report rep = verify_certificate(j, I, nullptr, max_poset);
                std::cout << (rep.ok ? "certificate accepted\n" : "certificate rejected\n");
                for (const auto& reason : rep.reasons) std::cout << "  " << reason << "\n";
                return rep.ok ? exit_ok : exit_check_failed;
            }
            poset_mode mode =
                mode_name == "ideal" ? poset_mode::ideal : poset_mode::quotient;
            sdepth_options opts;
            opts.timeout = std::chrono::seconds(timeout_secs);
            opts.poset.max_size = max_poset;
            if (!bound_exps.empty()) {
                std::vector<exponent_t> exps(bound_exps.begin(), bound_exps.end());
                opts.poset.bound_override = monomial(std::move(exps));
            }
            if (sdepth_hint >= 0) opts.lower_hint = sdepth_hint;
            char_poset poset = build_poset(I, mode, opts.poset);
            sdepth_result r = stanley_depth_of_poset(poset, opts);
            nlohmann::json cert = certificate_to_json(poset, r.certificate);
            if (sdepth_json) {
                nlohmann::json j{{"sdepth", r.value},
                                 {"mode", to_string(mode)},
                                 {"poset_size", r.poset_size}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (mode == poset_mode::quotient ? "sdepth(S/I) = " : "sdepth(I) = ")
                          << r.value << "\n"
                          << "poset size = " << r.poset_size << "\n";
            }
            if (!cert_out.empty()) {
                std::ofstream out(cert_out);
                if (!out) throw input_error("cannot write certificate to " + cert_out);
                out << cert.dump(2) << "\n";
                if (!sdepth_json) std::cout << "certificate written to " << cert_out << "\n";
            }
            return exit_ok;
        }

        if (app.got_subcommand(betti_cmd)) {
            monomial_ideal I = load_ideal(betti_src);
            betti_table table = betti_table_of_quotient(I, betti_opts);
            if (betti_json) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& e : table.entries())
                    rows.push_back({{"i", e.index},
                                    {"degree", e.degree.exponents()},
                                    {"rank", e.rank}});
                std::cout << nlohmann::json{{"n", table.nvars()}, {"entries", rows}}.dump()
                          << "\n";
            } else {
                std::cout << table.to_text();
                std::cout << "pd(S/I) = " << table.max_index() << "\n";
            }
            return exit_ok;
        }

        if (app.got_subcommand(sweep_cmd)) {
            sw.scope = scope_name == "none"
                           ? sdepth_scope::none
                           : (scope_name == "quotient" ? sdepth_scope::quotient
                                                       : sdepth_scope::both);
            sw.betti = betti_opts;
            sw.timeout = std::chrono::seconds(timeout_secs);
            sw.max_poset = max_poset;
            sw.jobs = jobs;
            sw.paranoid = paranoid;
            if (cache) sw.cache = &*cache;
            sweep_report report = run_sweep(sw);
            if (format == "jsonl")
                emit(render_jsonl(report), out_file);
            else if (format == "csv")
                emit(render_csv(report), out_file);
            else
                emit(render_markdown(report), out_file);
            return report.all_required_passed() ? exit_ok : exit_check_failed;
        }

        if (app.got_subcommand(check_cmd)) {
            std::vector<check_result> results;
            if (check_id == "colon-power") {
                results.push_back(check_colon_power(cn, cm, ct));
            } else if (check_id == "truncation") {
                results.push_back(check_truncation(cn, cm, ck, ct));
            } else if (check_id == "ladder") {
                results = check_ladder(cn, cm, ct);
            } else if (check_id == "colon-w") {
                results.push_back(check_colon_witness(cm, ct, cq, cr));
            } else if (check_id == "umt") {
                sdepth_options opts;
                opts.timeout = std::chrono::seconds(timeout_secs);
                opts.poset.max_size = max_poset;
                results = check_residue_suite(cm, ct, betti_opts, opts);
            } else if (check_id == "vIv") {
                check_src.power = ct;
                monomial_ideal I = load_ideal(check_src);
                if (check_monomial.empty())
                    throw parameter_error("vIv needs --monomial <compact monomial>");
                results.push_back(
                    check_scaled_colon(I, parse_monomial_text(check_monomial, I.nvars())));
            } else {
                throw parameter_error("unknown check id: " + check_id);
            }
            return print_check_results(results);
        }

        if (app.got_subcommand(stefan_cmd)) {
            sweep_options opts;
            opts.timeout = std::chrono::seconds(timeout_secs);
            opts.max_poset = max_poset;
            if (cache) opts.cache = &*cache;
            stefan_report report = explore_stefan(sn_min, sn_max, st_min, st_max, opts);
            std::cout << render_stefan(report);
            return exit_ok;
        }
    } catch (const ring_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const timeout_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_timeout;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_usage;
}

// Command-line front end: runs verifications, emits tables and JSON
// certificates, and returns CI-friendly exit codes
// (0 certified, 1 falsified, 2 inconclusive, 64 usage, 74 I/O).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "volcert/certify.hpp"
#include "volcert/report.hpp"

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

int verdict_exit(volcert::Verdict v) {
    switch (v) {
        case volcert::Verdict::Certified: return kExitCertified;
        case volcert::Verdict::Falsified: return kExitFalsified;
        case volcert::Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

volcert::OutputFormat parse_format(const std::string& f) {
    if (f == "md") return volcert::OutputFormat::Md;
    if (f == "csv") return volcert::OutputFormat::Csv;
    if (f == "json") return volcert::OutputFormat::Json;
    throw CLI::ValidationError("--format must be md, csv, or json");
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return kExitIo;
    }
    f << text;
    if (!f) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return kExitIo;
    }
    return 0;
}

// Optional defaults from the file named by VOLCERT_CONFIG.
void load_env_config(volcert::CertifyConfig& cfg) {
    const char* path = std::getenv("VOLCERT_CONFIG");
    if (!path || !*path) return;
    std::ifstream f(path);
    if (!f) return;
    try {
        nlohmann::json j;
        f >> j;
        if (j.contains("max_depth")) cfg.max_depth = j["max_depth"].get<int>();
        if (j.contains("row_pieces")) cfg.row_pieces = j["row_pieces"].get<int>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        if (j.contains("tie_tol")) cfg.tie_tol = j["tie_tol"].get<double>();
        if (j.contains("printed_tol")) cfg.printed_tol = j["printed_tol"].get<double>();
        if (j.contains("clamp_tol")) cfg.clamp_tol = j["clamp_tol"].get<double>();
        if (j.contains("ncb_cosh_d_lo")) cfg.ncb_cosh_d_lo = j["ncb_cosh_d_lo"].get<double>();
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring malformed config " << path << ": " << e.what() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"volcert: certified lower bounds for hyperbolic volumes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "md";
    std::string out_path;
    volcert::CertifyConfig cfg;
    load_env_config(cfg);

    app.add_option("--format", format_name, "output format: md, csv, json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--threads", cfg.threads, "worker threads for subinterval evaluation")
        ->check(CLI::Range(1, 256));
    app.add_option("--max-depth", cfg.max_depth, "bisection depth limit")
        ->check(CLI::Range(1, 64));

    // verify
    auto* verify = app.add_subcommand("verify", "re-verify a table or everything");
    verify->fallthrough();
    int table_id = 0;
    auto* v_table = verify->add_subcommand("table", "re-certify a printed table");
    v_table->fallthrough();
    v_table->add_option("--id", table_id, "table number")->required()->check(CLI::IsMember({1, 2}));
    auto* v_all = verify->add_subcommand("all", "run every certificate (CI entry point)");
    v_all->fallthrough();
    verify->require_subcommand(1);

    // certify
    auto* certify = app.add_subcommand("certify", "run a single certificate");
    certify->fallthrough();
    double target = 6.89, lo = 1.215, hi = 1.439;
    auto* c_window = certify->add_subcommand("window", "certify the volume bound over a window");
    c_window->fallthrough();
    c_window->add_option("--target", target, "volume target")->required();
    c_window->add_option("--lo", lo, "window start (cosh l1)")->required();
    c_window->add_option("--hi", hi, "window end (cosh l1)")->required();
    std::string lemma_id;
    auto* c_lemma = certify->add_subcommand("lemma", "machine-check one lemma");
    c_lemma->fallthrough();
    c_lemma->add_option("--id", lemma_id, "lemma id")->required();
    auto* c_tail = certify->add_subcommand("tail", "certify tail monotonicity");
    c_tail->fallthrough();
    certify->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    volcert::OutputFormat format = parse_format(format_name);

    try {
        if (v_table->parsed()) {
            volcert::TableResult result = volcert::verify_table(table_id, cfg);
            int io = write_output(volcert::render_table(result, format), out_path);
            if (io) return io;
            return verdict_exit(result.cert.status);
        }
        if (v_all->parsed()) {
            bool any_falsified = false, any_inconclusive = false;
            std::string buf;
            for (volcert::LemmaId id : volcert::all_lemmas()) {
                volcert::LemmaReport rep = volcert::certify_lemma(id, cfg);
                buf += lemma_name(rep.id) + ": " + verdict_name(rep.verdict) + "\n";
                if (rep.verdict == volcert::Verdict::Falsified) any_falsified = true;
                if (rep.verdict == volcert::Verdict::Inconclusive) any_inconclusive = true;
            }
            buf += any_falsified ? "summary: falsified\n"
                 : any_inconclusive ? "summary: inconclusive\n"
                                    : "summary: certified\n";
            int io = write_output(buf, out_path);
            if (io) return io;
            return any_falsified ? kExitFalsified
                 : any_inconclusive ? kExitInconclusive
                                    : kExitCertified;
        }
        if (c_window->parsed()) {
            volcert::Certificate cert = volcert::certify_window(target, lo, hi, cfg);
            int io = write_output(volcert::render_certificate(cert, format), out_path);
            if (io) return io;
            return verdict_exit(cert.status);
        }
        if (c_lemma->parsed()) {
            auto id = volcert::lemma_from_name(lemma_id);
            if (!id) {
                std::cerr << "error: unknown lemma id '" << lemma_id << "'\n";
                return kExitUsage;
            }
            volcert::LemmaReport rep = volcert::certify_lemma(*id, cfg);
            int io = write_output(volcert::render_lemma(rep, format), out_path);
            if (io) return io;
            return verdict_exit(rep.verdict);
        }
        if (c_tail->parsed()) {
            volcert::TailResult result = volcert::certify_tail(cfg);
            int io = write_output(volcert::render_tail(result, format), out_path);
            if (io) return io;
            return verdict_exit(result.verdict);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#pragma once
// Command implementations behind the `salem` executable. Each command takes
// its arguments (without the program and command names) and returns the
// process exit status.

#include "salem/certify.hpp"
#include "salem/hunt.hpp"
#include "salem/table.hpp"
#include "salem/transform.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ios>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace salem::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;

namespace detail {

/// Runs CLI11 on `args`; returns an exit status when parsing ends the command.
inline std::optional<int> parse(CLI::App& app, std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return std::nullopt;
}

/// Whitespace-separated integers; nullopt if any token is not an integer.
inline std::optional<std::vector<Integer>> parse_integers(const std::string& text) {
    std::istringstream is(text);
    std::vector<Integer> out;
    std::string tok;
    while (is >> tok) {
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size()) return std::nullopt;
        for (std::size_t j = i; j < tok.size(); ++j) {
            if (tok[j] < '0' || tok[j] > '9') return std::nullopt;
        }
        out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace detail

inline int cmd_search(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random-separator search for Salem numbers below a threshold", "salem search"};
    SearchConfig cfg;
    std::string threshold = "49/37";
    bool verbose = false;
    app.add_option("--two-d", cfg.two_d, "Degree 2d of the Salem polynomials (even, 4..64)")->required();
    app.add_option("--threshold", threshold, "Upper bound eta as an exact fraction p/q")->capture_default_str();
    app.add_option("--trials", cfg.trials, "Number of separator draws")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Base seed; worker w uses seed + w")->capture_default_str();
    app.add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
    app.add_option("--out", cfg.out_path, "JSONL output file (appended)")->required();
    app.add_option("--grid-log2", cfg.grid_log2, "Separators are multiples of 2^-grid_log2")->capture_default_str();
    app.add_flag("--verbose", verbose, "Log rejected candidates to stderr");
    if (auto rc = detail::parse(app, args, out, err)) return *rc;

    try {
        cfg.eta = parse_fraction(threshold);
        cfg.validate();
    } catch (const InvalidConfig& e) {
        err << "salem search: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        SearchSummary summary = run_search(cfg, verbose ? &err : nullptr);
        print_summary(out, summary);
    } catch (const std::ios_base::failure& e) {
        err << "salem search: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

inline int cmd_verify(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certify a claimed Salem polynomial from its leading half-coefficients", "salem verify"};
    std::string half_text;
    std::string threshold = "49/37";
    app.add_option("--half-coeffs", half_text, "Quoted list \"1 c1 ... cd\"")->required();
    app.add_option("--threshold", threshold, "Upper bound eta as an exact fraction p/q")->capture_default_str();
    if (auto rc = detail::parse(app, args, out, err)) return *rc;

    auto half = detail::parse_integers(half_text);
    if (!half) {
        err << "salem verify: malformed coefficient list '" << half_text << "'\n";
        return kExitUsage;
    }
    std::optional<Threshold> thr;
    try {
        thr.emplace(parse_fraction(threshold));
    } catch (const InvalidConfig& e) {
        err << "salem verify: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::vector<Integer> full = palindrome_from_half(*half);
    const IntPoly p = IntPoly::from_descending(std::span<const Integer>(full));
    IntPoly q;
    try {
        q = p_to_q(p);
    } catch (const Error& e) {
        out << "rejected " << e.what() << "\n";
        return kExitRejected;
    }
    CertifyResult res = certify(q, *thr);
    if (const auto* rej = std::get_if<Rejection>(&res)) {
        out << "rejected " << to_string(rej->reason) << " (" << rej->detail << ") q = " << q.to_string() << "\n";
        return kExitRejected;
    }
    const auto& cert = std::get<SalemCertificate>(res);
    out << "certified " << cert.p.degree() << " " << compute_tau(cert) << " q = " << q.to_string() << "\n";
    return kExitOk;
}

inline int cmd_table(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Merge JSONL result files into a table sorted by Salem number", "salem table"};
    std::vector<std::string> inputs;
    app.add_option("--in", inputs, "One or more JSONL files")->required();
    if (auto rc = detail::parse(app, args, out, err)) return *rc;

    std::vector<SalemRecord> records;
    try {
        for (const auto& path : inputs) {
            auto r = read_records(path);
            records.insert(records.end(), r.begin(), r.end());
        }
    } catch (const std::exception& e) {
        err << "salem table: " << e.what() << "\n";
        return kExitIo;
    }
    write_table(out, build_table(records));
    return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const std::string usage = "usage: salem <search|verify|table> [options]   (use <command> --help)\n";
    if (argc < 2) {
        err << usage;
        return kExitUsage;
    }
    const std::string cmd = argv[1];
    std::vector<std::string> rest(argv + 2, argv + argc);
    if (cmd == "search") return cmd_search(rest, out, err);
    if (cmd == "verify") return cmd_verify(rest, out, err);
    if (cmd == "table") return cmd_table(rest, out, err);
    if (cmd == "--help" || cmd == "-h") {
        out << usage;
        return kExitOk;
    }
    err << "unknown command '" << cmd << "'\n" << usage;
    return kExitUsage;
}

}  // namespace salem::cli

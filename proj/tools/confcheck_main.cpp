#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "confcheck/critical_pairs.hpp"
#include "confcheck/parser.hpp"

namespace {

constexpr const char* kVersion = "confcheck 0.1.0";

// exit codes: 0 certified, 1 rejected, 2 input or usage error
constexpr int kExitCertified = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_check(const std::string& trs_path, const std::string& cert_path, bool verbose) {
    confcheck::Trs trs;
    confcheck::Certificate cert;
    try {
        trs = confcheck::parse_trs(read_file(trs_path));
    } catch (const std::exception& e) {
        std::cerr << trs_path << ": " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        cert = confcheck::parse_certificate(read_file(cert_path));
    } catch (const std::exception& e) {
        std::cerr << cert_path << ": " << e.what() << "\n";
        return kExitInputError;
    }

    confcheck::Verdict verdict = confcheck::check_certificate(trs, cert);
    std::cout << verdict.verdict_line() << "\n";
    if (verbose) {
        std::cout << "rules: " << trs.rules.size() << "\n";
        for (std::size_t i = 0; i < trs.rules.size(); ++i)
            std::cout << "  " << (i + 1) << ": " << trs.rules[i].to_string() << "\n";
        std::cout << "certificate: " << confcheck::print_certificate(cert) << "\n";
    }
    return verdict.certified ? kExitCertified : kExitRejected;
}

int run_cps(const std::string& trs_path) {
    confcheck::Trs trs;
    try {
        trs = confcheck::parse_trs(read_file(trs_path));
    } catch (const std::exception& e) {
        std::cerr << trs_path << ": " << e.what() << "\n";
        return kExitInputError;
    }
    for (const confcheck::CriticalPair& cp : confcheck::critical_pairs(trs, true))
        std::cout << cp.to_string() << "\n";
    return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checker for confluence and non-confluence certificates of first-order term "
                 "rewrite systems"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);

    std::string trs_path, cert_path;
    bool verbose = false;

    CLI::App* check = app.add_subcommand("check", "verify a certificate against a TRS");
    check->add_option("--trs", trs_path, "TRS file")->required();
    check->add_option("--cert", cert_path, "certificate file")->required();
    check->add_flag("--verbose", verbose, "print the parsed problem after the verdict");

    std::string cps_trs_path;
    CLI::App* cps = app.add_subcommand("cps", "print the non-trivial critical pairs of a TRS");
    cps->add_option("--trs", cps_trs_path, "TRS file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 uses 0 for --help/--version; anything else is a usage error
        return code == 0 ? 0 : kExitInputError;
    }

    if (check->parsed()) return run_check(trs_path, cert_path, verbose);
    if (cps->parsed()) return run_cps(cps_trs_path);
    std::cerr << app.help();
    return kExitInputError;
}

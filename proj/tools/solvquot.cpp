#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "solvquot/dsl.hpp"
#include "solvquot/json_io.hpp"
#include "solvquot/verify.hpp"

namespace fs = std::filesystem;
using namespace solvquot;

namespace {

// Exit codes are a stable contract:
//   0 success, 2 parse error, 3 validation error, 4 trivial action where a
//   slice was required, 5 iteration cap exceeded, 6 verification failure.
enum ExitCode {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kValidation = 3,
    kTrivial = 4,
    kCap = 5,
    kVerify = 6
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Limits limits_from_env(long cli_max_iter) {
    Limits lim;
    if (const char* env = std::getenv("SOLVQUOT_MAX_ITER")) {
        try {
            lim.max_iter = std::stol(env);
        } catch (...) {
            throw SpecError("SOLVQUOT_MAX_ITER is not an integer");
        }
    }
    if (cli_max_iter >= 0) lim.max_iter = cli_max_iter;
    return lim;
}

int cmd_compute(const std::string& path, const std::string& json_path, bool text,
                bool no_check, int spotcheck, std::uint64_t seed, long max_iter) {
    ActionSpec spec = dsl::parse(read_file(path));
    Limits lim = limits_from_env(max_iter);
    QuotientPresentation q = solvable_invariants(spec, lim);

    VerifyReport report;
    bool checked = !no_check;
    if (checked) report = verify_output(spec, q);

    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << emit_json(spec, q, checked ? &report : nullptr);
    }
    if (text || json_path.empty()) std::cout << emit_text(spec, q);

    if (checked) {
        std::cout << "symbolic checks:\n" << report.summary();
        if (!report.all_pass()) return kVerify;
    }
    if (spotcheck > 0) {
        VerifyReport numeric = numeric_spotcheck(spec, q, spotcheck, seed);
        std::cout << "numeric spot-check:\n" << numeric.summary();
        if (!numeric.all_pass()) return kVerify;
    }
    return kOk;
}

int cmd_verify(const std::string& spec_path, const std::string& result_path,
               long max_iter) {
    ActionSpec spec = dsl::parse(read_file(spec_path));

    nlohmann::json stored;
    try {
        stored = nlohmann::json::parse(read_file(result_path));
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "result file is not valid JSON: " << e.what() << "\n";
        return kParse;
    }
    if (!stored.is_object() || !stored.contains("schema") ||
        stored["schema"] != kSchemaId) {
        std::cerr << "result file does not carry schema " << kSchemaId << "\n";
        return kParse;
    }

    Limits lim = limits_from_env(max_iter);
    QuotientPresentation q = solvable_invariants(spec, lim);
    VerifyReport report = verify_output(spec, q);
    std::cout << "symbolic checks on the recomputed result:\n" << report.summary();
    if (!report.all_pass()) return kVerify;

    nlohmann::json expected = nlohmann::json::parse(emit_json(spec, q, &report));
    expected.erase("checks");
    nlohmann::json actual = stored;
    actual.erase("checks");
    if (expected != actual) {
        std::cerr << "stored result disagrees with the recomputed one\n";
        return kVerify;
    }
    std::cout << "stored result matches the recomputed one\n";
    return kOk;
}

int cmd_examples(const std::string& dir, bool force) {
    fs::path root(dir);
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) throw std::runtime_error("cannot create directory " + dir);
    auto files = builtin_examples();
    if (!force)
        for (const auto& [name, text] : files)
            if (fs::exists(root / name))
                throw std::runtime_error(root.string() + "/" + name +
                                         " exists; pass --force to overwrite");
    for (const auto& [name, text] : files) {
        std::ofstream out(root / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (root / name).string());
        out << text;
    }
    std::cout << "wrote " << files.size() << " example files to " << dir << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariant rings and excellent quotients for solvable group "
                 "actions in standard solvable form"};
    app.require_subcommand(1);

    std::string in_path, json_path, result_path, dir;
    bool text = false, no_check = false, force = false;
    int spotcheck = 0;
    std::uint64_t seed = 1;
    long max_iter = -1;

    auto* compute = app.add_subcommand("compute", "parse, compute, check, emit");
    compute->add_option("file", in_path, ".sq action document")->required();
    compute->add_option("--json", json_path, "write the result as JSON to this path");
    compute->add_flag("--text", text, "print the text summary even with --json");
    compute->add_flag("--no-check", no_check, "skip the symbolic checks");
    compute->add_option("--spotcheck", spotcheck, "numeric spot-check trials (field Q)");
    compute->add_option("--seed", seed, "seed for the spot-check PRNG");
    compute->add_option("--max-iter", max_iter, "override the safety iteration cap");

    auto* verify = app.add_subcommand("verify", "re-check a stored result");
    verify->add_option("spec", in_path, ".sq action document")->required();
    verify->add_option("result", result_path, "stored JSON result")->required();
    verify->add_option("--max-iter", max_iter, "override the safety iteration cap");

    auto* examples = app.add_subcommand("examples", "write the built-in gallery");
    examples->add_option("dir", dir, "output directory")->required();
    examples->add_flag("--force", force, "overwrite existing files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(in_path, json_path, text, no_check, spotcheck, seed,
                               max_iter);
        if (verify->parsed()) return cmd_verify(in_path, result_path, max_iter);
        if (examples->parsed()) return cmd_examples(dir, force);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    } catch (const SpecError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const TrivialActionError& e) {
        std::cerr << "degenerate action: " << e.what() << "\n";
        return kTrivial;
    } catch (const IterationCapError& e) {
        std::cerr << "iteration cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leibniz/report.hpp"

// Exit codes: 0 success, 1 axiom or validation failure (also strict-mode
// warnings), 2 parse or I/O error, 3 internal verification failure.

namespace {

using namespace leibniz;

std::string witness_names(const LeibnizAlgebra& a, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += a.basis_names()[idx[i]];
    }
    return s;
}

Json validate_json(const AlgebraFile& f) {
    const LeibnizAlgebra& a = f.algebra;
    ViolationReport left = check_left_leibniz(a);
    ViolationReport right = check_right_leibniz(a);
    Json j = Json::object();
    if (!f.metadata.empty()) {
        Json m = Json::object();
        for (const auto& [key, val] : f.metadata) m[key] = val;
        j["metadata"] = m;
    }
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    j["left_leibniz"] = left.ok();
    j["right_leibniz"] = right.ok();
    j["lie"] = is_lie(a);
    j["left_violations"] = detail::json_violations(left);
    j["right_violations"] = detail::json_violations(right);
    if (f.carrier) {
        ViolationReport bi = check_bimodule_axioms(*f.carrier);
        Json b = Json::object();
        b["carrier_dim"] = f.carrier->carrier_dim;
        b["ok"] = bi.ok();
        b["faithful"] = is_faithful(*f.carrier);
        b["violations"] = detail::json_violations(bi);
        j["bimodule"] = b;
    }
    return j;
}

void validate_pretty(const AlgebraFile& f, const Json& j, std::ostream& out) {
    const LeibnizAlgebra& a = f.algebra;
    auto axiom_line = [&](const char* label, const Json& flag, const Json& violations) {
        out << label << ": " << (flag.get<bool>() ? "yes" : "no");
        if (!flag.get<bool>() && !violations.empty()) {
            std::vector<std::size_t> idx =
                violations[0]["indices"].get<std::vector<std::size_t>>();
            out << " (witness " << witness_names(a, idx) << ")";
        }
        out << "\n";
    };
    axiom_line("left Leibniz", j["left_leibniz"], j["left_violations"]);
    axiom_line("right Leibniz", j["right_leibniz"], j["right_violations"]);
    out << "Lie: " << (j["lie"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("bimodule")) {
        out << "bimodule axioms: " << (j["bimodule"]["ok"].get<bool>() ? "yes" : "no") << "\n";
        out << "bimodule faithful: " << (j["bimodule"]["faithful"].get<bool>() ? "yes" : "no")
            << "\n";
    }
}

bool file_valid(const AlgebraFile& f) {
    if (!is_left_leibniz(f.algebra)) return false;
    if (f.carrier && !is_bimodule(*f.carrier)) return false;
    return true;
}

int cmd_validate(const std::string& path, bool pretty) {
    AlgebraFile f = read_algebra_file(path);
    Json j = validate_json(f);
    if (pretty)
        validate_pretty(f, j, std::cout);
    else
        std::cout << j.dump(2) << "\n";
    return file_valid(f) ? 0 : 1;
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& opt, bool pretty, bool strict) {
    AlgebraFile f = read_algebra_file(path);
    AnalysisResult res = build_report(f, opt);
    if (pretty)
        render_pretty(res.report, std::cout);
    else
        std::cout << res.report.dump(2) << "\n";
    if (strict && !res.warnings.empty()) return 1;
    return 0;
}

int cmd_liezation(const std::string& in_path, const std::string& out_path) {
    AlgebraFile f = read_algebra_file(in_path);
    if (!is_left_leibniz(f.algebra))
        throw std::invalid_argument("liezation: input is not left Leibniz");
    QuotientAlgebra q = liezation(f.algebra);
    AlgebraFile out;
    out.algebra = q.algebra;
    out.metadata = f.metadata;
    if (auto it = out.metadata.find("name"); it != out.metadata.end())
        it->second += "_liezation";
    write_algebra_file(out, out_path);
    return 0;
}

int cmd_classify(const std::string& path, bool pretty) {
    AlgebraFile f = read_algebra_file(path);
    if (!is_left_leibniz(f.algebra))
        throw std::invalid_argument("classify: input is not left Leibniz");
    Classification c = classify_dim_le2(f.algebra);
    Json j = Json::object();
    j["name"] = c.name;
    j["index"] = c.index;
    j["iso"] = detail::json_matrix_rows(c.iso);
    if (pretty)
        render_pretty(j, std::cout);
    else
        std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_corpus_check(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError("corpus-check: \"" + dir + "\" is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError("corpus-check: no .json files in \"" + dir + "\"");
    bool all_ok = true;
    for (const auto& p : files) {
        std::string verdict;
        try {
            AlgebraFile f = read_algebra_file(p.string());
            verdict = file_valid(f) ? "ok" : "FAIL (axioms)";
        } catch (const ParseError& e) {
            verdict = std::string("FAIL (") + e.what() + ")";
        }
        if (verdict != "ok") all_ok = false;
        std::cout << p.filename().string() << ": " << verdict << "\n";
    }
    return all_ok ? 0 : 1;
}

int run(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure theory for finite-dimensional left Leibniz algebras"};
    app.require_subcommand(1);

    std::string path, out_path, dir;
    bool pretty = false, json = false, strict = false;
    AnalyzeOptions opt;

    auto add_format = [&](CLI::App* cmd) {
        CLI::Option* p = cmd->add_flag("--pretty", pretty, "human-readable text output");
        CLI::Option* o = cmd->add_flag("--json", json, "JSON output (default)");
        p->excludes(o);
    };

    CLI::App* validate = app.add_subcommand("validate", "parse a file and check the axioms");
    validate->add_option("file", path, "algebra file")->required();
    add_format(validate);

    CLI::App* analyze = app.add_subcommand("analyze", "full structure report");
    analyze->add_option("file", path, "algebra file")->required();
    analyze->add_flag("--series", opt.series, "derived and lower central series");
    analyze->add_flag("--centers", opt.centers, "kernel and both centers");
    analyze->add_flag("--radical", opt.radical, "solvable radical");
    analyze->add_flag("--nilradical", opt.nilradical, "nilradical and liezation preimage probe");
    analyze->add_flag("--levi", opt.levi, "Levi decomposition and reductive check");
    analyze->add_flag("--identities", opt.identities, "multiplication-operator identity suite");
    analyze->add_flag("--derivations", opt.derivations, "derivation algebra");
    analyze->add_flag("--classify", opt.classify, "canonical class (dimension <= 2)");
    analyze->add_option("--flag", opt.flag, "triangularizing flag")
        ->check(CLI::IsMember({"engel", "lie"}));
    analyze->add_flag("--strict", strict, "exit nonzero when the report carries warnings");
    add_format(analyze);

    CLI::App* liez = app.add_subcommand("liezation", "write the maximal Lie quotient");
    liez->add_option("input", path, "algebra file")->required();
    liez->add_option("output", out_path, "output file")->required();

    CLI::App* classify = app.add_subcommand("classify", "match against the canonical list");
    classify->add_option("file", path, "algebra file")->required();
    add_format(classify);

    CLI::App* corpus = app.add_subcommand("corpus-check", "validate every file in a directory");
    corpus->add_option("dir", dir, "corpus directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return run([&] { return cmd_validate(path, pretty); });
    if (analyze->parsed()) return run([&] { return cmd_analyze(path, opt, pretty, strict); });
    if (liez->parsed()) return run([&] { return cmd_liezation(path, out_path); });
    if (classify->parsed()) return run([&] { return cmd_classify(path, pretty); });
    if (corpus->parsed()) return run([&] { return cmd_corpus_check(dir); });
    return 0;
}

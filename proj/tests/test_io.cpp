#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <leibniz/io.hpp>
#include <leibniz/report.hpp>
#include <leibniz/structure.hpp>
#include <leibniz/zoo.hpp>

using namespace leibniz;

namespace {

bool same_table(const LeibnizAlgebra& x, const LeibnizAlgebra& y) {
    if (x.dim() != y.dim()) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j)
            for (std::size_t k = 0; k < x.dim(); ++k)
                if (x.c(i, j, k) != y.c(i, j, k)) return false;
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& stem) {
    return std::string(LEIBNIZ_CORPUS_DIR) + "/../build/" + stem;
}

}  // namespace

TEST_CASE("corpus algebra files match the built-in tables") {
    for (const auto& [name, a] : zoo::all_algebras()) {
        INFO(name);
        AlgebraFile f = read_algebra_file(std::string(LEIBNIZ_CORPUS_DIR) + "/" + name + ".json");
        CHECK(same_table(f.algebra, a));
        CHECK(f.algebra.basis_names() == a.basis_names());
        CHECK_FALSE(f.carrier.has_value());
        CHECK(f.metadata.at("name") == name);
    }
}

TEST_CASE("corpus bimodule files match the built-in fixtures") {
    for (const auto& [name, b] : zoo::all_bimodules()) {
        INFO(name);
        AlgebraFile f =
            read_algebra_file(std::string(LEIBNIZ_CORPUS_DIR) + "/" + name + "_bimodule.json");
        CHECK(same_table(f.algebra, b.algebra));
        REQUIRE(f.carrier.has_value());
        CHECK(f.carrier->carrier_dim == b.carrier_dim);
        for (std::size_t i = 0; i < b.algebra.dim(); ++i) {
            CHECK(f.carrier->left[i] == b.left[i]);
            CHECK(f.carrier->right[i] == b.right[i]);
        }
        CHECK(f.metadata.at("name") == name + "_bimodule");
    }
}

TEST_CASE("write then read is the identity, and rewriting is byte-stable") {
    AlgebraFile f;
    f.algebra = zoo::heis3();
    f.metadata = {{"name", "heis3"}, {"origin", "test"}};
    const std::string p1 = temp_path("io_roundtrip_1.json");
    const std::string p2 = temp_path("io_roundtrip_2.json");
    write_algebra_file(f, p1);

    AlgebraFile g = read_algebra_file(p1);
    CHECK(same_table(g.algebra, f.algebra));
    CHECK(g.metadata == f.metadata);

    write_algebra_file(g, p2);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("bimodule write then read preserves the carrier") {
    AlgebraFile f;
    f.algebra = zoo::l2i();
    f.carrier = zoo::bimodule_l2i();
    f.metadata = {{"name", "x"}};
    const std::string p = temp_path("io_carrier.json");
    write_algebra_file(f, p);
    AlgebraFile g = read_algebra_file(p);
    REQUIRE(g.carrier.has_value());
    CHECK(g.carrier->carrier_dim == 3);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(g.carrier->left[i] == f.carrier->left[i]);
        CHECK(g.carrier->right[i] == f.carrier->right[i]);
    }
    std::remove(p.c_str());
}

TEST_CASE("parser rejects malformed documents") {
    auto reject = [](const char* text, const char* needle) {
        INFO(text);
        CHECK_THROWS_MATCHES(parse_algebra_json(Json::parse(text)), ParseError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring(needle)));
    };

    reject(R"({"dim": 1, "basis": ["a"], "extra": 1})", "unknown key");
    reject(R"({"basis": ["a"]})", "dim");
    reject(R"({"dim": "1", "basis": ["a"]})", "dim");
    reject(R"({"dim": -1, "basis": ["a"]})", "dim");
    reject(R"({"dim": 2, "basis": ["a"]})", "exactly dim labels");
    reject(R"({"dim": 1, "basis": [3]})", "labels must be strings");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": []})", "must be an object");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": {"0": {"0": "1"}}})", "brackets");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": {"1,0": {"0": "1"}}})", "out of range");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": {"0,0": {"1": "1"}}})", "out of range");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": {"0,0": {"0": "1/-2"}}})", "cannot parse");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": {"0,0": {"0": 1}}})", "must be strings");
    reject(R"({"dim": 1, "basis": ["a"], "brackets": {"0,0": ["1"]}})", "must be an object");
    reject(R"({"dim": 1, "basis": ["a"], "carrier": {"left": {}}})", "dim");
    reject(R"({"dim": 1, "basis": ["a"], "carrier": {"dim": 1, "top": {}}})", "unknown key");
    reject(R"({"dim": 1, "basis": ["a"], "carrier": {"dim": 1, "left": {"0": {"1,0": "1"}}}})",
           "out of range");
    reject(R"({"dim": 1, "basis": ["a"], "metadata": {"k": 1}})", "values must be strings");
    reject(R"(["not", "an", "object"])", "top level");
}

TEST_CASE("file level errors carry the path") {
    CHECK_THROWS_MATCHES(
        read_algebra_file("/nonexistent/algebra.json"), ParseError,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("/nonexistent")));

    const std::string p = temp_path("io_bad.json");
    {
        std::ofstream out(p);
        out << "{ definitely not json";
    }
    CHECK_THROWS_MATCHES(
        read_algebra_file(p), ParseError,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("io_bad.json")));
    std::remove(p.c_str());
}

TEST_CASE("serialization normalizes entries") {
    // explicit zeros and non-reduced fractions disappear on write
    AlgebraFile f = parse_algebra_json(
        Json::parse(R"({"dim": 2, "basis": ["a", "b"],
                        "brackets": {"0,0": {"0": "0"}, "1,1": {"0": "2/4"}}})"));
    Json out = algebra_file_to_json(f);
    CHECK(out["brackets"].size() == 1);
    CHECK(out["brackets"]["1,1"]["0"] == "1/2");
    CHECK_FALSE(out.contains("metadata"));

    // key order is fixed: dim, basis, brackets, metadata
    f.metadata = {{"z", "1"}, {"a", "2"}};
    Json with_meta = algebra_file_to_json(f);
    std::vector<std::string> keys;
    for (const auto& [k, v] : with_meta.items()) {
        (void)v;
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"dim", "basis", "brackets", "metadata"});
    // metadata itself is sorted
    CHECK(with_meta["metadata"].begin().key() == "a");
}

TEST_CASE("liezation of a stored algebra survives a file round trip") {
    AlgebraFile f;
    f.algebra = liezation(zoo::l2i()).algebra;
    f.metadata = {{"name", "l2i_liezation"}};
    const std::string p = temp_path("io_liezation.json");
    write_algebra_file(f, p);
    AlgebraFile g = read_algebra_file(p);
    CHECK(g.algebra.dim() == 1);
    CHECK(is_lie(g.algebra));
    std::remove(p.c_str());
}

TEST_CASE("full analysis report on the non-split class") {
    AlgebraFile f;
    f.algebra = zoo::l2ii();
    AnalysisResult res = build_report(f, AnalyzeOptions{});
    const Json& r = res.report;

    CHECK(r["axioms"]["left_leibniz"] == true);
    CHECK(r["axioms"]["right_leibniz"] == false);
    CHECK(r["axioms"]["lie"] == false);
    CHECK(r["fingerprint"]["right_center_dim"] == 1);
    CHECK(r["nilradical"]["liezation_preimage"]["nilpotent"] == false);
    CHECK(r["nilradical"]["liezation_preimage"]["matches_nilradical"] == false);
    CHECK(r["identities"]["ok"] == true);
    CHECK(r["classification"]["name"] == "(ii)");
    CHECK(r["flags"]["engel"]["computed"] == false);
    CHECK(r["flags"]["lie"]["computed"] == true);

    bool preimage_warned = false;
    for (const std::string& w : res.warnings)
        if (w.find("preimage") != std::string::npos) preimage_warned = true;
    CHECK(preimage_warned);
}

TEST_CASE("report sections follow the selection") {
    AlgebraFile f;
    f.algebra = zoo::heis3();
    AnalyzeOptions only_series;
    only_series.series = true;
    Json r = build_report(f, only_series).report;
    CHECK(r.contains("series"));
    CHECK(r.contains("fingerprint"));  // always present
    CHECK_FALSE(r.contains("radical"));
    CHECK_FALSE(r.contains("levi"));
    CHECK_FALSE(r.contains("classification"));

    AnalyzeOptions lie_flag_only;
    lie_flag_only.flag = "lie";
    AnalysisResult rot = build_report(AlgebraFile{zoo::rot2(), {}, {}}, lie_flag_only);
    CHECK(rot.report["flags"]["lie"]["computed"] == false);
    bool flagged = false;
    for (const std::string& w : rot.warnings)
        if (w.find("lie flag") != std::string::npos) flagged = true;
    CHECK(flagged);

    AnalyzeOptions classify_big;
    classify_big.classify = true;
    AnalysisResult big = build_report(AlgebraFile{zoo::heis3(), {}, {}}, classify_big);
    CHECK(big.report["classification"]["computed"] == false);
    REQUIRE_FALSE(big.warnings.empty());
}

TEST_CASE("analysis rejects non-Leibniz input") {
    LeibnizAlgebra bad(1, {"a"});
    bad.set_c(0, 0, 0, Rational(1));
    CHECK_THROWS_AS(build_report(AlgebraFile{bad, {}, {}}, AnalyzeOptions{}),
                    std::invalid_argument);
}

TEST_CASE("pretty rendering mentions the key facts") {
    AlgebraFile f;
    f.algebra = zoo::heis3();
    f.metadata = {{"name", "heis3"}};
    AnalysisResult res = build_report(f, AnalyzeOptions{});
    std::ostringstream os;
    render_pretty(res.report, os);
    const std::string text = os.str();
    CHECK(text.find("left_leibniz: yes") != std::string::npos);
    CHECK(text.find("nilpotency_class: 2") != std::string::npos);
    CHECK(text.find("name: heis3") != std::string::npos);
}

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/reps.hpp"

// Text format for algebra files. Structure constants are rational strings
// ("p" or "p/q" with q > 0), omitted entries are zero, and all indices are
// 0-based. Serialization is byte-deterministic: fixed key order, ascending
// indices, normalized rationals, zeros skipped.

namespace leibniz {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraFile {
    LeibnizAlgebra algebra;
    std::optional<Bimodule> carrier;
    std::map<std::string, std::string> metadata;
};

namespace detail {

inline std::size_t parse_index(const std::string& s, std::size_t bound, const std::string& what) {
    if (s.empty() || s.size() > 9) throw ParseError(what + ": bad index \"" + s + "\"");
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError(what + ": bad index \"" + s + "\"");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    if (v >= bound) throw ParseError(what + ": index " + s + " out of range");
    return v;
}

// "i,j" with both parts in range.
inline std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& s,
                                                            std::size_t bound,
                                                            const std::string& what) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw ParseError(what + ": expected \"i,j\", got \"" + s + "\"");
    return {parse_index(s.substr(0, comma), bound, what),
            parse_index(s.substr(comma + 1), bound, what)};
}

inline Rational parse_rational_entry(const Json& v, const std::string& what) {
    if (!v.is_string()) throw ParseError(what + ": rational entries must be strings");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(what + ": " + e.what());
    }
}

inline Matrix parse_matrix_block(const Json& j, std::size_t m, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected an object of \"r,c\" keys");
    Matrix out(m, m);
    for (const auto& [key, val] : j.items()) {
        auto [r, c] = parse_index_pair(key, m, what);
        out(r, c) = parse_rational_entry(val, what);
    }
    return out;
}

inline Json matrix_to_json(const Matrix& m) {
    Json out = Json::object();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                out[std::to_string(r) + "," + std::to_string(c)] = to_string(m(r, c));
    return out;
}

inline std::size_t parse_dim_field(const Json& j, const std::string& what) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw ParseError(what + ": \"dim\" must be a non-negative integer");
    return j["dim"].get<std::size_t>();
}

}  // namespace detail

inline AlgebraFile parse_algebra_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra file: top level must be an object");
    for (const auto& [key, val] : j.items()) {
        (void)val;
        if (key != "dim" && key != "basis" && key != "brackets" && key != "carrier" &&
            key != "metadata")
            throw ParseError("algebra file: unknown key \"" + key + "\"");
    }
    const std::size_t n = detail::parse_dim_field(j, "algebra file");

    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != n)
        throw ParseError("algebra file: \"basis\" must list exactly dim labels");
    std::vector<std::string> names;
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) throw ParseError("algebra file: basis labels must be strings");
        names.push_back(b.get<std::string>());
    }

    AlgebraFile f;
    f.algebra = LeibnizAlgebra(n, names);
    if (j.contains("brackets")) {
        if (!j["brackets"].is_object())
            throw ParseError("algebra file: \"brackets\" must be an object");
        for (const auto& [key, entry] : j["brackets"].items()) {
            auto [i, jj] = detail::parse_index_pair(key, n, "brackets");
            if (!entry.is_object())
                throw ParseError("brackets: entry for \"" + key + "\" must be an object");
            for (const auto& [kk, val] : entry.items()) {
                std::size_t k = detail::parse_index(kk, n, "brackets");
                f.algebra.set_c(i, jj, k, detail::parse_rational_entry(val, "brackets"));
            }
        }
    }

    if (j.contains("carrier")) {
        const Json& c = j["carrier"];
        if (!c.is_object()) throw ParseError("carrier: must be an object");
        for (const auto& [key, val] : c.items()) {
            (void)val;
            if (key != "dim" && key != "left" && key != "right")
                throw ParseError("carrier: unknown key \"" + key + "\"");
        }
        const std::size_t m = detail::parse_dim_field(c, "carrier");
        std::vector<Matrix> left(n, Matrix(m, m)), right(n, Matrix(m, m));
        for (const char* side : {"left", "right"}) {
            if (!c.contains(side)) continue;
            if (!c[side].is_object())
                throw ParseError(std::string("carrier: \"") + side + "\" must be an object");
            for (const auto& [key, block] : c[side].items()) {
                std::size_t i = detail::parse_index(key, n, "carrier");
                Matrix mat = detail::parse_matrix_block(block, m, "carrier");
                (std::string(side) == "left" ? left : right)[i] = mat;
            }
        }
        f.carrier = make_bimodule(f.algebra, m, std::move(left), std::move(right));
    }

    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw ParseError("metadata: must be an object");
        for (const auto& [key, val] : j["metadata"].items()) {
            if (!val.is_string()) throw ParseError("metadata: values must be strings");
            f.metadata[key] = val.get<std::string>();
        }
    }
    return f;
}

inline Json algebra_file_to_json(const AlgebraFile& f) {
    const LeibnizAlgebra& a = f.algebra;
    Json j = Json::object();
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    Json brackets = Json::object();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t jj = 0; jj < a.dim(); ++jj) {
            Json entry = Json::object();
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.c(i, jj, k) != 0) entry[std::to_string(k)] = to_string(a.c(i, jj, k));
            if (!entry.empty()) brackets[std::to_string(i) + "," + std::to_string(jj)] = entry;
        }
    j["brackets"] = brackets;
    if (f.carrier) {
        Json c = Json::object();
        c["dim"] = f.carrier->carrier_dim;
        for (const char* side : {"left", "right"}) {
            const auto& mats = std::string(side) == "left" ? f.carrier->left : f.carrier->right;
            Json blocks = Json::object();
            for (std::size_t i = 0; i < mats.size(); ++i)
                if (!mats[i].is_zero()) blocks[std::to_string(i)] = detail::matrix_to_json(mats[i]);
            c[side] = blocks;
        }
        j["carrier"] = c;
    }
    if (!f.metadata.empty()) {
        Json m = Json::object();
        for (const auto& [key, val] : f.metadata) m[key] = val;  // std::map: sorted keys
        j["metadata"] = m;
    }
    return j;
}

inline AlgebraFile read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return parse_algebra_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_algebra_file(const AlgebraFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
    out << algebra_file_to_json(f).dump(2) << "\n";
    if (!out) throw ParseError("write to \"" + path + "\" failed");
}

}  // namespace leibniz

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "leibniz/classify.hpp"
#include "leibniz/io.hpp"
#include "leibniz/levi.hpp"

// Analysis reports. The JSON layout is byte-deterministic for a given input
// and option set: fixed key insertion order, subspace bases in reduced row
// echelon form, rationals rendered as normalized strings.

namespace leibniz {

struct AnalyzeOptions {
    bool series = false;
    bool centers = false;
    bool radical = false;
    bool nilradical = false;
    bool levi = false;
    bool identities = false;
    bool derivations = false;
    bool classify = false;
    std::string flag;  // "", "engel" or "lie"

    bool any_selected() const {
        return series || centers || radical || nilradical || levi || identities || derivations ||
               classify || !flag.empty();
    }
};

struct AnalysisResult {
    Json report;
    std::vector<std::string> warnings;
};

namespace detail {

inline Json json_vec(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Json json_matrix_rows(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_vec(m.row(i)));
    return out;
}

inline Json json_subspace(const Subspace& s) {
    Json out = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(json_vec(s.basis().row(i)));
    return out;
}

inline Json json_violations(const ViolationReport& rep) {
    Json out = Json::array();
    for (const Violation& v : rep.entries) {
        Json e = Json::object();
        e["identity"] = v.identity;
        e["indices"] = v.indices;
        e["residual"] = json_vec(v.residual);
        out.push_back(e);
    }
    return out;
}

inline Json json_fingerprint(const Fingerprint& f) {
    Json out = Json::object();
    out["dim"] = f.dim;
    out["lie"] = f.lie;
    out["left_leibniz"] = f.left_leibniz;
    out["right_leibniz"] = f.right_leibniz;
    out["ker_dim"] = f.ker_dim;
    out["left_center_dim"] = f.left_center_dim;
    out["right_center_dim"] = f.right_center_dim;
    out["derived_dims"] = f.derived_dims;
    out["central_dims"] = f.central_dims;
    out["solvable"] = f.solvable;
    out["nilpotent"] = f.nilpotent;
    out["radical_dim"] = f.radical_dim;
    out["nilradical_dim"] = f.nilradical_dim;
    out["min_generators"] = f.min_gens;
    return out;
}

inline Json json_flag(const Flag& f) {
    Json out = Json::object();
    out["computed"] = true;
    Json dims = Json::array();
    for (const Subspace& s : f.chain) dims.push_back(s.dim());
    out["chain_dims"] = dims;
    out["adapted_basis"] = json_matrix_rows(f.adapted_basis());
    return out;
}

inline Json json_flag_error(const std::string& reason) {
    Json out = Json::object();
    out["computed"] = false;
    out["reason"] = reason;
    return out;
}

}  // namespace detail

// Requires a left Leibniz input (callers validate first). Typed failures of
// optional sub-operations (Engel or Lie flags, out-of-scope classification)
// become warnings; verification failures inside the structural computations
// propagate as exceptions.
inline AnalysisResult build_report(const AlgebraFile& file, const AnalyzeOptions& opt) {
    const LeibnizAlgebra& a = file.algebra;
    if (!is_left_leibniz(a)) throw std::invalid_argument("analyze: input is not left Leibniz");
    const bool full = !opt.any_selected();

    AnalysisResult res;
    Json& j = res.report;
    j = Json::object();

    if (!file.metadata.empty()) {
        Json m = Json::object();
        for (const auto& [key, val] : file.metadata) m[key] = val;
        j["metadata"] = m;
    }
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();

    Json ax = Json::object();
    ax["left_leibniz"] = true;
    ViolationReport right = check_right_leibniz(a);
    ax["right_leibniz"] = right.ok();
    ax["lie"] = is_lie(a);
    ax["right_violations"] = detail::json_violations(right);
    j["axioms"] = ax;

    j["fingerprint"] = detail::json_fingerprint(fingerprint(a));

    if (full || opt.centers) {
        Json c = Json::object();
        c["ker"] = detail::json_subspace(ker_ideal(a));
        c["left_center"] = detail::json_subspace(left_center(a));
        c["right_center"] = detail::json_subspace(right_center(a));
        j["centers"] = c;
    }

    if (full || opt.series) {
        Json s = Json::object();
        Json dt = Json::array();
        for (const Subspace& t : derived_series(a).terms) dt.push_back(detail::json_subspace(t));
        s["derived"] = dt;
        Json ct = Json::array();
        for (const Subspace& t : lower_central_series(a).terms)
            ct.push_back(detail::json_subspace(t));
        s["lower_central"] = ct;
        auto nc = nilpotency_class(a);
        s["nilpotency_class"] = nc ? Json(*nc) : Json(nullptr);
        j["series"] = s;
    }

    if (full || opt.radical || opt.nilradical) {
        RadicalReport rr = radical_report(a);
        if (full || opt.radical) {
            Json r = Json::object();
            r["basis"] = detail::json_subspace(rr.radical);
            Json ch = Json::object();
            ch["is_ideal"] = rr.checks.radical_is_ideal;
            ch["solvable"] = rr.checks.radical_solvable;
            ch["contains_ker"] = rr.checks.radical_contains_ker;
            r["checks"] = ch;
            j["radical"] = r;
        }
        if (full || opt.nilradical) {
            Json nr = Json::object();
            nr["basis"] = detail::json_subspace(rr.nilradical);
            Json ch = Json::object();
            ch["is_ideal"] = rr.checks.nilradical_is_ideal;
            ch["nilpotent"] = rr.checks.nilradical_nilpotent;
            ch["in_radical"] = rr.checks.nilradical_in_radical;
            ch["contains_ker"] = rr.checks.nilradical_contains_ker;
            ch["contains_left_center"] = rr.checks.left_center_in_nilradical;
            ch["contains_right_center"] = rr.checks.right_center_in_nilradical;
            ch["contains_bracket_full_radical"] = rr.checks.bracket_full_radical_in_nilradical;
            ch["contains_bracket_radical_radical"] = rr.checks.bracket_radical_radical_in_nilradical;
            nr["checks"] = ch;
            NilradicalPreimageProbe probe = nilradical_preimage_probe(a, rr.nilradical);
            Json pj = Json::object();
            pj["dim"] = probe.preimage.dim();
            pj["nilpotent"] = probe.preimage_nilpotent;
            pj["matches_nilradical"] = probe.matches_nilradical;
            nr["liezation_preimage"] = pj;
            j["nilradical"] = nr;
            if (!probe.matches_nilradical) {
                std::ostringstream os;
                os << "nilradical: preimage of the liezation nilradical (dim "
                   << probe.preimage.dim() << ") differs from the nilradical (dim "
                   << rr.nilradical.dim() << ")";
                if (!probe.preimage_nilpotent) os << " and is not nilpotent";
                os << "; the preimage shortcut is unreliable";
                res.warnings.push_back(os.str());
            }
        }
    }

    if (full || opt.identities) {
        ViolationReport suite = identity_suite(a);
        Json s = Json::object();
        s["ok"] = suite.ok();
        s["violations"] = detail::json_violations(suite);
        j["identities"] = s;
    }

    if (full || opt.derivations) {
        Subspace der = derivations(a);
        Json d = Json::object();
        d["dim"] = der.dim();
        Json mats = Json::array();
        for (std::size_t i = 0; i < der.dim(); ++i)
            mats.push_back(
                detail::json_matrix_rows(Matrix::from_vec(der.basis().row(i), a.dim(), a.dim())));
        d["basis"] = mats;
        j["derivations"] = d;
    }

    if (full || !opt.flag.empty()) {
        Json flags = Json::object();
        if (full || opt.flag == "engel") {
            try {
                Json f = detail::json_flag(engel_flag(a));
                f["strong"] = strong_engel_check(a);
                flags["engel"] = f;
            } catch (const NotEngelNilpotent& e) {
                flags["engel"] = detail::json_flag_error(e.what());
                res.warnings.push_back(std::string("engel flag: ") + e.what());
            }
        }
        if (full || opt.flag == "lie") {
            try {
                flags["lie"] = detail::json_flag(lie_flag(a));
            } catch (const NotSplitOverField& e) {
                flags["lie"] = detail::json_flag_error(e.what());
                res.warnings.push_back(std::string("lie flag: ") + e.what());
            } catch (const std::invalid_argument& e) {
                flags["lie"] = detail::json_flag_error(e.what());
                res.warnings.push_back(std::string("lie flag: ") + e.what());
            }
        }
        j["flags"] = flags;
    }

    if (full || opt.levi) {
        LeviDecomposition d = levi_decomposition(a);
        Json l = Json::object();
        l["s_dim"] = d.semisimple_part.dim();
        l["radical_dim"] = d.radical_part.dim();
        l["s_basis"] = detail::json_subspace(d.semisimple_part);
        Json ch = Json::object();
        ch["s_subalgebra"] = d.verified.s_subalgebra;
        ch["s_meets_radical_trivially"] = d.verified.s_meets_radical_trivially;
        ch["s_plus_radical_full"] = d.verified.s_plus_radical_full;
        ch["s_semisimple_lie"] = d.verified.s_semisimple_lie;
        l["checks"] = ch;
        ReductiveReport rd = reductive_check(a);
        Json r = Json::object();
        r["hypothesis_bracket_zero"] = rd.hypothesis_bracket_zero;
        r["hypothesis_quotient_semisimple"] = rd.hypothesis_quotient_semisimple;
        r["applies"] = rd.applies();
        if (rd.applies()) {
            r["confirmed_lie"] = rd.confirmed_lie;
            r["confirmed_radical_is_center"] = rd.confirmed_radical_is_center;
            r["confirmed_levi_direct"] = rd.confirmed_levi_direct;
        }
        l["reductive"] = r;
        j["levi"] = l;
    }

    if ((full && a.dim() >= 1 && a.dim() <= 2) || opt.classify) {
        if (a.dim() >= 1 && a.dim() <= 2) {
            Classification c = classify_dim_le2(a);
            Json cl = Json::object();
            cl["name"] = c.name;
            cl["iso"] = detail::json_matrix_rows(c.iso);
            j["classification"] = cl;
        } else {
            Json cl = Json::object();
            cl["computed"] = false;
            cl["reason"] = "classification covers dimensions 1 and 2 only";
            j["classification"] = cl;
            res.warnings.push_back("classification: covers dimensions 1 and 2 only");
        }
    }

    j["warnings"] = res.warnings;
    return res;
}

// Human-readable rendering of a report (or any of its sub-objects): one
// "key: value" line per scalar, nested objects indented, arrays of scalars
// inline, arrays of composites itemized.
inline void render_pretty(const Json& j, std::ostream& out, std::size_t indent = 0) {
    const std::string pad(indent, ' ');
    auto scalar = [](const Json& v) { return !v.is_object() && !v.is_array(); };
    auto inline_value = [&](const Json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
        return v.dump();
    };
    auto all_scalar = [&](const Json& arr) {
        for (const auto& x : arr)
            if (!scalar(x)) return false;
        return true;
    };
    auto inline_array = [&](const Json& arr) {
        std::string s = "[";
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (i) s += ", ";
            s += inline_value(arr[i]);
        }
        return s + "]";
    };

    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_object()) {
                out << pad << key << ":\n";
                render_pretty(val, out, indent + 2);
            } else if (val.is_array() && !all_scalar(val)) {
                out << pad << key << ":\n";
                render_pretty(val, out, indent + 2);
            } else if (val.is_array()) {
                out << pad << key << ": " << inline_array(val) << "\n";
            } else {
                out << pad << key << ": " << inline_value(val) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || (item.is_array() && !all_scalar(item))) {
                out << pad << "-\n";
                render_pretty(item, out, indent + 2);
            } else if (item.is_array()) {
                out << pad << "- " << inline_array(item) << "\n";
            } else {
                out << pad << "- " << inline_value(item) << "\n";
            }
        }
    } else {
        out << pad << inline_value(j) << "\n";
    }
}

}  // namespace leibniz

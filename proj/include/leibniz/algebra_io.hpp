#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/scalar_io.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

// Algebra documents:
//   {"label": ..., "dim": n, "basis": [...optional...],
//    "products": [{"left": i, "right": j, "result": [[k, "scalar"], ...]}, ...],
//    "constraints": [{"param": "c", "excluded": ["1", "-1"]}]}
// Indices are 1-based; absent products are zero.

inline Json algebra_to_json(const StructureConstants& a) {
    Json doc;
    doc["label"] = a.label;
    doc["dim"] = a.dim();
    if (a.has_custom_names())
        doc["basis"] = a.basis_names();
    Json products = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.product_is_zero(i, j))
                continue;
            Json result = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.at(i, j, k).is_zero())
                    result.push_back(Json::array({k + 1, a.at(i, j, k).to_string()}));
            products.push_back(Json{{"left", i + 1}, {"right", j + 1}, {"result", result}});
        }
    doc["products"] = products;
    Json constraints = Json::array();
    for (const auto& c : merge_constraints({}, a.constraints)) {
        Json ex = Json::array();
        for (const auto& v : c.excluded)
            ex.push_back(v.to_string());
        constraints.push_back(Json{{"param", c.param}, {"excluded", ex}});
    }
    doc["constraints"] = constraints;
    return doc;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
    }
}

inline std::size_t index_field(const Json& obj, const char* key, std::size_t dim, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(where + ": missing integer field '" + key + "'");
    long long v = obj[key].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw ParseError(where + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

inline Scalar scalar_field(const Json& v, const std::string& where) {
    if (!v.is_string())
        throw ParseError(where + ": expected a scalar string");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace detail

inline StructureConstants algebra_from_json(const Json& doc) {
    if (!doc.is_object())
        throw ParseError("algebra document must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw ParseError("field 'dim' must be a positive integer");
    const std::size_t n = doc["dim"].get<std::size_t>();
    StructureConstants a(n);
    if (doc.contains("label")) {
        if (!doc["label"].is_string())
            throw ParseError("field 'label' must be a string");
        a.label = doc["label"].get<std::string>();
    }
    if (doc.contains("basis")) {
        const Json& b = doc["basis"];
        if (!b.is_array() || b.size() != n)
            throw ParseError("field 'basis' must list " + std::to_string(n) + " names");
        std::vector<std::string> names;
        for (const auto& x : b) {
            if (!x.is_string())
                throw ParseError("basis names must be strings");
            names.push_back(x.get<std::string>());
        }
        a.set_basis_names(std::move(names));
    }
    if (doc.contains("products")) {
        const Json& ps = doc["products"];
        if (!ps.is_array())
            throw ParseError("field 'products' must be an array");
        std::vector<bool> seen(n * n, false);
        for (std::size_t e = 0; e < ps.size(); ++e) {
            const std::string where = "products[" + std::to_string(e) + "]";
            const Json& p = ps[e];
            if (!p.is_object())
                throw ParseError(where + ": expected an object");
            std::size_t i = detail::index_field(p, "left", n, where);
            std::size_t j = detail::index_field(p, "right", n, where);
            if (seen[i * n + j])
                throw ParseError(where + ": duplicate product entry");
            seen[i * n + j] = true;
            if (!p.contains("result") || !p["result"].is_array())
                throw ParseError(where + ": missing array field 'result'");
            for (std::size_t r = 0; r < p["result"].size(); ++r) {
                const Json& term = p["result"][r];
                const std::string w = where + ".result[" + std::to_string(r) + "]";
                if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
                    throw ParseError(w + ": expected [index, \"scalar\"]");
                long long k = term[0].get<long long>();
                if (k < 1 || static_cast<std::size_t>(k) > n)
                    throw ParseError(w + ": index out of range");
                a.at(i, j, static_cast<std::size_t>(k - 1)) += detail::scalar_field(term[1], w);
            }
        }
    }
    if (doc.contains("constraints")) {
        const Json& cs = doc["constraints"];
        if (!cs.is_array())
            throw ParseError("field 'constraints' must be an array");
        for (std::size_t e = 0; e < cs.size(); ++e) {
            const std::string where = "constraints[" + std::to_string(e) + "]";
            const Json& c = cs[e];
            if (!c.is_object() || !c.contains("param") || !c["param"].is_string() || !c.contains("excluded") ||
                !c["excluded"].is_array())
                throw ParseError(where + ": expected {\"param\": name, \"excluded\": [...]}");
            ParameterConstraint pc{c["param"].get<std::string>(), {}};
            for (const auto& v : c["excluded"]) {
                Scalar s = detail::scalar_field(v, where);
                if (!s.is_constant())
                    throw ParseError(where + ": excluded values must be constants");
                pc.excluded.push_back(s);
            }
            a.constraints = merge_constraints(a.constraints, {pc});
        }
    }
    return a;
}

inline std::string algebra_to_string(const StructureConstants& a) { return algebra_to_json(a).dump(2) + "\n"; }

inline StructureConstants parse_algebra(const std::string& text) {
    return algebra_from_json(detail::parse_json_text(text));
}

/// A JSON array of algebra documents (the classify output).
inline std::vector<StructureConstants> parse_algebra_list(const std::string& text) {
    Json doc = detail::parse_json_text(text);
    if (!doc.is_array())
        throw ParseError("expected a JSON array of algebra documents");
    std::vector<StructureConstants> out;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        try {
            out.push_back(algebra_from_json(doc[k]));
        } catch (const ParseError& e) {
            throw ParseError("document " + std::to_string(k) + ": " + e.what());
        }
    }
    return out;
}

inline std::string algebra_list_to_string(const std::vector<StructureConstants>& list) {
    Json arr = Json::array();
    for (const auto& a : list)
        arr.push_back(algebra_to_json(a));
    return arr.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline StructureConstants load_algebra(const std::string& path) {
    try {
        return parse_algebra(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace leibniz

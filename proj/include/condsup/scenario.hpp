#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "condsup/ergodic.hpp"
#include "condsup/errors.hpp"
#include "condsup/filtration.hpp"
#include "condsup/market.hpp"
#include "condsup/partition.hpp"
#include "condsup/rational.hpp"
#include "condsup/sample_space.hpp"
#include "condsup/vector.hpp"

namespace condsup {

using Json = nlohmann::ordered_json;

/// Named vector, kept in file order.
struct NamedVector {
    std::string name;
    Vector value;
};

/// In-memory form of a scenario file. Sections other than `space` are
/// optional; commands that need a missing section raise ValidationError.
///
/// Layout (rationals are always JSON strings "n" or "p/q"):
///
///     {
///       "space":      {"size": 2, "weights": ["1/2", "1/2"]},
///       "filtration": [[[0, 1]], [[0], [1]]],
///       "prices":     [["4", "4"], ["8", "2"]],
///       "claims":     {"call": ["3", "0"]},
///       "transform":  [1, 0],
///       "vectors":    {"f": ["1", "3"]}
///     }
struct Scenario {
    SampleSpace space;
    std::optional<Filtration> filtration;
    std::optional<std::vector<Vector>> prices;
    std::vector<NamedVector> claims;
    std::optional<std::vector<std::size_t>> transform;
    std::vector<NamedVector> vectors;

    bool has_claims_section = false;
    bool has_vectors_section = false;

    const Vector* find_vector(const std::string& name) const { return find(vectors, name); }
    const Vector* find_claim(const std::string& name) const { return find(claims, name); }

    const Filtration& require_filtration() const {
        if (!filtration) throw ValidationError("scenario has no filtration section");
        return *filtration;
    }

    MarketModel market() const {
        const Filtration& f = require_filtration();
        if (!prices) throw ValidationError("scenario has no prices section");
        return MarketModel(f, *prices);
    }

private:
    static const Vector* find(const std::vector<NamedVector>& list, const std::string& name) {
        for (const auto& nv : list)
            if (nv.name == name) return &nv.value;
        return nullptr;
    }
};

namespace detail {

inline const Json& member(const Json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path, std::string("missing required field \"") + key + "\"");
    return *it;
}

inline void expect(bool ok, const std::string& path, const std::string& what) {
    if (!ok) throw ParseError(path, what);
}

inline Rational rational_at(const Json& j, const std::string& path) {
    expect(j.is_string(), path, "expected a rational string such as \"3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path, e.what());
    }
}

inline Vector vector_at(const Json& j, const std::string& path) {
    expect(j.is_array(), path, "expected an array of rational strings");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < j.size(); ++i) values.push_back(rational_at(j[i], path + "[" + std::to_string(i) + "]"));
    return Vector(std::move(values));
}

inline std::size_t index_at(const Json& j, const std::string& path) {
    expect(j.is_number_unsigned(), path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

inline std::vector<NamedVector> named_vectors_at(const Json& j, const std::string& path, std::size_t n) {
    expect(j.is_object(), path, "expected an object of named vectors");
    std::vector<NamedVector> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string at = path + "." + it.key();
        Vector v = vector_at(it.value(), at);
        if (v.size() != n)
            throw ValidationError(at + ": has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
        out.push_back({it.key(), std::move(v)});
    }
    return out;
}

inline Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Json atom_json(const Atom& atom) {
    Json out = Json::array();
    for (std::size_t w : atom) out.push_back(w);
    return out;
}

}  // namespace detail

/// Parses and validates a scenario. Syntax and type problems raise
/// ParseError (with a JSON path); semantic problems raise ValidationError.
inline Scenario parse_scenario(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    detail::expect(root.is_object(), "$", "expected a JSON object");

    const Json& space = detail::member(root, "space", "$");
    detail::expect(space.is_object(), "$.space", "expected an object");
    std::size_t size = detail::index_at(detail::member(space, "size", "$.space"), "$.space.size");
    Vector weights = detail::vector_at(detail::member(space, "weights", "$.space"), "$.space.weights");
    if (weights.size() != size)
        throw ValidationError("$.space: size is " + std::to_string(size) + " but " + std::to_string(weights.size()) +
                              " weights are given");
    Scenario s{SampleSpace(weights.values()), std::nullopt, std::nullopt, {}, std::nullopt, {}};

    if (auto it = root.find("filtration"); it != root.end()) {
        detail::expect(it->is_array(), "$.filtration", "expected an array of partitions");
        std::vector<Partition> parts;
        for (std::size_t t = 0; t < it->size(); ++t) {
            std::string at = "$.filtration[" + std::to_string(t) + "]";
            const Json& pj = (*it)[t];
            detail::expect(pj.is_array(), at, "expected an array of atoms");
            std::vector<Atom> atoms;
            for (std::size_t a = 0; a < pj.size(); ++a) {
                std::string aat = at + "[" + std::to_string(a) + "]";
                detail::expect(pj[a].is_array(), aat, "expected an array of outcome indices");
                Atom atom;
                for (std::size_t k = 0; k < pj[a].size(); ++k)
                    atom.push_back(detail::index_at(pj[a][k], aat + "[" + std::to_string(k) + "]"));
                atoms.push_back(std::move(atom));
            }
            try {
                parts.emplace_back(size, std::move(atoms));
            } catch (const ValidationError& e) {
                throw ValidationError(at + ": " + e.what());
            }
        }
        s.filtration.emplace(s.space, std::move(parts));
    }

    if (auto it = root.find("prices"); it != root.end()) {
        detail::expect(it->is_array(), "$.prices", "expected an array with one vector per time");
        std::vector<Vector> prices;
        for (std::size_t t = 0; t < it->size(); ++t)
            prices.push_back(detail::vector_at((*it)[t], "$.prices[" + std::to_string(t) + "]"));
        if (!s.filtration) throw ValidationError("$.prices: a filtration section is required alongside prices");
        MarketModel check(*s.filtration, prices);
        s.prices = std::move(prices);
    }

    if (auto it = root.find("claims"); it != root.end()) {
        s.has_claims_section = true;
        s.claims = detail::named_vectors_at(*it, "$.claims", size);
        if (s.filtration)
            for (const auto& c : s.claims)
                if (!s.filtration->partition(s.filtration->horizon()).is_measurable(c.value))
                    throw ValidationError("$.claims." + c.name + ": not measurable at the horizon");
    }

    if (auto it = root.find("transform"); it != root.end()) {
        detail::expect(it->is_array(), "$.transform", "expected a permutation as an index array");
        std::vector<std::size_t> tau;
        for (std::size_t i = 0; i < it->size(); ++i)
            tau.push_back(detail::index_at((*it)[i], "$.transform[" + std::to_string(i) + "]"));
        try {
            TransformSystem check(s.space, tau);
        } catch (const Error& e) {
            throw ValidationError(std::string("$.transform: ") + e.what());
        }
        s.transform = std::move(tau);
    }

    if (auto it = root.find("vectors"); it != root.end()) {
        s.has_vectors_section = true;
        s.vectors = detail::named_vectors_at(*it, "$.vectors", size);
    }
    return s;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open scenario file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

/// Canonical JSON form; parse_scenario(dump) reproduces the scenario.
inline Json scenario_json(const Scenario& s) {
    Json root = Json::object();
    root["space"] = {{"size", s.space.size()}, {"weights", detail::vector_json(Vector(s.space.weights()))}};
    if (s.filtration) {
        Json parts = Json::array();
        for (const auto& p : s.filtration->partitions()) {
            Json atoms = Json::array();
            for (const auto& a : p.atoms()) atoms.push_back(detail::atom_json(a));
            parts.push_back(std::move(atoms));
        }
        root["filtration"] = std::move(parts);
    }
    if (s.prices) {
        Json prices = Json::array();
        for (const auto& v : *s.prices) prices.push_back(detail::vector_json(v));
        root["prices"] = std::move(prices);
    }
    if (s.has_claims_section) {
        Json claims = Json::object();
        for (const auto& c : s.claims) claims[c.name] = detail::vector_json(c.value);
        root["claims"] = std::move(claims);
    }
    if (s.transform) root["transform"] = *s.transform;
    if (s.has_vectors_section) {
        Json vectors = Json::object();
        for (const auto& v : s.vectors) vectors[v.name] = detail::vector_json(v.value);
        root["vectors"] = std::move(vectors);
    }
    return root;
}

inline std::string dump_scenario(const Scenario& s) { return scenario_json(s).dump(2) + "\n"; }

}  // namespace condsup

#include "roughdp/space_doc.hpp"

#include <set>

#include "json.hpp"

namespace roughdp {

SpaceDocument parse_space(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("space document: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("space document must be a JSON object");
    if (!j.contains("universe") || !j["universe"].is_array()) {
        throw ParseError("space document needs a \"universe\" array");
    }
    if (!j.contains("relation")) {
        throw ParseError("space document needs a \"relation\" array (may be empty)");
    }
    SpaceDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    for (const auto& l : j["universe"]) {
        if (!l.is_string()) throw ParseError("universe labels must be strings");
        doc.universe.push_back(l.get<std::string>());
    }
    if (doc.universe.empty()) throw ParseError("universe must not be empty");
    std::set<std::string> known(doc.universe.begin(), doc.universe.end());
    if (known.size() != doc.universe.size()) {
        throw DuplicateLabel("space document has duplicate universe labels");
    }
    if (!j["relation"].is_array()) throw ParseError("\"relation\" must be an array of pairs");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : j["relation"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
            throw ParseError("relation entries must be [from, to] label pairs");
        }
        auto pair = std::make_pair(p[0].get<std::string>(), p[1].get<std::string>());
        for (const auto& label : {pair.first, pair.second}) {
            if (!known.count(label)) {
                throw UnknownLabel("relation references unknown label '" + label + "'");
            }
        }
        if (!seen.insert(pair).second) {
            ++doc.duplicate_pairs;
            continue;
        }
        doc.relation.push_back(std::move(pair));
    }
    return doc;
}

Universe universe_of(const SpaceDocument& doc) { return Universe(doc.universe); }

BinaryRelation relation_of(const SpaceDocument& doc) {
    Universe u = universe_of(doc);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(doc.relation.size());
    for (const auto& [a, b] : doc.relation) {
        pairs.emplace_back(u.index(a), u.index(b));
    }
    return BinaryRelation(std::move(pairs), u.size());
}

ApproximationSpace build_space(const SpaceDocument& doc, int enum_cap) {
    return ApproximationSpace::build(universe_of(doc), relation_of(doc), enum_cap);
}

ElementSet parse_set_expression(const Universe& universe, const std::string& raw) {
    std::string expr = raw;
    size_t lead = expr.find_first_not_of(" \t");
    if (lead == std::string::npos) throw ParseError("empty set expression");
    expr = expr.substr(lead, expr.find_last_not_of(" \t") - lead + 1);
    if (expr == "all") return ElementSet::full_set(universe.size());
    if (expr == "empty") return ElementSet::empty_set(universe.size());
    if (expr.size() < 2 || expr.front() != '{' || expr.back() != '}') {
        throw ParseError("set expression must be {label,...}, 'all', or 'empty'");
    }
    std::string body = expr.substr(1, expr.size() - 2);
    ElementSet out = ElementSet::empty_set(universe.size());
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string token = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        // trim surrounding blanks
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty label in set expression");
        token = token.substr(b, e - b + 1);
        out = out.with(universe.index(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace roughdp

#include "ribbon/json_io.hpp"

namespace ribbon {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const PartitionTuple& t) {
    json out = json::array();
    for (const auto& c : t.components()) out.push_back(to_json(c));
    return out;
}

json to_json(const BorderStripTableau& b) {
    json flag = json::array();
    for (const auto& nu : b.flag()) flag.push_back(to_json(nu));
    return json{{"k", b.k()}, {"flag", flag}};
}

json to_json(const StandardTableauTuple& t) {
    return json{{"shapes", to_json(t.shapes())}, {"entries", t.entries()}};
}

json to_json(const SemistandardTableauTuple& t) {
    return json{{"shapes", to_json(t.shapes())}, {"entries", t.entries()}};
}

json to_json(const IntPoly& p) {
    json out = json::array();
    for (int e = 0; e <= p.degree(); ++e) {
        if (p.coeff(e) == 0) continue;
        out.push_back(json{{"exp", e}, {"coeff", p.coeff(e).str()}});
    }
    return out;
}

json to_json(const BiPoly& p) {
    json out = json::array();
    for (const auto& [key, c] : p.terms())
        out.push_back(json{{"q", key.first}, {"t", key.second}, {"coeff", c.str()}});
    return out;
}

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

PartitionTuple partition_tuple_from_json(const json& j) {
    std::vector<Partition> comps;
    for (const auto& c : j) comps.push_back(partition_from_json(c));
    return PartitionTuple(std::move(comps));
}

BorderStripTableau bst_from_json(const json& j) {
    std::vector<Partition> flag;
    for (const auto& nu : j.at("flag")) flag.push_back(partition_from_json(nu));
    return BorderStripTableau(j.at("k").get<int>(), std::move(flag));
}

StandardTableauTuple syt_tuple_from_json(const json& j) {
    return StandardTableauTuple(
        partition_tuple_from_json(j.at("shapes")),
        j.at("entries").get<std::vector<std::vector<std::vector<int>>>>());
}

SemistandardTableauTuple ssyt_tuple_from_json(const json& j) {
    return SemistandardTableauTuple(
        partition_tuple_from_json(j.at("shapes")),
        j.at("entries").get<std::vector<std::vector<std::vector<int>>>>());
}

IntPoly intpoly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& term : j) {
        int e = term.at("exp").get<int>();
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(static_cast<std::size_t>(e) + 1, Int(0));
        coeffs[static_cast<std::size_t>(e)] = Int(term.at("coeff").get<std::string>());
    }
    return IntPoly(std::move(coeffs));
}

BiPoly bipoly_from_json(const json& j) {
    BiPoly out;
    for (const auto& term : j)
        out.add_term(Int(term.at("coeff").get<std::string>()), term.at("q").get<int>(),
                     term.at("t").get<int>());
    return out;
}

}  // namespace ribbon

#include "stripllt/json_io.hpp"

#include "stripllt/errors.hpp"

#include <algorithm>

namespace sllt {

Json to_json(const Integer& z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            fail(ErrorKind::Parse, "bad integer literal " + j.dump());
        return z;
    }
    fail(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

Json to_json(const QPoly& p) {
    Json a = Json::array();
    for (int e = p.degree(); e >= 0; --e)
        if (p.coeff(e) != 0)
            a.push_back(Json::array({e, to_json(p.coeff(e))}));
    return a;
}

QPoly qpoly_from_json(const Json& j) {
    if (!j.is_array())
        fail(ErrorKind::Parse, "expected [[exponent, coefficient], ...]");
    QPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || t[0].get<int>() < 0)
            fail(ErrorKind::Parse, "bad q-term " + t.dump());
        QPoly term = QPoly::q_power(t[0].get<int>());
        term *= integer_from_json(t[1]);
        p += term;
    }
    return p;
}

Json to_json(const BasisExpansion& e) {
    Json coeffs = Json::array();
    for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it)
        coeffs.push_back({{"partition", it->first}, {"q", to_json(it->second)}});
    Json j = {{"basis", std::string(1, basis_char(e.basis))}, {"degree", e.degree}, {"coeffs", coeffs}};
    if (e.denominator != 1)
        j["denominator"] = to_json(e.denominator);
    return j;
}

BasisExpansion expansion_from_json(const Json& j) {
    try {
        BasisExpansion e;
        e.basis = parse_basis(j.at("basis").get<std::string>());
        e.degree = j.at("degree").get<int>();
        for (const auto& c : j.at("coeffs")) {
            Partition p = c.at("partition").get<Partition>();
            if (p.empty() || !std::is_sorted(p.rbegin(), p.rend()) || p.back() < 1)
                fail(ErrorKind::Parse, "bad partition " + c.at("partition").dump());
            e.add(p, qpoly_from_json(c.at("q")));
        }
        if (j.contains("denominator"))
            e.denominator = integer_from_json(j["denominator"]);
        e.normalize();
        return e;
    } catch (const Json::exception& ex) {
        fail(ErrorKind::Parse, std::string("malformed expansion: ") + ex.what());
    }
}

Json display_json(const BasisExpansion& e) {
    Json d = Json::object();
    for (const auto& [p, c] : e.coeffs) {
        std::string s = c.str();
        if (e.denominator != 1)
            s = "(" + s + ")/" + e.denominator.get_str();
        d[partition_string(p)] = s;
    }
    return d;
}

Json to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [x, c] : f.terms())
        terms.push_back({{"x", x}, {"q", to_json(c)}});
    return {{"vars", f.k()}, {"degree", f.degree()}, {"terms", terms}};
}

Json to_json(const WeightedGraph& g) {
    Json edges = Json::array();
    for (int a = 1; a <= g.n(); ++a)
        for (int b = a + 1; b <= g.n(); ++b)
            if (g.edge_weight(a, b) != 0)
                edges.push_back({a, b, g.edge_weight(a, b)});
    return {{"weights", g.weights}, {"edges", edges}};
}

WeightedGraph wgraph_from_json(const Json& j) {
    try {
        WeightedGraph g(j.at("weights").get<std::vector<int>>());
        for (int w : g.weights)
            if (w < 1)
                fail(ErrorKind::Parse, "vertex weights must be positive");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                fail(ErrorKind::Parse, "edge must be [a, b, weight]: " + e.dump());
            int a = e[0].get<int>(), b = e[1].get<int>(), w = e[2].get<int>();
            if (a < 1 || b < 1 || a > g.n() || b > g.n() || a == b || w < 0)
                fail(ErrorKind::Parse, "bad edge " + e.dump());
            g.set_edge(a, b, w);
        }
        if (!g.well_formed())
            fail(ErrorKind::Parse, "edge weight exceeds an endpoint weight");
        return g;
    } catch (const Json::exception& ex) {
        fail(ErrorKind::Parse, std::string("malformed graph: ") + ex.what());
    }
}

Json to_json(const LabelledGraph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges)
        edges.push_back({a, b});
    return {{"vertices", g.n}, {"edges", edges}};
}

} // namespace sllt

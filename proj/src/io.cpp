#include "cak/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>

#include "cak/error.hpp"

namespace cak::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, "malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Label> labels_from_json(const json& j) {
    if (!j.is_array()) bad("expected a label array");
    std::vector<Label> out;
    for (const auto& x : j) {
        if (!x.is_string()) bad("labels must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<int> ints_from_json(const json& j) {
    if (!j.is_array()) bad("expected an integer array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad("expected integers");
        const auto v = x.get<long long>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) bad("integer out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) bad("expected an integer");
        return q.get_num();
    }
    bad("expected an integer");
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
    bad("rationals are strings like \"3/4\"");
}

json to_json(const Point2& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("points are [x, y] pairs");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const Direction& d) { return json::array({integer_to_json(d.dx()), integer_to_json(d.dy())}); }

Direction direction_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("directions are [dx, dy] pairs");
    return Direction(integer_from_json(j[0]), integer_from_json(j[1]));
}

json to_json(const Arrangement& a) {
    json bodies = json::array();
    for (const auto& [l, p] : a.bodies) {
        json v = json::array();
        for (const auto& q : p.vertices()) v.push_back(to_json(q));
        bodies.push_back({{"label", l}, {"vertices", v}});
    }
    return {{"bodies", bodies}};
}

Arrangement arrangement_from_json(const json& j) {
    const json& bodies = field(j, "bodies");
    if (!bodies.is_array()) bad("'bodies' must be an array");
    Arrangement a;
    for (const auto& b : bodies) {
        const json& l = field(b, "label");
        if (!l.is_string()) bad("body labels must be strings");
        const json& v = field(b, "vertices");
        if (!v.is_array()) bad("'vertices' must be an array");
        std::vector<Point2> pts;
        for (const auto& p : v) pts.push_back(point_from_json(p));
        if (!a.bodies.emplace(l.get<std::string>(), validate_polygon(pts)).second)
            fail(ErrorKind::InvalidInput, "duplicate body label '" + l.get<std::string>() + "'");
    }
    if (a.bodies.empty()) fail(ErrorKind::InvalidInput, "arrangement has no bodies");
    return a;
}

json to_json(const SupportConfiguration& c) {
    json arr = json::array();
    for (const auto& x : c.crossings) arr.push_back({{"first", x.first}, {"second", x.second}, {"dir", to_json(x.dir)}});
    return {{"crossings", arr}};
}

SupportConfiguration support_configuration_from_json(const json& j) {
    SupportConfiguration c;
    for (const auto& x : field(j, "crossings"))
        c.crossings.push_back({field(x, "first").get<std::string>(), field(x, "second").get<std::string>(),
                               direction_from_json(field(x, "dir"))});
    return c;
}

json to_json(const SwapPair& sp) { return {{"rho", sp.rho}, {"sigma", sp.sigma}}; }

SwapPair swap_pair_from_json(const json& j) {
    return validate_swap_pair(labels_from_json(field(j, "rho")), ints_from_json(field(j, "sigma")));
}

json to_json(const Tableau& t) {
    json rows = json::object();
    for (const auto& [l, r] : t.rows) rows[l] = r;
    return {{"order", t.order}, {"rows", rows}};
}

Tableau tableau_from_json(const json& j) {
    Tableau t;
    t.order = labels_from_json(field(j, "order"));
    const json& rows = field(j, "rows");
    if (!rows.is_object()) bad("'rows' must be an object");
    for (const auto& [l, r] : rows.items()) t.rows[l] = labels_from_json(r);
    return t;
}

json to_json(const Chirotope& c) {
    json triples = json::array();
    const auto& L = c.labels();
    for (size_t i = 0; i < L.size(); ++i)
        for (size_t j = i + 1; j < L.size(); ++j)
            for (size_t k = j + 1; k < L.size(); ++k)
                triples.push_back({{"t", {L[i], L[j], L[k]}}, {"s", c.sign_at(i, j, k) > 0 ? "+" : "-"}});
    return {{"labels", L}, {"triples", triples}};
}

Chirotope chirotope_from_json(const json& j) {
    const auto labels = labels_from_json(field(j, "labels"));
    std::map<std::array<Label, 3>, int> given;
    for (const auto& x : field(j, "triples")) {
        auto t = labels_from_json(field(x, "t"));
        if (t.size() != 3) bad("triples have three labels");
        const json& s = field(x, "s");
        if (!s.is_string() || (s != "+" && s != "-")) bad("triple signs are \"+\" or \"-\"");
        int sign = s == "+" ? 1 : -1;
        // Sort the triple, tracking the parity of the permutation.
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b + 1 < 3 - a; ++b)
                if (t[static_cast<size_t>(b)] > t[static_cast<size_t>(b + 1)]) {
                    std::swap(t[static_cast<size_t>(b)], t[static_cast<size_t>(b + 1)]);
                    sign = -sign;
                }
        if (!given.emplace(std::array<Label, 3>{t[0], t[1], t[2]}, sign).second) bad("repeated triple");
    }
    return Chirotope(labels, [&](const Label& a, const Label& b, const Label& c) {
        auto it = given.find({a, b, c});
        if (it == given.end()) fail(ErrorKind::InvalidInput, "chirotope is missing triple (" + a + "," + b + "," + c + ")");
        return it->second;
    });
}

json to_json(const PathSystem& p) { return {{"initial", p.initial}, {"swaps", p.swaps}}; }

PathSystem path_system_from_json(const json& j) {
    PathSystem p{labels_from_json(field(j, "initial")), ints_from_json(field(j, "swaps"))};
    std::vector<Label> sorted = p.initial;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("duplicate label in path system");
    for (int h : p.swaps)
        if (h < 1 || h >= static_cast<int>(p.n())) bad("path system height out of range");
    return p;
}

json to_json(const AbstractConfiguration& c) {
    json arr = json::array();
    for (const auto& x : c.crossings)
        arr.push_back({{"first", x.first}, {"second", x.second}, {"angle", to_json(x.angle.value())}});
    return {{"labels", c.labels}, {"crossings", arr}};
}

AbstractConfiguration abstract_configuration_from_json(const json& j) {
    AbstractConfiguration c;
    if (j.contains("labels")) c.labels = labels_from_json(j.at("labels"));
    for (const auto& x : field(j, "crossings"))
        c.crossings.push_back({field(x, "first").get<std::string>(), field(x, "second").get<std::string>(),
                               Turn(rational_from_json(field(x, "angle")))});
    return c;
}

json to_json(const CombinatorialType& ct) {
    return {{"canonical", to_json(ct.canonical)},
            {"layers", ct.layers.partition},
            {"depth", ct.layers.depth},
            {"periodicity", ct.periodicity}};
}

CombinatorialType combinatorial_type_from_json(const json& j) {
    return canonical_form(tableau_from_json(field(j, "canonical")));
}

json to_json(const PointSet& p) {
    json pts = json::object();
    for (const auto& [l, q] : p) pts[l] = to_json(q);
    return {{"points", pts}};
}

PointSet point_set_from_json(const json& j) {
    const json& pts = field(j, "points");
    if (!pts.is_object()) bad("'points' must be an object of label -> [x, y]");
    PointSet out;
    for (const auto& [l, q] : pts.items()) out.emplace(l, point_from_json(q));
    if (out.empty()) fail(ErrorKind::InvalidInput, "empty point set");
    return out;
}

json read_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON in '") + path + "': " + e.what());
    }
}

}  // namespace cak::io

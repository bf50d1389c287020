#include "d21a/json_io.hpp"

#include "d21a/errors.hpp"

namespace d21a {

Json poly_to_json(const SuperPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"d1", m.d1}, {"d2", m.d2}, {"e3", m.e3}, {"e4", m.e4}, {"coeff", c.str()}});
    return out;
}

SuperPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("polynomial JSON must be an array of terms");
    SuperPoly p;
    for (const auto& t : j) {
        Mono m;
        m.d1 = t.at("d1").get<std::uint32_t>();
        m.d2 = t.at("d2").get<std::uint32_t>();
        m.e3 = t.at("e3").get<std::uint8_t>();
        m.e4 = t.at("e4").get<std::uint8_t>();
        if (m.e3 > 1 || m.e4 > 1) throw parse_error("odd exponents must be 0 or 1");
        p.add_term(m, parse_scalar(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json exppoly_to_json(const ExpPoly& f) {
    Json out = Json::array();
    for (const auto& [mu, p] : f.summands())
        out.push_back({{"mu1", rat_to_string(mu.first)},
                       {"mu2", rat_to_string(mu.second)},
                       {"poly", poly_to_json(p)}});
    return out;
}

ExpPoly exppoly_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("exponential polynomial JSON must be an array");
    ExpPoly f;
    for (const auto& s : j) {
        ExpPoly::Key mu{rat_from_string(s.at("mu1").get<std::string>()),
                        rat_from_string(s.at("mu2").get<std::string>())};
        f.add_summand(mu, poly_from_json(s.at("poly")));
    }
    return f;
}

Json diffop_to_json(const DiffOp& d) {
    Json out = Json::array();
    for (const auto& [key, c] : d.terms()) {
        const auto& [m, idx] = key;
        out.push_back({{"monomial", {{"d1", m.d1}, {"d2", m.d2}, {"e3", m.e3}, {"e4", m.e4}}},
                       {"multiindex", {{"q1", idx.q1}, {"q2", idx.q2}, {"r3", idx.r3}, {"r4", idx.r4}}},
                       {"coeff", c.str()}});
    }
    return out;
}

Json table_to_json(const StructureTable& t) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        basis.push_back({{"name", t.info(i).name}, {"parity", t.info(i).parity}, {"grading", t.info(i).grading}});
    Json brackets = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            const Vec& b = t.bracket(i, j);
            Json coeffs = Json::object();
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (!b[k].is_zero()) coeffs[std::to_string(k)] = b[k].str();
            if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    return {{"basis", basis}, {"brackets", brackets}};
}

Json report_to_json(const CheckReport& r) {
    Json info = Json::object();
    for (const auto& [k, v] : r.info) info[k] = v;
    return {{"name", r.name}, {"pass", r.pass}, {"failures", r.failures}, {"info", info}};
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.str());
        rows.push_back(r);
    }
    return rows;
}

Json gram_to_json(const GramMatrix& g) {
    return {{"degree", g.degree},
            {"matrix", mat_to_json(g.entries)},
            {"det", g.determinant.str()},
            {"degenerate", g.degenerate}};
}

Json welem_to_json(const WElem& w) {
    return {{"pow2_const", rat_to_string(w.tag_const)},
            {"pow2_alpha", rat_to_string(w.tag_mu)},
            {"poly", poly_to_json(w.poly)}};
}

WElem welem_from_json(const Json& j) {
    WElem w;
    w.tag_const = rat_from_string(j.at("pow2_const").get<std::string>());
    w.tag_mu = rat_from_string(j.at("pow2_alpha").get<std::string>());
    w.poly = poly_from_json(j.at("poly"));
    return w;
}

} // namespace d21a

// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/serialize.hpp"

#include <fstream>

namespace mwx::io {

json to_json(const Rat& x) { return rat_to_string(x); }
Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw input_error("expected a rational (string or integer)");
}

json to_json(const Cyclo& x) {
    if (x.is_rational()) return rat_to_string(x.rational_part());
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"order", x.order()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return Cyclo(rat_from_json(j));
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw input_error("expected a cyclotomic number {order, coeffs}");
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
    return Cyclo(j.at("order").get<unsigned>(), std::move(coeffs));
}

json to_json(const QPoly& f) {
    json out = json::array();
    for (int i = 0; i <= f.degree(); ++i) out.push_back(rat_to_string(f.coeff(i)));
    return out;
}

QPoly qpoly_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected a coefficient list");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return QPoly(std::move(c));
}

json to_json(const WeierstrassData& w) {
    json p = json::array(), q = json::array();
    for (int i = 0; i < 3; ++i) p.push_back(rat_to_string(w.p(i)));
    for (int i = 0; i + 3 < static_cast<int>(w.lambda.size()); ++i) q.push_back(rat_to_string(w.q(i)));
    return json{{"case", case_to_string(w.cs)}, {"p", p}, {"q", q}};
}

WeierstrassData lambda_from_json(const json& j) {
    if (!j.is_object() || !j.contains("case"))
        throw input_error("lambda file must be {case, p, q} or {case, lambda}");
    const Case cs = case_from_string(j.at("case").get<std::string>());
    std::vector<Rat> lam;
    if (j.contains("lambda")) {
        for (const auto& e : j.at("lambda")) lam.push_back(rat_from_json(e));
    } else {
        if (!j.contains("p") || !j.contains("q")) throw input_error("lambda file must contain p and q");
        for (const auto& e : j.at("p")) lam.push_back(rat_from_json(e));
        if (lam.size() != 3) throw input_error("p must have 3 entries");
        for (const auto& e : j.at("q")) lam.push_back(rat_from_json(e));
    }
    return WeierstrassData(cs, std::move(lam));
}

json to_json(const TorusPoint<Cyclo>& xi) {
    json s = json::array();
    for (const auto& e : xi.s) s.push_back(to_json(e));
    return json{{"case", case_to_string(xi.cs)}, {"s", s}, {"r", to_json(xi.r)}};
}

TorusPoint<Cyclo> xi_from_json(const json& j) {
    if (!j.is_object() || !j.contains("case") || !j.contains("s") || !j.contains("r"))
        throw input_error("torus point file must be {case, s, r}");
    const Case cs = case_from_string(j.at("case").get<std::string>());
    std::vector<Cyclo> s;
    for (const auto& e : j.at("s")) s.push_back(cyclo_from_json(e));
    Cyclo r = cyclo_from_json(j.at("r"));
    if (static_cast<int>(s.size()) == rank_of(cs) - 1)
        return TorusPoint<Cyclo>::from_partial(cs, std::move(s), std::move(r));
    return TorusPoint<Cyclo>(cs, std::move(s), std::move(r));
}

json orbit_to_json(const OrbitMultiset& orbit) {
    json out = json::array();
    for (const auto& e : orbit) {
        json v = json::array();
        for (int i = 0; i < e.rank(); ++i) v.push_back(e.coord(i));
        out.push_back(v);
    }
    return out;
}

json to_json(const WeierstrassCurve& c) {
    return json{{"a1", to_json(c.a1)}, {"a2", to_json(c.a2)}, {"a3", to_json(c.a3)},
                {"a4", to_json(c.a4)}, {"a6", to_json(c.a6)}};
}

WeierstrassCurve curve_from_json(const json& j) {
    WeierstrassCurve c;
    auto get = [&](const char* k) { return j.contains(k) ? qpoly_from_json(j.at(k)) : QPoly{}; };
    c.a1 = get("a1");
    c.a2 = get("a2");
    c.a3 = get("a3");
    c.a4 = get("a4");
    c.a6 = get("a6");
    return c;
}

json to_json(const SectionPoly& s) {
    if (s.infinity) return json{{"infinity", true}};
    return json{{"x", to_json(s.x)}, {"y", to_json(s.y)}};
}

SectionPoly section_from_json(const json& j) {
    if (j.contains("infinity") && j.at("infinity").get<bool>()) return SectionPoly::zero();
    return SectionPoly::affine(qpoly_from_json(j.at("x")), qpoly_from_json(j.at("y")));
}

json to_json(const FiberReport& r) {
    json fibers = json::array();
    for (const auto& f : r.fibers) {
        fibers.push_back(json{{"place", f.place},
                              {"at_infinity", f.at_infinity},
                              {"v_c4", f.vc4},
                              {"v_c6", f.vc6},
                              {"v_disc", f.vdisc},
                              {"kodaira", f.kodaira},
                              {"euler", f.euler},
                              {"lattice", f.lattice},
                              {"roots", f.root_count},
                              {"minimal", f.minimal}});
    }
    return json{{"fibers", fibers}, {"euler_sum", r.euler_sum}, {"all_minimal", r.all_minimal}};
}

json to_json(const ElimInfo& info) {
    json strips = json::array();
    for (const auto& [label, mult] : info.stripped) strips.push_back(json{{"factor", label}, {"multiplicity", mult}});
    return json{{"case", case_to_string(info.cs)},
                {"variant", info.variant == ElimVariant::phi ? "phi" : "psi"},
                {"resultant_degree", info.z_degree},
                {"stripped", strips},
                {"normalizer", info.normalizer},
                {"grid_points", info.grid_points}};
}

json to_json(const CycleType& ct) {
    json parts = json::array();
    for (const auto& [d, c] : ct.parts) parts.push_back(json::array({d, c}));
    return parts;
}

json to_json(const CertReport& r) {
    json lines = json::array();
    for (const auto& l : r.lines) {
        lines.push_back(json{{"prime", l.prime},
                             {"expected", to_json(l.expected)},
                             {"got", to_json(l.got)},
                             {"match", l.match},
                             {"error", l.error}});
    }
    return json{{"polynomial", r.poly_id}, {"primes", lines}, {"all_match", r.all_match()}};
}

json to_json(const RowReport& r) {
    return json{{"type", r.os_type},         {"fibral", r.fibral},
                {"two_nu", r.two_nu},        {"expected_new_roots", r.expected_roots},
                {"pass", r.pass},            {"fiber_cross_checked", r.fiber_checked},
                {"fiber_pass", r.fiber_pass}, {"note", r.note}};
}

json to_json(const GenericityReport& r) {
    return json{{"weyl_denominator", rat_to_string(r.weyl_denominator)},
                {"weyl_nonzero", r.weyl_nonzero},
                {"additive_free", r.additive_free},
                {"disc_t", rat_to_string(r.disc_t)},
                {"note", r.note}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
}

} // namespace mwx::io

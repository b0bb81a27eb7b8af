// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "mwx/degeneration.hpp"
#include "mwx/elim.hpp"
#include "mwx/galois.hpp"
#include "mwx/parallel.hpp"
#include "mwx/refdata.hpp"
#include "mwx/serialize.hpp"

using namespace mwx;
using io::json;

namespace {

// Exit codes: 0 all checks pass, 2 a check failed, 3 input error, 4 budget.
enum ExitCode { exit_ok = 0, exit_check = 2, exit_input = 3, exit_budget = 4 };

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& doc, const std::string& markdown) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw input_error("cannot write " + path);
            os = &file;
        }
        if (format == "markdown") *os << markdown;
        else *os << doc.dump(2) << "\n";
    }
};

std::string render_checks(const std::string& title, const json& checks) {
    std::string md = "## " + title + "\n\n| check | result |\n|---|---|\n";
    for (const auto& c : checks)
        md += "| " + c.at("name").get<std::string>() + " | " +
              (c.at("pass").get<bool>() ? "pass" : "FAIL") + " |\n";
    return md + "\n";
}

json relation_report_json(const RelationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return checks;
}

// --- verify ------------------------------------------------------------------

int cmd_verify_relations(Case cs, const Output& out) {
    const RelationReport rep = verify_char_relations(cs);
    const json checks = relation_report_json(rep);
    out.emit(json{{"command", "verify relations"}, {"case", case_to_string(cs)}, {"checks", checks},
                  {"pass", rep.all_pass()}},
             render_checks("character relations (" + case_to_string(cs) + ")", checks));
    return rep.all_pass() ? exit_ok : exit_check;
}

int cmd_verify_roundtrip(Case cs, const Output& out) {
    const RelationReport rep = verify_roundtrip(cs);
    const json checks = relation_report_json(rep);
    out.emit(json{{"command", "verify roundtrip"}, {"case", case_to_string(cs)}, {"checks", checks},
                  {"pass", rep.all_pass()}},
             render_checks("coefficient transform round trip (" + case_to_string(cs) + ")", checks));
    return rep.all_pass() ? exit_ok : exit_check;
}

// --- build -------------------------------------------------------------------

int cmd_build(ElimVariant variant, const std::string& lambda_path, const std::vector<u64>& primes,
              const Output& out) {
    const WeierstrassData w = io::lambda_from_json(io::load_file(lambda_path));
    json doc{{"command", variant == ElimVariant::phi ? "build phi" : "build psi"},
             {"case", case_to_string(w.cs)},
             {"lambda", io::to_json(w)}};
    std::string md = "## specialization polynomial\n\n";
    if (primes.empty()) {
        ElimInfo info;
        const QPoly f = variant == ElimVariant::phi ? build_phi(w, &info) : build_psi(w, &info);
        doc["coefficients"] = io::to_json(f);
        doc["provenance"] = io::to_json(info);
        md += "exact build of degree " + std::to_string(f.degree()) + "\n";
    } else {
        json runs = json::array();
        for (u64 p : primes) {
            ElimInfo info;
            const ZpVec f = variant == ElimVariant::phi ? build_phi_mod(w, p, &info)
                                                         : build_psi_mod(w, p, &info);
            json coeffs = json::array();
            for (u64 c : f) coeffs.push_back(c);
            runs.push_back(json{{"prime", p}, {"coefficients", coeffs}, {"provenance", io::to_json(info)}});
            md += "modular build mod " + std::to_string(p) + "\n";
        }
        doc["modular"] = runs;
    }
    out.emit(doc, md);
    return exit_ok;
}

// --- examples ------------------------------------------------------------------

json split_example(Case cs, bool& pass) {
    const WeierstrassData& w = refdata::split_lambda(cs);
    const WeierstrassCurve curve = WeierstrassCurve::family(w);
    const auto xi = refdata::split_xi(cs);
    const auto expected_spec = refdata::split_specializations(cs);

    json sections = json::array();
    pass = true;
    std::vector<Rat> specs;
    const auto& xs = refdata::split_x_list(cs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const SectionPoly s = complete_section_y(curve, xs[i]);
        const bool ok = verify_section(curve, s);
        const auto [value, comp] = specialize_at_infinity(cs, SectionRat::from_poly(s));
        const bool spec_ok = value == expected_spec[i] && comp == (cs == Case::E7 ? 1 : 0);
        pass = pass && ok && spec_ok;
        specs.push_back(value);
        sections.push_back(json{{"x", io::to_json(xs[i])},
                                {"y", io::to_json(s.y)},
                                {"verified", ok},
                                {"specialization", rat_to_string(value)},
                                {"component", comp},
                                {"specialization_expected", spec_ok}});
    }
    const int rank = multiplicative_independence(specs);
    pass = pass && rank == rank_of(cs);

    json doc{{"lambda", io::to_json(w)},
             {"sections", sections},
             {"specializations_rank", rank}};

    if (cs == Case::E7) {
        const QPoly phi = build_phi(w);
        const bool root_law = phi == poly_from_roots(predicted_phi_roots(cs, xi));
        pass = pass && root_law;
        doc["phi_equals_root_product"] = root_law;
    } else {
        json primes = json::array();
        for (unsigned k = 0; k < 3; ++k) {
            const u64 p = nth_check_prime(k);
            const Zp F(p);
            const bool match = build_phi_mod(w, p) == poly_from_roots_mod(F, predicted_phi_roots(cs, xi));
            pass = pass && match;
            primes.push_back(json{{"prime", p}, {"match", match}});
        }
        doc["phi_equals_root_product_mod"] = primes;
    }
    doc["pass"] = pass;
    return doc;
}

json big_example(Case cs, bool& pass) {
    const int n = rank_of(cs);
    const WeierstrassData w(cs, std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
    const QPoly f = build_phi(w);
    json doc{{"degree", f.degree()}};
    pass = true;
    if (cs == Case::E7) {
        const bool printed = f == refdata::big_e7_polynomial();
        doc["matches_printed_coefficients"] = printed;
        pass = printed;
    }
    const CertReport cert = check_certificate(f, refdata::big_certificate(cs));
    doc["certificate"] = io::to_json(cert);
    pass = pass && cert.all_match();
    doc["pass"] = pass;
    return doc;
}

int cmd_example(const std::string& which, const Output& out) {
    bool pass = false;
    json doc;
    if (which == "split-e7") doc = split_example(Case::E7, pass);
    else if (which == "split-e8") doc = split_example(Case::E8, pass);
    else if (which == "big-e7") doc = big_example(Case::E7, pass);
    else if (which == "big-e8") doc = big_example(Case::E8, pass);
    else throw input_error("unknown example " + which);
    doc["command"] = "example " + which;
    std::string md = "## example " + which + "\n\n" + (pass ? "pass" : "FAIL") + "\n";
    out.emit(doc, md);
    return pass ? exit_ok : exit_check;
}

// --- degenerate -----------------------------------------------------------------

int cmd_degenerate(Case cs, int row, const std::string& xi_path, const Output& out) {
    json doc{{"command", "degenerate"}, {"case", case_to_string(cs)}};
    bool pass = true;
    std::string md = "## degeneration (" + case_to_string(cs) + ")\n\n";
    if (!xi_path.empty()) {
        const auto xi = io::xi_from_json(io::load_file(xi_path));
        if (xi.cs != cs) throw input_error("torus point case does not match --case");
        const int v = nu(cs, xi);
        doc["nu"] = v;
        doc["two_nu"] = 2 * v;
        md += "2 nu = " + std::to_string(2 * v) + "\n";
    } else {
        json rows = json::array();
        md += "| type | fibral | 2nu | new roots | pass |\n|---|---|---|---|---|\n";
        for (const auto& tr : table_rows(cs)) {
            if (row > 0 && tr.os_type != row) continue;
            const RowReport rep = verify_table_row(cs, tr);
            pass = pass && rep.pass && (!rep.fiber_checked || rep.fiber_pass);
            rows.push_back(io::to_json(rep));
            md += "| " + std::to_string(rep.os_type) + " | " + rep.fibral + " | " +
                  std::to_string(rep.two_nu) + " | " + std::to_string(rep.expected_roots) + " | " +
                  (rep.pass ? "pass" : "FAIL") + " |\n";
        }
        if (rows.empty()) throw input_error("no table row with type " + std::to_string(row));
        doc["rows"] = rows;
        doc["pass"] = pass;
    }
    out.emit(doc, md);
    return pass ? exit_ok : exit_check;
}

// --- fibers ---------------------------------------------------------------------

int cmd_fibers(const std::string& lambda_path, const std::string& curve_path, const Output& out) {
    WeierstrassCurve curve;
    json doc{{"command", "fibers"}};
    if (!lambda_path.empty()) {
        const WeierstrassData w = io::lambda_from_json(io::load_file(lambda_path));
        curve = WeierstrassCurve::family(w);
        doc["lambda"] = io::to_json(w);
    } else if (!curve_path.empty()) {
        curve = io::curve_from_json(io::load_file(curve_path));
    } else {
        throw input_error("fibers needs --lambda or --curve");
    }
    const FiberReport rep = fiber_configuration(curve);
    doc["report"] = io::to_json(rep);
    out.emit(doc, "## fibers\n\n```\n" + rep.to_table() + "```\n");
    return exit_ok;
}

// --- galois ----------------------------------------------------------------------

refdata::Certificate certificate_from_json(const json& j) {
    refdata::Certificate cert;
    cert.cs = case_from_string(j.at("case").get<std::string>());
    cert.poly_id = j.value("polynomial", std::string("custom"));
    for (const auto& row : j.at("primes")) {
        CycleType ct;
        for (const auto& part : row.at("cycle_type")) ct.parts.emplace_back(part.at(0).get<int>(), part.at(1).get<int>());
        cert.expected.emplace_back(row.at("prime").get<u64>(), std::move(ct));
    }
    return cert;
}

int cmd_galois(const std::string& cert_path, const std::string& poly_path, const Output& out) {
    const json cj = io::load_file(cert_path);
    const refdata::Certificate cert = certificate_from_json(cj);
    QPoly f;
    if (!poly_path.empty()) {
        f = io::qpoly_from_json(io::load_file(poly_path));
    } else if (cert.poly_id == "big-e7" || cert.poly_id == "big-e8") {
        const Case cs = cert.poly_id == "big-e7" ? Case::E7 : Case::E8;
        f = build_phi(WeierstrassData(cs, std::vector<Rat>(static_cast<std::size_t>(rank_of(cs)), Rat(1))));
    } else {
        throw input_error("certificate names no built-in polynomial; pass --poly");
    }
    const CertReport rep = check_certificate(f, cert);
    std::string md = "## cycle-type certificate " + rep.poly_id + "\n\n| prime | expected | got | match |\n|---|---|---|---|\n";
    for (const auto& l : rep.lines)
        md += "| " + std::to_string(l.prime) + " | " + l.expected.to_string() + " | " +
              l.got.to_string() + " | " + (l.match ? "yes" : "NO") + " |\n";
    out.emit(json{{"command", "galois"}, {"report", io::to_json(rep)}, {"pass", rep.all_match()}}, md);
    return rep.all_match() ? exit_ok : exit_check;
}

// --- report --full -----------------------------------------------------------------

int cmd_report(const Output& out) {
    json doc{{"command", "report"}};
    bool pass = true;
    std::string md = "# full verification report\n\n";

    for (Case cs : {Case::E6, Case::E7}) {
        const RelationReport rep = verify_char_relations(cs);
        doc["relations_" + case_to_string(cs)] = relation_report_json(rep);
        pass = pass && rep.all_pass();
        md += render_checks("relations " + case_to_string(cs), relation_report_json(rep));
    }
    for (Case cs : {Case::E6, Case::E7, Case::E8}) {
        const RelationReport rep = verify_roundtrip(cs);
        doc["roundtrip_" + case_to_string(cs)] = relation_report_json(rep);
        pass = pass && rep.all_pass();
        md += render_checks("roundtrip " + case_to_string(cs), relation_report_json(rep));
    }
    {
        // Reconstructed coefficients against the explicit formulas.
        const MPolyQ one(1);
        std::vector<MPolyQ> lam;
        for (int i = 0; i < 7; ++i) lam.push_back(MPolyQ::var(i));
        const auto rec = symbolic_coefficients(Case::E7, 4);
        json checks = json::array();
        for (int i = 1; i <= 4; ++i) {
            const bool ok = rec[static_cast<std::size_t>(i - 1)] == eps_of_lambda_e7(i, lam, one);
            checks.push_back(json{{"name", "reconstructed eps_" + std::to_string(i) + "(lambda)"}, {"pass", ok}});
            pass = pass && ok;
        }
        doc["coefficient_reconstruction_e7"] = checks;
        md += render_checks("coefficient reconstruction e7", checks);
    }
    for (const std::string which : {"split-e7", "split-e8", "big-e7", "big-e8"}) {
        bool p = false;
        json ex = which.substr(0, 5) == "split" ? split_example(which == "split-e7" ? Case::E7 : Case::E8, p)
                                                : big_example(which == "big-e7" ? Case::E7 : Case::E8, p);
        doc["example_" + which] = ex;
        pass = pass && p;
        md += "## example " + which + ": " + (p ? "pass" : "FAIL") + "\n\n";
    }
    for (Case cs : {Case::E7, Case::E8}) {
        json rows = json::array();
        bool all = true;
        for (const auto& rep : verify_all_rows(cs)) {
            all = all && rep.pass && (!rep.fiber_checked || rep.fiber_pass);
            rows.push_back(io::to_json(rep));
        }
        doc["degeneration_" + case_to_string(cs)] = rows;
        pass = pass && all;
        md += "## degeneration " + case_to_string(cs) + ": " + (all ? "all rows pass" : "FAIL") + "\n\n";
    }
    {
        json fixtures = json::array();
        for (const auto& rc : refdata::remark_curves()) {
            bool ok = verify_section(rc.curve, rc.section);
            if (rc.torsion > 1)
                ok = ok && torsion_order(rc.curve, SectionRat::from_poly(rc.section)) == rc.torsion;
            std::vector<std::string> got;
            for (const auto& f : fiber_configuration(rc.curve).fibers)
                if (f.lattice != "0") got.push_back(f.kodaira);
            std::sort(got.begin(), got.end());
            auto want = rc.fiber_types;
            std::sort(want.begin(), want.end());
            ok = ok && got == want;
            fixtures.push_back(json{{"name", "torsion fixture type " + rc.id}, {"pass", ok}});
            pass = pass && ok;
        }
        doc["torsion_fixtures"] = fixtures;
        md += render_checks("torsion fixtures", fixtures);
    }
    doc["pass"] = pass;
    md += pass ? "**all checks pass**\n" : "**FAILURES PRESENT**\n";
    out.emit(doc, md);
    return pass ? exit_ok : exit_check;
}

// --- golden/fixture dump ---------------------------------------------------------

int cmd_dump_golden(const std::string& dir) {
    std::filesystem::create_directories(dir + "/golden");
    std::filesystem::create_directories(dir + "/fixtures");
    auto write = [&](const std::string& rel, const json& j) {
        std::ofstream f(dir + "/" + rel);
        if (!f) throw input_error("cannot write " + dir + "/" + rel);
        f << j.dump(1) << "\n";
    };
    for (Case cs : {Case::E6, Case::E7, Case::E8}) {
        write("golden/orbit_roots_" + case_to_string(cs) + ".json", io::orbit_to_json(roots(cs)));
        if (cs != Case::E8)
            write("golden/orbit_coset_" + case_to_string(cs) + ".json",
                  io::orbit_to_json(minimal_coset(cs)));
    }
    for (Case cs : {Case::E6, Case::E7}) {
        const auto& chi = symbolic_chars(cs);
        for (std::size_t i = 0; i < chi.size(); ++i)
            write("golden/chi_" + case_to_string(cs) + "_" + std::to_string(i + 1) + ".json",
                  io::laurent_to_json(chi[i]));
    }
    write("golden/big_e7_polynomial.json", io::to_json(refdata::big_e7_polynomial()));
    for (Case cs : {Case::E7, Case::E8}) {
        json rows = json::array();
        for (const auto& r : refdata::degeneration_table(cs))
            rows.push_back(json{{"type", r.os_type}, {"fibral", r.fibral}, {"mw", r.mw}, {"xi", r.xi}});
        write("fixtures/degeneration_table_" + case_to_string(cs) + ".json", rows);
        const auto& cert = refdata::big_certificate(cs);
        json primes = json::array();
        for (const auto& [p, ct] : cert.expected)
            primes.push_back(json{{"prime", p}, {"cycle_type", io::to_json(ct)}});
        write("fixtures/certificate_" + cert.poly_id + ".json",
              json{{"case", case_to_string(cs)}, {"polynomial", cert.poly_id}, {"primes", primes}});
        // Split fixtures: lambda + printed abscissas + completed sections.
        const auto& w = refdata::split_lambda(cs);
        const auto curve = WeierstrassCurve::family(w);
        json sections = json::array();
        for (const auto& x : refdata::split_x_list(cs))
            sections.push_back(io::to_json(complete_section_y(curve, x)));
        write("fixtures/split_" + case_to_string(cs) + ".json",
              json{{"lambda", io::to_json(w)}, {"sections", sections}});
    }
    // Remark curves as curve/section fixtures.
    for (const auto& rc : refdata::remark_curves()) {
        write("fixtures/remark_curve_" + rc.id + ".json",
              json{{"curve", io::to_json(rc.curve)},
                   {"section", io::to_json(rc.section)},
                   {"torsion", rc.torsion},
                   {"fibers", rc.fiber_types}});
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for the multiplicative excellent families of types E6/E7/E8"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    unsigned jobs = 0;
    std::size_t term_cap = 0;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "markdown"}));
    app.add_option("--out", out.path, "write the report to a file");
    app.add_option("--jobs", jobs, "worker threads (default: MWX_JOBS or hardware)");
    app.add_option("--term-cap", term_cap, "laurent term budget");

    std::string case_str = "e7", lambda_path, xi_path, curve_path, cert_path, poly_path, dump_dir;
    std::vector<u64> primes;
    int row = 0;

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* vrel = verify->add_subcommand("relations", "character/coefficient relation suite");
    vrel->add_option("--case", case_str)->check(CLI::IsMember({"e6", "e7"}))->required();
    auto* vrt = verify->add_subcommand("roundtrip", "symbolic transform round trip");
    vrt->add_option("--case", case_str)->check(CLI::IsMember({"e6", "e7", "e8"}))->required();

    auto* build = app.add_subcommand("build", "construct specialization polynomials");
    build->require_subcommand(1);
    auto* bphi = build->add_subcommand("phi", "minimal-section polynomial");
    bphi->add_option("--case", case_str)->check(CLI::IsMember({"e6", "e7", "e8"}));
    bphi->add_option("--lambda", lambda_path, "Weierstrass data JSON")->required();
    bphi->add_option("--mod", primes, "run mod these primes instead of exactly");
    auto* bpsi = build->add_subcommand("psi", "height-2 polynomial (E7)");
    bpsi->add_option("--case", case_str)->check(CLI::IsMember({"e7"}));
    bpsi->add_option("--lambda", lambda_path)->required();
    bpsi->add_option("--mod", primes);

    auto* example = app.add_subcommand("example", "replay a published example");
    std::string which;
    example->add_option("name", which)->check(CLI::IsMember({"split-e7", "split-e8", "big-e7", "big-e8"}))->required();

    auto* degen = app.add_subcommand("degenerate", "vanishing-root analysis");
    degen->add_option("--case", case_str)->check(CLI::IsMember({"e7", "e8"}))->required();
    degen->add_option("--row", row, "single table row (surface type number)");
    degen->add_option("--xi", xi_path, "torus point JSON");

    auto* fibers = app.add_subcommand("fibers", "Kodaira fiber configuration");
    fibers->add_option("--lambda", lambda_path);
    fibers->add_option("--curve", curve_path);

    auto* galois = app.add_subcommand("galois", "cycle-type certificate check");
    galois->add_option("--cert", cert_path)->required();
    galois->add_option("--poly", poly_path);

    auto* report = app.add_subcommand("report", "run everything");
    bool full = false;
    report->add_flag("--full", full);

    auto* dump = app.add_subcommand("dump-golden", "write golden/fixture JSON files");
    dump->add_option("--dir", dump_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (jobs > 0) setenv("MWX_JOBS", std::to_string(jobs).c_str(), 1);
        if (term_cap > 0) set_laurent_term_cap(term_cap);

        if (vrel->parsed()) return cmd_verify_relations(case_from_string(case_str), out);
        if (vrt->parsed()) return cmd_verify_roundtrip(case_from_string(case_str), out);
        if (bphi->parsed()) return cmd_build(ElimVariant::phi, lambda_path, primes, out);
        if (bpsi->parsed()) return cmd_build(ElimVariant::psi, lambda_path, primes, out);
        if (example->parsed()) return cmd_example(which, out);
        if (degen->parsed()) return cmd_degenerate(case_from_string(case_str), row, xi_path, out);
        if (fibers->parsed()) return cmd_fibers(lambda_path, curve_path, out);
        if (galois->parsed()) return cmd_galois(cert_path, poly_path, out);
        if (report->parsed()) return cmd_report(out);
        if (dump->parsed()) return cmd_dump_golden(dump_dir);
        throw input_error("no subcommand");
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return exit_check;
    }
}

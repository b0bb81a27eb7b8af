#include "doctest.h"

#include <fstream>

#include "mwx/degeneration.hpp"
#include "mwx/serialize.hpp"

using namespace mwx;
using io::json;

#ifndef MWX_SOURCE_DIR
#define MWX_SOURCE_DIR "."
#endif

namespace {

json load(const std::string& rel) { return io::load_file(std::string(MWX_SOURCE_DIR) + "/data/" + rel); }

} // namespace

TEST_CASE("orbit golden files") {
    CHECK(io::orbit_to_json(roots(Case::E6)) == load("golden/orbit_roots_e6.json"));
    CHECK(io::orbit_to_json(roots(Case::E7)) == load("golden/orbit_roots_e7.json"));
    CHECK(io::orbit_to_json(roots(Case::E8)) == load("golden/orbit_roots_e8.json"));
    CHECK(io::orbit_to_json(minimal_coset(Case::E6)) == load("golden/orbit_coset_e6.json"));
    CHECK(io::orbit_to_json(minimal_coset(Case::E7)) == load("golden/orbit_coset_e7.json"));
}

TEST_CASE("character golden files") {
    for (Case cs : {Case::E6, Case::E7}) {
        const auto& chi = symbolic_chars(cs);
        for (std::size_t i = 0; i < chi.size(); ++i) {
            INFO(case_to_string(cs), " chi_", i + 1);
            CHECK(io::laurent_to_json(chi[i]) ==
                  load("golden/chi_" + case_to_string(cs) + "_" + std::to_string(i + 1) + ".json"));
        }
    }
}

TEST_CASE("fixture files mirror the embedded tables") {
    CHECK(io::to_json(refdata::big_e7_polynomial()) == load("golden/big_e7_polynomial.json"));
    for (Case cs : {Case::E7, Case::E8}) {
        const json rows = load("fixtures/degeneration_table_" + case_to_string(cs) + ".json");
        const auto& table = refdata::degeneration_table(cs);
        REQUIRE(rows.size() == table.size());
        for (std::size_t i = 0; i < table.size(); ++i) {
            CHECK(rows[i].at("type").get<int>() == table[i].os_type);
            CHECK(rows[i].at("fibral").get<std::string>() == table[i].fibral);
        }
        const json cert = load("fixtures/certificate_big-" + case_to_string(cs) + ".json");
        CHECK(cert.at("primes").size() == refdata::big_certificate(cs).expected.size());
        const json split = load("fixtures/split_" + case_to_string(cs) + ".json");
        CHECK(io::lambda_from_json(split.at("lambda")).lambda == refdata::split_lambda(cs).lambda);
        // every stored section still lies on the curve
        const auto curve = WeierstrassCurve::family(refdata::split_lambda(cs));
        for (const auto& sj : split.at("sections"))
            CHECK(verify_section(curve, io::section_from_json(sj)));
    }
}

#include "doctest.h"

#include <fstream>
#include <sstream>

#include "ainov/models.hpp"
#include "ainov/specfile.hpp"

using namespace ainov;

namespace {
const Cutoffs CUT4(4, Rat(3));

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}

TEST_SUITE("specfile") {

TEST_CASE("structure round-trips through parse and serialize") {
    CyclicStructure cs = frobenius_cyclic(models::graded_surface_like(2, {{Rat(1)}}), 4, CUT4);
    SpecFile spec = spec_from_structure(cs.S, &cs.Q);
    std::string text = serialize_spec(spec);

    SpecFile back = parse_spec(text);
    CHECK(serialize_spec(back) == text);  // byte-identical re-serialization

    AInftyStructure S2 = build_structure(back);
    CHECK(S2 == cs.S);
    auto Q2 = build_pairing(back, S2.module());
    REQUIRE(Q2.has_value());
    CHECK(*Q2 == cs.Q);
}

TEST_CASE("shipped fixtures re-serialize byte-identically") {
    for (const std::string name :
         {"ext4_t4.json", "ext4_t4_mutant.json", "uv_toy.json", "definite_s2.json",
          "definite_b2.json", "curved_completion.json", "hodge_diag4.json", "cayley_slag.json",
          "lattice_2111.json"}) {
        std::string text = slurp(std::string(FIXTURES_DIR) + "/" + name);
        SpecFile spec = parse_spec(text);
        CHECK(serialize_spec(spec) == text);
    }
}

TEST_CASE("curved structures and twists survive the file format") {
    AInftyStructure S = models::uv_toy(CUT4);
    Element b(S.module(), Rat(3));
    b.add_term(S.module()->id("u"), Nov::monomial(Rat(1, 2), Rat(1, 2), 0, Rat(3)));
    AInftyStructure T = twist(S, b);
    std::string text = serialize_spec(spec_from_structure(T));
    AInftyStructure back = build_structure(parse_spec(text));
    CHECK(back == T);
}

TEST_CASE("empty module section is rejected") {
    std::string text = R"json({
      "format_version": 1,
      "ring": {"energy_cutoff": "3", "arity_cutoff": 2},
      "module": {"basis": []}
    })json";
    CHECK_THROWS_WITH_AS(parse_spec(text), "module section has no basis", SpecError);
}

TEST_CASE("duplicate labels and dangling references are rejected") {
    std::string dup = R"json({
      "format_version": 1,
      "ring": {"energy_cutoff": "3", "arity_cutoff": 2},
      "module": {"basis": [{"label": "u", "degree": 1}, {"label": "u", "degree": 2}]}
    })json";
    CHECK_THROWS_AS(parse_spec(dup), SpecError);

    std::string dangling = R"json({
      "format_version": 1,
      "ring": {"energy_cutoff": "3", "arity_cutoff": 2},
      "module": {"basis": [{"label": "u", "degree": 1}]},
      "ops": [{"arity": 1, "inputs": ["w"], "output": {}}]
    })json";
    CHECK_THROWS_AS(parse_spec(dangling), SpecError);
}

TEST_CASE("negative energy exponents are rejected with the invariant's message") {
    std::string text = R"json({
      "format_version": 1,
      "ring": {"energy_cutoff": "3", "arity_cutoff": 2},
      "module": {"basis": [{"label": "v", "degree": 2}]},
      "ops": [{"arity": 0, "inputs": [], "output": {"v": "1*T^(-1/2)"}}]
    })json";
    try {
        parse_spec(text);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("negative energy exponent") != std::string::npos);
    }
}

TEST_CASE("JSON parse errors carry line and column") {
    std::string text = "{\n  \"ring\": {\n";
    try {
        parse_spec(text);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.line >= 2);
        CHECK(e.column >= 1);
    }
}

TEST_CASE("decimal rationals are rejected") {
    std::string text = R"json({
      "format_version": 1,
      "ring": {"energy_cutoff": "3.5", "arity_cutoff": 2},
      "module": {"basis": [{"label": "u", "degree": 1}]}
    })json";
    CHECK_THROWS_AS(parse_spec(text), SpecError);
}

TEST_CASE("geometry sections round-trip") {
    SpecFile spec;
    spec.cutoffs = Cutoffs(2, Rat(3));
    GeometrySection geo;
    RatMatrix metric(4, RatVector(4, Rat(0)));
    for (int i = 0; i < 4; ++i) metric[i][i] = frac(i + 1, 2);
    geo.metric = metric;
    geo.form = TwoForm{Rat(1), Rat(0), Rat(-1, 3), Rat(0), Rat(2), Rat(0)};
    IntMatrix lattice{{Int(2), Int(1)}, {Int(1), Int(1)}};
    geo.lattice = lattice;
    spec.geometry = geo;

    std::string text = serialize_spec(spec);
    SpecFile back = parse_spec(text);
    REQUIRE(back.geometry.has_value());
    CHECK(*back.geometry->metric == metric);
    CHECK(*back.geometry->form == *geo.form);
    CHECK(back.geometry->lattice->at(0).at(1) == Int(1));
    CHECK(serialize_spec(back) == text);
}

TEST_CASE("element literals") {
    auto M = std::make_shared<GradedModule>(
        std::vector<std::pair<std::string, int>>{{"u", 1}, {"v", 2}});
    Element e = parse_element(R"json({"u": "1*T^(1/2)", "v": "2"})json", M, Rat(3));
    CHECK(e.coeff(M->id("u")) == Nov::monomial(Rat(1), Rat(1, 2), 0, Rat(3)));
    CHECK(e.coeff(M->id("v")) == Nov::constant(Rat(2), Rat(3)));
    CHECK_THROWS_AS(parse_element(R"json({"w": "1"})json", M, Rat(3)), SpecError);
    CHECK_THROWS_AS(parse_element("[1,2]", M, Rat(3)), SpecError);
}

}  // TEST_SUITE

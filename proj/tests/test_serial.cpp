#include <doctest.h>

#include <cstdio>
#include <vector>

#include "rsrepair/serial.hpp"

using namespace rsrepair;

namespace {

bool same_element_indices(const Codeword& a, const Codeword& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].index() != b[i].index()) return false;
    return true;
}

}  // namespace

TEST_SUITE("serial") {

TEST_CASE("fields round trip including a custom modulus") {
    for (auto [p, d, ell] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u}}) {
        auto f = make_field(p, d, ell);
        auto back = field_from_json(field_to_json(*f));
        CHECK(back->characteristic() == f->characteristic());
        CHECK(back->base_degree() == f->base_degree());
        CHECK(back->ext_degree() == f->ext_degree());
        CHECK(back->modulus() == f->modulus());
    }
    auto alt = make_field(3, 1, 2, std::vector<unsigned>{2, 2, 1});
    auto back = field_from_json(field_to_json(*alt));
    CHECK(back->modulus() == std::vector<unsigned>{2, 2, 1});
}

TEST_CASE("elements travel as digit vectors, constant term first") {
    auto f = make_field(2, 1, 3);
    for (std::uint32_t i = 0; i < f->order(); ++i) {
        FieldElement a = f->element(i);
        json j = element_to_json(a);
        CHECK(element_from_json(*f, j) == a);
    }
    CHECK(element_to_json(f->element(5)) == json::parse("[1,0,1]"));
}

TEST_CASE("codes round trip with their evaluation points") {
    auto f = make_field(2, 1, 3);
    RsCode code = RsCode::full_length(f, 6);
    RsCode back = code_from_json(code_to_json(code));
    CHECK(back.dim() == 6);
    CHECK(back.length() == 8);
    REQUIRE(back.eval_points().size() == 8);
    for (unsigned j = 0; j < 8; ++j)
        CHECK(back.eval_points()[j].index() == code.eval_points()[j].index());
    // punctured codes survive too
    std::vector<FieldElement> pts{f->element(1), f->element(3), f->element(6)};
    RsCode small(f, pts, 2);
    RsCode small_back = code_from_json(code_to_json(small));
    CHECK(small_back.length() == 3);
    CHECK(small_back.eval_points()[1].index() == 3);
}

TEST_CASE("rs schemes round trip and revalidate on load") {
    auto f = make_field(2, 1, 2);
    RsCode code = RsCode::full_length(f, 2);
    SubfieldBasis b = SubfieldBasis::standard(*f);
    RepairScheme s = subspace_poly_scheme(code, default_w(*f, 1), b, 3);
    json j = scheme_to_json(s);
    CHECK(j.at("kind") == "rs");
    RepairScheme back = scheme_from_json(j);
    CHECK(back.target() == 3);
    CHECK(bandwidth(back) == bandwidth(s));
    REQUIRE(back.words().size() == s.words().size());
    for (std::size_t i = 0; i < s.words().size(); ++i)
        CHECK(same_element_indices(back.words()[i], s.words()[i]));
    // identical reloaded costs
    SubfieldBasis b2 = SubfieldBasis::standard(back.field());
    CHECK(io_cost(back, b2).total_reads == io_cost(s, b).total_reads);

    // duplicating a polynomial breaks the rank at the target on reload
    json broken = j;
    broken["polys"][0] = broken["polys"][1];
    CHECK_THROWS_AS(scheme_from_json(broken), std::invalid_argument);
}

TEST_CASE("linear schemes round trip through their generator") {
    auto f = make_field(2, 1, 2);
    std::vector<Codeword> dual_rows{
        {f->one(), f->zero(), f->one(), f->one()},
        {f->element(2), f->one(), f->zero(), f->one()}};
    LinearCode code = LinearCode::from_dual_span(f, dual_rows, 4);
    RepairScheme s = RepairScheme::for_linear(code, 1, dual_rows);
    json j = scheme_to_json(s);
    CHECK(j.at("kind") == "linear");
    RepairScheme back = scheme_from_json(j);
    CHECK(back.target() == 1);
    CHECK(bandwidth(back) == 3);
    CHECK(back.polys() == nullptr);

    json bad = j;
    bad["kind"] = "mystery";
    CHECK_THROWS_AS(scheme_from_json(bad), std::invalid_argument);
}

TEST_CASE("collections round trip scheme by scheme") {
    auto f = make_field(2, 1, 2);
    RsCode code = RsCode::full_length(f, 2);
    SchemeCollection c = collection_of_schemes(code, default_w(*f, 1),
                                               SubfieldBasis::standard(*f));
    json j = collection_to_json(c);
    SchemeCollection back = collection_from_json(j);
    REQUIRE(back.length() == 4);
    for (unsigned t = 1; t <= 4; ++t) {
        CHECK(back.schemes[t - 1].target() == t);
        CHECK(bandwidth(back.schemes[t - 1]) == bandwidth(c.schemes[t - 1]));
    }
    CHECK(is_symmetric(back));
}

TEST_CASE("codewords and bases bind to a matching context field only") {
    auto f = make_field(2, 1, 3);
    RsCode code = RsCode::full_length(f, 6);
    Codeword w = rs_encode(code, EPoly(*f, {f->element(3), f->element(5)}));
    json j = codeword_to_json(*f, w);
    Codeword back = codeword_from_json(*f, j);
    CHECK(same_element_indices(back, w));
    CHECK(rs_contains(code, back));

    SubfieldBasis b(*f, {f->element(3), f->element(6), f->element(7)});
    json jb = basis_to_json(b);
    SubfieldBasis b_back = basis_from_json(*f, jb);
    for (unsigned i = 0; i < 3; ++i) CHECK(b_back.elems()[i] == b.elems()[i]);

    // wrong context field: same p and ell but different modulus
    auto g = make_field(3, 1, 2);
    CHECK_THROWS_AS(codeword_from_json(*g, j), std::invalid_argument);
    CHECK_THROWS_AS(basis_from_json(*g, jb), std::invalid_argument);
}

TEST_CASE("format version is enforced everywhere") {
    auto f = make_field(2, 1, 2);
    RsCode code = RsCode::full_length(f, 2);
    json j = code_to_json(code);
    j["format_version"] = 2;
    CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);
    j.erase("format_version");
    CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);
}

TEST_CASE("cost serializations carry every row") {
    auto f = make_field(2, 1, 2);
    RsCode code = RsCode::full_length(f, 2);
    SubfieldBasis b = SubfieldBasis::standard(*f);
    RepairScheme s = subspace_poly_scheme(code, default_w(*f, 1), b, 3);
    CostReport cost = io_cost(s, b);

    json j = cost_to_json(cost);
    CHECK(j.at("target") == 3);
    CHECK(j.at("total_bandwidth") == 3);
    CHECK(j.at("total_reads") == 4);
    REQUIRE(j.at("helpers").size() == 3);
    CHECK(j["helpers"][1]["read_positions"] == json::parse("[1,2]"));

    CHECK(cost_to_csv(cost) ==
          "helper,bandwidth,reads,read_positions\n"
          "1,1,1,1\n"
          "2,1,2,1;2\n"
          "4,1,1,2\n");

    std::string table = cost_to_table(cost);
    CHECK(table.find("repair of position 3") != std::string::npos);
    CHECK(table.find("total") != std::string::npos);
}

TEST_CASE("verify reports serialize with wall time in the meta block only") {
    VerifyReport r;
    r.check = "demo";
    r.params["q"] = 2;
    r.counts["widgets"] = 7;
    json j = report_to_json(r, 123);
    CHECK(j.at("check") == "demo");
    CHECK(j.at("counts").at("widgets") == 7);
    CHECK(j.at("meta").at("wall_time_ms") == 123);
    CHECK(j.at("violations").empty());
    std::string text = report_to_text(r);
    CHECK(text.find("result: PASS") != std::string::npos);
    CHECK(text.find("wall") == std::string::npos);  // timing never leaks into text

    r.violations.push_back("one thing went wrong");
    text = report_to_text(r);
    CHECK(text.find("result: FAIL (1 violation)") != std::string::npos);
    CHECK(text.find("one thing went wrong") != std::string::npos);
}

TEST_CASE("transcripts serialize with their rows and verdict") {
    auto f = make_field(2, 1, 2);
    RsCode code = RsCode::full_length(f, 2);
    SubfieldBasis b = SubfieldBasis::standard(*f);
    RepairScheme s = subspace_poly_scheme(code, default_w(*f, 1), b, 3);
    Cluster cl = Cluster::with_standard_basis(code);
    Codeword w = rs_encode(code, EPoly(*f, {f->element(2), f->element(3)}));
    cl.load(w);
    RepairTranscript tr = simulate_repair(cl, s);
    json j = transcript_to_json(tr);
    CHECK(j.at("failed") == 3);
    CHECK(j.at("total_read") == 4);
    CHECK(j.at("total_sent") == 3);
    CHECK(j.at("success") == true);
    REQUIRE(j.at("helpers").size() == 3);
    CHECK(j["helpers"][0]["traces_sent"] == 1);
    std::string text = transcript_to_text(tr);
    CHECK(text.find("failed position: 3") != std::string::npos);
    CHECK(text.find("success: yes") != std::string::npos);
}

TEST_CASE("json files round trip through disk") {
    auto f = make_field(2, 1, 2);
    json j = field_to_json(*f);
    std::string path = "serial_test_roundtrip.json";
    save_json_file(path, j);
    json back = load_json_file(path);
    CHECK(back == j);
    CHECK_THROWS_AS(load_json_file("does_not_exist_anywhere.json"),
                    std::invalid_argument);
    std::remove(path.c_str());
}

}  // TEST_SUITE

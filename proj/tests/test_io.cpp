#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "whitney/families.hpp"
#include "whitney/io.hpp"

using namespace whitney;
using nlohmann::json;

TEST_CASE("poset JSON round trip with labels") {
    auto pi = partition_lattice(3);
    json j = poset_to_json(pi.poset, pi.labeling.get());
    CHECK(j["n"] == 5);
    CHECK(j["order"]["mode"] == "lex");
    PosetDocument doc = poset_from_json(j);
    CHECK(is_isomorphism(pi.poset, doc.poset, {0, 1, 2, 3, 4}));
    REQUIRE(doc.labeling);
    for (auto [a, b] : pi.poset.cover_pairs()) CHECK(doc.labeling->at(a, b) == pi.labeling->at(a, b));
    CHECK(poset_to_json(doc.poset, doc.labeling.get()).dump() == j.dump());
}

TEST_CASE("orders serialize") {
    auto g = LabelOrder::ordinal_sum_gamma(3);
    LabelOrder back = order_from_json(order_to_json(g));
    CHECK(back.mode() == LabelOrder::Mode::OrdinalSumGamma);
    CHECK(back.gamma_n() == 3);
    auto c = LabelOrder::custom({{Label{1}, Label{2}}});
    CHECK(order_from_json(order_to_json(c)).less(Label{1}, Label{2}));
    CHECK_THROWS_AS(order_from_json(json{{"mode", "bogus"}}), WhitneyError);
}

TEST_CASE("malformed documents") {
    auto kind = [](const json& j) {
        try {
            poset_from_json(j);
        } catch (const WhitneyError& e) {
            return e.kind();
        }
        return ErrorKind::InvalidInput;
    };
    CHECK(kind(json::array()) == ErrorKind::ParseError);
    CHECK(kind(json{{"n", 2}}) == ErrorKind::ParseError);
    CHECK(kind(json{{"n", 2}, {"covers", {{0, 5}}}}) == ErrorKind::InvalidInput);
    CHECK(kind(json{{"n", 2}, {"covers", {{0, 1}, {1, 0}}}}) == ErrorKind::CycleDetected);
    CHECK(kind(json{{"n", 2}, {"covers", {{0, 1}}}, {"labels", json::object()}}) == ErrorKind::MissingLabel);
    CHECK(kind(json{{"n", 2}, {"covers", {{0, 1}}}, {"labels", {{"0-1", "x"}}}}) == ErrorKind::ParseError);
}

TEST_CASE("reading a file") {
    const char* path = "whitney_io_chain3.json";
    {
        std::ofstream out(path);
        out << R"({"n": 3, "covers": [[0,1],[1,2]], "names": {"0": "a", "1": "b", "2": "c"}})";
    }
    PosetDocument doc = read_poset_file(path);
    CHECK(doc.poset.name(2) == "c");
    CHECK_FALSE(doc.labeling);
    std::remove(path);
    CHECK_THROWS_AS(read_poset_file("does-not-exist.json"), WhitneyError);
}

TEST_CASE("DOT output") {
    auto pi = partition_lattice(3);
    std::string dot = poset_to_dot(pi.poset, pi.labeling.get(), "Pi3");
    CHECK(dot.find("digraph \"Pi3\"") == 0);
    CHECK(dot.find("label=\"(1,2)\"") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("quasisymmetric JSON") {
    QSymFundamental q = QSymFundamental::zero(3);
    q.coeffs = {5, 5, 5, 1};
    json j = qsym_to_json(q);
    CHECK(j["coeffs"][""] == 5);
    CHECK(j["coeffs"]["1,2"] == 1);
    CHECK(qsym_from_json(j) == q);
    CHECK_THROWS_AS(qsym_from_json(json{{"n", 2}, {"coeffs", {{"1,2", 1}}}}), WhitneyError);
}

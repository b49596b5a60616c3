// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fairsquare.h"

namespace {

const char* kUniform = R"({"xs": [0, 1], "ys": [0, 1], "cells": [[1]]})";
const char* kCorner = R"({"xs": [0, 0.5, 1], "ys": [0, 0.5, 1], "cells": [[0, 0], [0, 1]]})";

std::string take(char* s) {
    std::string out = s ? s : "";
    fsq_string_free(s);
    return out;
}

} // namespace

TEST_CASE("divide, serialize and verify") {
    fsq_instance* in = nullptr;
    REQUIRE(fsq_instance_new(R"({"kind": "square", "side": 1})", &in) == FSQ_OK);
    CHECK(fsq_instance_add_agent(in, 1, kUniform) == FSQ_OK);
    CHECK(fsq_instance_add_agents(in, kCorner) == FSQ_OK);
    CHECK(fsq_instance_agent_count(in) == 2);

    fsq_report* rep = nullptr;
    REQUIRE(fsq_divide(in, "square-two", nullptr, &rep) == FSQ_OK);
    CHECK(fsq_report_agent_count(rep) == 2);
    CHECK(fsq_report_bound(rep) == doctest::Approx(0.25));
    CHECK(fsq_report_min_fraction(rep) == doctest::Approx(0.25));
    CHECK(fsq_report_agent_id(rep, 1) == 2);
    CHECK(fsq_report_fraction(rep, 1) == doctest::Approx(1));
    CHECK(fsq_report_fraction(rep, 9) == 0);

    char* problems = nullptr;
    CHECK(fsq_report_verify(rep, in, &problems) == FSQ_OK);
    CHECK(take(problems).empty());

    char* js = nullptr;
    REQUIRE(fsq_report_to_json(rep, &js) == FSQ_OK);
    std::string text = take(js);
    CHECK(text.find("\"schema\": \"fairsquare/1\"") != std::string::npos);
    fsq_report* back = nullptr;
    REQUIRE(fsq_report_from_json(text.c_str(), &back) == FSQ_OK);
    CHECK(fsq_report_verify(back, in, nullptr) == FSQ_OK);
    char* svg1 = nullptr;
    char* svg2 = nullptr;
    REQUIRE(fsq_report_svg(rep, &svg1) == FSQ_OK);
    REQUIRE(fsq_report_svg(back, &svg2) == FSQ_OK);
    CHECK(take(svg1) == take(svg2));

    fsq_report_free(back);
    fsq_report_free(rep);

    REQUIRE(fsq_divide(in, nullptr, nullptr, &rep) == FSQ_OK);
    CHECK(fsq_report_bound(rep) == doctest::Approx(0.25));
    fsq_report_free(rep);

    char* ij = nullptr;
    REQUIRE(fsq_instance_to_json(in, &ij) == FSQ_OK);
    fsq_instance* in2 = nullptr;
    CHECK(fsq_instance_from_json(take(ij).c_str(), &in2) == FSQ_OK);
    CHECK(fsq_instance_agent_count(in2) == 2);
    fsq_instance_free(in2);
    fsq_instance_free(in);
}

TEST_CASE("errors carry a status and a message") {
    fsq_instance* in = nullptr;
    CHECK(fsq_instance_new("{", &in) == FSQ_ERR_INVALID);
    CHECK(std::string(fsq_last_error()).find("malformed") != std::string::npos);
    CHECK(fsq_instance_new(nullptr, &in) == FSQ_ERR_INVALID);

    REQUIRE(fsq_instance_new(R"({"kind": "half-plane"})", &in) == FSQ_OK);
    CHECK(fsq_instance_add_agent(in, 1, R"({"xs": [0, 1], "ys": [0, 1], "cells": [[1, 1]]})") == FSQ_ERR_INVALID);
    CHECK(fsq_instance_add_agent(in, 1, R"({"xs": [-1, 1], "ys": [0, 1], "cells": [[1]]})") == FSQ_OK);
    CHECK(fsq_instance_add_agent(in, 2, R"({"xs": [-1, 1], "ys": [0, 1], "cells": [[1]]})") == FSQ_OK);
    fsq_report* rep = nullptr;
    CHECK(fsq_divide(in, "four-walls", nullptr, &rep) == FSQ_ERR_INVALID);
    CHECK(std::string(fsq_last_error()).find("\"1 wall\"") != std::string::npos);
    CHECK(fsq_divide(in, "nonsense", nullptr, &rep) == FSQ_ERR_INVALID);
    CHECK(fsq_divide(in, nullptr, "hexagons", &rep) == FSQ_ERR_INVALID);
    REQUIRE(fsq_divide(in, nullptr, nullptr, &rep) == FSQ_OK);
    CHECK(fsq_report_min_fraction(rep) >= 0.5 - 1e-9);
    fsq_report_free(rep);
    fsq_instance_free(in);

    CHECK(fsq_report_from_json("{\"schema\": \"fairsquare/1\"}", &rep) == FSQ_ERR_INVALID);
    fsq_instance_free(nullptr);
    fsq_report_free(nullptr);
    fsq_pools_free(nullptr);
    CHECK(fsq_report_agent_count(nullptr) == 0);
}

TEST_CASE("tampered report fails verification") {
    fsq_instance* in = nullptr;
    REQUIRE(fsq_instance_new(R"({"kind": "square", "side": 1})", &in) == FSQ_OK);
    fsq_instance_add_agent(in, 1, kUniform);
    fsq_instance_add_agent(in, 2, kUniform);
    fsq_report* rep = nullptr;
    REQUIRE(fsq_divide(in, "square-two", nullptr, &rep) == FSQ_OK);
    char* js = nullptr;
    fsq_report_to_json(rep, &js);
    std::string text = take(js);
    fsq_report_free(rep);
    auto at = text.find("\"rects\"");
    REQUIRE(at != std::string::npos);
    // grow the first piece to the whole cake so it overlaps the second
    auto open = text.find('[', text.find('[', at) + 1);
    auto close = text.find(']', open);
    text.replace(open, close - open + 1, "[0.0, 0.0, 1.0, 1.0]");
    REQUIRE(fsq_report_from_json(text.c_str(), &rep) == FSQ_OK);
    char* problems = nullptr;
    CHECK(fsq_report_verify(rep, in, &problems) == FSQ_ERR_GUARANTEE);
    CHECK_FALSE(take(problems).empty());
    fsq_report_free(rep);
    fsq_instance_free(in);
}

TEST_CASE("pools and probe") {
    fsq_pools* p = nullptr;
    REQUIRE(fsq_pools_new("quarter-plane", 3, 0.01, &p) == FSQ_OK);
    CHECK(fsq_pools_count(p) == 5);
    CHECK(fsq_pools_bound(p) == doctest::Approx(0.2));
    double best = 1;
    REQUIRE(fsq_pools_probe(p, 3, 300, 1, &best) == FSQ_OK);
    CHECK(best <= 0.2 + 1e-3);

    fsq_instance* in = nullptr;
    REQUIRE(fsq_pools_instance(p, 3, &in) == FSQ_OK);
    fsq_report* rep = nullptr;
    REQUIRE(fsq_divide(in, "staircase", nullptr, &rep) == FSQ_OK);
    CHECK(fsq_report_min_fraction(rep) >= 0.2 - 1e-6);
    fsq_report_free(rep);
    fsq_instance_free(in);

    char* js = nullptr;
    REQUIRE(fsq_pools_to_json(p, &js) == FSQ_OK);
    std::string dens = take(js);
    CHECK(fsq_probe(dens.c_str(), R"({"kind": "quarter-plane"})", 3, 100, 2, &best) == FSQ_OK);
    CHECK(best <= 0.2 + 1e-3);
    fsq_pools_free(p);

    CHECK(fsq_pools_new("triangle", 3, 0.01, &p) == FSQ_ERR_INVALID);
    CHECK(fsq_pools_new("square", 1, 0.01, &p) == FSQ_ERR_INVALID);

    char* names = nullptr;
    REQUIRE(fsq_procedure_names(&names) == FSQ_OK);
    CHECK(take(names).find("four-walls\n") != std::string::npos);
    CHECK(std::string(fsq_version()).size() > 0);
}

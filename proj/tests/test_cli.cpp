#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rnckit/cli.hpp"
#include "rnckit/construct.hpp"
#include "rnckit/serialize.hpp"
#include "test_util.hpp"

using namespace rnckit;
using namespace testutil;
using cli::ExitCode;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RNCKIT_TEST_DATA) + "/" + name; }

int code_of(ExitCode c) { return static_cast<int>(c); }

Json field(const Run& r, const std::string& key) { return parse_document(r.out).at(key); }

}  // namespace

TEST_CASE("construct on three points and three chords of the moment curve") {
    auto r = run({"construct", data("p3_three_points.json")});
    REQUIRE(r.code == 0);
    auto doc = parse_document(r.out);
    CHECK(doc["version"] == 1);
    CHECK(doc["result"] == "curve");
    auto cert = decode<ExistenceCertificate>(doc["certificate"]);
    CHECK(curve_equals(cert.curve, ParamRnc::moment(3)));
    CHECK(curve_equals(cert.det, ParamRnc::moment(3)));
    CHECK(verify_certificate(cert));

    auto text = run({"construct", data("p3_three_points.json"), "--format", "text"});
    CHECK(text.code == 0);
    CHECK(text.out.find("verification: passed") != std::string::npos);
}

TEST_CASE("obstruct on two lines and four points in P3") {
    auto r = run({"obstruct", data("p3_two_lines.json")});
    CHECK(r.code == code_of(ExitCode::no_curve));
    auto cert = decode<ObstructionCertificate>(field(r, "certificate"));
    Form expected(4, 2);
    expected.coeff(monomial_basis(4, 2).index_of({0, 1, 1, 0})) = 1;
    expected.coeff(monomial_basis(4, 2).index_of({1, 0, 0, 1})) = -1;
    CHECK(cert.quadric == expected);
    CHECK(cert.excluded_value == -1);
    CHECK(verify_certificate(cert));

    // construct reaches the same certificate through dispatch
    auto c = run({"construct", data("p3_two_lines.json")});
    CHECK(c.code == code_of(ExitCode::no_curve));
    CHECK(field(c, "result") == "obstruction");
}

TEST_CASE("expect 3 4 2") {
    auto r = run({"expect", "3", "4", "2"});
    CHECK(r.code == 0);
    auto a = decode<CountAnalysis>(field(r, "analysis"));
    CHECK(a.verdict == CountVerdict::finite_expected);
    CHECK(a.classification == Classification::not_exists);
    auto six = decode<CountAnalysis>(field(run({"expect", "3", "0", "6"}), "analysis"));
    CHECK(six.count == 6);
}

TEST_CASE("hilbert on seven double points in P4") {
    auto r = run({"hilbert", data("p4_seven_points.json")});
    REQUIRE(r.code == 0);
    auto report = decode<PostulationReport>(field(r, "report"));
    CHECK(report.total_monomials == 35);
    CHECK(report.actual == 34);
    auto explanation = field(r, "explanation");
    CHECK(explanation["intersection_lower_bound"] == 14);
    CHECK(explanation["bezout_bound"] == 12);
    CHECK_FALSE(explanation["hypersurface"].is_null());
}

TEST_CASE("ah-suite lists the exceptional schemes") {
    auto r = run({"ah-suite", "--seed", "3"});
    REQUIRE(r.code == 0);
    auto rows = field(r, "rows");
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        auto report = row["report"];
        CHECK((report["deficit"] == 1) == row["exceptional"].get<bool>());
    }
}

TEST_CASE("random-datum is seeded and its oracle curve is reconstructed") {
    auto a = run({"random-datum", "4", "3", "4", "--seed", "17", "--oracle"});
    auto b = run({"random-datum", "4", "3", "4", "--seed", "17", "--oracle"});
    auto c = run({"random-datum", "4", "3", "4", "--seed", "18", "--oracle"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    auto oracle = decode_curve(field(a, "oracle"));

    // the emitted document is itself a valid construct input, read from stdin
    auto r = run({"construct"}, a.out);
    REQUIRE(r.code == 0);
    CHECK(curve_equals(decode<ExistenceCertificate>(field(r, "certificate")).curve, oracle));
    CHECK(run({"construct"}, a.out).out == r.out);
}

TEST_CASE("verify reports on a supplied curve") {
    auto doc = parse_document(run({"random-datum", "3", "4", "1", "--oracle", "--seed", "5"}).out);
    auto ok = run({"verify"}, dump_document(Json{{"n", doc["n"]}, {"points", doc["points"]},
                                                  {"spaces", doc["spaces"]}, {"curve", doc["oracle"]}}));
    CHECK(ok.code == 0);
    CHECK(field(ok, "report")["passed"] == true);

    Json moved = doc;
    moved["points"][0] = Json::array({"1", "0", "0", "7/3"});
    auto bad = run({"verify"}, dump_document(Json{{"n", moved["n"]}, {"points", moved["points"]},
                                                   {"spaces", moved["spaces"]}, {"curve", moved["oracle"]}}));
    CHECK(bad.code == code_of(ExitCode::verification_failed));
    CHECK(field(bad, "report")["point_params"][0].is_null());
}

TEST_CASE("equivalent compares a datum with its projective image") {
    Rng rng(351);
    auto curve = random_curve(3, rng);
    auto d = forward_datum(curve, 3, 3, rng);
    auto image = apply_transform(random_transform(3, rng), d);
    const std::string fa = "/tmp/rnckit_cli_a.json", fb = "/tmp/rnckit_cli_b.json";
    {
        std::ofstream(fa) << dump_document(encode(d));
        std::ofstream(fb) << dump_document(encode(image));
    }
    auto r = run({"equivalent", fa, fb});
    CHECK(r.code == 0);
    CHECK(field(r, "equivalent") == true);
    CHECK(field(r, "signatures")[0] == field(r, "signatures")[1]);

    auto moved = image;
    moved.points[0] = ProjPoint(vec({1, 2, 3, 5}));
    std::ofstream(fb) << dump_document(encode(moved));
    auto s = run({"equivalent", fa, fb});
    CHECK(s.code == 0);
    CHECK(field(s, "equivalent") == false);
}

TEST_CASE("every failure has its own exit code") {
    // malformed documents
    CHECK(run({"construct"}, "{\"n\": 3, \"points\": [[1, \"1/0\", 0, 0]]}").code == code_of(ExitCode::parse));
    CHECK(run({"construct"}, "{\"n\": 3,").code == code_of(ExitCode::parse));
    CHECK(run({"construct"}, "[1, 2]").code == code_of(ExitCode::parse));
    CHECK(run({"construct"}, "{\"version\": 7, \"n\": 3}").code == code_of(ExitCode::parse));
    auto parse = run({"construct"}, "{\"n\": 3, \"points\": [[1, \"1/0\", 0, 0]]}");
    CHECK(field(parse, "error")["location"] == "$.points[0][1]");

    // four of six points on a plane
    auto dependent = run({"construct"}, R"({"n": 3, "points": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[1,1,1,0],[0,0,0,1],[1,2,3,4]]})");
    CHECK(dependent.code == code_of(ExitCode::not_generic));
    CHECK(field(dependent, "error")["witness"] == Json::array({0, 1, 2, 3}));

    CHECK(run({"construct"}, R"({"n": 4, "spaces": [
        {"forms": [[1,0,0,0,0],[0,1,0,0,0]]}, {"forms": [[0,1,0,0,0],[0,0,1,0,0]]},
        {"forms": [[0,0,1,0,0],[0,0,0,1,0]]}, {"forms": [[0,0,0,1,0],[0,0,0,0,1]]},
        {"forms": [[1,0,0,0,1],[0,1,1,0,0]]}, {"forms": [[1,1,0,0,0],[0,0,1,0,1]]},
        {"forms": [[1,0,1,0,0],[0,1,0,1,1]]}]})")
              .code == code_of(ExitCode::unsupported));
    CHECK(run({"construct"}, R"({"n": 3, "points": [[1,0,0,0]]})").code == code_of(ExitCode::bad_shape));
    CHECK(run({"expect", "2", "5", "0"}).code == code_of(ExitCode::bad_shape));

    auto fails = parse_document(run({"random-datum", "3", "4", "2"}).out);
    fails["points"] = Json::array({Json::array({1, 1, 1, 1}), Json::array({1, 2, 4, 8}), Json::array({1, 3, 9, 27}),
                                   Json::array({1, 5, 25, 125})});
    fails["spaces"] = parse_document(R"([{"forms": [[1,0,0,0],[0,1,0,0]]}, {"forms": [[0,0,1,0],[0,0,0,1]]}])");
    CHECK(run({"obstruct"}, dump_document(fails)).code == code_of(ExitCode::obstruction_fails));

    CHECK(run({"construct", "/nonexistent/datum.json"}).code == code_of(ExitCode::input));
    CHECK(run({"frobnicate"}).code == code_of(ExitCode::usage));
    CHECK(run({}).code == code_of(ExitCode::usage));
    CHECK(run({"expect", "3", "x", "2"}).code == code_of(ExitCode::usage));
    CHECK(run({"--format", "yaml", "expect", "3", "4", "2"}).code == code_of(ExitCode::usage));
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("text errors go to the diagnostic stream only") {
    auto r = run({"--format", "text", "construct"}, "{\"n\": 3,");
    CHECK(r.code == code_of(ExitCode::parse));
    CHECK(r.out.empty());
    CHECK(r.err.find("malformed") != std::string::npos);
}

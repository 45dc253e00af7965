#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"
#include "fixtures.hpp"

using namespace l3kit;

#ifndef L3KIT_DATA_DIR
#define L3KIT_DATA_DIR "data"
#endif

namespace {

Manifest fixture_manifest() {
    Manifest m;
    m.objects.emplace("a1", wrap_algebra(fixtures::a1()));
    m.objects.emplace("adj", wrap_representation(fixtures::a1_adjoint(), "a1"));
    TwistedSetup s = fixtures::t_setup();
    m.objects.emplace("phi", wrap_cochain(s.phi.phi, "adj"));
    m.objects.emplace("t", wrap_operator(fixtures::t_op()));
    m.objects.emplace("n", wrap_operator(fixtures::n_op()));
    m.objects.emplace("r", wrap_operator(fixtures::r_op()));
    ManifestObject def;
    def.type = "deformation";
    def.rep_ref = "adj";
    def.phi_ref = "phi";
    def.terms = {fixtures::t_op(), zero_operator(2, 2)};
    m.objects.emplace("def1", std::move(def));
    return m;
}

} // namespace

TEST_CASE("empty manifest") {
    Manifest m = parse_manifest(R"({"schema_version":"1","objects":{}})");
    CHECK(m.objects.empty());
    CHECK(save_manifest(m) == "{\n  \"schema_version\": \"1\",\n  \"objects\": {}\n}\n");
}

TEST_CASE("save/load round trip is byte-identical") {
    Manifest m = fixture_manifest();
    std::string once = save_manifest(m);
    Manifest re = parse_manifest(once);
    std::string twice = save_manifest(re);
    CHECK(once == twice);
    Manifest re2 = parse_manifest(twice);
    CHECK(save_manifest(re2) == twice);

    // resolved objects survive the trip
    CHECK(re.objects.at("a1").algebra.bracket == fixtures::a1().bracket);
    CHECK(re.objects.at("adj").rep.rho_l == fixtures::a1_adjoint().rho_l);
    CHECK(re.objects.at("phi").cochain.coeffs == fixtures::t_setup().phi.phi.coeffs);
    CHECK(re.objects.at("def1").terms.size() == 2);
}

TEST_CASE("the shipped fixture file loads and is canonical") {
    Manifest m = load_manifest(std::string(L3KIT_DATA_DIR) + "/fixtures.json");
    CHECK(m.objects.count("a1") == 1);
    CHECK(m.objects.count("adj") == 1);
    CHECK(m.objects.count("phi") == 1);
    std::string text = save_manifest(m);
    CHECK(save_manifest(parse_manifest(text)) == text);
    // checked against the in-code fixtures
    CHECK(m.objects.at("a1").algebra.bracket == fixtures::a1().bracket);
    CHECK(m.objects.at("t").op.matrix == fixtures::t_op().matrix);
}

TEST_CASE("malformed manifests carry locations") {
    CHECK_THROWS_AS(parse_manifest("{"), manifest_error);
    CHECK_THROWS_AS(parse_manifest(R"({"objects":{}})"), manifest_error);
    CHECK_THROWS_AS(parse_manifest(R"({"schema_version":"2","objects":{}})"), manifest_error);

    auto check_message = [](const std::string& text, const std::string& needle) {
        try {
            parse_manifest(text);
            FAIL("expected a manifest error");
        } catch (const manifest_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    check_message(
        R"({"schema_version":"1","objects":{"a":{"type":"algebra","dim":2,"bracket":[{"i":0,"j":0,"k":0,"l":1,"c":"1/0"}]}}})",
        "objects.a.bracket[0].c");
    check_message(
        R"({"schema_version":"1","objects":{"a":{"type":"algebra","dim":2,"bracket":[{"i":0,"j":0,"k":0,"l":5,"c":"1"}]}}})",
        "out of range");
    check_message(
        R"({"schema_version":"1","objects":{"r":{"type":"representation","algebra":"nope","dimV":1,"rho_l":[],"rho_m":[],"rho_r":[]}}})",
        "dangling reference");
    check_message(R"({"schema_version":"1","objects":{"x":{"type":"widget"}}})", "unknown type");
}

TEST_CASE("typed access") {
    Manifest m = fixture_manifest();
    CHECK_THROWS_AS(get_object(m, "missing", "algebra"), manifest_error);
    CHECK_THROWS_AS(get_object(m, "t", "algebra"), manifest_error);
    CHECK(get_object(m, "t", "operator").op.src_dim == 2);
}

TEST_CASE("commands over a manifest") {
    Manifest m = fixture_manifest();

    CommandOptions opts;
    opts.objects = {"a1"};
    CommandOutcome r = run_command(m, "check-3leibniz", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["ok"] == true);

    opts.objects = {"adj", "phi", "t"};
    r = run_command(m, "check-trbo", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["checked"] == 8);

    // a failing check exits 1 and cites the equation with one-based labels
    Manifest bad = m;
    ManifestObject t2 = bad.objects.at("t");
    t2.op.matrix.at(0, 1) = Scalar(2);
    bad.objects["t2"] = t2;
    opts.objects = {"adj", "phi", "t2"};
    r = run_command(bad, "check-trbo", opts);
    CHECK(r.exit_code == 1);
    CHECK(r.body["ok"] == false);
    REQUIRE(r.body["violations"].size() > 0);
    const std::string text = r.body["violations"][0]["text"].get<std::string>();
    CHECK(text.find("equation 3.1") != std::string::npos);
    CHECK(text.find("e1") != std::string::npos);

    // constructions emit appendable artifacts
    opts.objects = {"adj", "phi"};
    opts.out_name = "tw";
    r = run_command(m, "twisted-semidirect", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["objects"]["tw"]["type"] == "algebra");
    CHECK(r.body["objects"]["tw"]["dim"] == 4);

    // the zero-tail deformation extends by the zero operator
    opts = CommandOptions{};
    opts.objects = {"def1"};
    r = run_command(m, "extend", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["extendable"] == true);
    for (const auto& row : r.body["objects"]["result"]["matrix"])
        for (const auto& entry : row) CHECK(entry.get<std::string>() == "0");
    CHECK(r.body["objects"]["result_deformation"]["terms"].size() == 3);

    opts.objects = {"adj"};
    opts.degree = 1;
    r = run_command(m, "cohomology", opts);
    CHECK(r.body["dim"] == 2);

    opts.objects = {"adj", "phi", "t"};
    opts.degree = 2;
    r = run_command(m, "cohomology-T", opts);
    CHECK(r.body["dim"] == 3);

    CHECK_THROWS_AS(run_command(m, "no-such-command", CommandOptions{}), manifest_error);
    CommandOptions missing;
    missing.objects = {"ghost"};
    CHECK_THROWS_AS(run_command(m, "check-3leibniz", missing), manifest_error);
}

TEST_CASE("ns and mc commands round through JSON") {
    Manifest m = fixture_manifest();
    CommandOptions opts;
    opts.objects = {"adj", "phi", "t"};
    CommandOutcome r = run_command(m, "ns-from-trbo", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["objects"]["result"]["type"] == "ns");

    r = run_command(m, "mc-residual", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["is_zero"] == true);

    opts.objects = {"a1", "n"};
    r = run_command(m, "check-nijenhuis", opts);
    CHECK(r.exit_code == 0);

    opts.objects = {"a1", "r"};
    r = run_command(m, "check-reynolds", opts);
    CHECK(r.exit_code == 0);

    opts.objects = {"a1", "n"};
    r = run_command(m, "ns-from-nijenhuis", opts);
    CHECK(r.exit_code == 0);

    opts.objects = {"a1"};
    opts.lambda = "2";
    LinearOperator b{2, 2, Scalar(-2) * Matrix::identity(2)};
    Manifest m2 = m;
    m2.objects.emplace("b", wrap_operator(b));
    opts.objects = {"a1", "b"};
    r = run_command(m2, "ns-from-weighted", opts);
    CHECK(r.exit_code == 0);
    CHECK(r.body["objects"]["result"]["type"] == "ns");
}

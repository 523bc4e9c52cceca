#include <doctest.h>

#include "noiselab/config.hpp"
#include "noiselab/field_io.hpp"

using namespace noiselab;

TEST_CASE("minimal config gets the documented defaults") {
    const auto cfg = parse_config_text("experiment = lln_besov\nd = 1\n");
    CHECK(cfg.experiment == "lln_besov");
    CHECK(cfg.d == 1);
    CHECK(cfg.p == 2.0);
    CHECK(cfg.seed == 0);
    CHECK(cfg.trials == 100);
    CHECK(cfg.jmax == 12);
    CHECK(cfg.cutoff == 8192);
    CHECK(cfg.profile.kind == ProfileKind::Sharp);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("sections, comments, inf values and tolerance overrides") {
    const std::string text = R"(
# frontier sweep
experiment = frontier
space = besov
q = inf
s_list = -0.5, -0.25, 0
[smooth]
a = 1.5
b = 1.9
[tol]
slope = 0.04
)";
    auto cfg = parse_config_text(text);
    CHECK(std::isinf(cfg.q));
    CHECK(cfg.s_list.size() == 3);
    CHECK(cfg.profile.smooth_a == doctest::Approx(1.5));
    CHECK(cfg.tol("slope", 0.05) == doctest::Approx(0.04));
    apply_config_override(cfg, "partition", "smooth");
    CHECK(cfg.profile.kind == ProfileKind::Smooth);
}

TEST_CASE("unknown keys and malformed values are schema errors") {
    CHECK_THROWS_AS(parse_config_text("nonsense = 1\n"), SchemaError);
    CHECK_THROWS_AS(parse_config_text("trials = soon\n"), SchemaError);
    CHECK_THROWS_AS(parse_config_text("experiment = bogus\n"), SchemaError);
    CHECK_THROWS_AS(parse_config_text("q 2\n"), SchemaError);
    CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), MissingFileError);
}

TEST_CASE("coupling violation is a validation error, not a schema error") {
    auto cfg = parse_config_text("experiment = lln_besov\njmax = 12\ncutoff = 100\n");
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("field json round trip") {
    auto f = sample_white_noise(2, 3, {12, 5});
    const auto text = field_to_json(f);
    const auto g = field_from_json(text);
    CHECK(g.dim() == 2);
    CHECK(g.cutoff() == 3);
    bool equal = true;
    f.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        equal = equal && std::abs(g.coeff(k) - v) < 1e-15;
    });
    CHECK(equal);
}

TEST_CASE("field json rejects out-of-ball coefficients and bad shapes") {
    CHECK_THROWS_AS(field_from_json("{\"d\":1,\"N\":2,\"coefficients\":[[[3],1,0]]}"), ConfigError);
    CHECK_THROWS_AS(field_from_json("{\"d\":1,\"N\":2}"), ConfigError);
    CHECK_THROWS_AS(field_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(field_from_json("{\"d\":2,\"N\":2,\"coefficients\":[[[1],1,0]]}"), ConfigError);
}

TEST_CASE("canonical config string covers the sweep lists") {
    auto cfg = parse_config_text("experiment = frontier\ns_list = -0.5,0\n");
    const auto s1 = config_to_string(cfg);
    cfg.s_list.push_back(0.25);
    const auto s2 = config_to_string(cfg);
    CHECK(s1 != s2);
}

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "doctest.h"
#include "emberflow/export_io.hpp"
#include "emberflow/scenario.hpp"
#include "support/oracles.hpp"

using namespace emberflow;
namespace fs = std::filesystem;
namespace {

fs::path temp_dir(const char* tag) {
    const fs::path p = fs::temp_directory_path() /
                       (std::string("emberflow_test_") + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int line_count(const std::string& text) {
    int n = 0;
    for (const char ch : text) {
        if (ch == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("an empty document yields the documented defaults") {
    const ScenarioConfig cfg = parse_scenario_config("");
    CHECK(cfg == ScenarioConfig{});
    CHECK(cfg.nx == 100);
    CHECK(cfg.c == 1e-3);
    CHECK(cfg.theta0 == 1.0);
    CHECK(cfg.omega == std::array<double, 2>{0.0, 0.0});
    CHECK(cfg.beta.empty());
    const Scenario s = build_scenario(cfg);
    CHECK(s.grid.nx == 100);
    CHECK(s.grid.dx == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(s.grid.origin.x() == doctest::Approx(0.005).epsilon(1e-15));
}

TEST_CASE("a fully specified document parses field by field") {
    const std::string doc = R"(# full configuration
domain.nx = 48
domain.ny = 64
domain.lx = 2.0
domain.ly = 1.5
diffusion.c = 0.002

ignition.type = fuel
ignition.theta_bar = 0.9        # constitutional threshold
ignition.fuel = 0.25
ignition.theta_floor = theta_bar

kernel.type = bump
kernel.radius = 0.08
kernel.mass = 1.5

wind.type = table
wind.table = [[0, -1, 0.4], [0.5, 0, 0]]
wind.negative_part = false

pyro.alpha = 1.5
pyro.eps = 1e-7
pyro.beta = [[1, 0], [2, 0.3]]

initial.type = vshape
initial.vertex = [0.6, 0.7]
initial.angle_degrees = 25
initial.arm_length = 0.3
initial.width = 0.05
initial.peak = 1.8

run.t_end = 0.75
run.snapshot_every = 0.25
run.front_level = 0.95
)";
    const ScenarioConfig cfg = parse_scenario_config(doc);
    CHECK(cfg.nx == 48);
    CHECK(cfg.ny == 64);
    CHECK(cfg.lx == 2.0);
    CHECK(cfg.ignition_type == "fuel");
    CHECK(cfg.theta_bar == 0.9);
    CHECK(cfg.fuel == 0.25);
    CHECK(cfg.theta_floor == "theta_bar");
    CHECK(cfg.kernel_type == "bump");
    CHECK(cfg.kernel_radius == 0.08);
    CHECK(cfg.kernel_mass == 1.5);
    CHECK(cfg.wind_type == "table");
    REQUIRE(cfg.wind_table.size() == 2);
    CHECK(cfg.wind_table[0] == std::array<double, 3>{0.0, -1.0, 0.4});
    CHECK(cfg.wind_negative_part == false);
    CHECK(cfg.pyro_alpha == 1.5);
    REQUIRE(cfg.beta.size() == 2);
    CHECK(cfg.beta[1] == std::array<double, 2>{2.0, 0.3});
    REQUIRE(std::holds_alternative<VShape>(cfg.initial));
    CHECK(std::get<VShape>(cfg.initial).angle_degrees == 25.0);
    CHECK(cfg.t_end == 0.75);
    REQUIRE(cfg.front_level.has_value());
    CHECK(*cfg.front_level == 0.95);

    const Scenario s = build_scenario(cfg);
    CHECK(s.grid.ny == 64);
    CHECK(std::holds_alternative<WindTable>(s.wind));
    CHECK(s.wind_negative_part == false);
    CHECK(s.front_level == 0.95);
}

TEST_CASE("wind vectors parse from bracketed pairs") {
    const ScenarioConfig cfg =
        parse_scenario_config("wind.omega = [-1, 0.4]\n");
    CHECK(cfg.omega == std::array<double, 2>{-1.0, 0.4});
}

TEST_CASE("out-of-range pyro exponent is rejected at build time") {
    CHECK_THROWS_AS(
        parse_scenario("pyro.alpha = 3\npyro.beta = [[0, 1]]\n"),
        ScenarioError);
}

TEST_CASE("parse failures carry their line numbers") {
    SUBCASE("unknown key") {
        try {
            parse_scenario_config("domain.nx = 50\ndomain.banana = 2\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("duplicate key") {
        try {
            parse_scenario_config("domain.nx = 50\n\ndomain.nx = 60\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("key from the wrong variant") {
        CHECK_THROWS_AS(parse_scenario_config(
                            "kernel.type = zero\nkernel.radius = 0.1\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario_config("ignition.theta_bar = 1\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario_config(
                            "initial.type = point\ninitial.width = 0.1\n"),
                        ParseError);
    }
    SUBCASE("malformed number and missing equals") {
        CHECK_THROWS_AS(parse_scenario_config("diffusion.c = fast\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario_config("diffusion.c 0.001\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_scenario_config("nx = 50\n"), ParseError);
    }
    SUBCASE("unknown variant value") {
        CHECK_THROWS_AS(parse_scenario_config("kernel.type = gaussian\n"),
                        ParseError);
    }
}

TEST_CASE("comments and quoted strings survive parsing") {
    const std::string doc =
        "initial.type = file  # load from disk\n"
        "initial.path = \"/tmp/with # hash and spaces.csv\"\n";
    const ScenarioConfig cfg = parse_scenario_config(doc);
    REQUIRE(std::holds_alternative<FieldFile>(cfg.initial));
    CHECK(std::get<FieldFile>(cfg.initial).path ==
          "/tmp/with # hash and spaces.csv");
}

TEST_CASE("serialization and parsing invert each other") {
    SUBCASE("defaults") {
        const ScenarioConfig cfg;
        CHECK(parse_scenario_config(serialize_scenario_config(cfg)) == cfg);
    }
    SUBCASE("every preset") {
        for (const auto& name : preset_names()) {
            const ScenarioConfig cfg = preset_config(name);
            const std::string doc = serialize_scenario_config(cfg);
            CHECK(parse_scenario_config(doc) == cfg);
            // serializing the reparse reproduces the same bytes
            CHECK(serialize_scenario_config(parse_scenario_config(doc)) ==
                  doc);
        }
    }
    SUBCASE("a config touching every section") {
        ScenarioConfig cfg;
        cfg.nx = 31;
        cfg.ny = 45;
        cfg.lx = 1.25;
        cfg.c = 3.5e-4;
        cfg.ignition_type = "fuel";
        cfg.theta_bar = 1.1;
        cfg.fuel = 0.07;
        cfg.theta_floor = "theta_bar";
        cfg.kernel_type = "bump";
        cfg.kernel_radius = 0.11;
        cfg.kernel_mass = 2.25;
        cfg.wind_type = "table";
        cfg.wind_table = {{0.0, -1.0, 0.4}, {0.3, 0.1, -0.2}};
        cfg.wind_negative_part = false;
        cfg.pyro_alpha = 0.5;
        cfg.beta = {{1.0, 0.0}, {1.5, 0.25}};
        cfg.initial = SquareRing{{0.45, 0.55}, 0.3, 0.05, 1.9};
        cfg.t_end = 2.5;
        cfg.snapshot_every = 0.5;
        cfg.front_level = 1.05;
        CHECK(parse_scenario_config(serialize_scenario_config(cfg)) == cfg);
    }
}

TEST_CASE("a point ignition builds a disk of the requested radius") {
    const Grid g{100, 100, 0.01, 0.01, {0.005, 0.005}};
    const ScalarField u =
        build_initial(PointHotspot{{0.5, 0.5}, 0.1, 2.0}, g,
                      BoundaryCondition{});
    CHECK(u.values.maxCoeff() == doctest::Approx(2.0).epsilon(1e-12));
    const FrontSet front = extract_level_set(u, 1.0);
    REQUIRE(front.chains.size() == 1);
    for (const auto& p : front.chains[0].points) {
        const double r = std::hypot(p.x() - 0.5, p.y() - 0.5);
        CHECK(std::abs(r - 0.1) <= g.dx);
    }
}

TEST_CASE("the v ignition opens by the requested angle") {
    const Grid g{200, 200, 0.005, 0.005, {0.0025, 0.0025}};
    const VShape shape{{0.3, 0.5}, 30.0, 0.35, 0.04, 2.0};
    const ScalarField u = build_initial(shape, g, BoundaryCondition{});
    // regress the burning cells of each arm against x to recover the slopes
    auto arm_slope = [&](double sign) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        int n = 0;
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                if (u(i, j) <= 1.0) continue;
                const double x = g.x(i) - 0.3;
                const double y = sign * (g.y(j) - 0.5);
                if (x < 0.08 || x > 0.28 || y <= 0.0) continue;
                sx += x; sy += y; sxx += x * x; sxy += x * y;
                ++n;
            }
        }
        REQUIRE(n > 20);
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double upper = std::atan(arm_slope(+1.0));
    const double lower = std::atan(arm_slope(-1.0));
    const double opening = (upper + lower) * 180.0 / std::numbers::pi;
    CHECK(std::abs(opening - 30.0) <= 0.5);
}

TEST_CASE("shapes that stick out of the domain are rejected") {
    const Grid g{100, 100, 0.01, 0.01, {0.005, 0.005}};
    CHECK_THROWS_AS(build_initial(PointHotspot{{0.05, 0.5}, 0.1, 2.0}, g,
                                  BoundaryCondition{}),
                    ScenarioError);
    CHECK_THROWS_AS(build_initial(SquareRing{{0.9, 0.9}, 0.4, 0.05, 2.0}, g,
                                  BoundaryCondition{}),
                    ScenarioError);
}

TEST_CASE("field files reload bit for bit") {
    std::mt19937 rng(61);
    const fs::path dir = temp_dir("fieldfile");
    const Grid g{40, 40, 0.025, 0.025, {0.0125, 0.0125}};
    ScalarField f = oracle::random_field(rng, g, -1.0, 2.0, 0.0);
    const fs::path file = dir / "state.csv";
    write_field_csv(file.string(), f, 0.37);

    SUBCASE("direct read round trip") {
        const auto [back, t] = read_field_csv(file.string());
        CHECK(t == 0.37);
        CHECK(back.grid == g);
        CHECK(oracle::max_abs_diff(back, f) == 0.0);
    }
    SUBCASE("as an initial condition") {
        const ScalarField u =
            build_initial(FieldFile{file.string()}, g, BoundaryCondition{});
        CHECK(oracle::max_abs_diff(u, f) == 0.0);
    }
    SUBCASE("grid mismatch is rejected") {
        const Grid other{41, 40, 0.025, 0.025, {0.0125, 0.0125}};
        CHECK_THROWS_AS(
            build_initial(FieldFile{file.string()}, other,
                          BoundaryCondition{}),
            ScenarioError);
    }
    SUBCASE("missing file is an io error") {
        CHECK_THROWS_AS(read_field_csv((dir / "nope.csv").string()), IoError);
    }
}

TEST_CASE("doubles print in a form that parses back exactly") {
    for (const double x :
         {0.1, 1.0 / 3.0, 2.0, -0.0, 1e-300, 6.02e23, 0.30000000000000004,
          std::numbers::pi, -1.7976931348623157e308}) {
        const std::string s = format_double(x);
        char* end = nullptr;
        const double back = std::strtod(s.c_str(), &end);
        CHECK(*end == '\0');
        CHECK(back == x);
    }
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("exporting a single snapshot writes one series row") {
    const fs::path dir = temp_dir("one_snap");
    Scenario s = parse_scenario("run.t_end = 0\n");
    const auto snaps = run(s);
    REQUIRE(snaps.size() == 1);
    export_run(dir.string(), snaps);
    const std::string series = slurp(dir / "series.csv");
    CHECK(series.rfind("t,burned_area,running_max_area,max_u\n", 0) == 0);
    CHECK(line_count(series) == 2);
    CHECK(fs::exists(dir / "u_0.csv"));
    CHECK(fs::exists(dir / "front_0.csv"));
    CHECK(fs::exists(dir / "frames" / "frame_0.pgm"));
}

TEST_CASE("exported series areas match the exported fields") {
    const fs::path dir = temp_dir("reingest");
    Scenario s = parse_scenario(
        "initial.radius = 0.15\nrun.t_end = 0.2\nrun.snapshot_every = 0.1\n");
    const auto snaps = run(s);
    REQUIRE(snaps.size() == 3);
    export_run(dir.string(), snaps);

    std::ifstream in(dir / "series.csv");
    std::string line;
    std::getline(in, line);  // header
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        REQUIRE(std::getline(in, line));
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double area = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(),
                                        nullptr);
        const auto [u, t] = read_field_csv(
            (dir / ("u_" + std::to_string(k) + ".csv")).string());
        CHECK(t == snaps[k].t);
        CHECK(burned_area(u, s.front_level) == area);
    }
    // running max never drops
    for (std::size_t k = 1; k < snaps.size(); ++k) {
        CHECK(snaps[k].running_max_area >= snaps[k - 1].running_max_area);
    }
}

TEST_CASE("series diffing measures the worst relative area deviation") {
    const fs::path dir = temp_dir("diff");
    const fs::path a = dir / "a.csv";
    const fs::path b = dir / "b.csv";
    {
        std::ofstream fa(a), fb(b);
        fa << "t,burned_area,running_max_area,max_u\n"
           << "0,2,2,1\n0.1,2.5,2.5,1\n";
        fb << "t,burned_area,running_max_area,max_u\n"
           << "0,2,2,1\n0.1,2,2,1\n";
    }
    CHECK(diff_series(a.string(), a.string()) == 0.0);
    CHECK(diff_series(a.string(), b.string()) ==
          doctest::Approx(0.2).epsilon(1e-12));
    {
        std::ofstream fb(b, std::ios::app);
        fb << "0.2,3,3,1\n";
    }
    CHECK_THROWS_AS(diff_series(a.string(), b.string()), Error);
}

TEST_CASE("frame images are deterministic and well formed") {
    const fs::path dir = temp_dir("pgm");
    const Grid g{30, 20, 0.02, 0.02, {0.01, 0.01}};
    ScalarField u(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) u(i, j) = g.x(i) + g.y(j);
    }
    const fs::path p1 = dir / "f1.pgm";
    const fs::path p2 = dir / "f2.pgm";
    write_frame_pgm(p1.string(), u);
    write_frame_pgm(p2.string(), u);
    const std::string b1 = slurp(p1);
    CHECK(b1 == slurp(p2));
    CHECK(b1.rfind("P5\n30 20\n255\n", 0) == 0);
    CHECK(b1.size() == std::string("P5\n30 20\n255\n").size() + 30 * 20);
}

TEST_CASE("presets build, validate, and finish a unit-horizon run quickly") {
    const auto names = preset_names();
    REQUIRE(names.size() == 4);
    CHECK_THROWS_AS(preset_config("bonfire"), ScenarioError);
    for (const auto& name : names) {
        CAPTURE(name);
        ScenarioConfig cfg = preset_config(name);
        cfg.t_end = 1.0;
        cfg.snapshot_every = 0.5;
        const Scenario s = build_scenario(cfg);
        CHECK_NOTHROW(validate(s));
        const auto start = std::chrono::steady_clock::now();
        SolverConfig run_cfg;
        run_cfg.threads = 2;
        const auto snaps = run(s, run_cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        CHECK(snaps.size() == 3);
        CHECK(secs < 10.0);
        CHECK(snaps.back().u.all_finite());
    }
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <sstream>

#include "maglab/closed_form.hpp"
#include "maglab/csv_io.hpp"
#include "maglab/json_io.hpp"
#include "maglab/verify.hpp"

using namespace maglab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("io") {

TEST_CASE("trajectory csv round trip is byte identical") {
    const Trajectory traj = sample(CurveSpec::even_split(2, 3.0, kPi / 3.0), 1.0, 1e-2);

    std::ostringstream first;
    write_trajectory_csv(first, traj);

    std::istringstream in(first.str());
    const Trajectory loaded = read_trajectory_csv(in, traj.strength);
    REQUIRE(loaded.size() == traj.size());
    CHECK(loaded.cos_theta == traj.cos_theta);
    CHECK(loaded.uniform_grid());

    std::ostringstream second;
    write_trajectory_csv(second, loaded);
    CHECK(first.str() == second.str());
}

TEST_CASE("csv header names every column") {
    const Trajectory traj = sample(CurveSpec::even_split(2, 1.0, kPi / 2.0), 0.1, 1e-2);
    std::ostringstream out;
    write_trajectory_csv(out, traj);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x1,x2,y1,y2,z,a1,a2,b1,b2,c");
}

TEST_CASE("malformed csv is rejected") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_trajectory_csv(empty, 1.0), std::runtime_error);

    std::istringstream bad_header("u,v,w\n1,2,3\n");
    CHECK_THROWS_AS(read_trajectory_csv(bad_header, 1.0), std::runtime_error);

    std::istringstream short_row("t,x1,y1,z,a1,b1,c\n0,1,2,3,4,5,6\n0.1,1,2\n");
    CHECK_THROWS_AS(read_trajectory_csv(short_row, 1.0), std::runtime_error);

    std::istringstream bad_cell("t,x1,y1,z,a1,b1,c\n0,1,2,oops,4,5,6\n0.1,1,2,3,4,5,6\n");
    CHECK_THROWS_AS(read_trajectory_csv(bad_cell, 1.0), std::runtime_error);
}

TEST_CASE("curve spec json round trip") {
    const CurveSpec rot = CurveSpec::rotating(2, 3.0, kPi / 3.0,
                                              {std::sqrt(2.0) * std::sin(kPi / 3.0),
                                               std::sqrt(2.0) * std::sin(kPi / 3.0)},
                                              {0.5, 1.25}, {0, 0, 0, 0, 0.2});
    const CurveSpec rot_back = curve_spec_from_json(to_json(rot));
    CHECK(rot_back.branch == CurveBranch::Rotating);
    CHECK(rot_back.strength == rot.strength);
    CHECK(rot_back.c == rot.c);
    CHECK(rot_back.d == rot.d);
    CHECK(rot_back.h == rot.h);

    const double theta = kPi / 3.0;
    const CurveSpec lin = CurveSpec::even_split(1, 2.0 * std::cos(theta), theta);
    REQUIRE(lin.branch == CurveBranch::Linear);
    const CurveSpec lin_back = curve_spec_from_json(to_json(lin));
    CHECK(lin_back.branch == CurveBranch::Linear);
    CHECK(lin_back.c == lin.c);
    CHECK(lin_back.d == lin.d);

    CHECK_THROWS_AS(curve_spec_from_json(nlohmann::json{{"n", 1}, {"q", 1.0}, {"theta", 0.5},
                                                        {"branch", "spiral"}}),
                    std::invalid_argument);
}

TEST_CASE("verify suite passes and reacts to an injected fault") {
    VerifyOptions opts;
    opts.trials = 300;
    const VerifyReport clean = run_verify_suite(opts);
    CHECK(clean.all_pass());

    VerifyOptions broken = opts;
    broken.corrupt_phi = true;
    const VerifyReport faulty = run_verify_suite(broken);
    CHECK(!faulty.all_pass());
    bool phi_sq_failed = false;
    for (const auto& p : faulty.properties) {
        if (p.name == "phi_squared_identity") phi_sq_failed = !p.pass;
    }
    CHECK(phi_sq_failed);

    VerifyOptions zero = opts;
    zero.trials = 0;
    CHECK(run_verify_suite(zero).all_pass());
}

TEST_CASE("verify suite is deterministic for a fixed seed") {
    VerifyOptions opts;
    opts.trials = 100;
    opts.seed = 7;
    const VerifyReport a = run_verify_suite(opts);
    const VerifyReport b = run_verify_suite(opts);
    REQUIRE(a.properties.size() == b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
        CHECK(a.properties[i].max_err == b.properties[i].max_err);
    }
}

}  // TEST_SUITE

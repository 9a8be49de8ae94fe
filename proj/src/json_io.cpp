#include "maglab/json_io.hpp"

#include <cmath>

namespace maglab {

using nlohmann::json;

namespace {

json frame_to_json(const FrameTangent& v) {
    json j = json::object();
    j["a"] = v.a;
    j["b"] = v.b;
    j["c"] = v.c;
    return j;
}

json field_to_json(const FieldAlongCurve& f) {
    json arr = json::array();
    for (const auto& v : f.samples) arr.push_back(frame_to_json(v));
    return arr;
}

json series_to_json(const CurvatureSeries& s, bool include_per_node) {
    json j = json::object();
    j["mean"] = s.mean;
    j["max_dev"] = s.max_dev;
    if (include_per_node) j["per_node"] = s.per_node;
    return j;
}

}  // namespace

json to_json(const CurveSpec& spec) {
    json j = json::object();
    j["n"] = spec.n;
    j["q"] = spec.strength;
    j["theta"] = spec.theta;
    j["branch"] = spec.branch == CurveBranch::Rotating ? "rotating" : "linear";
    j["c"] = spec.c;
    j["d"] = spec.d;
    if (spec.branch == CurveBranch::Rotating) j["h"] = spec.h;
    return j;
}

CurveSpec curve_spec_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const double q = j.at("q").get<double>();
    const double theta = j.at("theta").get<double>();
    const std::string branch = j.value("branch", "rotating");
    if (branch == "linear") {
        return CurveSpec::linear(n, q, theta, j.at("c").get<std::vector<double>>(),
                                 j.at("d").get<std::vector<double>>());
    }
    if (branch != "rotating") {
        throw std::invalid_argument("CurveSpec: branch must be 'rotating' or 'linear'");
    }
    return CurveSpec::rotating(n, q, theta, j.at("c").get<std::vector<double>>(),
                               j.at("d").get<std::vector<double>>(),
                               j.at("h").get<std::vector<double>>());
}

json to_json(const FrenetReport& report, double residual, bool include_per_node) {
    json j = json::object();
    j["q"] = report.strength;
    j["cos_theta"] = report.cos_theta;
    j["osc_order"] = report.osc_order;
    j["delta"] = report.delta;
    if (report.epsilon == 0) {
        j["epsilon"] = nullptr;
    } else {
        j["epsilon"] = report.epsilon;
    }
    j["geodesic_threshold"] = report.geodesic_threshold;
    j["stats_window"] = {report.first, report.last};
    j["residual"] = residual;

    j["k1"] = report.osc_order >= 2 ? series_to_json(report.k1, include_per_node) : json(nullptr);
    j["k2"] = report.osc_order >= 3 ? series_to_json(report.k2, include_per_node) : json(nullptr);
    j["k3"] = report.osc_order >= 3 ? series_to_json(report.k3, include_per_node) : json(nullptr);

    // formula-predicted values for human diffing against the estimates
    const double ct = report.cos_theta;
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double lambda = report.strength - 2.0 * ct;
    json theory = json::object();
    theory["lambda"] = lambda;
    theory["k1"] = std::abs(lambda) * st;
    theory["k2"] = std::abs(lambda) * std::abs(ct);
    j["theory"] = theory;

    if (include_per_node) {
        json frames = json::object();
        frames["e1"] = field_to_json(report.e1);
        if (report.osc_order >= 2) frames["e2"] = field_to_json(report.e2);
        if (report.osc_order >= 3) frames["e3"] = field_to_json(report.e3);
        j["frames"] = frames;
    }
    return j;
}

json to_json(const Classification& c, const std::string& profile) {
    json j = json::object();
    j["branch"] = branch_name(c.branch);
    j["profile"] = profile;
    json ev = json::object();
    ev["cos_theta"] = c.evidence.cos_theta;
    ev["lambda"] = c.evidence.lambda;
    ev["k1"] = c.evidence.k1;
    ev["k2"] = c.evidence.k2;
    ev["residual"] = c.evidence.residual;
    j["evidence"] = ev;
    return j;
}

}  // namespace maglab

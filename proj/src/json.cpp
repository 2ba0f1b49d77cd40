#include "goldbug/json.hpp"

namespace goldbug {

using nlohmann::json;

void to_json(json& j, const Length& x) {
    j = json{{"num", x.in_inches().num()},
             {"den", x.in_inches().den()},
             {"unit", "in"},
             {"feet", x.in_feet().decimal(6)}};
}

void from_json(const json& j, Length& x) {
    const auto unit = j.at("unit").get<std::string>();
    const Rational value(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
    if (unit == "in") {
        x = Length::inches(value);
    } else if (unit == "ft") {
        x = Length::feet(value);
    } else {
        throw std::invalid_argument("unknown length unit '" + unit + "'");
    }
}

void to_json(json& j, const Scenario& s) {
    j = json{{"r", s.r},     {"L", s.L},     {"d", s.d},
             {"E", s.E},     {"rA", s.r_A}, {"rB", s.r_B},
             {"convention", std::string(to_string(s.convention))}};
}

void from_json(const json& j, Scenario& s) {
    j.at("r").get_to(s.r);
    j.at("L").get_to(s.L);
    j.at("d").get_to(s.d);
    j.at("E").get_to(s.E);
    j.at("rA").get_to(s.r_A);
    j.at("rB").get_to(s.r_B);
    s.convention = parse_convention(j.at("convention").get<std::string>());
}

namespace {

// Verdict fields shared by reports and sweep rows.
json verdict_json(const OverlapReport& r) {
    return json{{"ab", r.ab},
                {"radii_sum", r.radii_sum},
                {"overlaps", r.overlaps},
                {"margin", r.margin},
                {"lens_area_sqft", r.lens_area_sqft}};
}

void read_verdict(const json& j, OverlapReport& r) {
    j.at("ab").get_to(r.ab);
    j.at("radii_sum").get_to(r.radii_sum);
    j.at("overlaps").get_to(r.overlaps);
    j.at("margin").get_to(r.margin);
    j.at("lens_area_sqft").get_to(r.lens_area_sqft);
}

Threshold::Kind parse_threshold_kind(const std::string& s) {
    if (s == "FINITE") return Threshold::Kind::Finite;
    if (s == "ALWAYS_NONOVERLAP") return Threshold::Kind::AlwaysNonoverlap;
    throw std::invalid_argument("unknown threshold kind '" + s + "'");
}

LBound::Kind parse_lbound_kind(const std::string& s) {
    if (s == "FINITE") return LBound::Kind::Finite;
    if (s == "ALWAYS_NONOVERLAP") return LBound::Kind::AlwaysNonoverlap;
    if (s == "NO_VALID_L") return LBound::Kind::NoValidL;
    throw std::invalid_argument("unknown L bound kind '" + s + "'");
}

}  // namespace

void to_json(json& j, const OverlapReport& r) {
    j = verdict_json(r);
    j["scenario"] = r.scenario;
}

void from_json(const json& j, OverlapReport& r) {
    read_verdict(j, r);
    j.at("scenario").get_to(r.scenario);
}

void to_json(json& j, const Threshold& t) {
    j = json{{"kind", std::string(to_string(t.kind))}, {"bound", nullptr}};
    if (t.bound) j["bound"] = *t.bound;
}

void from_json(const json& j, Threshold& t) {
    t.kind = parse_threshold_kind(j.at("kind").get<std::string>());
    t.bound.reset();
    if (j.contains("bound") && !j.at("bound").is_null()) t.bound = j.at("bound").get<Length>();
}

void to_json(json& j, const LBound& b) {
    j = json{{"kind", std::string(to_string(b.kind))}, {"bound", nullptr}, {"reach_threshold", b.reach_threshold}};
    if (b.bound) j["bound"] = *b.bound;
}

void from_json(const json& j, LBound& b) {
    b.kind = parse_lbound_kind(j.at("kind").get<std::string>());
    b.bound.reset();
    if (j.contains("bound") && !j.at("bound").is_null()) b.bound = j.at("bound").get<Length>();
    j.at("reach_threshold").get_to(b.reach_threshold);
}

void to_json(json& j, const SweepAxis& a) {
    j = json{{"param", std::string(to_string(a.param))}, {"start", a.start}, {"stop", a.stop}, {"step", a.step}};
}

void from_json(const json& j, SweepAxis& a) {
    a.param = parse_sweep_param(j.at("param").get<std::string>());
    j.at("start").get_to(a.start);
    j.at("stop").get_to(a.stop);
    j.at("step").get_to(a.step);
}

void to_json(json& j, const SweepTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = row.report ? verdict_json(*row.report) : json::object();
        r["values"] = row.values;
        r["error"] = row.report ? json(nullptr) : json(row.error);
        rows.push_back(std::move(r));
    }
    j = json{{"base", t.base}, {"axes", t.axes}, {"rows", std::move(rows)}};
}

void from_json(const json& j, SweepTable& t) {
    j.at("base").get_to(t.base);
    j.at("axes").get_to(t.axes);
    t.rows.clear();
    for (const auto& r : j.at("rows")) {
        SweepRow row;
        r.at("values").get_to(row.values);
        if (r.at("error").is_null()) {
            OverlapReport rep;
            read_verdict(r, rep);
            rep.scenario = t.base;
            for (std::size_t k = 0; k < t.axes.size() && k < row.values.size(); ++k) {
                switch (t.axes[k].param) {
                    case SweepParam::r: rep.scenario.r = row.values[k]; break;
                    case SweepParam::L: rep.scenario.L = row.values[k]; break;
                    case SweepParam::r_A: rep.scenario.r_A = row.values[k]; break;
                    case SweepParam::r_B: rep.scenario.r_B = row.values[k]; break;
                    case SweepParam::E: rep.scenario.E = row.values[k]; break;
                }
            }
            row.report = rep;
        } else {
            row.error = r.at("error").get<std::string>();
        }
        t.rows.push_back(std::move(row));
    }
}

void to_json(json& j, const ClaimResult& c) {
    j = json{{"id", c.id}, {"quote", c.quote}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

void to_json(json& j, const McEstimate& m) {
    j = json{{"value", m.value}, {"std_error", m.std_error}, {"samples", m.samples}, {"seed", m.seed}};
}

}  // namespace goldbug

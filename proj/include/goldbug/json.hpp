#pragma once

// JSON forms of the library's value types (nlohmann/json).
//
// Lengths are lossless: {"num": n, "den": d, "unit": "in", "feet": "2.747253"}
// where "feet" is a rounded convenience string and is ignored when reading.
// Every to_json below has a matching from_json that restores an equal value.

#include "goldbug/analysis.hpp"
#include "goldbug/oracle.hpp"

#include <json.hpp>

namespace goldbug {

void to_json(nlohmann::json& j, const Length& x);
void from_json(const nlohmann::json& j, Length& x);

void to_json(nlohmann::json& j, const Scenario& s);
void from_json(const nlohmann::json& j, Scenario& s);

void to_json(nlohmann::json& j, const OverlapReport& r);
void from_json(const nlohmann::json& j, OverlapReport& r);

void to_json(nlohmann::json& j, const Threshold& t);
void from_json(const nlohmann::json& j, Threshold& t);

void to_json(nlohmann::json& j, const LBound& b);
void from_json(const nlohmann::json& j, LBound& b);

void to_json(nlohmann::json& j, const SweepAxis& a);
void from_json(const nlohmann::json& j, SweepAxis& a);

// Rows carry only the axis values and the verdict; the scenario of each row
// is rebuilt from the table's base scenario when reading.
void to_json(nlohmann::json& j, const SweepTable& t);
void from_json(const nlohmann::json& j, SweepTable& t);

void to_json(nlohmann::json& j, const ClaimResult& c);

void to_json(nlohmann::json& j, const McEstimate& m);

}  // namespace goldbug

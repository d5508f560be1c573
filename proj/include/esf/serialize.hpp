#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "esf/combinatorics.hpp"
#include "esf/exactla.hpp"
#include "esf/exotic.hpp"
#include "esf/rs.hpp"
#include "esf/weyl.hpp"

namespace esf {

using Json = nlohmann::ordered_json;

/// Rows of the left tableau are written mirrored, rows of the right as stored.
Json to_json(const StandardBitableau& t);
Json to_json(const RatMatrix& m);
Json to_json(const RatVector& v);
Json to_json(const ExoticPoint& p);
/// {"mu", "nu", "T", "Tprime", "w", "length", "consensus"}
Json to_json(const RSRow& row);
Json to_json(const NaiveDisagreement& d);

std::string tsv_header();
/// mu, nu, T, Tprime, w, length, consensus separated by tabs.
std::string to_tsv(const RSRow& row);

/// Fixed six-decimal rendering used by both output formats.
std::string format_fraction(double x);

}  // namespace esf

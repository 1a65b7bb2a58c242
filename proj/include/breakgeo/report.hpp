#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "breakgeo/accessibility.hpp"
#include "breakgeo/classify.hpp"
#include "breakgeo/experiment.hpp"
#include "breakgeo/geodesic.hpp"
#include "breakgeo/moments.hpp"

namespace breakgeo {

using Json = nlohmann::ordered_json;

Json rational_quad_json(const Quad<Rational>& q);
Json decimal_quad_json(const Quad<Rational>& q);

Json moments_json(int n, int m, std::optional<int> k, const MomentVector& expect, const VarianceVector& var);
Json mc_report_json(const MomentReport& report);
Json witness_json(const WitnessGeodesic& w);
Json classification_json(const Permutation& x, const SegmentSet& segments, const Classification& c);
Json class_set_json(const ClassSet& classes);
Json median_json(const MedianReport& report);
Json figure_json(int n, int steps, const std::vector<FigureRow>& rows);
Json proportion_json(const Proportion& p);

std::string mc_csv_header();
std::string mc_csv_row(const MomentReport& report);
std::string figure_csv(int n, const std::vector<FigureRow>& rows);

}  // namespace breakgeo

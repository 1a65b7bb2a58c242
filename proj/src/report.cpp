#include "breakgeo/report.hpp"

#include <sstream>

namespace breakgeo {

namespace {

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Json rational_quad_json(const Quad<Rational>& q) {
  Json out = Json::object();
  for (int t = 0; t < 4; ++t) out[kClassNames[t]] = rational_string(q[t]);
  return out;
}

Json decimal_quad_json(const Quad<Rational>& q) {
  Json out = Json::object();
  for (int t = 0; t < 4; ++t) out[kClassNames[t]] = to_double(q[t]);
  return out;
}

namespace {

template <typename T>
Json plain_quad_json(const Quad<T>& q) {
  Json out = Json::object();
  for (int t = 0; t < 4; ++t) out[kClassNames[t]] = q[t];
  return out;
}

}  // namespace

Json moments_json(int n, int m, std::optional<int> k, const MomentVector& expect, const VarianceVector& var) {
  Json out;
  out["n"] = n;
  out["m"] = m;
  out["k"] = k ? Json(*k) : Json(nullptr);
  out["expect"] = rational_quad_json(expect);
  out["expect_decimal"] = decimal_quad_json(expect);
  out["var"] = rational_quad_json(var);
  out["var_decimal"] = decimal_quad_json(var);
  return out;
}

Json mc_report_json(const MomentReport& r) {
  const auto& cfg = r.config;
  Json out = moments_json(cfg.n, cfg.m, cfg.k, r.expect, r.var);
  out["seed"] = cfg.seed;
  out["samples"] = cfg.samples;
  if (r.segments) out["segments"] = r.segments->to_string();
  Json mc;
  mc["mean"] = plain_quad_json(r.mean);
  mc["mean_se"] = plain_quad_json(r.mean_se);
  mc["variance"] = plain_quad_json(r.variance);
  mc["variance_se"] = plain_quad_json(r.var_se);
  mc["mean_within_4se"] = plain_quad_json(r.mean_ok);
  mc["variance_within_4se"] = plain_quad_json(r.var_ok);
  out["mc"] = mc;
  return out;
}

Json witness_json(const WitnessGeodesic& w) {
  Json out;
  out["pi"] = w.pi.to_string();
  out["J"] = w.j_set.to_string();
  out["case"] = std::string(to_string(w.case_tag));
  return out;
}

Json classification_json(const Permutation& x, const SegmentSet& segments, const Classification& c) {
  Json out;
  out["perm"] = x.to_string();
  out["segments"] = segments.to_string();
  Json labels = Json::array();
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    Json row;
    row["i"] = i + 1;
    row["pair"] = {x[i], x[i + 1]};
    row["class"] = std::string(to_string(c.labels[i]));
    labels.push_back(row);
  }
  out["labels"] = labels;
  out["counts"] = {{"alpha", c.counts.alpha}, {"beta", c.counts.beta}, {"gamma", c.counts.gamma}, {"delta", c.counts.delta}};
  return out;
}

Json class_set_json(const ClassSet& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(c.to_string());
  return out;
}

Json median_json(const MedianReport& r) {
  Json out;
  out["medians"] = class_set_json(r.medians);
  out["value"] = r.value;
  Json totals = Json::object();
  for (const auto& [perm, total] : r.totals) totals[perm.to_string()] = total;
  out["totals"] = totals;
  return out;
}

Json figure_json(int n, int steps, const std::vector<FigureRow>& rows) {
  Json out;
  out["n"] = n;
  out["steps"] = steps;
  Json list = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["m"] = row.m;
    r["c"] = static_cast<double>(row.m) / n;
    r["exact"] = rational_quad_json(row.e_over_n);
    r["decimal"] = decimal_quad_json(row.e_over_n);
    list.push_back(r);
  }
  out["rows"] = list;
  return out;
}

Json proportion_json(const Proportion& p) {
  Json out;
  out["hits"] = p.hits;
  out["samples"] = p.samples;
  out["estimate"] = p.estimate;
  out["std_error"] = p.std_error;
  out["wilson_lower"] = p.lower;
  out["wilson_upper"] = p.upper;
  return out;
}

std::string mc_csv_header() {
  std::string h = "n,m,k";
  for (const char* suffix : {"_e", "_mc", "_se", "_var_e", "_var_mc", "_var_se"}) {
    for (const char* name : kClassNames) h += std::string(",") + name + suffix;
  }
  return h + ",seed,samples";
}

std::string mc_csv_row(const MomentReport& r) {
  const auto& cfg = r.config;
  std::string row = std::to_string(cfg.n) + "," + std::to_string(cfg.m) + "," + (cfg.k ? std::to_string(*cfg.k) : "");
  for (int t = 0; t < 4; ++t) row += "," + rational_string(r.expect[t]);
  for (int t = 0; t < 4; ++t) row += "," + decimal(r.mean[t]);
  for (int t = 0; t < 4; ++t) row += "," + decimal(r.mean_se[t]);
  for (int t = 0; t < 4; ++t) row += "," + rational_string(r.var[t]);
  for (int t = 0; t < 4; ++t) row += "," + decimal(r.variance[t]);
  for (int t = 0; t < 4; ++t) row += "," + decimal(r.var_se[t]);
  return row + "," + std::to_string(cfg.seed) + "," + std::to_string(cfg.samples);
}

std::string figure_csv(int n, const std::vector<FigureRow>& rows) {
  std::string out = "n,m,c,alpha,beta,gamma,delta,alpha_exact,beta_exact,gamma_exact,delta_exact\n";
  for (const auto& row : rows) {
    out += std::to_string(n) + "," + std::to_string(row.m) + "," + decimal(static_cast<double>(row.m) / n);
    for (int t = 0; t < 4; ++t) out += "," + decimal(to_double(row.e_over_n[t]));
    for (int t = 0; t < 4; ++t) out += "," + rational_string(row.e_over_n[t]);
    out += "\n";
  }
  return out;
}

}  // namespace breakgeo

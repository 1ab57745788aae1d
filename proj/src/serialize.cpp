#include "cgeo/serialize.hpp"

#include <charconv>
#include <system_error>

#include <json.hpp>

namespace cgeo {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf, res.ptr);
}

namespace {

template <class Tag>
json to_json(const Components<Tag>& c) {
  json arr = json::array();
  for (double v : c.values()) arr.push_back(v);
  return arr;
}

json to_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out;
  const int n = traj.samples.empty() ? 0 : traj.front().x.dim();
  out += "param";
  for (const char* block : {"x", "vel", "acc"})
    for (int i = 1; i <= n; ++i) out += std::string(",") + block + "_" + std::to_string(i);
  out += '\n';
  for (const auto& s : traj.samples) {
    out += format_number(s.param);
    for (double v : s.x.values()) out += ',' + format_number(v);
    for (double v : s.vel.values()) out += ',' + format_number(v);
    for (double v : s.acc.values()) out += ',' + format_number(v);
    out += '\n';
  }
  return out;
}

std::string trajectory_to_json(const Trajectory& traj) {
  json j;
  j["metric"] = traj.metric_name;
  j["formulation"] = traj.samples.empty() ? "" : std::string(to_string(traj.front().form));
  j["dimension"] = traj.samples.empty() ? 0 : traj.front().x.dim();
  j["termination"] = std::string(to_string(traj.termination));
  j["detail"] = traj.detail;
  j["accepted_steps"] = traj.accepted_steps;
  j["rejected_steps"] = traj.rejected_steps;
  json samples = json::array();
  for (const auto& s : traj.samples)
    samples.push_back({{"param", s.param}, {"x", to_json(s.x)}, {"vel", to_json(s.vel)}, {"acc", to_json(s.acc)}});
  j["samples"] = std::move(samples);
  return j.dump(2) + "\n";
}

std::string curvature_to_json(const CurvatureAtPoint& curv, const std::string& metric_name,
                              const Point& x) {
  const int n = curv.metric.dim();
  json gamma = json::array();
  for (int a = 0; a < n; ++a) {
    json block = json::array();
    for (int b = 0; b < n; ++b) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back(curv.gamma(a, b, c));
      block.push_back(row);
    }
    gamma.push_back(block);
  }
  json j;
  j["metric_name"] = metric_name;
  j["dimension"] = n;
  j["point"] = to_json(x);
  j["metric"] = to_json(curv.metric);
  j["metric_inverse"] = to_json(curv.metric_inverse);
  j["christoffel"] = std::move(gamma);
  j["ricci"] = to_json(curv.ricci);
  j["scalar"] = curv.scalar;
  j["schouten"] = to_json(curv.schouten);
  j["schouten_mixed"] = to_json(curv.schouten_mixed);
  return j.dump(2) + "\n";
}

}  // namespace cgeo

#include "gz/json_io.hpp"

#include <stdexcept>

namespace gz {

Json to_json(const Real& x) { return x.to_string(); }

Json to_json(const ComplexHP& z) {
  Json j;
  j["re"] = z.re().to_string();
  j["im"] = z.im().to_string();
  j["bits"] = z.precision_bits();
  return j;
}

ComplexHP complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.contains("bits"))
    throw std::invalid_argument("complex value needs re, im and bits");
  auto bits = j.at("bits").get<BitCount>();
  return {Real::parse(j.at("re").get<std::string>(), bits), Real::parse(j.at("im").get<std::string>(), bits)};
}

Json to_json(const AsymptoticReport& report) {
  auto list = [](const std::vector<ComplexHP>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
  };
  Json j;
  j["n"] = report.n;
  j["points"] = list(report.sample_points);
  j["measured"] = list(report.measured);
  j["predicted"] = list(report.predicted);
  j["ratios"] = list(report.ratios);
  j["converging"] = report.converging;
  j["measured_decreasing"] = report.measured_decreasing;
  return j;
}

Json to_json(const DominanceReport& report) {
  Json j;
  j["p0"] = report.p0;
  j["q0"] = report.q0;
  j["t0"] = report.t0;
  j["m_p0"] = report.m_p0;
  j["n_p0"] = report.n_p0;
  j["b_hat_value"] = to_json(report.b_hat_value);
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    Json row;
    row["y"] = s.y;
    row["measured"] = to_json(s.measured);
    row["predicted"] = to_json(s.predicted);
    row["ratio"] = to_json(s.ratio);
    samples.push_back(std::move(row));
  }
  j["samples"] = std::move(samples);
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json to_json(const ApproachResult& result) {
  Json j;
  j["best_y"] = result.best_y;
  j["distance"] = to_json(result.distance);
  j["samples_scanned"] = result.samples_scanned;
  j["range"] = Json::array({result.range.first, result.range.second});
  return j;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

}  // namespace gz

//
// report.hpp: JSON-lines and CSV emission. Floating-point values are
// printed with 17 significant digits so that reports round-trip exactly
// and byte-identical output certifies byte-identical numerics.
//
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "curvesym/geometry.hpp"

namespace curvesym {

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

// Minimal builder for the flat one-line records the reports consist of.
class JsonLine {
 public:
  JsonLine& field(const std::string& key, const std::string& value) {
    add(key, '"' + json_escape(value) + '"');
    return *this;
  }
  JsonLine& field(const std::string& key, const char* value) {
    return field(key, std::string(value));
  }
  JsonLine& field(const std::string& key, double value) {
    add(key, std::isfinite(value) ? format_g17(value) : "null");
    return *this;
  }
  JsonLine& field(const std::string& key, bool value) {
    add(key, value ? "true" : "false");
    return *this;
  }
  JsonLine& field(const std::string& key, std::uint64_t value) {
    add(key, std::to_string(value));
    return *this;
  }
  template <std::size_t N>
  JsonLine& field(const std::string& key, const std::array<double, N>& values) {
    std::string v = "[";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) v += ',';
      v += std::isfinite(values[i]) ? format_g17(values[i]) : "null";
    }
    v += ']';
    add(key, v);
    return *this;
  }
  JsonLine& raw(const std::string& key, const std::string& json) {
    add(key, json);
    return *this;
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  void add(const std::string& key, const std::string& json_value) {
    if (!body_.empty()) body_ += ',';
    body_ += '"' + json_escape(key) + "\":" + json_value;
  }
  std::string body_;
};

// One evaluated triple, as emitted to the bulk-sample CSV.
struct SampleRow {
  std::array<double, 6> z{};  // re/im interleaved
  std::optional<std::array<double, 3>> xs;
  double c_sq = 0.0;
  double s_full_re = 0.0;
  double s_re = 0.0;
  double s_im = 0.0;
  Conditioning condition = Conditioning::WellConditioned;
};

inline const char* conditioning_name(Conditioning c) {
  switch (c) {
    case Conditioning::WellConditioned: return "well-conditioned";
    case Conditioning::IllConditioned: return "ill-conditioned";
    case Conditioning::Collinear: return "collinear";
  }
  return "?";
}

inline const char kSampleCsvHeader[] =
    "z1_re,z1_im,z2_re,z2_im,z3_re,z3_im,c_sq,s_full,s_re,s_im,ratio_re,ratio_im,condition";

inline void write_sample_csv_row(std::ostream& os, const SampleRow& r) {
  for (double v : r.z) os << format_g17(v) << ',';
  os << format_g17(r.c_sq) << ',' << format_g17(r.s_full_re) << ','
     << format_g17(r.s_re) << ',' << format_g17(r.s_im) << ',';
  if (r.c_sq > 0.0) {
    os << format_g17(r.s_re / r.c_sq) << ',' << format_g17(r.s_im / r.c_sq);
  } else {
    os << "nan,nan";
  }
  os << ',' << conditioning_name(r.condition) << '\n';
}

}  // namespace curvesym

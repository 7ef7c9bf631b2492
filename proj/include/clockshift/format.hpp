// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <cstdint>
#include <string>

#include "clockshift/common.hpp"

namespace clockshift {

/// 17 significant digits: lossless double round-trips, so regression diffs
/// of emitted artifacts are byte-stable.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
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

/// Insertion-ordered JSON object builder.  The vendored JSON library is used
/// for parsing; emission goes through this so numbers are printed with
/// exactly 17 significant digits.
class JsonObjectBuilder {
 public:
  JsonObjectBuilder& field(const std::string& k, double v) {
    return raw(k, fmt17(v));
  }
  JsonObjectBuilder& field(const std::string& k, std::uint64_t v) {
    return raw(k, std::to_string(v));
  }
  JsonObjectBuilder& field(const std::string& k, long v) {
    return raw(k, std::to_string(v));
  }
  JsonObjectBuilder& field(const std::string& k, int v) {
    return raw(k, std::to_string(v));
  }
  JsonObjectBuilder& field(const std::string& k, bool v) {
    return raw(k, v ? "true" : "false");
  }
  JsonObjectBuilder& field(const std::string& k, const std::string& v) {
    return raw(k, "\"" + json_escape(v) + "\"");
  }
  JsonObjectBuilder& field(const std::string& k, const char* v) {
    return field(k, std::string(v));
  }
  JsonObjectBuilder& raw(const std::string& k, const std::string& json) {
    if (!first_) body_ += ",";
    first_ = false;
    body_ += "\"" + json_escape(k) + "\":" + json;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
  bool first_ = true;
};

inline std::string json_double_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += fmt17(xs[i]);
  }
  return out + "]";
}

inline std::string json_int_array(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

/// Complex amplitudes as [re, im] pairs in ascending-j order.
inline std::string json_complex_array(const std::vector<cplx>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += "[" + fmt17(xs[i].real()) + "," + fmt17(xs[i].imag()) + "]";
  }
  return out + "]";
}

}  // namespace clockshift

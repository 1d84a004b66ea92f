#include "dlspec/report.hpp"

#include <cmath>
#include <cstdio>

namespace dlspec {

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string escape_json(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (const char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string spectrum_json(const Spectrum& s) {
  std::string out = "{\"eigenvalues\":[";
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (i > 0) out += ",";
    out += format_number(s.eigenvalues(i));
  }
  out += "],\"radius\":" + format_number(s.eigenvalues(0));
  out += ",\"residual\":" + format_number(s.residual) + "}";
  return out;
}

std::string verdict_json(const LemmaVerdict& v) {
  std::string out = "{\"lemma\":\"" + escape_json(v.lemma) + "\"";
  out += ",\"instance\":\"" + escape_json(v.instance) + "\"";
  out += ",\"status\":\"" + to_string(v.status) + "\"";
  out += ",\"margin\":" + format_number(v.margin);
  out += ",\"residuals\":{";
  bool first = true;
  for (const auto& [key, value] : v.residuals) {
    if (!first) out += ",";
    first = false;
    out += "\"" + escape_json(key) + "\":" + format_number(value);
  }
  out += "}}";
  return out;
}

std::string enumeration_json(const EnumerationReport& report) {
  std::string out = "{\"n\":" + std::to_string(report.n);
  out += ",\"count\":" + std::to_string(report.count);
  out += ",\"graphs\":[";
  for (std::size_t i = 0; i < report.graphs.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + escape_json(report.graphs[i]) + "\"";
  }
  out += "],\"elapsed_seconds\":" + format_number(report.elapsed_seconds) + "}";
  return out;
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ",";
      out += format_number(m(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace dlspec

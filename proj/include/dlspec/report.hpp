#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dlspec/enumeration.hpp"
#include "dlspec/lemmas.hpp"
#include "dlspec/spectra.hpp"

namespace dlspec {

// 12-significant-digit decimal form; non-finite values become "null".
std::string format_number(double x);

std::string escape_json(const std::string& text);

// {"eigenvalues":[...], "radius":..., "residual":...}
std::string spectrum_json(const Spectrum& s);

// Single JSON-lines record.
std::string verdict_json(const LemmaVerdict& v);

std::string enumeration_json(const EnumerationReport& report);

// Plain matrix rows, comma separated.
std::string matrix_csv(const Eigen::MatrixXd& m);

}  // namespace dlspec

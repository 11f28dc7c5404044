#pragma once

#include <string>

#include "json.hpp"

#include "hermiq/canonical.hpp"
#include "hermiq/classifier.hpp"
#include "hermiq/extremal.hpp"
#include "hermiq/oracle.hpp"

namespace hermiq::io {

using json = nlohmann::json;

json field_json(const Field& F);
json coeffs_json(const Field& F, const QuadricCoeffs& qc);
QuadricCoeffs coeffs_from_json(const Field& F, const json& j);

json count_json(std::int64_t affine, std::int64_t infinity);
json classifier_json(const Field& F, const QuadricCoeffs& qc,
                     const classifier::ClassifierReport& rep);
json spectrum_json(const Field& F, const canonical::SpectrumResult& sp);
std::string spectrum_csv(const Field& F, const canonical::SpectrumResult& sp);
json verify_json(const Field& F, const canonical::VerifyReport& rep);
std::string verify_csv(const Field& F, const canonical::VerifyReport& rep);
json extremal_json(const Field& F, const QuadricCoeffs& qc,
                   const extremal::StructureReport& rep);

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace hermiq::io

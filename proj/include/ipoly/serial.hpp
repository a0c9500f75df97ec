#pragma once

/**
 * @file serial.hpp
 * @brief Archival serialization: exact rationals as "num/den" strings, big
 *        floats as decimal strings with explicit precision, JSON and CSV
 *        encodings that parse back to identical values.
 */

#include "ipoly/ratpoly.hpp"
#include "ipoly/regions.hpp"
#include "ipoly/rootfind.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ipoly::serial {

using json = nlohmann::json;

// ---- CSV primitives ----------------------------------------------------

std::string csv_escape(const std::string& field);
/// Splits one CSV line honoring double-quote escapes.
std::vector<std::string> csv_split(const std::string& line);
/// All non-empty lines.
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

// ---- coefficient lists (gen / integrate) --------------------------------

json coeffs_to_json(const RatPoly& p);
RatPoly coeffs_from_json(const json& j);
std::string coeffs_to_csv(const RatPoly& p);
RatPoly coeffs_from_csv(const std::string& text);

// ---- zeros records -------------------------------------------------------

struct ZerosRecord {
    unsigned n = 0;
    unsigned m = 0;
    unsigned degree = 0;
    bool converged = false;
    unsigned iterations = 0;
    std::vector<BigComplex> roots;
    std::vector<BigFloat> residuals;
    std::vector<std::string> regions;     // label per root
    std::vector<bool> on_boundary;
};

json zeros_to_json(const std::vector<ZerosRecord>& recs);
std::vector<ZerosRecord> zeros_from_json(const json& j, mpfr_prec_t prec);
std::string zeros_to_csv(const std::vector<ZerosRecord>& recs);
std::vector<ZerosRecord> zeros_from_csv(const std::string& text, mpfr_prec_t prec);

// ---- curves ---------------------------------------------------------------

json curve_to_json(const CurveSamples& cs);
CurveSamples curve_from_json(const json& j, mpfr_prec_t prec);
std::string curve_to_csv(const CurveSamples& cs);
CurveSamples curve_from_csv(const std::string& text, mpfr_prec_t prec);

}  // namespace ipoly::serial

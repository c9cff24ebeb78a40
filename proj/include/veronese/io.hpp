#ifndef VERONESE_IO_HPP
#define VERONESE_IO_HPP

#include <string>

#include "json.hpp"
#include "veronese/engine.hpp"

namespace vrn {

std::string fe_hex(fe v);
fe parse_fe_hex(const Gf2e& F, const std::string& s);  // throws parse_error

/// "1011"-style MSB-first bit string of the modulus (degree h .. 0).
std::string modulus_bits(const Gf2e& F);
std::uint32_t parse_modulus_bits(const std::string& s, unsigned* h_out);

/// 18 whitespace-separated hex field elements, row-major 3x6 generator matrix.
Plane5 parse_plane_matrix(const Gf2e& F, const std::string& text);
/// Three PG(5,q) points, 18 hex elements.
Plane5 parse_plane_points(const Gf2e& F, const std::string& text);
/// Symmetric 3x3 pencil with entries linear in x, y, z. Rows separated by
/// ';', entries by ','; e.g. "x,y,.; y,z,.; .,.,." or "x,y,3*x; y,y+z,0; ...".
Plane5 parse_pencil(const Gf2e& F, const std::string& text);

nlohmann::json classification_json(const PlaneClassifier& C, const Plane5& pl);
nlohmann::json census_json(const CensusResult& r);
/// The deterministic part of the census file (everything except runtime).
nlohmann::json census_body_json(const CensusResult& r);
nlohmann::json checks_json(const std::vector<CheckResult>& checks);

nlohmann::json plane_json(const Plane5& pl);

}  // namespace vrn

#endif

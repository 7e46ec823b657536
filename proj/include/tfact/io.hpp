#ifndef TFACT_IO_HPP
#define TFACT_IO_HPP
//
// Project     : tfact
// Module      : io
// Description : JSON file formats for symbols and factor bundles
//
// Symbol files:
//   {"rows": m, "cols": n, "kind": "laurent"|"rational",
//    "terms": [{"power": k, "matrix": [[[re,im],...],...]}, ...],
//    "denominator": [{"power": k, "value": [re,im]}, ...]}   (rational only)
//
// Bundle files:
//   {"m":..., "n":..., "left": [block...], "diag": [{"t":..., "u": symbol}],
//    "right": [block...], "residual": symbol|null}
//   block = {"offset": j, "v": symbol, "theta": symbol|null,
//            "side": "left"|"right"}
//

#include <string>

#include <json.hpp>

#include <tfact/thematic.hpp>

namespace tfact {

nlohmann::json symbol_to_json(const CircleFunction& f);
CircleFunction symbol_from_json(const nlohmann::json& j);

nlohmann::json bundle_to_json(const FactorBundle& b);
FactorBundle bundle_from_json(const nlohmann::json& j);

CircleFunction load_symbol(const std::string& path);
FactorBundle load_bundle(const std::string& path);
void save_symbol(const CircleFunction& f, const std::string& path);
void save_bundle(const FactorBundle& b, const std::string& path);

} // namespace tfact

#endif

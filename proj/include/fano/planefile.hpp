#pragma once

#include "fano/symalg.hpp"

#include <string>

namespace fano {

// k-plane file format: a JSON document
//   {"m": M, "n": N, "k": K, "entries": [[["p/q", ...] x N] x M]}
// with one (k+1)-vector of rationals per matrix entry.  Rationals are written
// in lowest terms, "p" when the denominator is 1 and "p/q" otherwise, so
// canonical files round-trip byte for byte.

Rat rational_from_string(const std::string& text);
std::string rational_to_string(const Rat& value);

LinMatrix plane_from_json(const std::string& text);
std::string plane_to_json(const LinMatrix& M);

LinMatrix load_plane_file(const std::string& path);
void save_plane_file(const LinMatrix& M, const std::string& path);

}  // namespace fano

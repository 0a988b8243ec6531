#pragma once

#include <cstdint>
#include <string>

#include "frobkit/poly/poly_z.hpp"

namespace frobkit::frobenius {

struct DataBundle {
  poly::PolyZ f5;
  poly::PolyZ g;
  poly::PolyZ h;
  /// FNV-1a over the three file contents, in the order f5, g, h.
  std::uint64_t checksum = 0;
};

/// Reads a polynomial file. Lines starting with '#' are comments. Either one
/// line "c0 c1 ... cd", or one "<degree>: <coefficient>" per line. Throws ParseError.
poly::PolyZ parse_poly_text(const std::string& text);

/// Loads f5.poly, g.poly and h.poly from dir. Throws DataError if a file is
/// missing or a polynomial fails its integrity check.
DataBundle load_data_bundle(const std::string& dir);

/// Degree 48, even, monic, X^46 coefficient 3952905035040. Throws DataError.
void check_h(const poly::PolyZ& h);

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 14695981039346656037ULL);

}  // namespace frobkit::frobenius

#pragma once

// Flat little-endian container for fields and masks.
//
//   offset  size  content
//   0       4     "OBSL"
//   4       2     version (1)
//   6       2     d
//   8       4     n
//   12      8     box_len (IEEE-754 double)
//   20      1     domain (0 space, 1 frequency)
//   21      1     payload kind (1 complex field, 2 mask)
//   22      ...   row-major payload: (re, im) doubles, or one byte per cell

#include <filesystem>
#include <iosfwd>

#include "obslab/core/field.hpp"
#include "obslab/core/mask.hpp"

namespace obslab::io {

void write_field(std::ostream& os, const Field& f);
void write_mask(std::ostream& os, const Mask& m);
Field read_field(std::istream& is);
Mask read_mask(std::istream& is);

void save(const std::filesystem::path& path, const Field& f);
void save(const std::filesystem::path& path, const Mask& m);
Field load_field(const std::filesystem::path& path);
Mask load_mask(const std::filesystem::path& path);

}  // namespace obslab::io

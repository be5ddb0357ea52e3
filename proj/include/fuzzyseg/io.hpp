// PGM image reading/writing (P2 and P5, maxval <= 255), label-map
// rendering, and CSV serialization of sweep reports.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzyseg/core.hpp"
#include "fuzzyseg/eval.hpp"

namespace fuzzyseg {

struct ParseError : std::runtime_error {
  std::size_t offset;  // byte offset where parsing failed
  ParseError(const std::string& what, std::size_t offset);
};

struct UnsupportedFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses ASCII (P2) or binary (P5) PGM with '#' comments in the header.
GrayImage parse_pgm(std::string_view bytes);

/// parse_pgm on the file's contents; errors carry the path for context.
GrayImage read_pgm(const std::filesystem::path& path);

/// Binary P5 encoding: "P5\n<w> <h>\n255\n" followed by the raster.
std::string encode_pgm(const GrayImage& img);

void write_pgm(const GrayImage& img, const std::filesystem::path& path);

/// Maps label i to intensity round(i * 255 / (clusters - 1)) for maximal
/// contrast; a single cluster renders as 0.
GrayImage render_label_map(const LabelMap& labels, int clusters);

void write_label_map(const LabelMap& labels, int clusters, const std::filesystem::path& path);

/// Header "method,noise_percent,seed,accuracy,iterations,wall_ms", one row
/// per sweep entry, accuracy with 4 decimal places, LF line endings.
std::string format_csv(const SweepReport& report);

void write_csv(const SweepReport& report, const std::filesystem::path& path);

}  // namespace fuzzyseg

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lcrp/crypto.hpp"

namespace lcrp {

// Image on the padded power-of-two grid with its original extent.
struct LoadedImage {
  std::vector<RealGrid> channels;  // 1 (grey) or 3 (R, G, B), values in [0, 1]
  std::size_t orig_rows = 0;
  std::size_t orig_cols = 0;
};

// Binary PGM (P5, maxval 255) or 8-bit grey/RGB PNG. Values scaled by 1/255,
// then padded by edge replication to the next power of two (at least 8) per
// axis. Throws FormatError, IoError.
LoadedImage load_image(const std::filesystem::path& path);

// Edge-replicate `g` up to rows x cols.
RealGrid pad_edge(const RealGrid& g, std::size_t rows, std::size_t cols);
RealGrid crop(const RealGrid& g, std::size_t rows, std::size_t cols);

// round(255 clamp(v, 0, 1)), halves rounded up.
std::uint8_t quantize(double v);

// Top-left rows x cols of g as P5 (one grid) or P6 (three grids). Throws IoError.
void save_image(const std::vector<RealGrid>& channels, std::size_t rows, std::size_t cols,
                const std::filesystem::path& path);

// Two concatenated 16-bit P5 images. The first is viewable: sample =
// round(65535 C / scale), scale = max C, with scale and original extent in
// comments. The second (4 cols wide) carries each amplitude's float64 bits as
// four words, low word first, so a load is exact. Files holding only the first
// image load with 16-bit precision.
struct CipherFile {
  Ciphertext cipher;
  std::size_t orig_rows = 0;
  std::size_t orig_cols = 0;
};
void save_cipher(const CipherFile& c, const std::filesystem::path& path);
CipherFile load_cipher(const std::filesystem::path& path);

// Binary key file, little endian:
// "LCRK" | version u32 | m u32 | rows u32 | cols u32 | seed u64 |
// per stage 8 matrix entries + beta (f64) | gamma bits (row-major, MSB first,
// padded to a byte) | tau_1..tau_m | xi_1..xi_m (f64) | CRC-32 of all the above.
inline constexpr std::uint32_t kKeyFileVersion = 1;
std::vector<std::uint8_t> serialize_keys(const KeyBundle& k);
// Throws FormatError (magic, version, length), CrcError, KeyIntegrityError.
KeyBundle deserialize_keys(const std::vector<std::uint8_t>& bytes);
void save_keys(const KeyBundle& k, const std::filesystem::path& path);
KeyBundle load_keys(const std::filesystem::path& path);

// "a,b,c,d;a,b,c,d;beta=v": x-axis matrix, y-axis matrix, order. Throws
// FormatError, DeterminantError, ZeroBError.
StageParams parse_stage(const std::string& text);
std::string format_stage(const StageParams& s);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

// "dir/name.ext" -> "dir/name.<tag>.ext"; used for per-channel colour files.
std::filesystem::path with_tag(const std::filesystem::path& path, const std::string& tag);

}  // namespace lcrp

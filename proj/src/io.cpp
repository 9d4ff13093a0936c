#include "lcrp/io.hpp"

#include <png.h>
#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

namespace lcrp {

namespace fs = std::filesystem;

namespace {

// Netpbm header: magic, width, height, maxval; '#' comments collected.
struct PnmHeader {
  std::string magic;
  std::size_t width = 0, height = 0, maxval = 0;
  std::vector<std::string> comments;
  std::size_t data_offset = 0;
};

PnmHeader parse_pnm(const std::vector<std::uint8_t>& b, std::size_t start = 0) {
  PnmHeader h;
  std::size_t i = start;
  auto token = [&]() {
    for (;;) {
      while (i < b.size() && std::isspace(b[i])) ++i;
      if (i < b.size() && b[i] == '#') {
        std::string c;
        while (i < b.size() && b[i] != '\n') c.push_back(static_cast<char>(b[i++]));
        h.comments.push_back(c);
        continue;
      }
      break;
    }
    std::string t;
    while (i < b.size() && !std::isspace(b[i]) && b[i] != '#') t.push_back(static_cast<char>(b[i++]));
    if (t.empty()) throw FormatError("truncated netpbm header");
    return t;
  };
  auto number = [&]() {
    const std::string t = token();
    if (!std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        t.size() > 9)
      throw FormatError("bad netpbm header field '" + t + "'");
    return static_cast<std::size_t>(std::stoul(t));
  };
  h.magic = token();
  h.width = number();
  h.height = number();
  h.maxval = number();
  if (i >= b.size() || !std::isspace(b[i])) throw FormatError("truncated netpbm header");
  h.data_offset = i + 1;
  if (h.width == 0 || h.height == 0) throw FormatError("empty image");
  return h;
}

LoadedImage from_bytes(std::vector<RealGrid> ch, std::size_t rows, std::size_t cols) {
  LoadedImage out{{}, rows, cols};
  const std::size_t pr = std::max<std::size_t>(8, next_power_of_two(rows));
  const std::size_t pc = std::max<std::size_t>(8, next_power_of_two(cols));
  for (auto& g : ch) out.channels.push_back(pad_edge(g, pr, pc));
  return out;
}

LoadedImage load_pgm(const std::vector<std::uint8_t>& bytes) {
  const PnmHeader h = parse_pnm(bytes);
  if (h.magic != "P5") throw FormatError("not a binary PGM (P5)");
  if (h.maxval != 255) throw FormatError("PGM maxval must be 255");
  if (bytes.size() - h.data_offset < h.width * h.height) throw FormatError("truncated PGM data");
  RealGrid g(h.height, h.width);
  for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = bytes[h.data_offset + i] / 255.0;
  return from_bytes({std::move(g)}, h.height, h.width);
}

LoadedImage load_png(const fs::path& path) {
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&img, path.string().c_str()))
    throw FormatError(std::string("png: ") + img.message);
  if (img.format & (PNG_FORMAT_FLAG_LINEAR | PNG_FORMAT_FLAG_ALPHA)) {
    png_image_free(&img);
    throw FormatError("only 8-bit grey or RGB PNG is supported");
  }
  const bool colour = img.format & PNG_FORMAT_FLAG_COLOR;
  img.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, buf.data(), 0, nullptr))
    throw FormatError(std::string("png: ") + img.message);
  const std::size_t rows = img.height, cols = img.width, nc = colour ? 3 : 1;
  std::vector<RealGrid> ch(nc, RealGrid(rows, cols));
  for (std::size_t i = 0; i < rows * cols; ++i)
    for (std::size_t c = 0; c < nc; ++c) ch[c].values[i] = buf[i * nc + c] / 255.0;
  return from_bytes(std::move(ch), rows, cols);
}

void put_u32(std::vector<std::uint8_t>& o, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) o.push_back(static_cast<std::uint8_t>(v >> s));
}
void put_u64(std::vector<std::uint8_t>& o, std::uint64_t v) {
  for (int s = 0; s < 64; s += 8) o.push_back(static_cast<std::uint8_t>(v >> s));
}
void put_f64(std::vector<std::uint8_t>& o, double v) { put_u64(o, std::bit_cast<std::uint64_t>(v)); }

struct Reader {
  const std::vector<std::uint8_t>& b;
  std::size_t pos = 0;
  std::uint64_t take(int bytes) {
    std::uint64_t v = 0;
    for (int k = 0; k < bytes; ++k) v |= static_cast<std::uint64_t>(b[pos++]) << (8 * k);
    return v;
  }
  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  double f64() { return std::bit_cast<double>(take(8)); }
};

std::uint32_t crc_of(const std::uint8_t* p, std::size_t n) {
  return static_cast<std::uint32_t>(crc32(crc32(0L, Z_NULL, 0), p, static_cast<uInt>(n)));
}

}  // namespace

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

RealGrid pad_edge(const RealGrid& g, std::size_t rows, std::size_t cols) {
  if (rows < g.rows || cols < g.cols) throw DimensionMismatch("pad target smaller than image");
  RealGrid out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = g(std::min(r, g.rows - 1), std::min(c, g.cols - 1));
  return out;
}

RealGrid crop(const RealGrid& g, std::size_t rows, std::size_t cols) {
  if (rows > g.rows || cols > g.cols) throw DimensionMismatch("crop larger than image");
  RealGrid out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = g(r, c);
  return out;
}

std::uint8_t quantize(double v) {
  return static_cast<std::uint8_t>(std::floor(255.0 * std::clamp(v, 0.0, 1.0) + 0.5));
}

LoadedImage load_image(const fs::path& path) {
  const auto bytes = read_bytes(path);
  static constexpr std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::equal(png_sig, png_sig + 8, bytes.begin())) return load_png(path);
  return load_pgm(bytes);
}

void save_image(const std::vector<RealGrid>& channels, std::size_t rows, std::size_t cols,
                const fs::path& path) {
  if (channels.size() != 1 && channels.size() != 3)
    throw DimensionMismatch("save_image takes one or three channels");
  for (const auto& g : channels)
    if (g.rows < rows || g.cols < cols) throw DimensionMismatch("image smaller than extent");
  const std::string head =
      (channels.size() == 1 ? "P5\n" : "P6\n") + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
  std::vector<std::uint8_t> out(head.begin(), head.end());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (const auto& g : channels) out.push_back(quantize(g(r, c)));
  write_bytes(path, out);
}

void save_cipher(const CipherFile& c, const fs::path& path) {
  const RealGrid& a = c.cipher.amplitude;
  double scale = 0.0;
  for (double v : a.values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw NonFiniteError("ciphertext must be finite and >= 0");
    scale = std::max(scale, v);
  }
  std::ostringstream head;
  head.precision(17);
  head << "P5\n# lcrp-scale " << scale << "\n# lcrp-dims " << c.orig_rows << " " << c.orig_cols
       << "\n" << a.cols << " " << a.rows << "\n65535\n";
  const std::string h = head.str();
  std::vector<std::uint8_t> out(h.begin(), h.end());
  auto put16 = [&](std::uint16_t q) {  // netpbm 16-bit samples are big endian
    out.push_back(static_cast<std::uint8_t>(q >> 8));
    out.push_back(static_cast<std::uint8_t>(q & 0xFF));
  };
  for (double v : a.values)
    put16(static_cast<std::uint16_t>(scale > 0 ? std::floor(65535.0 * v / scale + 0.5) : 0));
  const std::string exact = "P5\n# lcrp-f64\n" + std::to_string(4 * a.cols) + " " +
                            std::to_string(a.rows) + "\n65535\n";
  out.insert(out.end(), exact.begin(), exact.end());
  for (double v : a.values) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int s = 0; s < 64; s += 16) put16(static_cast<std::uint16_t>(bits >> s));
  }
  write_bytes(path, out);
}

CipherFile load_cipher(const fs::path& path) {
  const auto bytes = read_bytes(path);
  const PnmHeader h = parse_pnm(bytes);
  if (h.magic != "P5" || h.maxval != 65535) throw FormatError("not a 16-bit ciphertext PGM");
  double scale = -1.0;
  CipherFile out;
  out.orig_rows = h.height;
  out.orig_cols = h.width;
  for (const auto& c : h.comments) {
    std::istringstream in(c.substr(1));
    std::string key;
    in >> key;
    if (key == "lcrp-scale") in >> scale;
    if (key == "lcrp-dims") in >> out.orig_rows >> out.orig_cols;
  }
  if (!(scale >= 0.0)) throw FormatError("ciphertext PGM lacks its scale comment");
  const std::size_t n = h.width * h.height;
  if (bytes.size() - h.data_offset < 2 * n) throw FormatError("truncated PGM data");
  auto word = [&](std::size_t p) { return static_cast<std::uint16_t>((bytes[p] << 8) | bytes[p + 1]); };
  RealGrid a(h.height, h.width);
  const std::size_t next = h.data_offset + 2 * n;
  if (next < bytes.size()) {
    // Second image: the exact amplitudes, four 16-bit words per value.
    const PnmHeader x = parse_pnm(bytes, next);
    if (x.magic != "P5" || x.maxval != 65535 || x.width != 4 * h.width || x.height != h.height ||
        bytes.size() - x.data_offset != 8 * n)
      throw FormatError("malformed exact-amplitude image in ciphertext file");
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t bits = 0;
      for (int k = 0; k < 4; ++k)
        bits |= static_cast<std::uint64_t>(word(x.data_offset + 8 * i + 2 * k)) << (16 * k);
      a.values[i] = std::bit_cast<double>(bits);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) a.values[i] = scale * word(h.data_offset + 2 * i) / 65535.0;
  }
  out.cipher.amplitude = std::move(a);
  return out;
}

std::vector<std::uint8_t> serialize_keys(const KeyBundle& k) {
  k.validate();
  std::vector<std::uint8_t> o{'L', 'C', 'R', 'K'};
  put_u32(o, kKeyFileVersion);
  put_u32(o, static_cast<std::uint32_t>(k.m()));
  put_u32(o, static_cast<std::uint32_t>(k.rows));
  put_u32(o, static_cast<std::uint32_t>(k.cols));
  put_u64(o, k.seed);
  for (const auto& s : k.stages) {
    for (const Matrix2& a : {s.matrices.ax1, s.matrices.ax2})
      for (double v : {a.a, a.b, a.c, a.d}) put_f64(o, v);
    put_f64(o, s.beta);
  }
  std::vector<std::uint8_t> bits((k.rows * k.cols + 7) / 8, 0);
  for (std::size_t i = 0; i < k.gamma_mask.size(); ++i)
    if (k.gamma_mask.values[i]) bits[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  o.insert(o.end(), bits.begin(), bits.end());
  for (const auto* set : {&k.taus, &k.xis})
    for (const auto& g : *set)
      for (double v : g.values) put_f64(o, v);
  put_u32(o, crc_of(o.data(), o.size()));
  return o;
}

KeyBundle deserialize_keys(const std::vector<std::uint8_t>& bytes) {
  constexpr std::size_t head = 4 + 4 * 4 + 8;
  if (bytes.size() < head + 4 || !std::equal(bytes.begin(), bytes.begin() + 4, "LCRK"))
    throw FormatError("not a key file");
  Reader rd{bytes, 4};
  if (rd.u32() != kKeyFileVersion) throw FormatError("unsupported key file version");
  const std::uint64_t m = rd.u32(), rows = rd.u32(), cols = rd.u32();
  const std::uint64_t px = rows * cols;
  const std::uint64_t expect = head + m * 9 * 8 + (px + 7) / 8 + 2 * m * px * 8 + 4;
  if (bytes.size() != expect) throw FormatError("key file length does not match its header");
  const std::uint32_t stored = static_cast<std::uint32_t>(
      bytes[expect - 4] | bytes[expect - 3] << 8 | bytes[expect - 2] << 16 |
      static_cast<std::uint32_t>(bytes[expect - 1]) << 24);
  if (stored != crc_of(bytes.data(), expect - 4)) throw CrcError("key file CRC mismatch");
  KeyBundle k;
  k.rows = rows;
  k.cols = cols;
  k.seed = rd.u64();
  for (std::uint64_t j = 0; j < m; ++j) {
    StageParams s;
    for (Matrix2* a : {&s.matrices.ax1, &s.matrices.ax2}) {
      a->a = rd.f64();
      a->b = rd.f64();
      a->c = rd.f64();
      a->d = rd.f64();
    }
    s.beta = rd.f64();
    k.stages.push_back(s);
  }
  k.gamma_mask = BitGrid(rows, cols);
  for (std::size_t i = 0; i < px; ++i)
    k.gamma_mask.values[i] = (bytes[rd.pos + i / 8] >> (7 - i % 8)) & 1;
  rd.pos += (px + 7) / 8;
  for (auto* set : {&k.taus, &k.xis})
    for (std::uint64_t j = 0; j < m; ++j) {
      RealGrid g(rows, cols);
      for (double& v : g.values) v = rd.f64();
      set->push_back(std::move(g));
    }
  k.validate();
  return k;
}

void save_keys(const KeyBundle& k, const fs::path& path) { write_bytes(path, serialize_keys(k)); }

KeyBundle load_keys(const fs::path& path) { return deserialize_keys(read_bytes(path)); }

StageParams parse_stage(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ';');) parts.push_back(part);
  if (parts.size() != 3 || parts[2].rfind("beta=", 0) != 0)
    throw FormatError("stage must look like 'a,b,c,d;a,b,c,d;beta=v': " + text);
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw FormatError("bad number '" + t + "' in stage " + text);
    return v;
  };
  auto matrix = [&](const std::string& t) {
    std::vector<double> v;
    std::stringstream ms(t);
    for (std::string e; std::getline(ms, e, ',');) v.push_back(number(e));
    if (v.size() != 4) throw FormatError("matrix needs 4 entries: " + t);
    return make_matrix(v[0], v[1], v[2], v[3]);
  };
  return {{matrix(parts[0]), matrix(parts[1])}, number(parts[2].substr(5))};
}

std::string format_stage(const StageParams& s) {
  std::ostringstream o;
  o.precision(17);
  const Matrix2& x = s.matrices.ax1;
  const Matrix2& y = s.matrices.ax2;
  o << x.a << ',' << x.b << ',' << x.c << ',' << x.d << ';' << y.a << ',' << y.b << ',' << y.c
    << ',' << y.d << ";beta=" << s.beta;
  return o.str();
}

fs::path with_tag(const fs::path& path, const std::string& tag) {
  fs::path out = path;
  out.replace_filename(path.stem().string() + "." + tag + path.extension().string());
  return out;
}

}  // namespace lcrp

#include "sphfir/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace sphfir {

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return is;
}

void set_fp(std::ostream& os) { os << std::setprecision(17); }

// "key=value" tokens after a fixed magic prefix
long header_value(const std::string& line, const std::string& key) {
  const std::string needle = key + "=";
  const std::size_t p = line.find(needle);
  if (p == std::string::npos)
    throw std::runtime_error("missing header field " + key);
  return std::strtol(line.c_str() + p + needle.size(), nullptr, 10);
}

std::string header_token(const std::string& line, const std::string& key) {
  const std::string needle = key + "=";
  const std::size_t p = line.find(needle);
  if (p == std::string::npos)
    throw std::runtime_error("missing header field " + key);
  const std::size_t b = p + needle.size();
  std::size_t e = line.find_first_of(" \t\r\n", b);
  if (e == std::string::npos) e = line.size();
  return line.substr(b, e - b);
}

std::string scheme_name(SphereGrid::Scheme s) {
  return s == SphereGrid::Scheme::GaussLegendre ? "gauss-legendre" : "equiangular";
}

SphereGrid grid_from_header(int nb, int na, const std::string& scheme) {
  if (scheme == "gauss-legendre") return make_gauss_legendre_grid(nb, na);
  if (scheme == "equiangular") return make_equiangular_grid(nb, na);
  throw std::runtime_error("unknown grid scheme: " + scheme);
}

std::vector<double> split_csv(const std::string& line) {
  std::vector<double> out;
  const char* p = line.c_str();
  char* end = nullptr;
  while (*p) {
    const double v = std::strtod(p, &end);
    if (end == p) break;
    out.push_back(v);
    p = end;
    while (*p == ',' || *p == ' ' || *p == '\t') ++p;
  }
  return out;
}

}  // namespace

void write_coefficients(std::ostream& os, const Spectrum& f) {
  set_fp(os);
  os << "#sph-coeff v1 L=" << f.bandwidth() << " real=" << (f.real_valued() ? 1 : 0)
     << "\n";
  for (int l = 0; l < f.bandwidth(); ++l)
    for (int m = -l; m <= l; ++m) {
      const complexd v = f.coeff(l, m);
      os << l << "," << m << "," << v.real() << "," << v.imag() << "\n";
    }
}

void write_coefficients(const std::string& path, const Spectrum& f) {
  auto os = open_out(path);
  write_coefficients(os, f);
}

Spectrum read_coefficients(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("#sph-coeff v1", 0) != 0)
    throw std::runtime_error("not a coefficient file");
  const int L = static_cast<int>(header_value(line, "L"));
  const bool real = header_value(line, "real") != 0;
  Spectrum f(L, real);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    int l = 0, m = 0;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &l, &m, &re, &im) != 4)
      throw std::runtime_error("bad coefficient line: " + line);
    if (l < 0 || l >= L || std::abs(m) > l)
      throw std::runtime_error("coefficient index out of range: " + line);
    f.set_coeff(l, m, complexd(re, im));
  }
  return f;
}

Spectrum read_coefficients(const std::string& path) {
  auto is = open_in(path);
  return read_coefficients(is);
}

void write_field(std::ostream& os, const SampledField& f) {
  set_fp(os);
  os << "#sph-grid v1 n_beta=" << f.grid.n_beta() << " n_alpha=" << f.grid.n_alpha()
     << " scheme=" << scheme_name(f.grid.scheme) << " complex=" << (f.real_hint ? 0 : 1)
     << "\n";
  for (int i = 0; i < f.grid.n_beta(); ++i) {
    for (int j = 0; j < f.grid.n_alpha(); ++j) {
      if (j) os << ",";
      const complexd v = f.at(i, j);
      if (f.real_hint)
        os << v.real();
      else
        os << v.real() << "," << v.imag();
    }
    os << "\n";
  }
}

void write_field(const std::string& path, const SampledField& f) {
  auto os = open_out(path);
  write_field(os, f);
}

SampledField read_field(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("#sph-grid v1", 0) != 0)
    throw std::runtime_error("not a field file");
  const int nb = static_cast<int>(header_value(line, "n_beta"));
  const int na = static_cast<int>(header_value(line, "n_alpha"));
  std::string scheme = "equiangular";
  if (line.find("scheme=") != std::string::npos) scheme = header_token(line, "scheme");

  SampledField f{grid_from_header(nb, na, scheme)};
  f.real_hint = true;
  for (int i = 0; i < nb; ++i) {
    if (!std::getline(is, line)) throw std::runtime_error("field file truncated");
    const std::vector<double> vals = split_csv(line);
    if (static_cast<int>(vals.size()) == na) {
      for (int j = 0; j < na; ++j) f.at(i, j) = vals[j];
    } else if (static_cast<int>(vals.size()) == 2 * na) {
      f.real_hint = false;
      for (int j = 0; j < na; ++j) f.at(i, j) = complexd(vals[2 * j], vals[2 * j + 1]);
    } else {
      throw std::runtime_error("field row has wrong value count");
    }
  }
  return f;
}

SampledField read_field(const std::string& path) {
  auto is = open_in(path);
  return read_field(is);
}

void write_grid(std::ostream& os, const SphereGrid& g) {
  set_fp(os);
  os << "#sph-gridspec v1 n_beta=" << g.n_beta() << " n_alpha=" << g.n_alpha()
     << " scheme=" << scheme_name(g.scheme) << "\n";
  for (int i = 0; i < g.n_beta(); ++i)
    os << "beta," << i << "," << g.beta_nodes[i] << "," << g.beta_weights[i] << "\n";
  for (int j = 0; j < g.n_alpha(); ++j)
    os << "alpha," << j << "," << g.alpha_nodes[j] << "," << g.alpha_weights[j] << "\n";
}

void write_grid(const std::string& path, const SphereGrid& g) {
  auto os = open_out(path);
  write_grid(os, g);
}

SphereGrid read_grid(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("#sph-gridspec v1", 0) != 0)
    throw std::runtime_error("not a grid file");
  const int nb = static_cast<int>(header_value(line, "n_beta"));
  const int na = static_cast<int>(header_value(line, "n_alpha"));
  SphereGrid g = grid_from_header(nb, na, header_token(line, "scheme"));
  // node/weight rows override the reconstructed values
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    char kind[8] = {0};
    int idx = 0;
    double node = 0.0, weight = 0.0;
    if (std::sscanf(line.c_str(), "%5[a-z],%d,%lf,%lf", kind, &idx, &node, &weight) != 4)
      throw std::runtime_error("bad grid line: " + line);
    if (std::string(kind) == "beta" && idx >= 0 && idx < nb) {
      g.beta_nodes[idx] = node;
      g.beta_weights[idx] = weight;
    } else if (std::string(kind) == "alpha" && idx >= 0 && idx < na) {
      g.alpha_nodes[idx] = node;
      g.alpha_weights[idx] = weight;
    } else {
      throw std::runtime_error("bad grid line: " + line);
    }
  }
  return g;
}

void write_transfer(std::ostream& os, const TransferFunction& h) {
  set_fp(os);
  os << "#sph-transfer v1 L=" << h.bandwidth() << "\n";
  for (int l = 0; l < h.bandwidth(); ++l)
    for (int m = -l; m <= l; ++m)
      for (int n = -l; n <= l; ++n) {
        const complexd v = h[l](m + l, n + l);
        os << l << "," << m << "," << n << "," << v.real() << "," << v.imag() << "\n";
      }
}

void write_transfer(const std::string& path, const TransferFunction& h) {
  auto os = open_out(path);
  write_transfer(os, h);
}

TransferFunction read_transfer(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("#sph-transfer v1", 0) != 0)
    throw std::runtime_error("not a transfer file");
  const int L = static_cast<int>(header_value(line, "L"));
  TransferFunction h(L);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    int l = 0, m = 0, n = 0;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%lf,%lf", &l, &m, &n, &re, &im) != 5)
      throw std::runtime_error("bad transfer line: " + line);
    if (l < 0 || l >= L || std::abs(m) > l || std::abs(n) > l)
      throw std::runtime_error("transfer index out of range: " + line);
    h[l](m + l, n + l) = complexd(re, im);
  }
  return h;
}

TransferFunction read_transfer(const std::string& path) {
  auto is = open_in(path);
  return read_transfer(is);
}

void write_taps(std::ostream& os, const std::vector<FirTap>& taps) {
  set_fp(os);
  os << "#sph-taps v1 N=" << taps.size() << "\n";
  for (const FirTap& t : taps) {
    const EulerAngles e = t.rotation.euler();
    os << t.weight.real() << "," << t.weight.imag() << "," << e.alpha << "," << e.beta
       << "," << e.gamma << "\n";
  }
}

std::vector<FirTap> read_taps(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("#sph-taps v1", 0) != 0)
    throw std::runtime_error("not a taps file");
  const long n = header_value(line, "N");
  std::vector<FirTap> taps;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    double re = 0.0, im = 0.0, a = 0.0, b = 0.0, g = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &re, &im, &a, &b, &g) != 5)
      throw std::runtime_error("bad tap line: " + line);
    taps.push_back({complexd(re, im), Rotation::from_euler(EulerAngles(a, b, g))});
  }
  if (static_cast<long>(taps.size()) != n)
    throw std::runtime_error("taps file count mismatch");
  return taps;
}

std::vector<FirTap> read_taps(const std::string& path) {
  auto is = open_in(path);
  return read_taps(is);
}

void write_freqresp(std::ostream& os, const std::vector<double>& norms) {
  set_fp(os);
  for (std::size_t l = 0; l < norms.size(); ++l) os << l << "," << norms[l] << "\n";
}

void write_freqresp(const std::string& path, const std::vector<double>& norms) {
  auto os = open_out(path);
  write_freqresp(os, norms);
}

// ---- raster IO ----

namespace {

int pgm_next_token(std::istream& is) {
  // skips whitespace and '#' comments
  for (;;) {
    int c = is.peek();
    if (c == '#') {
      std::string dummy;
      std::getline(is, dummy);
    } else if (std::isspace(c)) {
      is.get();
    } else {
      break;
    }
  }
  int v = 0;
  is >> v;
  return v;
}

std::vector<std::uint8_t> quantize(const SampledField& f, const RenderOptions& opts) {
  const int nb = f.grid.n_beta(), na = f.grid.n_alpha();
  double lo = opts.lo, hi = opts.hi;
  if (!opts.fixed_range) {
    lo = 1e300;
    hi = -1e300;
    for (Eigen::Index i = 0; i < f.values.size(); ++i) {
      lo = std::min(lo, f.values(i).real());
      hi = std::max(hi, f.values(i).real());
    }
  }
  std::vector<std::uint8_t> px(static_cast<std::size_t>(nb) * na, 128);
  if (hi - lo < 1e-30) {
    std::cerr << "render: constant field, writing mid-gray\n";
    return px;
  }
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < na; ++j) {
      double t = (f.at(i, j).real() - lo) / (hi - lo);
      t = std::clamp(t, 0.0, 1.0);
      px[static_cast<std::size_t>(i) * na + j] =
          static_cast<std::uint8_t>(std::lround(255.0 * t));
    }
  return px;
}

}  // namespace

SampledField read_pgm(const std::string& path) {
  auto is = open_in(path, true);
  std::string magic(2, '\0');
  is.read(magic.data(), 2);
  if (magic != "P5" && magic != "P2") throw std::runtime_error("not an 8-bit PGM: " + path);
  const int w = pgm_next_token(is);
  const int h = pgm_next_token(is);
  const int maxval = pgm_next_token(is);
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
    throw std::runtime_error("unsupported PGM header: " + path);

  SampledField f{make_equiangular_grid(h, w)};
  f.real_hint = true;
  if (magic == "P5") {
    is.get();  // single whitespace after maxval
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(w) * h);
    is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!is) throw std::runtime_error("PGM truncated: " + path);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j)
        f.at(i, j) = static_cast<double>(buf[static_cast<std::size_t>(i) * w + j]) / maxval;
  } else {
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j)
        f.at(i, j) = static_cast<double>(pgm_next_token(is)) / maxval;
  }
  return f;
}

void write_pgm(const std::string& path, const SampledField& f, const RenderOptions& opts) {
  const std::vector<std::uint8_t> px = quantize(f, opts);
  auto os = open_out(path, true);
  os << "P5\n" << f.grid.n_alpha() << " " << f.grid.n_beta() << "\n255\n";
  os.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

// ---- minimal PNG (grayscale 8-bit, stored deflate) ----

namespace {

std::uint32_t crc32_update(std::uint32_t crc, const std::uint8_t* p, std::size_t n) {
  static const std::array<std::uint32_t, 256> table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  crc ^= 0xFFFFFFFFu;
  for (std::size_t i = 0; i < n; ++i) crc = table[(crc ^ p[i]) & 0xFF] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

void put_be32(std::vector<std::uint8_t>& v, std::uint32_t x) {
  v.push_back(static_cast<std::uint8_t>(x >> 24));
  v.push_back(static_cast<std::uint8_t>(x >> 16));
  v.push_back(static_cast<std::uint8_t>(x >> 8));
  v.push_back(static_cast<std::uint8_t>(x));
}

void write_chunk(std::ostream& os, const char type[4], const std::vector<std::uint8_t>& data) {
  std::vector<std::uint8_t> head;
  put_be32(head, static_cast<std::uint32_t>(data.size()));
  os.write(reinterpret_cast<const char*>(head.data()), 4);
  os.write(type, 4);
  if (!data.empty())
    os.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  std::uint32_t crc = crc32_update(0, reinterpret_cast<const std::uint8_t*>(type), 4);
  if (!data.empty()) crc = crc32_update(crc, data.data(), data.size());
  std::vector<std::uint8_t> tail;
  put_be32(tail, crc);
  os.write(reinterpret_cast<const char*>(tail.data()), 4);
}

}  // namespace

void write_png(const std::string& path, const SampledField& f, const RenderOptions& opts) {
  const int w = f.grid.n_alpha(), h = f.grid.n_beta();
  const std::vector<std::uint8_t> px = quantize(f, opts);

  // raw stream: filter byte 0 before each scanline
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(h) * (w + 1));
  for (int i = 0; i < h; ++i) {
    raw.push_back(0);
    raw.insert(raw.end(), px.begin() + static_cast<std::ptrdiff_t>(i) * w,
               px.begin() + static_cast<std::ptrdiff_t>(i + 1) * w);
  }
  std::uint32_t adler_a = 1, adler_b = 0;
  for (std::uint8_t byte : raw) {
    adler_a = (adler_a + byte) % 65521;
    adler_b = (adler_b + adler_a) % 65521;
  }

  std::vector<std::uint8_t> idat{0x78, 0x01};  // zlib header, no compression preset
  std::size_t off = 0;
  while (off < raw.size()) {
    const std::size_t n = std::min<std::size_t>(65535, raw.size() - off);
    idat.push_back(off + n == raw.size() ? 1 : 0);  // BFINAL + stored type
    idat.push_back(static_cast<std::uint8_t>(n & 0xFF));
    idat.push_back(static_cast<std::uint8_t>(n >> 8));
    idat.push_back(static_cast<std::uint8_t>(~n & 0xFF));
    idat.push_back(static_cast<std::uint8_t>((~n >> 8) & 0xFF));
    idat.insert(idat.end(), raw.begin() + static_cast<std::ptrdiff_t>(off),
                raw.begin() + static_cast<std::ptrdiff_t>(off + n));
    off += n;
  }
  put_be32(idat, (adler_b << 16) | adler_a);

  auto os = open_out(path, true);
  const std::uint8_t sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  os.write(reinterpret_cast<const char*>(sig), 8);
  std::vector<std::uint8_t> ihdr;
  put_be32(ihdr, static_cast<std::uint32_t>(w));
  put_be32(ihdr, static_cast<std::uint32_t>(h));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(0);  // grayscale
  ihdr.push_back(0);
  ihdr.push_back(0);
  ihdr.push_back(0);
  write_chunk(os, "IHDR", ihdr);
  write_chunk(os, "IDAT", idat);
  write_chunk(os, "IEND", {});
}

void write_obj(const std::string& path, const SurfaceSamples& s) {
  const SphereGrid& g = s.x.grid;
  const int nb = g.n_beta(), na = g.n_alpha();
  auto os = open_out(path);
  set_fp(os);
  bool degenerate = true;
  for (int i = 0; i < nb && degenerate; ++i)
    for (int j = 0; j < na; ++j) {
      const std::size_t idx = g.index(i, j);
      if (std::abs(s.x.values(idx)) + std::abs(s.y.values(idx)) + std::abs(s.z.values(idx)) >
          1e-30) {
        degenerate = false;
        break;
      }
    }
  if (degenerate) os << "# degenerate all-zero surface\n";
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < na; ++j) {
      const std::size_t idx = g.index(i, j);
      os << "v " << s.x.values(idx).real() << " " << s.y.values(idx).real() << " "
         << s.z.values(idx).real() << "\n";
    }
  auto vid = [na](int i, int j) { return i * na + (j % na) + 1; };
  for (int i = 0; i + 1 < nb; ++i)
    for (int j = 0; j < na; ++j) {
      os << "f " << vid(i, j) << " " << vid(i, j + 1) << " " << vid(i + 1, j + 1) << "\n";
      os << "f " << vid(i, j) << " " << vid(i + 1, j + 1) << " " << vid(i + 1, j) << "\n";
    }
}

}  // namespace sphfir

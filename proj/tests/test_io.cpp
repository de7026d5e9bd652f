#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sphfir/io.hpp"

using namespace sphfir;

namespace {
std::string tmp_path(const std::string& name) {
  return std::string("io_test_") + name;
}
}  // namespace

TEST_CASE("coefficient files round trip bit-exactly") {
  const Spectrum f = random_spectrum(9, 123, true);
  std::ostringstream first;
  write_coefficients(first, f);
  std::istringstream in(first.str());
  const Spectrum g = read_coefficients(in);
  CHECK(g.bandwidth() == 9);
  CHECK(g.real_valued());
  CHECK(f.max_abs_diff(g) == 0.0);
  std::ostringstream second;
  write_coefficients(second, g);
  CHECK(first.str() == second.str());

  std::istringstream junk("#nope");
  CHECK_THROWS(read_coefficients(junk));
}

TEST_CASE("field files round trip for real and complex data") {
  const SphereGrid grid = make_grid(5, 2);
  SampledField f = synthesize(random_spectrum(5, 9, true), grid);
  f.real_hint = true;
  std::ostringstream os;
  write_field(os, f);
  std::istringstream is(os.str());
  const SampledField g = read_field(is);
  CHECK(g.real_hint);
  CHECK(g.grid.scheme == SphereGrid::Scheme::GaussLegendre);
  CHECK((g.values - f.values).cwiseAbs().maxCoeff() == 0.0);

  SampledField fc = synthesize(random_spectrum(5, 10), grid);
  std::ostringstream osc;
  write_field(osc, fc);
  std::istringstream isc(osc.str());
  const SampledField gc = read_field(isc);
  CHECK_FALSE(gc.real_hint);
  CHECK((gc.values - fc.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("grid files round trip") {
  const SphereGrid g = make_equiangular_grid(7, 12);
  std::ostringstream os;
  write_grid(os, g);
  std::istringstream is(os.str());
  const SphereGrid h = read_grid(is);
  CHECK(h.n_beta() == 7);
  CHECK(h.n_alpha() == 12);
  CHECK(h.scheme == SphereGrid::Scheme::Equiangular);
  for (int i = 0; i < 7; ++i) {
    CHECK(h.beta_nodes[i] == g.beta_nodes[i]);
    CHECK(h.beta_weights[i] == g.beta_weights[i]);
  }
}

TEST_CASE("transfer files round trip bit-exactly") {
  const TransferFunction h = five_point_lowpass(5);
  std::ostringstream os;
  write_transfer(os, h);
  std::istringstream is(os.str());
  const TransferFunction h2 = read_transfer(is);
  CHECK(h2.bandwidth() == 5);
  for (int l = 0; l < 5; ++l)
    CHECK((h[l] - h2[l]).cwiseAbs().maxCoeff() == 0.0);
  std::ostringstream os2;
  write_transfer(os2, h2);
  CHECK(os.str() == os2.str());
}

TEST_CASE("taps files round trip") {
  const std::vector<FirTap> taps = five_point_taps();
  std::ostringstream os;
  write_taps(os, taps);
  std::istringstream is(os.str());
  const std::vector<FirTap> back = read_taps(is);
  REQUIRE(back.size() == taps.size());
  for (std::size_t k = 0; k < taps.size(); ++k) {
    CHECK(std::abs(back[k].weight - taps[k].weight) < 1e-16);
    CHECK((back[k].rotation.matrix() - taps[k].rotation.matrix()).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("pgm write/read round trips up to quantization") {
  const SphereGrid grid = make_equiangular_grid(16, 32);
  SampledField f{grid};
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 32; ++j) f.at(i, j) = (i * 32.0 + j) / 511.0;
  f.real_hint = true;

  const std::string path = tmp_path("round.pgm");
  write_pgm(path, f);
  const SampledField g = read_pgm(path);
  CHECK(g.grid.n_beta() == 16);
  CHECK(g.grid.n_alpha() == 32);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 32; ++j)
      CHECK(std::abs(g.at(i, j).real() - f.at(i, j).real()) < 1.0 / 255.0);
  std::remove(path.c_str());
}

TEST_CASE("png writer emits a structurally valid file") {
  const SphereGrid grid = make_equiangular_grid(9, 17);
  SampledField f{grid};
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 17; ++j) f.at(i, j) = std::sin(0.3 * i) * std::cos(0.2 * j);
  const std::string path = tmp_path("img.png");
  write_png(path, f);

  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  unsigned char sig[8];
  is.read(reinterpret_cast<char*>(sig), 8);
  const unsigned char expect[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  for (int k = 0; k < 8; ++k) CHECK(sig[k] == expect[k]);
  char lenbuf[4], type[5] = {0};
  is.read(lenbuf, 4);
  is.read(type, 4);
  CHECK(std::string(type) == "IHDR");
  unsigned char dims[8];
  is.read(reinterpret_cast<char*>(dims), 8);
  const unsigned w = (dims[0] << 24) | (dims[1] << 16) | (dims[2] << 8) | dims[3];
  const unsigned h = (dims[4] << 24) | (dims[5] << 16) | (dims[6] << 8) | dims[7];
  CHECK(w == 17);
  CHECK(h == 9);
  is.close();
  std::remove(path.c_str());
}

TEST_CASE("obj export counts") {
  const SphereGrid grid = make_grid(4, 2);
  const SurfaceSamples s = bumpy_sphere(grid, 4, 1);
  const std::string path = tmp_path("mesh.obj");
  write_obj(path, s);
  std::ifstream is(path);
  int nv = 0, nf = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) == 0) ++nv;
    if (line.rfind("f ", 0) == 0) ++nf;
  }
  CHECK(nv == grid.n_beta() * grid.n_alpha());
  CHECK(nf == (grid.n_beta() - 1) * grid.n_alpha() * 2);
  is.close();
  std::remove(path.c_str());
}

TEST_CASE("all-zero surfaces are flagged in the obj output") {
  const SphereGrid grid = make_grid(3, 2);
  const SurfaceSamples zero{SampledField{grid}, SampledField{grid}, SampledField{grid}};
  const std::string path = tmp_path("zero.obj");
  write_obj(path, zero);
  std::ifstream is(path);
  std::string first;
  std::getline(is, first);
  CHECK(first.find("degenerate") != std::string::npos);
  is.close();
  std::remove(path.c_str());
}

TEST_CASE("render of a constant field is mid-gray") {
  const SphereGrid grid = make_equiangular_grid(4, 8);
  SampledField f{grid};
  f.values.setConstant(0.25);
  const std::string path = tmp_path("const.pgm");
  write_pgm(path, f);
  const SampledField g = read_pgm(path);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(g.at(i, j).real() == doctest::Approx(128.0 / 255.0));
  std::remove(path.c_str());
}

// sphfir: spherical-harmonic analysis, synthesis, and phase-sensitive FIR
// filtering on the sphere.
//
//   sphfir analyze world.pgm -L 63 --method irf -o world.coeff
//   sphfir filter world.coeff --filter fivept -o smooth.coeff
//   sphfir synthesize smooth.coeff -o smooth.field
//   sphfir render smooth.field -o smooth.png
//   sphfir verify --level full

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphfir/filtering.hpp"
#include "sphfir/io.hpp"
#include "sphfir/spharm.hpp"
#include "sphfir/verify.hpp"

using namespace sphfir;

namespace {

constexpr int kMaxBandwidth = 128;

struct FilterOptions {
  std::string name = "fivept";
  std::string taps_file;
  double sigma = 0.05;
  double lambda = 1.0;
  double beta0 = kPi / 32.0;
  double kappa = 10.0;
};

void add_filter_flags(CLI::App* cmd, FilterOptions& fo) {
  cmd->add_option("--filter", fo.name,
                  "fivept | threept | butterfly | butterfly90 | axisym-fvm | identity | custom");
  cmd->add_option("--taps", fo.taps_file, "taps file for --filter custom");
  cmd->add_option("--sigma", fo.sigma, "butterfly scale");
  cmd->add_option("--lambda", fo.lambda, "butterfly dilation");
  cmd->add_option("--beta0", fo.beta0, "threept colatitude shift");
  cmd->add_option("--kappa", fo.kappa, "axisym-fvm concentration");
}

TransferFunction build_filter(const FilterOptions& fo, int L) {
  if (fo.name == "fivept") return five_point_lowpass(L);
  if (fo.name == "threept") return three_point_lowpass(fo.beta0, L);
  if (fo.name == "identity") return TransferFunction::identity(L);
  if (fo.name == "butterfly" || fo.name == "butterfly90") {
    ButterflyParams p;
    p.sigma = fo.sigma;
    p.lambda = fo.lambda;
    p.orthogonal = fo.name == "butterfly90";
    return fir_transfer(butterfly_taps(p), L);
  }
  if (fo.name == "axisym-fvm") {
    const Spectrum fvm = fisher_von_mises_spectrum(fo.kappa, L);
    std::vector<complexd> h0(L);
    for (int l = 0; l < L; ++l) h0[l] = fvm.coeff(l, 0);
    return axisym_transfer(h0);
  }
  if (fo.name == "custom") {
    if (fo.taps_file.empty())
      throw CLI::ValidationError("--filter custom requires --taps");
    return fir_transfer(read_taps(fo.taps_file), L);
  }
  throw CLI::ValidationError("unknown filter name: " + fo.name);
}

SampledField load_field(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".pgm") return read_pgm(path);
  return read_field(path);
}

SphereGrid grid_for(int L, int n_beta, int n_alpha, const std::string& scheme) {
  if (n_beta <= 0) n_beta = 2 * L;
  if (n_alpha <= 0) n_alpha = 4 * L;
  if (scheme == "gauss-legendre") return make_gauss_legendre_grid(n_beta, n_alpha);
  if (scheme == "equiangular") return make_equiangular_grid(n_beta, n_alpha);
  throw CLI::ValidationError("unknown grid scheme: " + scheme);
}

void check_bandwidth(int L) {
  if (L < 1 || L > kMaxBandwidth)
    throw CLI::ValidationError("bandwidth must be in [1, " +
                               std::to_string(kMaxBandwidth) + "]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-sensitive FIR filtering on the sphere"};
  app.require_subcommand(1);

  int L = 63;
  std::string input, input2, output;
  std::string method = "quadrature";
  std::string scheme = "equiangular";
  int n_beta = 0, n_alpha = 0;
  std::uint64_t seed = 0;
  bool normalize_delta = false;
  std::string grid_out, field_out, transfer_out;
  double range_lo = 0.0, range_hi = 0.0;
  bool fixed_range = false;
  int cascade_count = 1;
  double rot_alpha = 0.0, rot_beta = 0.0, rot_gamma = 0.0;
  std::string level = "quick";
  std::vector<std::string> coords;
  bool bumpy = false;
  double bumpy_amp = 0.15;
  FilterOptions fo;

  CLI::App* analyze = app.add_subcommand("analyze", "field/PGM -> coefficient file");
  analyze->add_option("input", input)->required();
  analyze->add_option("-L,--bandwidth", L);
  analyze->add_option("--method", method, "quadrature | irf");
  analyze->add_option("-o,--output", output)->required();

  CLI::App* synth = app.add_subcommand("synthesize", "coefficient file -> field file");
  synth->add_option("input", input)->required();
  synth->add_option("-o,--output", output)->required();
  synth->add_option("--nbeta", n_beta);
  synth->add_option("--nalpha", n_alpha);
  synth->add_option("--scheme", scheme, "equiangular | gauss-legendre");
  synth->add_option("--grid-out", grid_out, "also dump the grid nodes/weights");

  CLI::App* filter = app.add_subcommand("filter", "apply a transfer function");
  filter->add_option("input", input)->required();
  filter->add_option("-o,--output", output)->required();
  add_filter_flags(filter, fo);
  filter->add_option("--cascade", cascade_count, "apply the filter this many times");
  filter->add_option("--transfer-out", transfer_out);
  filter->add_option("--field-out", field_out, "also synthesize to a field file");
  filter->add_option("--nbeta", n_beta);
  filter->add_option("--nalpha", n_alpha);
  filter->add_option("--scheme", scheme);

  CLI::App* impulse = app.add_subcommand("impulse", "impulse response field of a filter");
  impulse->add_option("-L,--bandwidth", L);
  impulse->add_option("-o,--output", output)->required();
  add_filter_flags(impulse, fo);
  impulse->add_option("--nbeta", n_beta);
  impulse->add_option("--nalpha", n_alpha);
  impulse->add_option("--scheme", scheme);

  CLI::App* freqresp = app.add_subcommand("freqresp", "per-degree norms of a filter");
  freqresp->add_option("-L,--bandwidth", L);
  freqresp->add_option("-o,--output", output)->required();
  freqresp->add_flag("--normalize-delta", normalize_delta,
                     "impulse-normalized response ||F_delta H|| / ||F_delta||");
  add_filter_flags(freqresp, fo);

  CLI::App* rotate = app.add_subcommand("rotate", "rotate a coefficient file");
  rotate->add_option("input", input)->required();
  rotate->add_option("-o,--output", output)->required();
  rotate->add_option("--alpha", rot_alpha)->required();
  rotate->add_option("--beta", rot_beta)->required();
  rotate->add_option("--gamma", rot_gamma);

  CLI::App* phase = app.add_subcommand("phase", "magnitude/phase tools");
  CLI::App* dof = phase->add_subcommand("dof", "degree-of-freedom table");
  dof->add_option("-L,--bandwidth", L);
  CLI::App* magonly = phase->add_subcommand("magonly", "drop phase, keep magnitudes");
  magonly->add_option("input", input);
  magonly->add_option("-o,--output", output)->required();
  magonly->add_option("-L,--bandwidth", L);
  magonly->add_option("--seed", seed, "use a seeded white-noise spectrum as input");
  magonly->add_option("--field-out", field_out);
  CLI::App* swap = phase->add_subcommand("swap", "magnitudes of A with phases of B");
  swap->add_option("input_a", input)->required();
  swap->add_option("input_b", input2)->required();
  swap->add_option("-o,--output", output)->required();
  phase->require_subcommand(1);

  CLI::App* spharm = app.add_subcommand("spharm", "filter a genus-zero surface");
  spharm->add_option("--coords", coords, "three coordinate field files (x y z)")
      ->expected(3);
  spharm->add_flag("--bumpy", bumpy, "use the seeded bumpy-sphere generator");
  spharm->add_option("--amplitude", bumpy_amp);
  spharm->add_option("--seed", seed);
  spharm->add_option("-L,--bandwidth", L);
  spharm->add_option("--method", method);
  spharm->add_option("-o,--output", output)->required();
  add_filter_flags(spharm, fo);
  spharm->add_option("--cascade", cascade_count);

  CLI::App* render = app.add_subcommand("render", "field file -> PGM/PNG heatmap");
  render->add_option("input", input)->required();
  render->add_option("-o,--output", output)->required();
  render
      ->add_option(
          "--range",
          [&](const std::vector<std::string>& v) {
            range_lo = std::stod(v[0]);
            range_hi = std::stod(v[1]);
            fixed_range = true;
            return true;
          },
          "fixed lo hi instead of min-max")
      ->expected(2);

  CLI::App* verify = app.add_subcommand("verify", "run the numerical oracle suites");
  verify->add_option("--level", level, "quick | full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      check_bandwidth(L);
      const SampledField f = load_field(input);
      const Spectrum out = method == "irf" ? analyze_irf(f, L) : analyze_quadrature(f, L);
      write_coefficients(output, out);
    } else if (*synth) {
      const Spectrum f = read_coefficients(input);
      const SphereGrid grid = grid_for(f.bandwidth(), n_beta, n_alpha, scheme);
      if (!grid_out.empty()) write_grid(grid_out, grid);
      write_field(output, synthesize(f, grid));
    } else if (*filter) {
      const Spectrum f = read_coefficients(input);
      TransferFunction h = build_filter(fo, f.bandwidth());
      for (int k = 1; k < cascade_count; ++k) h = cascade(h, build_filter(fo, f.bandwidth()));
      if (!transfer_out.empty()) write_transfer(transfer_out, h);
      const Spectrum g = apply(h, f);
      write_coefficients(output, g);
      if (!field_out.empty())
        write_field(field_out, synthesize(g, grid_for(g.bandwidth(), n_beta, n_alpha, scheme)));
    } else if (*impulse) {
      check_bandwidth(L);
      const TransferFunction h = build_filter(fo, L);
      write_field(output, impulse_response(h, grid_for(L, n_beta, n_alpha, scheme)));
    } else if (*freqresp) {
      check_bandwidth(L);
      const TransferFunction h = build_filter(fo, L);
      const std::vector<double> norms =
          normalize_delta ? delta_normalized_response(h) : transfer_norms(h);
      write_freqresp(output, norms);
    } else if (*rotate) {
      const Spectrum f = read_coefficients(input);
      write_coefficients(output,
                         rotate_spectrum(f, EulerAngles(rot_alpha, rot_beta, rot_gamma)));
    } else if (*dof) {
      const DofCounts c = dof_counts(L);
      std::printf("L=%d total=%lld magnitude=%lld phase=%lld percent_phase=%.6f\n", L,
                  static_cast<long long>(c.total), static_cast<long long>(c.magnitude),
                  static_cast<long long>(c.phase), c.percent_phase);
    } else if (*magonly) {
      check_bandwidth(L);
      const Spectrum f =
          input.empty() ? random_spectrum(L, seed, true) : read_coefficients(input);
      const Spectrum mo = magnitude_only_spectrum(f);
      write_coefficients(output, mo);
      if (!field_out.empty()) {
        const SampledField s = synthesize(mo, grid_for(mo.bandwidth(), 0, 0, "equiangular"));
        // structural check: the output must be axially symmetric
        for (int i = 0; i < s.grid.n_beta(); ++i)
          for (int j = 0; j < s.grid.n_alpha(); ++j)
            if (std::abs(s.at(i, j) - s.at(i, 0)) > 1e-8)
              throw std::runtime_error("magnitude-only synthesis is not axially symmetric");
        write_field(field_out, s);
      }
    } else if (*swap) {
      const Spectrum a = read_coefficients(input);
      const Spectrum b = read_coefficients(input2);
      write_coefficients(output, phase_swap(a, b));
    } else if (*spharm) {
      check_bandwidth(L);
      SurfaceSamples s;
      if (bumpy) {
        s = bumpy_sphere(make_grid(L, 2), L, seed, bumpy_amp);
      } else if (coords.size() == 3) {
        s = SurfaceSamples{load_field(coords[0]), load_field(coords[1]),
                           load_field(coords[2])};
      } else {
        throw CLI::ValidationError("spharm needs --coords x y z or --bumpy");
      }
      const AnalysisMethod am =
          method == "irf" ? AnalysisMethod::Irf : AnalysisMethod::Quadrature;
      SpharmSpectrum spec = spharm_analyze(s.x, s.y, s.z, L, am);
      if (fo.name != "identity" || cascade_count > 1) {
        TransferFunction h = build_filter(fo, L);
        for (int k = 1; k < cascade_count; ++k) h = cascade(h, build_filter(fo, L));
        spec = spharm_filter(spec, h);
      }
      write_obj(output, spharm_synthesize(spec, s.x.grid));
    } else if (*render) {
      const SampledField f = load_field(input);
      RenderOptions opts;
      opts.fixed_range = fixed_range;
      opts.lo = range_lo;
      opts.hi = range_hi;
      if (output.size() > 4 && output.substr(output.size() - 4) == ".png")
        write_png(output, f, opts);
      else
        write_pgm(output, f, opts);
    } else if (*verify) {
      const VerifyLevel lv = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
      const VerifyReport rep = run_verify(lv, &std::cout);
      if (!rep.all_pass()) return 2;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#!/usr/bin/env python3
"""Integration checks for the sphfir command line driver."""
import math
import os
import subprocess
import sys
import tempfile

CLI = os.path.abspath(sys.argv[1])
DATA = os.path.abspath(sys.argv[2])
MASK = os.path.join(DATA, "world_landsea_256x128.pgm")

passed = 0


def run(*args, expect=0):
    r = subprocess.run([CLI] + list(args), capture_output=True, text=True)
    assert r.returncode == expect, (args, r.returncode, r.stderr)
    return r


def check(name, cond):
    global passed
    assert cond, name
    passed += 1
    print(f"ok {name}")


def read_coeffs(path):
    out = {}
    with open(path) as f:
        header = f.readline()
        assert header.startswith("#sph-coeff v1")
        for line in f:
            l, m, re, im = line.strip().split(",")
            out[(int(l), int(m))] = complex(float(re), float(im))
    return out


def degree_norms(coeffs):
    import collections
    acc = collections.defaultdict(float)
    for (l, _), v in coeffs.items():
        acc[l] += abs(v) ** 2
    return {l: math.sqrt(e) for l, e in acc.items()}


def main():
    tmp = tempfile.mkdtemp(prefix="sphfir_cli_")
    os.chdir(tmp)

    # exit codes: usage errors -> 1, unreadable input -> 2
    r = subprocess.run([CLI, "no-such-command"], capture_output=True)
    check("unknown subcommand exits 1", r.returncode == 1)
    r = subprocess.run([CLI, "analyze", "missing.pgm", "-o", "x.coeff"],
                       capture_output=True)
    check("missing input exits 2", r.returncode == 2)
    r = subprocess.run([CLI, "filter"], capture_output=True)
    check("missing required option exits 1", r.returncode == 1)
    run("--help")
    check("help exits 0", True)

    # dof table
    r = run("phase", "dof", "-L", "10")
    check("dof line", "total=121" in r.stdout and "percent_phase=90.909091" in r.stdout)

    # analyze the shipped mask and check determinism
    run("analyze", MASK, "-L", "24", "--method", "irf", "-o", "a.coeff")
    run("analyze", MASK, "-L", "24", "--method", "irf", "-o", "b.coeff")
    check("analyze is deterministic",
          open("a.coeff", "rb").read() == open("b.coeff", "rb").read())

    # identity filter is a bit-identical pass-through
    run("filter", "a.coeff", "--filter", "identity", "-o", "ident.coeff")
    check("identity filter bit-identical",
          open("a.coeff", "rb").read() == open("ident.coeff", "rb").read())

    # custom taps: a single unit tap at the identity rotation
    with open("ident.taps", "w") as f:
        f.write("#sph-taps v1 N=1\n1,0,0,0,0\n")
    run("filter", "a.coeff", "--filter", "custom", "--taps", "ident.taps",
        "-o", "custom.coeff")
    ca, cc = read_coeffs("a.coeff"), read_coeffs("custom.coeff")
    err = max(abs(ca[k] - cc[k]) for k in ca)
    check("custom identity taps match", err < 1e-12)

    # bad filter name is a usage error
    r = subprocess.run([CLI, "filter", "a.coeff", "--filter", "nope", "-o", "x.coeff"],
                       capture_output=True)
    check("unknown filter exits 1", r.returncode == 1)

    # analyze -> synthesize -> analyze round trip is stable for
    # bandlimited data
    run("synthesize", "a.coeff", "-o", "a.field", "--nbeta", "64", "--nalpha", "96",
        "--grid-out", "a.grid")
    run("analyze", "a.field", "-L", "24", "-o", "a2.coeff")
    c1, c2 = read_coeffs("a.coeff"), read_coeffs("a2.coeff")
    err = max(abs(c1[k] - c2[k]) for k in c1)
    check("round trip stable (err %.2g)" % err, err < 1e-6)
    check("grid file written", open("a.grid").readline().startswith("#sph-gridspec v1"))

    # rotate there and back along z
    run("rotate", "a.coeff", "--alpha", "0.7", "--beta", "0", "-o", "rot.coeff")
    run("rotate", "rot.coeff", "--alpha", "-0.7", "--beta", "0", "-o", "back.coeff")
    cb = read_coeffs("back.coeff")
    err = max(abs(c1[k] - cb[k]) for k in c1)
    check("z-rotation round trip", err < 1e-10)
    # general rotation preserves degree norms
    run("rotate", "a.coeff", "--alpha", "0.5", "--beta", "0.9", "--gamma", "1.1",
        "-o", "rotg.coeff")
    n1, n2 = degree_norms(c1), degree_norms(read_coeffs("rotg.coeff"))
    err = max(abs(n1[l] - n2[l]) for l in n1)
    check("rotation preserves magnitudes", err < 1e-9)

    # freqresp: identity filter is flat 1.0 when delta-normalized
    run("freqresp", "-L", "16", "--filter", "identity", "--normalize-delta",
        "-o", "fr.csv")
    rows = [line.strip().split(",") for line in open("fr.csv")]
    check("freqresp rows", len(rows) == 16)
    check("identity response flat 1.0",
          all(abs(float(v) - 1.0) < 1e-12 for _, v in rows))
    # five-point response decays overall
    run("freqresp", "-L", "64", "--filter", "fivept", "--normalize-delta",
        "-o", "fr5.csv")
    vals = [float(v) for _, v in (line.strip().split(",") for line in open("fr5.csv"))]
    n = len(vals)
    sx, sy = sum(range(n)), sum(vals)
    sxx = sum(i * i for i in range(n))
    sxy = sum(i * v for i, v in enumerate(vals))
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    check("fivept response slope negative", slope < 0)

    # phase tools
    run("phase", "swap", "a.coeff", "a.coeff", "-o", "swap.coeff")
    cs = read_coeffs("swap.coeff")
    err = max(abs(c1[k] - cs[k]) for k in c1)
    check("phase swap with itself is identity", err < 1e-10)
    run("phase", "magonly", "-L", "12", "--seed", "5", "-o", "mag.coeff",
        "--field-out", "mag.field")
    mags = read_coeffs("mag.coeff")
    check("magonly axially symmetric",
          all(abs(v) < 1e-12 for (l, m), v in mags.items() if m != 0))

    # impulse + render to PGM and PNG
    run("impulse", "-L", "24", "--filter", "fivept", "-o", "imp.field")
    run("render", "imp.field", "-o", "imp.pgm")
    check("pgm written", open("imp.pgm", "rb").read(2) == b"P5")
    run("render", "imp.field", "-o", "imp.png")
    check("png signature", open("imp.png", "rb").read(8) ==
          bytes([137, 80, 78, 71, 13, 10, 26, 10]))

    # rendered bandlimited impulse is brightest in the top (north) rows
    run("impulse", "-L", "24", "--filter", "identity", "-o", "delta.field")
    run("render", "delta.field", "-o", "delta.pgm")
    with open("delta.pgm", "rb") as f:
        assert f.readline().strip() == b"P5"
        w, h = map(int, f.readline().split())
        f.readline()
        px = f.read()
    brightest_row = max(range(h), key=lambda i: max(px[i * w:(i + 1) * w]))
    check("delta renders bright at the pole rows", brightest_row == 0)

    # constant field renders mid-gray with a warning
    with open("const.field", "w") as f:
        f.write("#sph-grid v1 n_beta=4 n_alpha=8 scheme=equiangular complex=0\n")
        for _ in range(4):
            f.write(",".join(["2.5"] * 8) + "\n")
    r = run("render", "const.field", "-o", "const.pgm")
    check("constant field warning", "constant field" in r.stderr)
    body = open("const.pgm", "rb").read()
    check("mid-gray pixels", body[-32:] == bytes([128] * 32))

    # spharm smoothing pipeline
    run("spharm", "--bumpy", "-L", "12", "--seed", "3", "--filter", "fivept",
        "-o", "smooth.obj")
    nv = sum(1 for line in open("smooth.obj") if line.startswith("v "))
    nf = sum(1 for line in open("smooth.obj") if line.startswith("f "))
    check("obj has the grid mesh", nv == 24 * 24 and nf == 23 * 24 * 2)

    # spharm from explicit coordinate fields: a unit sphere round-trips
    nb, na = 20, 40
    for name, fun in [("fx", lambda b, a: math.cos(a) * math.sin(b)),
                      ("fy", lambda b, a: math.sin(a) * math.sin(b)),
                      ("fz", lambda b, a: math.cos(b))]:
        with open(name + ".field", "w") as f:
            f.write(f"#sph-grid v1 n_beta={nb} n_alpha={na} scheme=equiangular complex=0\n")
            for i in range(nb):
                beta = math.pi * (i + 0.5) / nb
                row = [repr(fun(beta, 2 * math.pi * (j + 0.5) / na)) for j in range(na)]
                f.write(",".join(row) + "\n")
    run("spharm", "--coords", "fx.field", "fy.field", "fz.field", "-L", "8",
        "--filter", "identity", "-o", "sphere.obj")
    radii = [math.sqrt(sum(float(c) ** 2 for c in line.split()[1:4]))
             for line in open("sphere.obj") if line.startswith("v ")]
    check("unit sphere round trip via --coords",
          max(abs(r - 1.0) for r in radii) < 1e-6)

    # butterfly on the world mask renders
    run("analyze", MASK, "-L", "48", "--method", "irf", "-o", "w.coeff")
    run("filter", "w.coeff", "--filter", "butterfly", "-o", "bf.coeff",
        "--field-out", "bf.field", "--nbeta", "96", "--nalpha", "192")
    run("render", "bf.field", "-o", "bf.pgm")
    check("butterfly field rendered", os.path.getsize("bf.pgm") > 1000)

    # dilated butterfly gives a blurrier output: the output spectrum's
    # centroid and its energy fraction above the passband edge both drop
    run("filter", "w.coeff", "--filter", "butterfly", "--lambda", "2", "-o", "bf2.coeff")
    def spectral_stats(path):
        import collections
        energy = collections.defaultdict(float)
        for (l, _), v in read_coeffs(path).items():
            energy[l] += abs(v) ** 2
        tot = sum(energy.values())
        centroid = sum(l * e for l, e in energy.items()) / tot
        hi = sum(e for l, e in energy.items() if l >= 8) / tot
        return centroid, hi
    c1m, h1m = spectral_stats("bf.coeff")
    c2m, h2m = spectral_stats("bf2.coeff")
    check("dilated butterfly is blurrier (centroid %.2f -> %.2f, hi-frac %.3f -> %.3f)"
          % (c1m, c2m, h1m, h2m), c2m < c1m and h2m < h1m)

    # constant-white PGM analyzes to a pure DC coefficient sqrt(4 pi)
    with open("white.pgm", "wb") as f:
        f.write(b"P5\n32 16\n255\n" + bytes([255] * 512))
    run("analyze", "white.pgm", "-L", "6", "-o", "white.coeff")
    cw = read_coeffs("white.coeff")
    check("constant PGM DC coefficient",
          abs(cw[(0, 0)] - math.sqrt(4 * math.pi)) < 1e-9 and
          all(abs(v) < 1e-9 for k, v in cw.items() if k != (0, 0)))

    # self-check suite
    r = run("verify", "--level", "quick")
    check("verify quick all pass", "[FAIL]" not in r.stdout)

    print(f"\nall {passed} CLI checks passed")


if __name__ == "__main__":
    main()

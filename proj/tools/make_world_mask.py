#!/usr/bin/env python3
"""Rasterize a coarse land/sea mask to data/world_landsea_256x128.pgm.

Continent outlines are hand-placed coarse polygons (a few degrees of
accuracy); the output is an equirectangular 8-bit PGM with land = 255,
sea = 0, row 0 = north. Run from the repository root.
"""
import os

W, H = 256, 128

NORTH_AMERICA = [(-168, 66), (-156, 71), (-140, 70), (-125, 72), (-110, 73), (-96, 73),
                 (-85, 69), (-77, 62), (-60, 50), (-64, 46), (-70, 43), (-74, 40),
                 (-76, 35), (-80, 32), (-80, 25), (-83, 29), (-89, 30), (-94, 29),
                 (-97, 26), (-97, 22), (-94, 18), (-88, 16), (-83, 9), (-79, 9),
                 (-81, 8), (-85, 12), (-92, 15), (-97, 16), (-105, 20), (-109, 23),
                 (-114, 28), (-117, 33), (-121, 35), (-124, 40), (-124, 47), (-128, 51),
                 (-132, 55), (-136, 58), (-141, 60), (-150, 60), (-157, 58), (-165, 60)]
GREENLAND = [(-58, 76), (-50, 82), (-38, 83), (-25, 81), (-20, 76), (-22, 70),
             (-30, 68), (-42, 60), (-48, 61), (-52, 66), (-56, 72)]
BAFFIN = [(-78, 62), (-86, 66), (-90, 70), (-85, 73), (-78, 72), (-72, 70), (-68, 65)]
VICTORIA = [(-118, 69), (-110, 72), (-100, 71), (-104, 68), (-112, 67)]
SOUTH_AMERICA = [(-79, 9), (-75, 11), (-71, 12), (-64, 10), (-60, 8), (-52, 5),
                 (-50, 0), (-44, -3), (-38, -5), (-35, -8), (-39, -14), (-41, -22),
                 (-48, -26), (-53, -34), (-58, -39), (-65, -41), (-65, -47), (-69, -52),
                 (-74, -53), (-73, -46), (-73, -40), (-71, -33), (-70, -25), (-70, -18),
                 (-75, -15), (-79, -7), (-81, -4), (-80, 1), (-77, 7)]
CUBA = [(-84, 22), (-80, 23), (-75, 20), (-78, 20)]
HISPANIOLA = [(-74, 19), (-70, 19), (-68, 18), (-72, 17)]
AFRICA = [(-10, 32), (-6, 35), (3, 37), (11, 37), (14, 32), (20, 31), (29, 31),
          (33, 28), (36, 22), (40, 15), (43, 11), (48, 11), (51, 10), (46, 4),
          (41, -2), (40, -10), (36, -18), (33, -26), (27, -34), (20, -35), (18, -32),
          (14, -26), (12, -18), (9, -7), (9, 0), (6, 4), (0, 5), (-6, 4), (-12, 7),
          (-17, 12), (-17, 17), (-16, 22), (-13, 27)]
MADAGASCAR = [(44, -12), (50, -15), (50, -22), (47, -25), (44, -22), (43, -16)]
EURASIA = [(-9, 37), (-9, 43), (-2, 47), (-5, 48), (0, 50), (3, 51), (7, 54),
           (8, 57), (10, 59), (5, 59), (5, 62), (10, 65), (15, 68), (20, 70),
           (27, 71), (31, 70), (29, 67), (24, 65), (21, 62), (18, 59), (19, 57),
           (16, 56), (14, 54), (19, 55), (21, 56), (24, 58), (30, 60), (33, 64),
           (37, 65), (35, 68), (42, 68), (50, 69), (60, 70), (70, 69), (73, 72),
           (80, 73), (90, 76), (100, 78), (110, 77), (120, 74), (130, 72), (140, 72),
           (150, 70), (160, 69), (170, 67), (179, 66), (178, 63), (170, 60),
           (162, 57), (160, 60), (162, 57), (160, 51), (156, 52), (155, 58),
           (143, 59), (141, 53), (137, 49), (133, 44), (129, 41), (126, 38),
           (121, 36), (119, 32), (121, 29), (116, 23), (110, 20), (107, 12),
           (105, 9), (103, 2), (100, 4), (97, 9), (98, 14), (94, 18), (91, 22),
           (87, 21), (83, 18), (80, 13), (77, 8), (75, 13), (72, 19), (69, 22),
           (66, 25), (60, 25), (54, 26), (50, 28), (52, 25), (56, 25), (58, 22),
           (54, 17), (50, 14), (45, 12), (43, 16), (40, 20), (36, 26), (33, 29),
           (35, 33), (36, 36), (32, 36), (27, 36), (26, 39), (23, 38), (22, 36),
           (20, 39), (16, 40), (18, 41), (13, 45), (18, 40), (15, 37), (13, 41),
           (10, 44), (8, 44), (6, 43), (3, 42), (0, 39), (-2, 36), (-6, 36)]
BRITAIN = [(-5, 50), (-3, 53), (-5, 56), (-3, 58), (0, 57), (1, 53), (-1, 51)]
IRELAND = [(-10, 52), (-10, 55), (-6, 55), (-6, 52)]
ICELAND = [(-22, 64), (-23, 66), (-18, 67), (-14, 65), (-18, 63)]
JAPAN = [(130, 31), (131, 34), (136, 36), (140, 41), (143, 45), (145, 44), (141, 39),
         (137, 34), (132, 31)]
SUMATRA = [(95, 5), (99, 3), (104, -3), (106, -6), (102, -5), (97, 1)]
BORNEO = [(109, 1), (112, 3), (117, 4), (119, 0), (116, -3), (110, -3)]
JAVA = [(105, -6), (112, -7), (114, -8), (108, -8)]
NEW_GUINEA = [(131, -1), (136, -2), (141, -3), (146, -6), (144, -8), (138, -8), (133, -4)]
PHILIPPINES = [(120, 18), (122, 16), (123, 12), (125, 8), (122, 8), (120, 13)]
SRI_LANKA = [(80, 9), (82, 7), (81, 5), (79, 7)]
AUSTRALIA = [(114, -22), (113, -26), (115, -34), (118, -35), (124, -33), (129, -32),
             (132, -32), (137, -35), (140, -38), (146, -39), (150, -37), (153, -31),
             (153, -26), (150, -22), (146, -18), (142, -11), (137, -12), (136, -15),
             (131, -12), (126, -14), (122, -17)]
TASMANIA = [(145, -41), (148, -41), (147, -43), (145, -42)]
NEW_ZEALAND = [(173, -35), (176, -38), (174, -40), (171, -42), (167, -46), (170, -46),
               (174, -42), (176, -40), (178, -38)]
PENINSULA = [(-68, -63), (-58, -64), (-60, -70), (-68, -70)]

POLYGONS = [NORTH_AMERICA, GREENLAND, BAFFIN, VICTORIA, SOUTH_AMERICA, CUBA,
            HISPANIOLA, AFRICA, MADAGASCAR, EURASIA, BRITAIN, IRELAND, ICELAND,
            JAPAN, SUMATRA, BORNEO, JAVA, NEW_GUINEA, PHILIPPINES, SRI_LANKA,
            AUSTRALIA, TASMANIA, NEW_ZEALAND, PENINSULA]


def inside(poly, lon, lat):
    hit = False
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > lat) != (y2 > lat):
            xc = x1 + (lat - y1) / (y2 - y1) * (x2 - x1)
            if lon < xc:
                hit = not hit
    return hit


def main():
    px = bytearray(W * H)
    for row in range(H):
        lat = 90.0 - (row + 0.5) * 180.0 / H
        for col in range(W):
            lon = -180.0 + (col + 0.5) * 360.0 / W
            land = lat <= -70.0  # Antarctic interior
            if not land:
                for poly in POLYGONS:
                    if inside(poly, lon, lat):
                        land = True
                        break
            px[row * W + col] = 255 if land else 0
    out = os.path.join(os.path.dirname(__file__), "..", "data",
                       "world_landsea_256x128.pgm")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (W, H))
        f.write(bytes(px))
    print("wrote", out)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate the test fixtures in tests/data from scikit-image samples.

Six 256x256 grey PGMs plus one small RGB PNG with odd dimensions.
"""
import pathlib
import sys

import numpy as np
from PIL import Image
from skimage import color, data, transform

NAMES = ["camera", "astronaut", "coffee", "chelsea", "rocket", "coins"]


def to_gray(img):
    if img.ndim == 3:
        return color.rgb2gray(img[..., :3])
    return img.astype(np.float64) / 255.0


def center_square(img):
    h, w = img.shape
    s = min(h, w)
    r0, c0 = (h - s) // 2, (w - s) // 2
    return img[r0:r0 + s, c0:c0 + s]


def write_pgm(path, img):
    q = np.clip(np.floor(img * 255.0 + 0.5), 0, 255).astype(np.uint8)
    with open(path, "wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (q.shape[1], q.shape[0]))
        fh.write(q.tobytes())


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
    out.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        img = center_square(to_gray(getattr(data, name)()))
        img = transform.resize(img, (256, 256), anti_aliasing=True)
        write_pgm(out / f"{name}.pgm", np.clip(img, 0.0, 1.0))
    rgb = transform.resize(data.astronaut(), (40, 60), anti_aliasing=True)
    Image.fromarray(np.floor(rgb * 255.0 + 0.5).astype(np.uint8), "RGB").save(out / "astronaut_rgb.png")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Render the bundled glyph fixtures.

Writes tightly cropped 8-bit PGM rasters of A-Z and a-z in an upright and an
italic face, plus the fixture manifest. The synthetically sheared set is
produced afterwards by tools/regen-fixtures.sh with the cogskew CLI.

    python3 tools/render_fixtures.py --regular Arimo-Regular.ttf \
        --italic Arimo-Italic.ttf --out crates/cogskew/fixtures
"""

import argparse
import string
from pathlib import Path

from PIL import Image, ImageDraw, ImageFont

# 72 pt at 96 dpi.
DEFAULT_PX = 96
SHEAR_DEG = 12.0


def render(font: ImageFont.FreeTypeFont, ch: str, px: int) -> Image.Image:
    canvas = Image.new("L", (px * 3, px * 3), 0)
    ImageDraw.Draw(canvas).text((px, px // 2), ch, fill=255, font=font)
    bbox = canvas.getbbox()
    if bbox is None:
        raise ValueError(f"glyph {ch!r} rendered empty")
    return canvas.crop(bbox)


def write_pgm(path: Path, coverage: Image.Image) -> None:
    # Coverage is ink; PGM 0 is black.
    w, h = coverage.size
    samples = bytes(255 - v for v in coverage.tobytes())
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(f"P5\n{w} {h}\n255\n".encode() + samples)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--regular", required=True)
    ap.add_argument("--italic", required=True)
    ap.add_argument("--out", required=True, type=Path)
    ap.add_argument("--px", type=int, default=DEFAULT_PX)
    args = ap.parse_args()

    faces = {
        "upright": ImageFont.truetype(args.regular, args.px),
        "italic": ImageFont.truetype(args.italic, args.px),
    }
    manifest = [
        "# name path",
        f"# rendered at {args.px}px em; '-sheared' is '-upright' sheared by {SHEAR_DEG} degrees",
    ]
    for ch in string.ascii_uppercase + string.ascii_lowercase:
        case = "upper" if ch.isupper() else "lower"
        for style, font in faces.items():
            rel = f"{case}/{ch}-{style}.pgm"
            write_pgm(args.out / rel, render(font, ch, args.px))
            manifest.append(f"{ch}-{style} {rel}")
        manifest.append(f"{ch}-sheared {case}/{ch}-sheared.pgm")
    (args.out / "manifest.txt").write_text("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()

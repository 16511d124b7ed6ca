"""Corpus walkthrough: generate labeled curvesets and turn them into images.

Writes a small sim-domain dataset, rasterizes one curveset to the 64x64
greyscale + label-mask pair the network consumes, and exports both as PGM.

Run:  python demos/03_dataset_and_images.py
"""

from pathlib import Path

import numpy as np

from modepick.datagen import generate_dataset, load_dataset, nearest_neighbors
from modepick.ftan import write_pgm
from modepick.raster import mask_to_points, rasterize

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

ds_dir = out_dir / "demo_sim"
if not (ds_dir / "manifest.json").exists():
    generate_dataset(40, "sim", seed=11, out_dir=ds_dir, overwrite=True)
ds = load_dataset(ds_dir)
print(f"dataset: {ds.manifest['count']} curvesets, {ds.manifest['total_points']} points")

cs = ds.curvesets[0]
labels = [p.label for p in cs.points]
print(f"{cs.pair_id}: {len(cs.points)} points "
      f"({labels.count(1)} fundamental, {labels.count(2)} overtone, {labels.count(0)} noise)")

image, mask, meta = rasterize(cs)
write_pgm(out_dir / "curve_image.pgm", image.pixels)
write_pgm(out_dir / "label_mask.pgm", (mask.classes * 120).astype(np.uint8))
print(f"trend: v = {meta.trend[0]:.3f} + {meta.trend[1]:.3f} log10(f)")
print(f"wrote {out_dir / 'curve_image.pgm'} and {out_dir / 'label_mask.pgm'}")

# pixel classifications map back to the original points
recovered = mask_to_points(mask, meta, cs)
agree = sum(p.label == q.label for p, q in zip(cs.points, recovered))
print(f"label round trip: {agree}/{len(cs.points)} points agree")

nn = nearest_neighbors(ds.curvesets, k=3)
print(f"nearest neighbors of {cs.pair_id}: {nn[cs.pair_id]}")

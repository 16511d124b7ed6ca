"""Training walkthrough: overfit the segmentation network on a handful of
images to verify the learning machinery end to end.

Run:  python demos/04_train_segmenter.py        (about a minute of CPU)
"""

from pathlib import Path

import numpy as np

from modepick.datagen import generate_dataset, load_dataset
from modepick.raster import rasterize
from modepick.segnet import (
    TrainConfig,
    UNetParams,
    pixel_accuracy,
    save_checkpoint,
    save_history_csv,
    train,
)

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

ds_dir = out_dir / "demo_train"
if not (ds_dir / "manifest.json").exists():
    generate_dataset(8, "sim", seed=23, out_dir=ds_dir, overwrite=True)
ds = load_dataset(ds_dir)

X = []
Y = []
for cs in ds.curvesets:
    image, mask, _ = rasterize(cs)
    X.append(image.pixels.astype(np.float32)[..., None] / 255.0)
    Y.append(mask.classes.astype(np.int64))
X = np.stack(X)
Y = np.stack(Y)

params = UNetParams.initialize(in_channels=1, rng=np.random.default_rng(5))
print(f"network: {params.count()} parameters")

result = train(params, (X, Y), (X, Y),
               TrainConfig(seed=5, max_epochs=120, early_stop=False, learning_rate=2e-3))
acc = pixel_accuracy(result.params, X, Y)
print(f"trained {result.stopped_epoch} epochs, final train loss "
      f"{result.history[-1]['train_loss']:.4f}, pixel accuracy {acc:.4f}")

save_checkpoint(out_dir / "overfit.ckpt", result.params)
save_history_csv(out_dir / "overfit_history.csv", result.history)
print(f"wrote {out_dir / 'overfit.ckpt'} and the loss history CSV")

"""Train the envelope-pooling classifier on a small augmented dataset.

The first layer is a max pool sized to the carrier wavelength: it strips
the oscillation and hands the convolution stack an amplitude envelope.
Then three 3x3 conv blocks, a dense layer, and a single sigmoid unit,
trained with binary cross entropy and RMSProp.

This demo runs a reduced configuration (64 px, ~90 seconds on a laptop);
the acceptance suite runs the full desk-scale version (128 px, 2000 images).

Run:  python demos/03_train_and_classify.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from utpod import bscan, dataset, flaws
from utpod.net import NetworkConfig, predict, save_model, train

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

params = bscan.NoiseParams(
    base_mean=3000, base_std=600, grain_corr_scan=3, grain_corr_time=8,
    geometry_echo_bands=((620, 40, 2500),), seed=101)
canvas = bscan.generate_canvas(params, 454, 1400)
signatures = [
    flaws.synthetic_signature(1.6, scan_len=30, time_len=140, peak_amplitude=7000, seed=201),
    flaws.synthetic_signature(4.0, scan_len=48, time_len=160, peak_amplitude=10000, seed=202),
    flaws.synthetic_signature(8.6, scan_len=70, time_len=200, peak_amplitude=15000, seed=203),
]
base = dict(crop_region=bscan.Region(0, 454, 500, 454), image_resolution=64,
            scale_range=(0.15, 1.0), placement_scan_range=(10, 370),
            placement_time_index=560, minibatch_size=100)
train_manifest = dataset.build_dataset(
    canvas, signatures, dataset.DatasetSpec(n_images=600, seed=1, **base),
    out_dir / "demo_train")
val_manifest = dataset.build_dataset(
    canvas, signatures, dataset.DatasetSpec(n_images=200, seed=2, **base),
    out_dir / "demo_val")

config = NetworkConfig(
    input_n=64,
    # envelope window sized to the carrier wavelength; at this reduced
    # resolution one period spans ~2 samples (the 128 px config uses (4, 2))
    first_pool_time=2, first_pool_scan=2,
    conv_channels=(8, 16, 32),
    dense_widths=(64,),
    learning_rate=1e-3,
    epochs=10,
    batch_size=100,
    init_seed=42,
)
model, history = train(train_manifest, val_manifest, config)
save_model(model, out_dir / "demo_model.utn")
for row in history:
    print(f"epoch {row['epoch']:2d}  train loss {row['train_loss']:.4f}  "
          f"val loss {row['val_loss']:.4f}  val acc {row['val_accuracy']:.3f}")

# classify a handful of validation images
images = dataset.read_minibatch(val_manifest.file_paths()[0])[:6]
for i, img in enumerate(images):
    p = predict(model, img.pixels)
    verdict = "FLAW" if p >= 0.5 else "clean"
    truth = f"{img.flaw_size_mm:.2f} mm" if img.has_flaw else "none"
    print(f"image {i}: P(flaw) = {p:.3f} -> {verdict:5s} (truth: {truth})")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
epochs = [h["epoch"] for h in history]
ax1.plot(epochs, [h["val_loss"] for h in history], marker="o")
ax1.set_xlabel("epoch"), ax1.set_ylabel("validation loss")
ax2.plot(epochs, [h["val_accuracy"] for h in history], marker="o", color="#2a7")
ax2.set_xlabel("epoch"), ax2.set_ylabel("validation accuracy")
ax2.set_ylim(0.4, 1.02)
fig.suptitle("training convergence")
fig.tight_layout()
fig.savefig(out_dir / "03_convergence.png", dpi=110)
print(f"figure -> {out_dir / '03_convergence.png'}")

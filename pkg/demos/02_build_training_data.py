"""Compile an augmented, labeled, preprocessed dataset from one canvas.

Each image goes through crop -> per-bin-max downsample -> per-image
normalization, and lands in minibatch files of 100 with its truth labels.
Half the images carry an implanted flaw at a random position and amplitude;
a fraction of the flaw-free rest get a copied background patch (control
copies) so a classifier cannot cheat by detecting the implantation process.

Run:  python demos/02_build_training_data.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from utpod import bscan, dataset, flaws

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

params = bscan.NoiseParams(
    base_mean=3000, base_std=600, grain_corr_scan=3, grain_corr_time=8,
    geometry_echo_bands=((620, 40, 2500), (900, 70, 1500)), seed=101)
canvas = bscan.generate_canvas(params, 454, 1400)

signatures = [
    flaws.synthetic_signature(1.6, scan_len=30, time_len=140, peak_amplitude=7000, seed=201),
    flaws.synthetic_signature(4.0, scan_len=48, time_len=160, peak_amplitude=10000, seed=202),
    flaws.synthetic_signature(8.6, scan_len=70, time_len=200, peak_amplitude=15000, seed=203),
]

spec = dataset.DatasetSpec(
    n_images=400,
    crop_region=bscan.Region(0, 454, 500, 454),  # the interesting area around the weld
    image_resolution=128,
    crack_fraction=0.5,
    scale_range=(0.12, 1.0),
    placement_scan_range=(10, 370),
    placement_time_index=560,
    control_copy_fraction=0.1,
    minibatch_size=100,
    seed=2024,
)
manifest = dataset.build_dataset(canvas, signatures, spec, out_dir / "demo_dataset")
flawed = sum(1 for info in manifest.images if info["has_flaw"])
controls = sum(1 for info in manifest.images if info["is_control_copy"])
print(f"built {manifest.n_images} images into {len(manifest.files)} minibatch files")
print(f"  flawed: {flawed}, control copies: {controls}, "
      f"blank: {manifest.n_images - flawed - controls}")
print(f"  content hash: {manifest.content_hash[:16]} (rebuilds are bit-identical)")
print(f"  pixel pitch along scan axis: {manifest.pixel_pitch_mm:.3f} mm")

# peek at the first minibatch
images = dataset.read_minibatch(manifest.file_paths()[0])
fig, axes = plt.subplots(2, 4, figsize=(14, 7))
for ax, img in zip(axes.ravel(), images):
    ax.imshow(img.pixels, cmap="inferno", vmin=-1, vmax=8)
    label = f"{img.flaw_size_mm:.2f} mm" if img.has_flaw else (
        "control copy" if img.is_control_copy else "blank")
    ax.set_title(label, fontsize=9)
    ax.axis("off")
fig.suptitle("first eight preprocessed images (normalized)")
fig.tight_layout()
fig.savefig(out_dir / "02_training_images.png", dpi=110)
print(f"figure -> {out_dir / '02_training_images.png'}")

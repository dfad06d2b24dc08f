"""Generate a synthetic weld canvas, implant a virtual flaw, and recover it.

A canvas is a flaw-free B-scan: correlated speckle standing in for weld
grain noise plus constant geometry echo bands. A flaw signature is lifted
point-by-point from a flawed/blank scan pair and can be re-implanted
anywhere, at any amplitude scale, to synthesize new flawed scans.

Run:  python demos/01_canvas_and_virtual_flaws.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from utpod import bscan, flaws

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

# 1. a seeded canvas: same params + seed always give the same bits
params = bscan.NoiseParams(
    base_mean=3000, base_std=600,
    grain_corr_scan=3, grain_corr_time=8,
    geometry_echo_bands=((620, 40, 2500), (900, 70, 1500)),
    seed=101,
)
canvas = bscan.generate_canvas(params, n_scan=454, n_time=1400)
print(f"canvas: {canvas.n_scan} x {canvas.n_time}, "
      f"mean {canvas.amplitudes.mean():.0f}, std {canvas.amplitudes.std():.0f}")

# 2. a bootstrap signature (in production this comes from a real scan pair
#    via extract_flaw) and three implants at decreasing amplitude
signature = flaws.synthetic_signature(
    nominal_size_mm=8.6, scan_len=70, time_len=200, peak_amplitude=15000, seed=203)

scene = canvas
for scan_at, scale in ((40, 1.0), (180, 0.5), (320, 0.2)):
    result = flaws.implant(scene, signature,
                           flaws.ImplantSpec(scan_at, 600, amplitude_scale=scale))
    scene = result.scan
    print(f"implanted at scan {scan_at}: scale {scale} -> "
          f"effective size {result.effective_size_mm:.2f} mm, clipped={result.clipped}")

# 3. extract the strongest implant back out and verify it is the signature
region = bscan.Region(40, 70, 600, 200)
recovered = flaws.extract_flaw(scene, canvas, region, nominal_size_mm=8.6)
print("recovered deltas identical:",
      np.array_equal(recovered.deltas, signature.deltas))

# 4. erase the middle implant: locality means everything else is untouched
erased = flaws.erase_flaw(scene, canvas, bscan.Region(180, 70, 600, 200))

fig, axes = plt.subplots(1, 3, figsize=(15, 5), sharey=True)
for ax, (grid, title) in zip(axes, [
    (canvas.amplitudes, "blank canvas"),
    (scene.amplitudes, "three virtual flaws (scales 1.0 / 0.5 / 0.2)"),
    (erased.amplitudes, "middle flaw erased"),
]):
    ax.imshow(grid, aspect="auto", cmap="inferno", vmin=0, vmax=20000)
    ax.set_title(title)
    ax.set_xlabel("time sample")
axes[0].set_ylabel("scan position")
fig.tight_layout()
fig.savefig(out_dir / "01_virtual_flaws.png", dpi=110)
print(f"figure -> {out_dir / '01_virtual_flaws.png'}")

"""Blind trial: serve images over HTTP, run the classifier as a subject.

A trial set freezes a shuffled selection of images with hidden truth and
fixed scoring rules. The machine subject walks the same endpoints a human
inspector's browser uses (create session, get next image, submit marks,
fetch report), so human and machine land in one comparison table.

This demo drives an in-process ASGI client; `utpod serve` exposes the same
service on a real port for the browser client in frontend/.

Run:  python demos/05_trial_service_and_ml_subject.py
      (expects demos 02 and 03 outputs; runs them itself if missing)
"""

import runpy
from pathlib import Path

from fastapi.testclient import TestClient

from utpod import dataset
from utpod.net import load_model
from utpod.service import create_app
from utpod.trial import ScoringConfig, TrialStore, create_trial, run_ml_subject, \
    threshold_sweep, zero_false_call_point

here = Path(__file__).parent
out_dir = here / "output"

if not (out_dir / "demo_model.utn").exists():
    print("running demo 03 first to produce a model ...")
    runpy.run_path(str(here / "03_train_and_classify.py"))

model = load_model(out_dir / "demo_model.utn")
manifest = dataset.DatasetManifest.load(out_dir / "demo_val" / "manifest.json")

data_dir = out_dir / "trial_data"
store = TrialStore(data_dir)
trial = create_trial(manifest, n_images=40, n_with_cracks=17, mode="normal",
                     seed=31, scoring=ScoringConfig(scan_tolerance_mm=6.0))
try:
    store.save_trial(trial)
except FileExistsError:
    pass  # re-running the demo reuses the stored trial
print(f"trial {trial.trial_id}: {trial.n_images} images, 17 with cracks, "
      f"scan extent {trial.scan_extent_mm:.1f} mm")

client = TestClient(create_app(data_dir))
session_id, report, probabilities = run_ml_subject(
    client, trial.trial_id, model, subject_id="demo-classifier",
    session_id=None)

print(f"\nsession {session_id} report:")
print(f"  hits: {report['hits']}/{report['n_flawed']}")
print(f"  false calls: {report['false_call_count']}")
print(f"  a90/95: {report['a90_95']['size_mm']} ({report['a90_95']['method']})")
print(f"  fit converged: {report['fit']['converged']}")

sweep = threshold_sweep(probabilities, trial.truth)
best = zero_false_call_point(sweep)
print(f"\nthreshold sweep over {len(sweep)} operating points;")
if best:
    print(f"  best zero-false-call point: threshold {best['threshold']:.2f} "
          f"with {best['hits']}/{best['hits'] + best['misses']} hits")
else:
    print("  no zero-false-call operating point on the grid")

print("\nto run the human side: utpod serve --data-dir", data_dir)
print("then open frontend/index.html and enter trial id", trial.trial_id)

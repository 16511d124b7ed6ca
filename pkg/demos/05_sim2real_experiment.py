"""The whole experiment in miniature: pretrain on sim, fine-tune on a small
pseudo-real set, evaluate on gated held-out data, snap picks to peaks.

Scaled down to run in a few minutes; the acceptance suite runs the full
desk-scale version (2000 sim / 100 fine-tune / 200 held-out).

Run:  python demos/05_sim2real_experiment.py
"""

import json
from pathlib import Path

from modepick.pipeline import ExperimentConfig, run_experiment

out_dir = Path(__file__).parent / "out" / "experiment"

cfg = ExperimentConfig(
    out_dir=str(out_dir),
    sim_train=270, sim_val=30,
    real_train=45, real_val=5,
    real_heldout=40,
    learning_rate=2e-3,
    pretrain_max_epochs=16,
    finetune_max_epochs=12,
)
report = run_experiment(cfg)

print("median per-class metrics on held-out pseudo-real data")
print("  (classes: 0 noise, 1 fundamental, 2 overtone)")
for name, med in (("sim-only", report.sim_only), ("fine-tuned", report.finetuned)):
    row = "  ".join(f"P{c}={med[f'precision_{c}']:.3f} R{c}={med[f'recall_{c}']:.3f}"
                    for c in range(3))
    print(f"{name:>10}: {row}")
print(f"snapped picks written: {report.n_snapped} "
      f"(see {out_dir / 'snapped_picks.ndjson'})")
print(f"full report: {out_dir / 'report.json'}")

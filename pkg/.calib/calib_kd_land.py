"""Calibrate the two empirical acceptance clauses:
A) 5-seed landscape smoothness, bnext block vs plain binary twin, at several
   half-ranges, tiny scale.
B) KD-vs-CE delta across 3 seeds at reduced budget.
Prints everything; pins nothing.
"""
import time

import numpy as np

from bnext.config import RunConfig
from bnext.distill import evaluate_model
from bnext.landscape import (eval_slice, filter_normalized_directions,
                             landscape_grid, roughness)
from bnext.train import build_model, evaluate, load_data, train


def land_cfg(seed, plain, out):
    over = dict(use_se=False, use_elm=False, use_residual=False) if plain else {}
    return RunConfig(
        variant="desk", base_width=8, stage_ratios=(1, 1, 1, 1),
        dataset_format="synthshapes", data_n=1000, data_test_n=300,
        num_classes=10, input_size=16, epochs=8, warmup_epochs=1,
        batch_size=128, eval_batch=512, crop=False, flip=False,
        seed=seed, out_dir=out, **over)


print("=== A) landscape smoothness sweep (tiny, 5 seeds) ===")
for seed in range(5):
    row = {}
    for plain in (False, True):
        tag = "plain" if plain else "bnext"
        cfg = land_cfg(seed, plain, f".calib/land/{tag}{seed}")
        t0 = time.time()
        _, _, g = train(cfg)
        data = load_data(cfg)
        acc = evaluate(g, data["test_x"], data["test_y"])[1]
        Xs, ys = eval_slice(data["test_x"], data["test_y"], n=256, seed=seed)
        dirs = filter_normalized_directions(g, seed)
        for hr in (1.0, 0.5, 0.25):
            grid = landscape_grid(g, Xs, ys, dirs, half_range=hr, steps=11,
                                  batch_size=256)
            row[(tag, hr)] = roughness(grid)
        print(f"seed {seed} {tag}: params {g.param_count()} acc {acc:.3f} "
              f"train+grids {time.time()-t0:.0f}s "
              + " ".join(f"r@{hr}={row[(tag,hr)]:.4g}" for hr in (1.0, 0.5, 0.25)),
              flush=True)
    for hr in (1.0, 0.5, 0.25):
        b, p = row[("bnext", hr)], row[("plain", hr)]
        print(f"  seed {seed} hr {hr}: bnext {b:.4g} vs plain {p:.4g} "
              f"-> {'SMOOTHER' if b < p else 'ROUGHER'}", flush=True)

print("=== B) KD vs CE delta (3 seeds, reduced budget) ===")
for seed in range(3):
    accs = {}
    for kd in (False, True):
        tag = "kd" if kd else "ce"
        cfg = RunConfig(
            dataset_format="synthshapes", data_n=2000, data_test_n=500,
            epochs=12, warmup_epochs=2, batch_size=128, seed=seed,
            kd_enabled=kd, kd_teacher_epochs=4,
            out_dir=f".calib/kdq/{tag}{seed}")
        t0 = time.time()
        metrics, _, g = train(cfg)
        accs[tag] = metrics[-1]["test_acc"]
        print(f"seed {seed} {tag}: final {accs[tag]:.4f} "
              f"({time.time()-t0:.0f}s)", flush=True)
    print(f"  seed {seed} delta (kd-ce): {(accs['kd']-accs['ce'])*100:+.2f} pts",
          flush=True)

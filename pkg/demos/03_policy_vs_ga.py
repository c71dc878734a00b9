"""
Policy refinement against a full GA search
==========================================

At 14 degC / 45 %RH, spring off-peak, start from nine different setpoint
vectors and let a trained policy adjust them step by step. The GA searches
from scratch every time (40 individuals, 25 generations). Both are scored
on the same 10-minute profit.

Uses the archived checkpoints in results/full when present, else a
checkpoint path given on the command line.
"""

import sys
from pathlib import Path

import numpy as np

from moldrl.deploy import initial_cases, refinement_profile, resolve_policy
from moldrl.experiments import FixedCondition, time_k_steps
from moldrl.ga import run_ga

ckpt = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results/full/ppo_large_seed0.json")
policy = resolve_policy(ckpt)
cond = FixedCondition()

# Profit of each starting case after 0..10 policy steps
prof, finals = refinement_profile(policy, initial_cases(), cond.env, cond.season, cond.tier)
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print("step x case")
print(prof)

# GA over nine seeds
runs = [run_ga(cond.env, cond.season, cond.tier, seed=s) for s in range(9)]
best = max(r.best_fitness for r in runs)
k = policy.default_k
print(f"GA best {best:.4f}; policy after {k} steps, worst case {prof[k].min():.4f} "
      f"({prof[k].min() / best:.1%})")

# Decision latency
ga_s = np.mean([r.wall_clock for r in runs])
pol_s = time_k_steps(policy, k, cond)
print(f"GA {ga_s * 1e3:.1f} ms per search, policy {pol_s * 1e3:.2f} ms for {k} steps "
      f"-> {ga_s / pol_s:.0f}x")

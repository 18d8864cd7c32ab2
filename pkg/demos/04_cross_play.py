"""
Predator-prey cross-play
========================

Three predators chase one faster prey.  Training a checkpoint holds both
teams; cross-play evaluation pairs the predators of one checkpoint with
the prey of another, and the touch count per episode says who won.

Here the "trained" side is deliberately tiny, so the interesting part
is the protocol.  Two scripted prey bracket the range.
"""

import tempfile
from pathlib import Path

import numpy as np

from mahsac.harness import ExperimentConfig, cross_play, cross_play_matrix, run_training
from mahsac.heads import HybridAction

out = Path(tempfile.mkdtemp(prefix="mahsac-pp-"))
cfg = ExperimentConfig(scenario="predator_prey", episodes=300, lr=1e-3, batch_size=128,
                       warmup=1024, update_period=4)
paths = {}
for algo in ("mahsac", "ihsac"):
    res = run_training(cfg.replace(algorithm=algo, prey_algorithm=algo), out / algo)
    paths[algo] = str(res.checkpoint_path)

for pred, prey, s in cross_play_matrix(paths, episodes=200, seed=0):
    print(f"{pred:6s} predators vs {prey:6s} prey: touches/episode {s.touches:6.2f}")


class Frozen:
    def __call__(self, o, rng=None):
        return HybridAction(0, np.array([-1.0]))


class Flee:
    """Run directly away from the nearest predator."""

    def __call__(self, o, rng=None):
        rel = o[8:14].reshape(3, 2)
        away = -rel[np.argmin((rel**2).sum(axis=1))]
        if abs(away[0]) > abs(away[1]):
            d = 1 if away[0] > 0 else 2
        else:
            d = 3 if away[1] > 0 else 4
        return HybridAction(d, np.array([1.0]))


for name, prey in (("frozen", Frozen()), ("fleeing", Flee())):
    s = cross_play(paths["mahsac"], paths["mahsac"], episodes=200, seed=0, prey_policy=prey)
    print(f"mahsac predators vs {name} prey: touches/episode {s.touches:6.2f}")

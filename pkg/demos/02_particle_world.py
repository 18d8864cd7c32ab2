"""
The particle world by hand
==========================

Cooperative navigation with scripted policies.  Each agent picks one of
five moves (stay, +x, -x, +y, -y) and a throttle in [-1, 1].  Three
hand-written teams show how the team reward separates good and bad
coordination, which is what the learners have to discover.
"""

import numpy as np

from mahsac.harness import NoopPolicy, evaluate_policies
from mahsac.heads import HybridAction
from mahsac.world import ParticleWorld

world = ParticleWorld()
rng = np.random.default_rng(0)
state, obs = world.reset(rng)
print("observation length per agent:", world.obs_dims)
print("agent 0 sees", np.round(obs[0], 3))


def step_towards(rel):
    """Move along the larger offset at full throttle."""
    if np.abs(rel).max() < 0.05:
        return HybridAction(0, np.array([-1.0]))
    if abs(rel[0]) > abs(rel[1]):
        d = 1 if rel[0] > 0 else 2
    else:
        d = 3 if rel[1] > 0 else 4
    return HybridAction(d, np.array([1.0]))


class OwnLandmark:
    """Agent i heads for landmark i; a fixed assignment, so no collisions over targets."""

    def __init__(self, i):
        self.i = i

    def __call__(self, o, rng=None):
        return step_towards(o[4 + 2 * self.i: 6 + 2 * self.i])


class SameLandmark:
    """Everyone chases landmark 0 and they pile up."""

    def __call__(self, o, rng=None):
        return step_towards(o[4:6])


class Random:
    # evaluation is greedy and passes no rng, so bring one along
    rng = np.random.default_rng(7)

    def __call__(self, o, rng=None):
        return HybridAction(int(self.rng.integers(5)), self.rng.uniform(-1, 1, size=1))


# one episode step by step
policies = [OwnLandmark(i) for i in range(3)]
for t in range(world.config.episode_length):
    res = world.step(state, [p(o) for p, o in zip(policies, obs)])
    state, obs = res.state, res.observations
    if t % 6 == 0 or res.done:
        print(f"step {t + 1:2d}  reward {res.rewards[0]:7.3f}  collisions so far {state.collisions}")
print(world.episode_metrics(state))

# ----------------------------------------------------------------------
# 200-episode averages with the same seeds for every team
teams = {
    "stay put": [NoopPolicy()] * 3,
    "random": [Random()] * 3,
    "same landmark": [SameLandmark()] * 3,
    "own landmark": [OwnLandmark(i) for i in range(3)],
}
for name, team in teams.items():
    s = evaluate_policies(world, team, episodes=200, seed=1)
    print(f"{name:14s} team return {s.mean_team_return:8.2f}  collisions {s.collisions:5.2f}  dist {s.dist:.3f}")

"""
Autodiff and hybrid policy heads
================================

The learner is built on a small reverse-mode tape over numpy arrays.
This walk-through differentiates a tiny expression, checks it against
finite differences, then looks at the two halves of a hybrid action:
a categorical choice and a tanh-squashed Gaussian throttle.
"""

import numpy as np

from mahsac.gradcore import Tensor, backward, grad_check, tanh, tsum, mul, Adam
from mahsac.heads import (
    Actor,
    EntropyWeights,
    categorical_entropy,
    hybrid_entropy_exact,
    policy_forward,
    sample_action,
    tanh_gaussian_log_prob,
    tanh_gaussian_sample,
)

# f(x) = sum(tanh(x) * x); the derivative is tanh(x) + x (1 - tanh(x)^2)
x = Tensor(np.array([-1.0, 0.3, 2.0]), requires_grad=True)
backward(tsum(mul(tanh(x), x)))
t = np.tanh(x.data)
print("tape gradient  ", x.grad)
print("closed form    ", t + x.data * (1 - t**2))

# grad_check compares against central differences
err = grad_check(lambda v: tsum(mul(tanh(v), v)), Tensor(np.array([-1.0, 0.3, 2.0])))
print("grad_check error", err)

# a few Adam steps pull a scalar towards 3
w = Tensor(np.array([0.0]), requires_grad=True)
opt = Adam([w], lr=0.1)
for _ in range(200):
    opt.zero_grad()
    backward(tsum(mul(w - 3.0, w - 3.0)))
    opt.step()
print("adam minimiser ", w.data)

# ----------------------------------------------------------------------
# The throttle: u = mu + sigma * xi, a = tanh(u).  The log-density picks
# up a Jacobian term for the squash, and sampling returns the same value.
mu, log_std = np.array([0.2]), np.array([np.log(0.5)])
a, logp = tanh_gaussian_sample(mu, log_std, np.array([0.7]))
print("sampled throttle", a.numpy(), "log-prob", logp.numpy())
print("log-prob again  ", tanh_gaussian_log_prob(a.numpy(), mu, log_std).numpy())

# ----------------------------------------------------------------------
# A fresh actor: shared trunk, logits head over 5 moves, and a
# Gaussian head for the throttle.  Initial heads are near uniform.
rng = np.random.default_rng(0)
actor = Actor(obs_dim=6, n_discrete=5, n_continuous=1, rng=rng)
out = policy_forward(actor, rng.normal(size=6))
print("discrete entropy", categorical_entropy(out.logits).item(), "max", np.log(5))

w = EntropyWeights(alpha_d=0.05, alpha_c=0.05)
print("hybrid entropy  ", hybrid_entropy_exact(out, 0.0, w).item())

for deterministic in (False, True):
    d, c = sample_action(out, rng, deterministic=deterministic)
    print("deterministic" if deterministic else "stochastic   ", d, c)

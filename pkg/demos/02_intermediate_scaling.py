"""
Intermediate coupling K_n = n**alpha
====================================

Between a fixed coupling and a kick of strength n, the convergence to the
Zeno dynamics slows down to n**(-alpha).
"""

# %%

import numpy as np

from prodform.experiments import ExperimentConfig, fit_series, log_grid, sweep

cfg = ExperimentConfig(alphas=(0.3, 0.5, 0.8), seeds=(0, 1, 2), n_grid=log_grid(10, 1e6, 10))
series = sweep(cfg, "zeno", threads=4)
for rec in fit_series(series, cfg.fit_window):
    print(f"alpha={rec.alpha}  seed={rec.seed}  fitted slope={rec.beta:+.3f}")

# %%
# Plot the raw curves (requires matplotlib)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for s in series:
        if s.seed == 0:
            ax.loglog(s.n, s.epsilon, label=f"alpha={s.alpha}")
    ax.set_xlabel("n")
    ax.set_ylabel("Zeno error")
    ax.legend()
    fig.savefig("intermediate_scaling.png", dpi=120)
    print("wrote intermediate_scaling.png")

# %%
# A schedule with K_n >= n is refused for this error

from prodform import ScalingSchedule, ScheduleViolation, intermediate_zeno_error, random_hermitian

try:
    intermediate_zeno_error(random_hermitian(0, 5), np.diag([1, 1, 0, 0, 0]), ScalingSchedule.power(1.5), 1.0, 100)
except ScheduleViolation as exc:
    print("refused:", exc)

import time
import numpy as np
from kdvcontrol.spectral import *
from kdvcontrol.dynamics import *
from kdvcontrol.operators import *
from kdvcontrol.feedback import FeedbackLaw

N = 128
g = SpectralGrid(N)
sym = LinearSymbol(0.0)
p = make_profile(np.pi, np.pi / 2, g)

rng = np.random.default_rng(23)
c = np.zeros(N, complex)
for k in range(1, 9):
    a = rng.standard_normal() + 1j * rng.standard_normal()
    c[k] = a; c[-k] = np.conj(a)
c *= 3.0 / np.sqrt(np.sum(np.abs(c) ** 2))
u0 = Field(g, c)

law = FeedbackLaw(variant="time_varying", profile=p, lam=2.0,
                  t_switch=4.0, delta_switch=0.05, r0=0.5, s=0.0)
t0 = time.time()
rec = simulate(u0, 260.0, StepperConfig(dt=1e-3), sym, law=law, sample_every=50)
print("wall:", time.time() - t0)
np.savez("/root/pkg/.calib/time_varying.npz", t=rec.t, l2=rec.l2)
r2 = rec.l2 ** 2
enter = rec.t[np.argmax(r2 <= 0.5)] if np.any(r2 <= 0.5) else None
print("enters rho=1 region at t =", enter, " final norm:", rec.l2[-1])

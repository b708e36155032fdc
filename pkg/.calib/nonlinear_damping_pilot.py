import time
import numpy as np
from kdvcontrol.spectral import *
from kdvcontrol.dynamics import *
from kdvcontrol.operators import *
from kdvcontrol.feedback import FeedbackLaw

g = SpectralGrid(128)
sym = LinearSymbol(0.0)
p = make_profile(np.pi, np.pi/2, g)

rng = np.random.default_rng(42)
def rand_field(norm, band=8):
    c = np.zeros(128, complex)
    for k in range(1, band+1):
        a = rng.standard_normal() + 1j*rng.standard_normal()
        c[k] = a; c[-k] = np.conj(a)
    c *= norm/np.sqrt(np.sum(np.abs(c)**2))
    return Field(g, c)

out = {}
for r0 in (1.0, 5.0):
    law = FeedbackLaw(variant="damping", profile=p)
    u0 = rand_field(r0)
    t0 = time.time()
    rec = simulate(u0, 700.0, StepperConfig(dt=5e-4), sym, law=law, sample_every=1000)
    out[f"t_{r0}"] = rec.t; out[f"l2_{r0}"] = rec.l2
    out[f"wall_{r0}"] = time.time()-t0
    # per-step monotonicity check on a short fine-sampled stretch
    rec2 = simulate(u0, 2.0, StepperConfig(dt=5e-4), sym, law=law, sample_every=1)
    out[f"mono_viol_{r0}"] = float(np.max(np.diff(rec2.l2)))
np.savez("/root/pkg/.calib/nonlinear_damping.npz", **out)
print("done", {k: v for k, v in out.items() if k.startswith("wall") or k.startswith("mono")})

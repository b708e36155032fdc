import time
import numpy as np
from kdvcontrol.spectral import *
from kdvcontrol.dynamics import *
from kdvcontrol.operators import *
from kdvcontrol.steering import *

N = 128
g = SpectralGrid(N)
p = make_profile(np.pi, 1.5 * np.pi, g)
u0 = from_function(g, lambda x: 2.0 * np.cos(x))
u1 = from_function(g, lambda x: 2.0 * np.sin(2 * x))
pb = SteeringProblem(u0=u0, u1=u1, T=1.0, tolerance=1e-3, max_picard=20)
cfg = StepperConfig(dt=1e-3)

t0 = time.time()
sig, rep = steer_global(pb, p, cfg, eps=0.1, t_max_stage=1000.0, t_bridge=1.0)
t_build = time.time() - t0
print("stages:", rep.stages)
print("build wall:", t_build)

t0 = time.time()
rec, err = replay(pb, sig, cfg, sample_every=1000)
print("replay terminal error:", err)
print("replay wall:", time.time() - t0)
print("mass drift:", np.max(np.abs(rec.mass - rec.mass[0])))
print("max |control|:", sig.max_abs())

"""Print the oracle values frozen into tests/unit/test_geometry.cpp."""
import jax.numpy as jnp
import numpy as np

from surface_oracle import (J0, J1, alpha, curvatures, gauss_dets,
                            theta_coeffs)


def ex23(k):
    return lambda u, v: jnp.exp(k * u) * jnp.array(
        [jnp.cos(u) * jnp.cos(v), jnp.sin(u) * jnp.cos(v),
         jnp.cos(u) * jnp.sin(v), jnp.sin(u) * jnp.sin(v)])


def ex25(k):
    return lambda u, v: jnp.array(
        [-k * u * jnp.sin(v), jnp.cos(u), k * u * jnp.cos(v), jnp.sin(u)])


def ex26(p, q):
    return lambda u, v: v * jnp.array(
        [p * jnp.sin(u), p * jnp.cos(u), jnp.sin(q * u), jnp.cos(q * u)])


def whitney(u, v):
    x0, x1, x2 = jnp.sin(v), jnp.cos(v) * jnp.cos(u), jnp.cos(v) * jnp.sin(u)
    return jnp.array([x1, x2, 2 * x0 * x1, 2 * x0 * x2])


def catenoid(u, v):
    return jnp.array([jnp.cosh(v) * jnp.cos(u), jnp.cosh(v) * jnp.sin(u), v, 0.0])


CASES = [
    ("ex2.3", ex23(1.0), J0, 0.3, 1.1),
    ("ex2.5", ex25(1.0), J0, 1.2, 0.4),
    ("ex2.6", ex26(1.0, 2.0), J1, 0.7, 1.3),
    ("ex3.1-whitney", whitney, None, 0.4, 0.3),
    ("catenoid-e3", catenoid, None, 0.5, 0.2),
]

for name, f, J, u, v in CASES:
    G, GD, H = curvatures(f, u, v)
    dp, dm = gauss_dets(f, u, v)
    row = [G, GD, float(np.linalg.norm(H)), dp, dm]
    if J is not None:
        tu, tv, a = theta_coeffs(f, J, u, v)
        row += [a, tu, tv]
    print(name, u, v, " ".join(f"{x:.15g}" for x in row))

"""Reflections in (+-2)-vectors, their components and fixed planes."""
from k3period import (
    certify_generators,
    classify_component,
    fixed_plane,
    k3_e,
    k3_f,
    reflection,
)
from k3period.sampling import random_reflection_vector, rng_from_env

root = k3_e(1) - k3_f(1)  # norm -2
s = reflection(root)
print("s(e1) == f1:", s(k3_e(1)) == k3_f(1))
print("component of s:", classify_component(s).as_dict())

pos = k3_e(1) + k3_f(1)  # norm +2
print("component of reflection in e1+f1:", classify_component(reflection(pos)).as_dict())

cert = fixed_plane(root)
print()
print("a positive plane fixed by s:")
print(cert.plane.integral_rows())
print("residual:", cert.residual)

rng = rng_from_env()
vecs = [random_reflection_vector(rng) for _ in range(50)]
certs = certify_generators(vecs)
print()
print(f"certified {len(certs)} random reflections, worst residual {max(c.residual for c in certs):.1e}")

"""Certificates: a radical cover of ex2_8 and the witness matrices behind it.

Run with: python3 demos/certificates.py
"""

import numpy as np

from toricsplit.budget import Budget
from toricsplit.families import catalogued_example
from toricsplit.splitting import find_cover, verify_certificate

inst = catalogued_example("ex2_8")
A = inst.config
print("A is", A.m, "x", A.n, "with height", A.height)

for name, v in sorted(inst.vectors.items(), key=lambda kv: (len(kv[0]), kv[0])):
    print(f"  {name:>3}  {v.coords}  in kernel: {A.contains(v.coords)}")

for char in ("0", "3", "p!=3"):
    C = inst.generator_sets[f"radical[char {char}]"]
    cert = find_cover(A, C, 2, Budget(10**6))
    print(f"char {char}: {len(C)} radical generators split as {cert.parts}, spans {cert.span_dims}")
    print("   verified:", verify_certificate(cert, A) == [])

# the witness matrices have the parts' spans as kernels
for name, (cover, M) in sorted(inst.extra["witness_matrices"].items()):
    W = np.array(M.tolist())
    part = np.array([inst.vectors[k].coords for k in inst.extra["covers"][cover]])
    print(name, W.shape, "W @ part^T == 0:", not np.any(W @ part.T))

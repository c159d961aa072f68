#!/usr/bin/env python3
"""Frames, their operators, and optimal bounds.

A frame is just a spanning list of vectors; its synthesis operator T has
the vectors as columns, S = T T* is the frame operator, and G = T* T the
Gram matrix. The extreme eigenvalues of S are the optimal frame bounds;
for an independent list the extreme eigenvalues of G are the optimal
Riesz bounds. This script walks through those objects on a few frames.
"""

import numpy as np

import framekit as fk

print("== an orthonormal basis is a Parseval frame ==")
f = fk.orthonormal(3)
b = fk.frame_bounds(f)
print(f"bounds = ({b.lower}, {b.upper}), tight={b.tight}, parseval={b.parseval}")

print("\n== the Mercedes-Benz simplex in R^2 ==")
s = fk.simplex(2)
print("vectors (rows):")
print(np.round(s.vectors, 6))
print("Gram matrix (pairwise inner products -1/2):")
print(np.round(fk.gram(s), 6))
b = fk.frame_bounds(s)
print(f"frame bounds = ({b.lower:.6f}, {b.upper:.6f})  <- tight at M/N = 3/2")
print(f"equiangular with c = {fk.is_equiangular(s):.6f} = 1/N^2")

print("\n== redundancy shows up in the frame operator ==")
g = fk.Frame.from_vectors(np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
print("frame operator of {e1, e1, e2}:")
print(fk.frame_operator(g))
b = fk.frame_bounds(g)
print(f"bounds = ({b.lower}, {b.upper})")

print("\n== reconstruction through the canonical duals ==")
psi = np.array([0.3, -1.2])
back = fk.reconstruct(s, psi)
print(f"psi = {psi}, resynthesized = {np.round(back, 12)}")
print(f"round-trip error = {np.linalg.norm(back - psi):.2e}")

print("\n== Riesz bounds of an independent pair ==")
pair = fk.epsilon_pair(0.25)
rb = fk.riesz_bounds(pair)
print(f"<phi1, phi2> = 0.5, Riesz bounds = ({rb.lower}, {rb.upper}) = 1 -/+ sqrt(eps)")

print("\n== frame potential: minimized by tight frames ==")
for name, frame in [("orthonormal(3)", fk.orthonormal(3)),
                    ("simplex(2)", s),
                    ("{e1, e1, e2}", g)]:
    fp = fk.frame_potential(frame)
    floor = frame.m ** 2 / frame.n
    print(f"  FP({name}) = {fp:.4f}   floor M^2/N = {floor:.4f}")

"""Asymmetric distances 101: spaces, axioms, and the two transforms.

Run with: python demos/01_asymmetric_distance_basics.py
"""

from fractions import Fraction

from qpmetric import (
    ball_contains,
    check_axioms,
    conjugate,
    from_matrix,
    symmetrize,
)

F = Fraction

# %% A quasi-pseudometric drops symmetry: going a -> b costs 1, coming
# back is free.  Identity (d(x,x) = 0) and the triangle inequality remain.
uphill = from_matrix(("a", "b"), [["0", "1"], ["0", "0"]], t0=True)
print("d(a,b) =", uphill.d("a", "b"), " d(b,a) =", uphill.d("b", "a"))

report = check_axioms(uphill, check_t0=True)
for check in report.checks:
    print(f"axiom {check.axiom}: {check.status()}")

# %% Violations come back as witnesses, not exceptions.
lopsided = from_matrix(("a", "b", "c"), [[0, 1, 5], [0, 0, 1], [0, 0, 0]])
bad = check_axioms(lopsided)
print("triangle witness:", bad.triangle.witness, "since d(a,c)=5 > d(a,b)+d(b,c)=2")

# %% The conjugate swaps the argument order; it is an involution.
downhill = conjugate(uphill)
print("conjugate d(a,b) =", downhill.d("a", "b"))
again = conjugate(downhill)
print("double conjugate restores:", again.d("a", "b") == uphill.d("a", "b"))

# %% The symmetrization takes the pointwise max and is a genuine metric
# whenever the original space satisfies the T0 condition.
metric = symmetrize(uphill)
print("symmetrized d(a,b) = d(b,a) =", metric.d("a", "b"))
print("symmetrized axioms pass:", check_axioms(metric, check_t0=True).ok)

# %% Open balls use the strict inequality, so radius 1 excludes b here.
print("b in B(a, 1)?", ball_contains(uphill, "a", F(1), "b"))
print("b in B(a, 3/2)?", ball_contains(uphill, "a", F(3, 2), "b"))
print("a in B(b, 1/10)?", ball_contains(uphill, "b", F(1, 10), "a"), "(d(b,a) = 0)")

"""Point-to-set distances and the asymmetric Hausdorff distance.

Run with: python demos/02_set_distances.py
"""

from fractions import Fraction

from qpmetric import (
    conjugate,
    dist_point_set,
    dist_set_point,
    dyadic_halving_system,
    halving_point,
    hausdorff,
)

F = Fraction

# %% The dyadic halving space: points 1/2^n and 0, where moving up costs
# the gap and moving down costs twice the gap.
space, _, _ = dyadic_halving_system()
one, half, quarter, zero = F(1), F(1, 2), F(1, 4), F(0)
print("d(1/2, 1) =", space.d(half, one), "(upward gap)")
print("d(1, 1/2) =", space.d(one, half), "(doubled downward gap)")

# %% Distances to a set take the closest member, one for each direction.
A = (half, zero)
print("d(1, A)  =", dist_point_set(space, one, A))
print("d(A, 1)  =", dist_set_point(space, A, one))

# %% The Hausdorff distance takes the worst-off point of either set,
# each measured against the best counterpart on the other side.
print("H({0, 1/4}, {1/2}) =", hausdorff(space, (zero, quarter), (half,)))
print("H({1}, {1/2, 0})   =", hausdorff(space, (one,), A))
print("H(A, A)            =", hausdorff(space, A, A))

# %% It inherits the triangle inequality and the conjugate duality
# H'(A, B) = H(B, A); spot-check both on a few dyadic sets.
B = (quarter, halving_point(3))
C = (one, zero)
lhs = hausdorff(space, A, C)
rhs = hausdorff(space, A, B) + hausdorff(space, B, C)
print(f"triangle: H(A,C) = {lhs} <= H(A,B) + H(B,C) = {rhs}")

conj = conjugate(space)
print("duality:", hausdorff(conj, A, B) == hausdorff(space, B, A))

"""Compare the three maps from the octant sphere to flat space.

The probability (squared-modulus) map is the naive choice; it preserves
almost none of the geometry.  Central (gnomonic) projection sends great
circles to straight lines; stereographic projection bends lines but
preserves angles.  The numbers below make those trade-offs concrete.
"""

import numpy as np

from toric_atlas import gnomonic, squared_map, stereographic


def circle_point(a, b, t):
    v = np.cos(t) * a + np.sin(t) * b
    return v / np.linalg.norm(v)


def collinearity_residual(points):
    p1, p2, p3 = (np.asarray(p) for p in points)
    u = (p3 - p1) / np.linalg.norm(p3 - p1)
    w = p2 - p1
    return float(np.linalg.norm(w - (w @ u) * u))


# three points on one great circle through the open octant
a = np.ones(3) / np.sqrt(3)
b = np.array([0.8, 0.6, 0.0])
arc = [circle_point(a, b, t) for t in (0.2, 0.5, 0.8)]

print("three points on a common great circle:")
for p in arc:
    print("  ", np.round(p, 4))
print()

squared_images = [squared_map(p).coords for p in arc]
gnomonic_images = [gnomonic(p).coords for p in arc]
print("squared-map collinearity residual :", f"{collinearity_residual(squared_images):.3e}")
print("gnomonic collinearity residual    :", f"{collinearity_residual(gnomonic_images):.3e}")
print("(the squared map bends the geodesic; the gnomonic map keeps it straight)")
print()

# stereographic projection preserves angles: push two orthogonal tangent
# directions through the map and measure the image angle
x = np.array([0.5, 0.7, 0.6])
x /= np.linalg.norm(x)
v1 = np.array([0.7, -0.5, 0.0])
v1 -= (v1 @ x) * x
v1 /= np.linalg.norm(v1)
v2 = np.cross(x, v1)

h = 1e-5
def image(v, t):
    y = x + t * v
    return stereographic(y / np.linalg.norm(y), 0)

t1 = (image(v1, h) - image(v1, -h)) / (2 * h)
t2 = (image(v2, h) - image(v2, -h)) / (2 * h)
angle = np.degrees(np.arccos((t1 @ t2) / (np.linalg.norm(t1) * np.linalg.norm(t2))))
print(f"angle between images of two perpendicular directions: {angle:.8f} degrees")
print()

print("fixed points: gnomonic leaves the barycenter direction in place,")
print("stereographic leaves the pole in place:")
print("  gnomonic((1,1,1)/√3)        =", np.round(gnomonic(np.ones(3) / np.sqrt(3)).coords, 6))
print("  stereographic((0,1), pole 1) =", stereographic(np.array([0.0, 1.0]), 1))
print("  stereographic((1,0), pole 1) =", stereographic(np.array([1.0, 0.0]), 1))

TEST_CIRCLE_DESCRIPTION = """
Test whether a disc function extends holomorphically from one circle.

It takes these arguments:
- disc (str): Disc function id, e.g. zpow:m=2, conj, ex11disc:k=3, cn:n=0.
- fn (str, optional): Boundary function whose c_n the cn entry uses.
- center (complex): Circle center, as a+bi.
- radius (float): Circle radius.
"""

TEST_LINE_DESCRIPTION = """
Test whether a boundary function extends holomorphically along one complex
line, from the circle where the line meets the unit sphere.

It takes these arguments:
- fn (str): gallery:<id> or grid:<path>.
- base (z,w): A point of the line.
- direction (z,w): The direction of the line.
"""

TEST_FAMILY_DESCRIPTION = """
Run the line test over a sampled pencil of complex lines and report the
worst residual. Passing verdicts are necessary-condition passes at the
stated density.

It takes these arguments:
- fn (str): gallery:<id> or grid:<path>.
- family (str, optional): through:<z>,<w> or parallel:<z>,<w>.
- pair (str, optional): z,w;z,w, testing the pencils through both points.
- density (int): Sampling density per pencil.
"""

TEST_CIRCLE_FAMILY_DESCRIPTION = """
Run the circle test over every circle of a circle family in the closed
disc.

It takes these arguments:
- disc (str): Disc function id.
- kind (str): through-two-boundary-points, concentric-plus-through-1,
  concentric-plus-moebius or moebius-pair.
- alpha, beta (complex, optional): Family points.
- t (float, optional): Parameter of concentric-plus-moebius.
- density (int): Circles per sub-family.
"""

DISC_ANALYTICITY_DESCRIPTION = """
Decide whether a disc function is holomorphic from concentric circles:
every circle must pass the circle test and the Fourier coefficients must
scale like R^m across the radii.

It takes these arguments:
- disc (str): Disc function id.
- radii (list): At least three distinct radii in (0, 1].
- consistency_tol (float): Radial-consistency tolerance.
"""

BALL_VERDICT_DESCRIPTION = """
Decide whether a boundary function extends holomorphically through the
ball: slice coefficients with n < 0 must vanish and every c_n with n >= 0
must be holomorphic on the disc.

It takes these arguments:
- fn (str): gallery:<id> or grid:<path>.
- nrange (lo..hi): Slice indices, covering at least -4..8.
- radii (list): Radii of the z-grid.
- angles (int): Angles of the z-grid.
"""

SLICE_DESCRIPTION = """
Compute one slice coefficient c_n(z).

It takes these arguments:
- fn (str): gallery:<id> or grid:<path>.
- n (int): Slice index.
- z (complex): Base point in the open disc.
"""

BOUNDARY_PROBE_DESCRIPTION = """
Watch c_n on circles approaching the unit circle and report successive
sup-norm differences.

It takes these arguments:
- fn (str): gallery:<id> or grid:<path>.
- n (int): Slice index.
- radii (list): Strictly decreasing R; the circle has radius
  sqrt(1 - R^2).
"""

NORMALIZE_PAIR_DESCRIPTION = """
Classify a pair of points of C^2 and map it to a canonical configuration
with a ball automorphism and unitary rotations.

It takes two arguments:
- a (z,w): First point.
- b (z,w): Second point.
"""

PROP71_DESCRIPTION = """
Scan the real fibers of the semiquadric families over x in (0, eta) for
violations of the separation inequalities.

It takes three arguments:
- t (float): Family parameter in (0, 1).
- eta (float): Upper end of the x-range.
- grid (int or nx,nR,nT): Grid sizes.
"""

FIBER_DESCRIPTION = """
Describe the fiber of the glued manifold over a base point: a segment and
an arc between conj(z) and 1/z, or the real axis for real z.

It takes these arguments:
- z (complex): Base point.
- t (float): Family parameter in (0, 1).
- eta (float): Start of the right slit.
"""

SEMIQUADRIC_INTERSECT_DESCRIPTION = """
Intersect two semiquadrics.

It takes four arguments:
- a1, r1: Center and radius of the first.
- a2, r2: Center and radius of the second.
"""

GALLERY_LIST_DESCRIPTION = """
List the built-in boundary and disc functions.

It takes no input.
"""

"""Linear programs in the canonical form  A x <= b,  lower <= x <= upper.

Greater-equal and equality rows are normalized away at construction
(negation / splitting into two <= rows), so every consumer downstream only
ever sees one constraint form.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

MAXIMIZE = "maximize"
MINIMIZE = "minimize"

FEAS_TOL = 1e-9          # componentwise feasibility check
SOLVE_FEAS_TOL = 1e-7    # tolerance on returned optimal points
PIVOT_TOL = 1e-9

# Combinatorial guards for the brute-force vertex oracle.
VERTEX_MAX_K = 6
VERTEX_MAX_ROWS = 24


class DimensionError(ValueError):
    """Vector/matrix shape does not match the program."""


@dataclass(frozen=True)
class LinearProgram:
    """Dense LP: optimize c.x subject to A x <= b and lower <= x <= upper."""

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray
    sense: str = MAXIMIZE
    var_lower: np.ndarray = None
    var_upper: np.ndarray = None

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.A, dtype=float))
        b = np.asarray(self.b, dtype=float).ravel()
        c = np.asarray(self.c, dtype=float).ravel()
        m, k = A.shape
        if b.shape[0] != m:
            raise DimensionError(f"b has length {b.shape[0]}, expected {m}")
        if c.shape[0] != k:
            raise DimensionError(f"c has length {c.shape[0]}, expected {k}")
        if self.sense not in (MAXIMIZE, MINIMIZE):
            raise ValueError(f"unknown sense {self.sense!r}")
        lower = (np.zeros(k) if self.var_lower is None
                 else np.asarray(self.var_lower, dtype=float).ravel())
        upper = (np.full(k, np.inf) if self.var_upper is None
                 else np.asarray(self.var_upper, dtype=float).ravel())
        if lower.shape[0] != k:
            raise DimensionError(f"var_lower has length {lower.shape[0]}, expected {k}")
        if upper.shape[0] != k:
            raise DimensionError(f"var_upper has length {upper.shape[0]}, expected {k}")
        if not (np.isfinite(A).all() and np.isfinite(b).all()
                and np.isfinite(c).all() and np.isfinite(lower).all()):
            raise ValueError("A, b, c and var_lower must be finite")
        if np.any(np.isnan(upper)) or np.any(upper == -np.inf):
            raise ValueError("var_upper entries must be finite or +inf")
        if np.any(lower > upper):
            bad = int(np.flatnonzero(lower > upper)[0])
            raise ValueError(f"var_lower[{bad}] > var_upper[{bad}]")
        for name, arr in (("A", A), ("b", b), ("c", c),
                          ("var_lower", lower), ("var_upper", upper)):
            arr = np.ascontiguousarray(arr)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def num_vars(self):
        return self.A.shape[1]

    @property
    def num_rows(self):
        return self.A.shape[0]

    @classmethod
    def from_rows(cls, rows, rhs, senses, c, sense=MAXIMIZE,
                  var_lower=None, var_upper=None):
        """Build from mixed-sense rows: senses[i] in {"<=", ">=", "="}.

        ">=" rows are negated, "=" rows split into a <=/>= pair, yielding the
        canonical all-<= form.
        """
        rows = np.atleast_2d(np.asarray(rows, dtype=float))
        rhs = np.asarray(rhs, dtype=float).ravel()
        if len(senses) != rows.shape[0]:
            raise DimensionError(
                f"got {len(senses)} senses for {rows.shape[0]} rows")
        out_rows, out_rhs = [], []
        for row, r, s in zip(rows, rhs, senses):
            if s == "<=":
                out_rows.append(row); out_rhs.append(r)
            elif s == ">=":
                out_rows.append(-row); out_rhs.append(-r)
            elif s == "=":
                out_rows.append(row); out_rhs.append(r)
                out_rows.append(-row); out_rhs.append(-r)
            else:
                raise ValueError(f"unknown row sense {s!r}")
        return cls(np.array(out_rows), np.array(out_rhs), c, sense=sense,
                   var_lower=var_lower, var_upper=var_upper)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solve: status plus the optimal vertex when one exists."""

    status: str                       # "optimal" | "infeasible" | "unbounded"
    s: np.ndarray = None              # optimal decision (status == optimal)
    objective: float = None           # sense-adjusted c.s
    iterations: int = 0

    @property
    def is_optimal(self):
        return self.status == "optimal"


def feasibility(lp: LinearProgram, x, invert: bool = False) -> int:
    """Indicator: 1 iff A x <= b and the variable bounds hold.

    With ``invert`` the encoding flips, so 0 marks a feasible point.
    Tolerance is 1e-9 absolute on every comparison.
    """
    x = np.asarray(x, dtype=float).ravel()
    if x.shape[0] != lp.num_vars:
        raise DimensionError(
            f"x has length {x.shape[0]}, expected {lp.num_vars}")
    ok = (np.all(lp.A @ x <= lp.b + FEAS_TOL)
          and np.all(x >= lp.var_lower - FEAS_TOL)
          and np.all(x <= lp.var_upper + FEAS_TOL))
    bit = int(ok)
    return 1 - bit if invert else bit


def _bound_rows(lp: LinearProgram):
    """All facet rows (constraints plus bounds) as G x <= h."""
    k = lp.num_vars
    eye = np.eye(k)
    G = [lp.A, -eye]
    h = [lp.b, -lp.var_lower]
    finite = np.flatnonzero(np.isfinite(lp.var_upper))
    if finite.size:
        G.append(eye[finite])
        h.append(lp.var_upper[finite])
    return np.vstack(G), np.concatenate(h)


def enumerate_vertices(lp: LinearProgram, merge_tol: float = 1e-7):
    """Brute-force basic feasible solutions (desk-scale test oracle).

    Intersects every k-subset of facets (constraint rows plus bound rows) and
    keeps the feasible intersection points, merging duplicates within
    ``merge_tol``.  Guarded to k <= 6 and m + 2k <= 24.
    """
    k = lp.num_vars
    if k > VERTEX_MAX_K or lp.num_rows + 2 * k > VERTEX_MAX_ROWS:
        raise ValueError(
            f"vertex enumeration is a desk-scale oracle: need k <= {VERTEX_MAX_K} "
            f"and m + 2k <= {VERTEX_MAX_ROWS}, got k={k}, "
            f"m + 2k = {lp.num_rows + 2 * k}")
    G, h = _bound_rows(lp)
    points = []
    for idx in combinations(range(G.shape[0]), k):
        B = G[list(idx)]
        try:
            x = np.linalg.solve(B, h[list(idx)])
        except np.linalg.LinAlgError:
            continue
        if not np.isfinite(x).all():
            continue
        if feasibility(lp, x):
            points.append(x)
    vertices = []
    for x in sorted(points, key=tuple):
        if not any(np.max(np.abs(x - v)) <= merge_tol for v in vertices):
            vertices.append(x)
    return vertices


@dataclass(frozen=True)
class SamplingRanges:
    """Uniform sampling intervals for random instances."""

    a: tuple = (-1.0, 1.0)
    b: tuple = (0.5, 2.0)
    c: tuple = (0.1, 1.0)

    def validate(self):
        for name, (lo, hi) in (("a", self.a), ("b", self.b), ("c", self.c)):
            if not hi > lo:
                raise ValueError(f"empty {name} range ({lo}, {hi})")


def random_lp(k: int, m: int, ranges: SamplingRanges = None, seed: int = 0,
              sense: str = MAXIMIZE, var_upper: float = None,
              b_floor: float = 0.1) -> LinearProgram:
    """Seeded random instance with a feasible origin neighborhood.

    Entries of A, b, c are drawn independently uniform from ``ranges``; b is
    then floored at ``b_floor`` > 0 so the all-zeros point stays feasible.
    The same seed always yields the same instance.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    ranges = ranges or SamplingRanges()
    ranges.validate()
    if b_floor <= 0:
        raise ValueError("b_floor must be > 0")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    A = rng.uniform(*ranges.a, size=(m, k))
    b = np.maximum(rng.uniform(*ranges.b, size=m), b_floor)
    c = rng.uniform(*ranges.c, size=k)
    upper = None if var_upper is None else np.full(k, float(var_upper))
    return LinearProgram(A, b, c, sense=sense, var_upper=upper)


def dual_lp(lp: LinearProgram) -> LinearProgram:
    """Dual of a minimization LP with zero lower bounds.

    Folds finite upper bounds into rows first, giving
    ``min c.x s.t. A2 x <= b2, x >= 0``, whose dual is
    ``max -b2.z s.t. -A2^T z <= c, z >= 0``.  Strong duality makes the two
    optima coincide, which the energy tests use as an independent check.
    """
    if lp.sense != MINIMIZE:
        raise ValueError("dual_lp expects a minimization LP")
    if np.any(lp.var_lower != 0):
        raise ValueError("dual_lp expects var_lower == 0")
    A2, b2 = lp.A, lp.b
    finite = np.flatnonzero(np.isfinite(lp.var_upper))
    if finite.size:
        A2 = np.vstack([A2, np.eye(lp.num_vars)[finite]])
        b2 = np.concatenate([b2, lp.var_upper[finite]])
    return LinearProgram(-A2.T, lp.c, -b2, sense=MAXIMIZE)


def write_lp(lp: LinearProgram, path):
    """Write the LP text format (round-trip exact via repr)."""
    lines = [f"lp {lp.sense} {lp.num_vars} {lp.num_rows}"]
    lines.append(" ".join(repr(v) for v in lp.c))
    for row, rv in zip(lp.A, lp.b):
        lines.append(" ".join(repr(v) for v in row) + " " + repr(rv))
    if np.any(lp.var_lower != 0):
        lines.append("lower " + " ".join(repr(v) for v in lp.var_lower))
    if np.any(np.isfinite(lp.var_upper)):
        lines.append("upper " + " ".join(repr(v) for v in lp.var_upper))
    text = "\n".join(lines) + "\n"
    with open(path, "w") as fh:
        fh.write(text)


def read_lp(path) -> LinearProgram:
    """Read the LP text format written by :func:`write_lp`."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    head = lines[0].split()
    if len(head) != 4 or head[0] != "lp":
        raise ValueError(f"{path}: bad header {lines[0]!r}")
    sense, k, m = head[1], int(head[2]), int(head[3])
    c = np.array([float(v) for v in lines[1].split()])
    rows, rhs = [], []
    for ln in lines[2:2 + m]:
        vals = [float(v) for v in ln.split()]
        if len(vals) != k + 1:
            raise ValueError(f"{path}: row has {len(vals)} values, expected {k + 1}")
        rows.append(vals[:k]); rhs.append(vals[k])
    lower = upper = None
    for ln in lines[2 + m:]:
        tag, *vals = ln.split()
        vec = np.array([float(v) for v in vals])
        if tag == "lower":
            lower = vec
        elif tag == "upper":
            upper = vec
        else:
            raise ValueError(f"{path}: unknown bounds line {tag!r}")
    return LinearProgram(np.array(rows), np.array(rhs), c, sense=sense,
                         var_lower=lower, var_upper=upper)

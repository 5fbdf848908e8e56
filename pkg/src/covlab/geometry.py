"""Lipschitz graph domains, bi-Lipschitz maps, Whitney decompositions,
and recovery of the graph representation of a perturbed domain.

A domain is the region above the graph of an M-Lipschitz function g,
truncated to an axis-aligned box.  All distance queries resolve against a
polyline of boundary samples (exact for piecewise-linear graphs), with
closed-form fast paths for the flat/tilted/cone families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from covlab.errors import InputError, InvariantViolation
from covlab.grids import Box

CLOSED_FORM_FAMILIES = ("flat", "tilted", "cone")


# ---------------------------------------------------------------------------
# graph families
# ---------------------------------------------------------------------------

def make_graph(family: str, **params):
    """Return (g, gprime, M) for a named graph family, n=2.

    g and gprime are vectorized callables on x-arrays; gprime may be None
    when no useful derivative exists (custom tables).
    """
    if family == "flat":
        return (lambda x: np.zeros_like(np.asarray(x, dtype=float)),
                lambda x: np.zeros_like(np.asarray(x, dtype=float)), 0.0)
    if family == "tilted":
        m = float(params["slope"])
        return (lambda x: m * np.asarray(x, dtype=float),
                lambda x: np.full_like(np.asarray(x, dtype=float), m), abs(m))
    if family == "cone":
        M = float(params["M"])
        if M <= 0:
            raise InputError("cone family needs M > 0")
        return (lambda x: M * np.abs(np.asarray(x, dtype=float)),
                lambda x: M * np.sign(np.asarray(x, dtype=float)), M)
    if family == "sine":
        amp = float(params["amp"])
        freq = float(params["freq"])
        return (lambda x: amp * np.sin(freq * np.asarray(x, dtype=float)),
                lambda x: amp * freq * np.cos(freq * np.asarray(x, dtype=float)),
                abs(amp * freq))
    if family in ("piecewise-linear", "custom-table"):
        xs = np.asarray(params["xs"], dtype=float)
        ys = np.asarray(params["ys"], dtype=float)
        if xs.ndim != 1 or xs.shape != ys.shape or len(xs) < 2:
            raise InputError("piecewise graph needs matching 1-d xs/ys, len >= 2")
        if np.any(np.diff(xs) <= 0):
            raise InputError("piecewise graph knots must be strictly increasing")
        slopes = np.diff(ys) / np.diff(xs)
        M = float(np.max(np.abs(slopes)))

        def g(x):
            x = np.asarray(x, dtype=float)
            # continue the end slopes beyond the knot range
            out = np.interp(x, xs, ys)
            lo = x < xs[0]
            hi = x > xs[-1]
            out = np.where(lo, ys[0] + slopes[0] * (x - xs[0]), out)
            out = np.where(hi, ys[-1] + slopes[-1] * (x - xs[-1]), out)
            return out

        return g, None, M
    raise InputError(f"unknown graph family: {family!r}")


# ---------------------------------------------------------------------------
# domain type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphDomain:
    g: callable
    lipschitz_M: float
    dim_n: int
    box: Box
    boundary_samples: np.ndarray          # (m, 3) columns x, t, arclength
    family: str
    params: dict = field(default_factory=dict)
    gprime: callable | None = None
    farfield_family: str = "linear"       # wall model used by the Green solver
    farfield_params: dict = field(default_factory=dict)

    @property
    def R(self) -> float:
        return self.box.xhi

    def g_at(self, x):
        return self.g(np.asarray(x, dtype=float))

    def contains(self, pts: np.ndarray, margin: float = 0.0) -> np.ndarray:
        pts = np.atleast_2d(pts)
        return pts[:, 1] >= self.g_at(pts[:, 0]) + margin

    def boundary_normals(self) -> np.ndarray:
        """Inward unit normals at the boundary samples (polyline average)."""
        bs = self.boundary_samples
        seg = np.diff(bs[:, :2], axis=0)
        seg /= np.linalg.norm(seg, axis=1, keepdims=True)
        # rotate the tangent by +90 degrees: (dx, dt) -> (-dt, dx)
        nseg = np.stack([-seg[:, 1], seg[:, 0]], axis=1)
        nrm = np.empty_like(bs[:, :2])
        nrm[0] = nseg[0]
        nrm[-1] = nseg[-1]
        mid = nseg[:-1] + nseg[1:]
        mid /= np.linalg.norm(mid, axis=1, keepdims=True)
        nrm[1:-1] = mid
        return nrm


def _sample_boundary(g, R: float, T: float, tlo: float, M: float, spacing: float):
    # extend past the box so distance queries near the walls see real boundary
    margin = (T - tlo) * 1.05 + spacing
    dx = spacing / math.sqrt(1.0 + M * M)
    half = int(math.ceil((R + margin) / dx))
    xs = dx * np.arange(-half, half + 1)
    ts = g(xs)
    seglen = np.hypot(np.diff(xs), np.diff(ts))
    arc = np.concatenate([[0.0], np.cumsum(seglen)])
    arc -= np.interp(0.0, xs, arc)  # anchor arclength 0 at x = 0
    return np.stack([xs, ts, arc], axis=1)


def build_domain(g_spec, n: int = 2, R: float = 4.0, grid_n: int = 256,
                 T: float | None = None, pad: float = 0.1) -> GraphDomain:
    """Construct a truncated graph domain from a family spec.

    ``g_spec`` is either a family name or a dict {"family": ..., params}.
    """
    if grid_n < 64:
        raise InputError("grid_n must be >= 64")
    if n != 2:
        raise InputError("only n = 2 domains are supported by the grid pipeline")
    if isinstance(g_spec, str):
        g_spec = {"family": g_spec}
    spec = dict(g_spec)
    family = spec.pop("family")
    g, gprime, M = make_graph(family, **spec)

    spacing = R / grid_n
    xs_probe = np.linspace(-R, R, 4 * grid_n + 1)
    gv = g(xs_probe)
    quot = np.abs(np.diff(gv)) / np.diff(xs_probe)
    if np.max(quot) > M + 1e-9:
        raise InputError(
            f"sampled Lipschitz quotient {np.max(quot):.6g} exceeds declared M={M:.6g}")

    gmin = float(np.min(gv))
    gmax = float(np.max(gv))
    if T is None:
        T = max(R, gmax + 0.5 * R)
    if T < gmax + 0.25 * R:
        raise InputError("truncation top T leaves no room above the graph")
    box = Box(-R, R, gmin - pad, T)
    samples = _sample_boundary(g, R, T, box.tlo, M, spacing)
    return GraphDomain(g=g, lipschitz_M=M, dim_n=n, box=box,
                       boundary_samples=samples, family=family, params=spec,
                       gprime=gprime,
                       farfield_family=family if family in CLOSED_FORM_FAMILIES else "linear",
                       farfield_params=dict(spec))


# ---------------------------------------------------------------------------
# distance to the boundary
# ---------------------------------------------------------------------------

def _dist_exact(dom: GraphDomain, pts: np.ndarray) -> np.ndarray | None:
    x, t = pts[:, 0], pts[:, 1]
    if dom.family == "flat":
        return t
    if dom.family == "tilted":
        m = dom.params["slope"]
        return (t - m * x) / math.sqrt(1 + m * m)
    if dom.family == "cone":
        M = dom.params["M"]
        # distance from a point above the cone to the nearer ray; because the
        # sector is convex the foot is always on a ray or at the tip
        c = 1.0 / math.sqrt(1 + M * M)
        ax = np.abs(x)
        d_line = (t - M * ax) * c
        # foot parameter along the near ray; negative means the tip is nearest
        u = (ax + M * t) * c
        return np.where(u >= 0, d_line, np.hypot(x, t))
    return None


def dist_to_boundary(dom: GraphDomain, X) -> np.ndarray | float:
    """Distance from points inside the domain to the graph boundary."""
    pts = np.atleast_2d(np.asarray(X, dtype=float))
    scalar = np.asarray(X).ndim == 1
    below = pts[:, 1] < dom.g_at(pts[:, 0]) - 1e-12
    if np.any(below):
        bad = pts[below][0]
        raise InputError(f"point outside domain (below the graph): {tuple(bad)}")
    d = _dist_exact(dom, pts)
    if d is None:
        d = _polyline_distance(dom.boundary_samples[:, :2], pts)
    d = np.maximum(d, 0.0)
    return float(d[0]) if scalar else d


def _polyline_distance(poly: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Min distance from each point to the polyline, windowed in x.

    The vertical gap t - g(x) bounds the true distance, so only segments
    within that horizontal window can be nearest.
    """
    px = poly[:, 0]
    out = np.empty(len(pts))
    order = np.argsort(pts[:, 0], kind="stable")
    chunk = 2048
    for s in range(0, len(order), chunk):
        idx = order[s:s + chunk]
        sub = pts[idx]
        vert = sub[:, 1] - np.interp(sub[:, 0], px, poly[:, 1])
        win = float(np.max(vert)) + (px[1] - px[0]) * 2 + 1e-12
        lo = np.searchsorted(px, float(np.min(sub[:, 0])) - win)
        hi = np.searchsorted(px, float(np.max(sub[:, 0])) + win)
        a = poly[max(lo - 1, 0):hi + 1]
        out[idx] = _segments_min_dist(a, sub)
    return out


def _segments_min_dist(poly: np.ndarray, pts: np.ndarray) -> np.ndarray:
    A = poly[:-1][None, :, :]
    B = poly[1:][None, :, :]
    P = pts[:, None, :]
    AB = B - A
    denom = np.sum(AB * AB, axis=2)
    tpar = np.clip(np.sum((P - A) * AB, axis=2) / denom, 0.0, 1.0)
    proj = A + tpar[..., None] * AB
    d = np.linalg.norm(P - proj, axis=2)
    return np.min(d, axis=1)


# ---------------------------------------------------------------------------
# bi-Lipschitz maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiLipMap:
    """A perturbation map with analytic Jacobian.

    ``phi`` maps (m, 2) -> (m, 2); ``jacobian`` maps (m, 2) -> (m, 2, 2)
    with the row convention (J)_{ij} = d_i phi_j.  ``eps_bound`` is the
    claimed sup of |grad phi - I|.
    """
    phi: callable
    jacobian: callable
    eps_bound: float
    name: str = "map"

    def check_eps(self, pts: np.ndarray) -> dict:
        J = self.jacobian(np.atleast_2d(pts))
        D = J - np.eye(2)
        entry = float(np.max(np.abs(D)))
        op = float(np.max(np.linalg.norm(D, ord=2, axis=(1, 2))))
        if op > self.eps_bound + 1e-12:
            raise InvariantViolation(
                f"map {self.name}: operator norm {op:.3e} exceeds eps_bound {self.eps_bound:.3e}")
        return {"entrywise_max": entry, "operator_2": op}

    def invert(self, targets: np.ndarray, x0: np.ndarray | None = None,
               tol: float = 1e-12, maxiter: int = 60) -> np.ndarray:
        """Newton inversion of phi; converges since grad phi stays near I."""
        Z = np.atleast_2d(targets).astype(float)
        X = Z.copy() if x0 is None else np.atleast_2d(x0).astype(float).copy()
        for _ in range(maxiter):
            F = self.phi(X) - Z
            if np.max(np.abs(F)) < tol:
                break
            J = self.jacobian(X)
            # row convention: dphi = dX . J, so solve F = dX . J for dX
            dX = np.linalg.solve(np.swapaxes(J, 1, 2), F[..., None])[..., 0]
            X -= dX
        else:
            raise InvariantViolation(f"map {self.name}: Newton inversion stalled")
        return X


def identity_map() -> BiLipMap:
    return BiLipMap(phi=lambda P: np.array(P, dtype=float, copy=True),
                    jacobian=lambda P: np.broadcast_to(np.eye(2), (len(np.atleast_2d(P)), 2, 2)).copy(),
                    eps_bound=0.0, name="identity")


def translation_map(c) -> BiLipMap:
    c = np.asarray(c, dtype=float)
    return BiLipMap(phi=lambda P: np.atleast_2d(P) + c,
                    jacobian=lambda P: np.broadcast_to(np.eye(2), (len(np.atleast_2d(P)), 2, 2)).copy(),
                    eps_bound=0.0, name="translation")


def shear_map(eps: float, freq: float = 1.0) -> BiLipMap:
    """Smooth vertical shear (x, t) -> (x, t + eps sin(freq x) / freq)."""
    eps = float(eps)
    freq = float(freq)

    def phi(P):
        P = np.atleast_2d(P)
        out = np.array(P, dtype=float, copy=True)
        out[:, 1] += (eps / freq) * np.sin(freq * P[:, 0])
        return out

    def jac(P):
        P = np.atleast_2d(P)
        J = np.broadcast_to(np.eye(2), (len(P), 2, 2)).copy()
        J[:, 0, 1] = eps * np.cos(freq * P[:, 0])
        return J

    return BiLipMap(phi=phi, jacobian=jac, eps_bound=eps, name=f"shear(eps={eps})")


def linear_map(E, eps: float) -> BiLipMap:
    """phi(X) = X (I + eps E) in row convention, with |eps E| as the bound."""
    E = np.asarray(E, dtype=float)
    A = np.eye(2) + eps * E
    bound = float(np.linalg.norm(eps * E, ord=2))
    return BiLipMap(phi=lambda P: np.atleast_2d(P) @ A,
                    jacobian=lambda P: np.broadcast_to(A, (len(np.atleast_2d(P)), 2, 2)).copy(),
                    eps_bound=bound, name="linear")


def rotation_map(theta: float) -> BiLipMap:
    c, s = math.cos(theta), math.sin(theta)
    A = np.array([[c, s], [-s, c]])
    bound = float(np.linalg.norm(A - np.eye(2), ord=2))
    return BiLipMap(phi=lambda P: np.atleast_2d(P) @ A,
                    jacobian=lambda P: np.broadcast_to(A, (len(np.atleast_2d(P)), 2, 2)).copy(),
                    eps_bound=bound, name=f"rotation({theta})")


def map_from_spec(spec) -> BiLipMap:
    if isinstance(spec, BiLipMap):
        return spec
    if isinstance(spec, str):
        spec = {"kind": spec}
    spec = dict(spec)
    kind = spec.pop("kind")
    if kind == "identity":
        return identity_map()
    if kind == "translation":
        return translation_map(spec.get("c", (0.0, 0.0)))
    if kind == "shear":
        return shear_map(spec["eps"], spec.get("freq", 1.0))
    if kind == "linear":
        return linear_map(spec["E"], spec["eps"])
    if kind == "rotation":
        return rotation_map(spec["theta"])
    raise InputError(f"unknown map kind: {kind!r}")


# ---------------------------------------------------------------------------
# Whitney decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WhitneyBox:
    center: np.ndarray
    half_width: float
    generation: int
    delta_at_center: float


@dataclass
class WhitneyDecomposition:
    boxes: list
    cutoff_half_width: float
    cutoff_delta: float
    covered_fraction: float
    leakage: float
    rejected: int

    def __iter__(self):
        return iter(self.boxes)

    def __len__(self):
        return len(self.boxes)


# fraction of the maximal half_width delta/4 actually used; leaves room for
# collision-shrinking before hitting the delta/8 floor
_WHITNEY_SAFETY = 0.98


def _level_curve(dom: GraphDomain, xs: np.ndarray, delta: float) -> np.ndarray:
    """Heights tau(x) with dist((x, tau), boundary) = delta, by bisection."""
    gl = dom.g_at(xs)
    lo = gl + delta * 0.999
    hi = gl + delta * math.sqrt(1 + dom.lipschitz_M ** 2) * 1.001 + 1e-12
    for _ in range(48):
        mid = 0.5 * (lo + hi)
        d = dist_to_boundary(dom, np.stack([xs, mid], axis=1))
        high = d > delta
        hi = np.where(high, mid, hi)
        lo = np.where(high, lo, mid)
    return 0.5 * (lo + hi)


def whitney_decomposition(dom: GraphDomain, carleson_box, grid_h: float) -> WhitneyDecomposition:
    """Cover B(x0, r) cap Omega by pairwise disjoint axis-aligned squares
    with half_width between delta/8 and delta/4 of their centers.

    Squares are laid in rows along level curves of the boundary distance,
    shrunk on collision, then a gap-fill pass patches the staircase holes
    that appear where the level curves are steep.  Coverage of the region
    above the resolution cutoff is measured on a lattice and reported.
    """
    x0, r = carleson_box
    R = dom.R
    if r > R / 2 + 1e-12 or abs(x0) > R / 2 + 1e-12:
        raise InputError("carleson box outside the safe region (|x0|<=R/2, r<=R/2)")
    bpt = np.array([x0, float(dom.g_at(x0))])
    hw_cut = 2.0 * grid_h
    delta_cut = 4.0 * hw_cut / _WHITNEY_SAFETY
    if r < delta_cut:
        return WhitneyDecomposition([], hw_cut, delta_cut, 0.0, 1.0, 0)

    M = dom.lipschitz_M
    slant = math.sqrt(1 + M * M)
    q = _WHITNEY_SAFETY / (4.0 * slant)
    ratio = (1 + q) / (1 - q)

    levels = []
    d = 1.25 * r  # start above the ball crown so the top cap is covered
    while d >= delta_cut:
        levels.append(d)
        d /= ratio

    acc = np.empty((0, 3))  # columns: cx, ct, hw
    rejected = 0

    def clearance(c):
        if not len(acc):
            return np.inf
        linf = np.maximum(np.abs(acc[:, 0] - c[0]), np.abs(acc[:, 1] - c[1]))
        return float(np.min(linf - acc[:, 2]))

    def try_place(c, hw_target, delta_c):
        nonlocal acc, rejected
        floor = max(delta_c / 8 * 1.0000001, hw_cut)
        if hw_target < floor:
            return 0.0
        hw = min(hw_target, clearance(c))
        if hw < floor:
            rejected += 1
            return 0.0
        # stay strictly inside the truncation box
        if (c[0] - hw < dom.box.xlo or c[0] + hw > dom.box.xhi
                or c[1] + hw > dom.box.thi):
            return 0.0
        acc = np.vstack([acc, [c[0], c[1], hw]])
        return hw

    for delta in levels:
        hw_t = _WHITNEY_SAFETY * delta / 4
        xs = np.arange(x0 - r - hw_t, x0 + r + hw_t, 2 * hw_t * (1 + 1e-9))
        tau = _level_curve(dom, xs, delta)
        centers = np.stack([xs, tau], axis=1)
        # let boxes poke slightly past the ball so its rim stays covered
        inball = np.linalg.norm(centers - bpt, axis=1) <= r + hw_t
        for k in np.nonzero(inball)[0]:
            try_place(centers[k], hw_t, delta)

    # rasterize the target region
    gx = np.arange(x0 - r, x0 + r + grid_h / 2, grid_h)
    gt = np.arange(max(dom.box.tlo, float(np.min(dom.g_at(gx)))),
                   min(dom.box.thi, bpt[1] + r) + grid_h / 2, grid_h)
    GX, GT = np.meshgrid(gx, gt, indexing="ij")
    nodes = np.stack([GX.ravel(), GT.ravel()], axis=1)
    above = nodes[:, 1] >= dom.g_at(nodes[:, 0])
    nd = np.full(len(nodes), -1.0)
    nd[above] = dist_to_boundary(dom, nodes[above])
    region = above & (nd >= delta_cut) & (np.linalg.norm(nodes - bpt, axis=1) <= r)

    cov = np.zeros(len(nodes), dtype=bool)
    for xc, tc, hw in acc:
        cov |= (np.abs(nodes[:, 0] - xc) <= hw) & (np.abs(nodes[:, 1] - tc) <= hw)

    # Patch staircase holes.  Candidate patch centers sit at and below the
    # hole: lower centers have a smaller delta/8 floor, so small boxes can
    # nestle into the notches between row boxes while still reaching the hole.
    offs = np.array([(dx, dt) for dt in (0.0, -0.6, -1.2, -1.8, -2.4, 0.6)
                     for dx in (0.0, -0.7, 0.7, -1.4, 1.4)])
    order = np.argsort(-nd[region & ~cov])
    hole_idx = np.nonzero(region & ~cov)[0][order]
    for i in hole_idx:
        if cov[i]:
            continue
        P = nodes[i]
        cands = P + offs * (nd[i] / 8)
        ok = cands[:, 1] >= dom.g_at(cands[:, 0]) + 1e-12
        if not np.any(ok):
            rejected += 1
            continue
        dists = np.full(len(cands), -1.0)
        dists[ok] = dist_to_boundary(dom, cands[ok])
        placed = False
        for c, delta_c in zip(cands[ok], dists[ok]):
            hw_t = min(_WHITNEY_SAFETY * delta_c / 4, clearance(c))
            if hw_t < max(delta_c / 8 * 1.0000001, hw_cut):
                continue
            if np.max(np.abs(P - c)) > hw_t:
                continue  # would not cover the hole node
            hw = try_place(c, hw_t, delta_c)
            if hw > 0:
                cov |= ((np.abs(nodes[:, 0] - c[0]) <= hw)
                        & (np.abs(nodes[:, 1] - c[1]) <= hw))
                placed = True
                break
        if not placed:
            rejected += 1

    n_region = int(np.count_nonzero(region))
    n_cov = int(np.count_nonzero(region & cov))
    frac = n_cov / n_region if n_region else 0.0

    boxes = []
    for xc, tc, hw in acc:
        delta_c = float(dist_to_boundary(dom, np.array([xc, tc])))
        gen = max(0, int(math.floor(math.log2(r / delta_c))))
        boxes.append(WhitneyBox(center=np.array([xc, tc]), half_width=float(hw),
                                generation=gen, delta_at_center=delta_c))
    return WhitneyDecomposition(boxes, hw_cut, delta_cut, frac, 1.0 - frac, rejected)


# ---------------------------------------------------------------------------
# graph recovery of the perturbed domain
# ---------------------------------------------------------------------------

def recover_graph(dom: GraphDomain, bmap: BiLipMap, newton_tol: float = 1e-10,
                  maxiter: int = 50) -> GraphDomain:
    """Return Phi(dom) as a graph domain.

    For every target abscissa x, solve for the source point (z, g(z)) whose
    image has first coordinate x (scalar Newton safeguarded by bisection;
    the map is monotone in z since grad Phi is near I), and read the graph
    height off the image's last coordinate.
    """
    M = dom.lipschitz_M
    eps = bmap.eps_bound
    if eps * (M + 1) >= 0.5:
        raise InputError(
            f"recover_graph needs eps*(M+1) < 1/2, got {eps * (M + 1):.3g}")

    bs = dom.boundary_samples
    xs = bs[:, 0]

    def image_x(z):
        pts = np.stack([z, dom.g_at(z)], axis=-1)
        return bmap.phi(pts)

    # bracket then bisect/Newton per target, fully vectorized
    targets = xs
    lo = targets - (2 * eps * (1 + np.abs(targets)) + 4 * eps + 1e-9)
    hi = targets + (2 * eps * (1 + np.abs(targets)) + 4 * eps + 1e-9)
    for _ in range(8):
        flo = image_x(lo)[:, 0] - targets
        fhi = image_x(hi)[:, 0] - targets
        badlo = flo > 0
        badhi = fhi < 0
        if not (np.any(badlo) or np.any(badhi)):
            break
        lo = np.where(badlo, lo - (hi - lo), lo)
        hi = np.where(badhi, hi + (hi - lo), hi)
    else:
        raise InvariantViolation("recover_graph: could not bracket the graph preimage")

    z = 0.5 * (lo + hi)
    for _ in range(maxiter):
        img = image_x(z)
        F = img[:, 0] - targets
        if np.max(np.abs(F)) < newton_tol:
            break
        high = F > 0
        hi = np.where(high, z, hi)
        lo = np.where(high, lo, z)
        z = 0.5 * (lo + hi)
    else:
        img = image_x(z)
        F = img[:, 0] - targets
        if np.max(np.abs(F)) > 1e-8:
            k = int(np.argmax(np.abs(F)))
            raise InvariantViolation(
                f"recover_graph: Newton did not converge at x = {targets[k]:.6g}")

    f_vals = image_x(z)[:, 1]
    quot = np.abs(np.diff(f_vals)) / np.diff(targets)
    M_rec = float(np.max(quot)) * (1 + 1e-12)
    C = M + 1
    bound = (M + C * eps) / (1 - C * eps)
    if M_rec > bound + 1e-9:
        raise InvariantViolation(
            f"recovered Lipschitz constant {M_rec:.4g} exceeds bound {bound:.4g}")

    xs_k = targets
    ys_k = f_vals

    def f(x):
        return np.interp(np.asarray(x, dtype=float), xs_k, ys_k)

    R = dom.R
    pad = dom.box.tlo - (float(np.min(dom.g_at(np.linspace(-R, R, 1025)))) - 0)
    pad = abs(pad) if pad != 0 else 0.1
    sel = np.abs(xs_k) <= R
    fmin = float(np.min(ys_k[sel]))
    fmax = float(np.max(ys_k[sel]))
    T = max(dom.box.thi, fmax + 0.25 * R)
    box = Box(-R, R, fmin - pad, T)

    seglen = np.hypot(np.diff(xs_k), np.diff(ys_k))
    arc = np.concatenate([[0.0], np.cumsum(seglen)])
    arc -= np.interp(0.0, xs_k, arc)
    samples = np.stack([xs_k, ys_k, arc], axis=1)

    return GraphDomain(g=f, lipschitz_M=M_rec, dim_n=dom.dim_n, box=box,
                       boundary_samples=samples,
                       family=f"recovered:{dom.family}",
                       params={"base": dom.family, **dom.params},
                       gprime=None,
                       farfield_family=dom.farfield_family,
                       farfield_params=dict(dom.farfield_params))

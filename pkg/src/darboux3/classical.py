"""Classical mechanics of the curved oscillator: trajectories, conserved
quantities, and numerical superintegrability evidence.

The flow is not separable, so integration uses an adaptive high-order
Runge-Kutta scheme (DOP853) with the drift of the full invariant family as
the accuracy certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import minimize_scalar

from .model import continuum_threshold


class IntegrationError(RuntimeError):
    """Adaptive integration failed (step-size underflow or solver abort)."""


@dataclass
class PhaseState:
    """Classical phase-space point (q, p) at time t."""

    q: np.ndarray
    p: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        self.q = np.asarray(self.q, dtype=float)
        self.p = np.asarray(self.p, dtype=float)
        if self.q.shape != self.p.shape or self.q.ndim != 1:
            raise ValueError("q and p must be 1-d arrays of equal length")
        if not (np.all(np.isfinite(self.q)) and np.all(np.isfinite(self.p))):
            raise ValueError("phase-space coordinates must be finite")

    @property
    def dim(self):
        return self.q.size

    def as_vector(self):
        return np.concatenate([self.q, self.p])

    @staticmethod
    def from_vector(z, t=0.0):
        n = z.size // 2
        return PhaseState(q=z[:n].copy(), p=z[n:].copy(), t=t)


@dataclass
class TrajectoryRecord:
    """Sampled trajectory plus per-invariant relative drift."""

    samples: list = field(default_factory=list)
    drift: dict = field(default_factory=dict)

    @property
    def max_drift(self):
        return max(self.drift.values()) if self.drift else 0.0


def classical_hamiltonian(params, state):
    """H(q, p) = (p^2 + omega^2 q^2) / (2 (1 + lambda q^2))."""
    q, p = state.q, state.p
    return float(
        (p @ p + params.omega**2 * (q @ q)) / (2.0 * (1.0 + params.lam * (q @ q)))
    )


def equations_of_motion(params, state):
    """Canonical equations: dq/dt = p/D, dp/dt = lambda*q*(p^2+omega^2 q^2)/D^2 - omega^2 q/D."""
    q, p = state.q, state.p
    lam, om2 = params.lam, params.omega**2
    d = 1.0 + lam * (q @ q)
    e2 = p @ p + om2 * (q @ q)
    return p / d, lam * q * e2 / d**2 - om2 * q / d


def _rhs(params):
    lam, om2 = params.lam, params.omega**2

    def rhs(_t, z):
        n = z.size // 2
        q, p = z[:n], z[n:]
        d = 1.0 + lam * (q @ q)
        e2 = p @ p + om2 * (q @ q)
        return np.concatenate([p / d, lam * q * e2 / d**2 - om2 * q / d])

    return rhs


def invariant_names(dim):
    """Stable ordering of the full invariant family for reports."""
    names = ["H"]
    names += [f"C^({m})" for m in range(2, dim + 1)]
    names += [f"C_({m})" for m in range(2, dim)]  # C_(N) duplicates C^(N)
    names += [f"I_{i+1}{j+1}" for i in range(dim) for j in range(i, dim)]
    return names


def classical_invariants(params, state):
    """Values of {H, C^(m), C_(m), I_ij} at a phase-space point.

    Returns a dict keyed like invariant_names(); the Fradkin tensor is stored
    on and above the diagonal (it is symmetric), and the trace identity
    H = (1/2) sum_i I_ii holds to machine precision.
    """
    q, p = state.q, state.p
    n = q.size
    lam, om2 = params.lam, params.omega**2
    h = classical_hamiltonian(params, state)
    lmat = np.outer(q, p) - np.outer(p, q)
    lsq = lmat**2
    out = {"H": h}
    for m in range(2, n + 1):
        out[f"C^({m})"] = float(np.sum(np.triu(lsq[:m, :m], 1)))
    for m in range(2, n):
        out[f"C_({m})"] = float(np.sum(np.triu(lsq[n - m :, n - m :], 1)))
    out[f"C_({n})"] = out[f"C^({n})"]  # the two ladders meet at m = N
    imat = np.outer(p, p) - (2.0 * lam * h - om2) * np.outer(q, q)
    for i in range(n):
        for j in range(i, n):
            out[f"I_{i+1}{j+1}"] = float(imat[i, j])
    return out


def integrate(params, initial, t_end, tolerance=1e-10, n_samples=501):
    """Integrate the flow and record the drift of every invariant.

    Returns a TrajectoryRecord whose drift entries are
    max_t |I(t) - I(0)| / max(1, |I(0)|) over the sample times.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    z0 = initial.as_vector()
    t0 = initial.t
    ts = np.linspace(t0, t0 + t_end, n_samples)
    sol = solve_ivp(
        _rhs(params), (t0, t0 + t_end), z0,
        method="DOP853", rtol=tolerance, atol=tolerance, t_eval=ts,
    )
    if not sol.success:
        raise IntegrationError(f"integrator aborted: {sol.message}")
    record = TrajectoryRecord()
    ref = classical_invariants(params, initial)
    worst = {k: 0.0 for k in ref}
    for col, t in zip(sol.y.T, sol.t):
        st = PhaseState.from_vector(col, t=float(t))
        record.samples.append(st)
        vals = classical_invariants(params, st)
        for k, v0 in ref.items():
            dev = abs(vals[k] - v0) / max(1.0, abs(v0))
            if dev > worst[k]:
                worst[k] = dev
    record.drift = worst
    return record


def orbit_closure(params, initial, search_horizon=None, tolerance=1e-12,
                  closure_threshold=1e-4):
    """Look for the first return of the trajectory to its initial point.

    Scans the phase-space distance to the initial state on a fine grid, takes
    the first local minimum after the trajectory has moved away, and refines
    it by bounded scalar minimization.  Returns a dict with the refined period
    estimate, the closure distance, and a 'conclusive' flag; an orbit that
    never comes back below ``closure_threshold`` within the horizon is
    reported as inconclusive rather than failed.
    """
    period_scale = 2.0 * math.pi / params.omega
    if search_horizon is None:
        search_horizon = 20.0 * period_scale
    z0 = initial.as_vector()
    sol = solve_ivp(
        _rhs(params), (0.0, search_horizon), z0,
        method="DOP853", rtol=tolerance, atol=tolerance, dense_output=True,
    )
    if not sol.success:
        raise IntegrationError(f"integrator aborted: {sol.message}")
    dt = period_scale / 2000.0
    ts = np.arange(dt, search_horizon, dt)
    dists = np.linalg.norm(sol.sol(ts) - z0[:, None], axis=0)
    scale = max(1.0, float(np.linalg.norm(z0)))
    escape = dists > 0.5 * dists.max()
    moved = np.flatnonzero(escape)
    best = None
    if moved.size:
        k0 = moved[0]
        for k in range(k0 + 1, len(ts) - 1):
            if dists[k] <= dists[k - 1] and dists[k] <= dists[k + 1]:
                res = minimize_scalar(
                    lambda t: float(np.linalg.norm(sol.sol(t) - z0)),
                    bounds=(ts[k - 1], ts[k + 1]), method="bounded",
                    options={"xatol": 1e-13},
                )
                if res.fun <= closure_threshold * scale:
                    best = (float(res.x), float(res.fun))
                    break
                if best is None or res.fun < best[1]:
                    best = (float(res.x), float(res.fun))
    if best is None:
        return {"period": math.nan, "closure_distance": math.inf, "conclusive": False}
    period, dist = best
    return {
        "period": period,
        "closure_distance": dist,
        "conclusive": dist <= closure_threshold * scale,
    }


def _poisson_bracket(params, f, g, state, h=1e-6):
    """Central finite-difference Poisson bracket {f, g} at a state."""
    n = state.dim
    z = state.as_vector()

    def grad(fun):
        out = np.empty(2 * n)
        for k in range(2 * n):
            step = h * max(1.0, abs(z[k]))
            zp, zm = z.copy(), z.copy()
            zp[k] += step
            zm[k] -= step
            out[k] = (fun(PhaseState.from_vector(zp)) - fun(PhaseState.from_vector(zm))) / (2 * step)
        return out

    gf, gg = grad(f), grad(g)
    return float(gf[:n] @ gg[n:] - gf[n:] @ gg[:n])


def poisson_bracket_with_h(params, name, state, h=1e-6):
    """Finite-difference Poisson bracket {H, I_name} at a state."""
    return _poisson_bracket(
        params,
        lambda s: classical_hamiltonian(params, s),
        lambda s: classical_invariants(params, s)[name],
        state,
        h=h,
    )


def involution_matrix(params, names, state, h=1e-6):
    """Pairwise Poisson brackets among named invariants (antisymmetric part)."""
    k = len(names)
    out = np.zeros((k, k))
    funcs = [
        (lambda s, _n=n: classical_invariants(params, s)[_n]) if n != "H"
        else (lambda s: classical_hamiltonian(params, s))
        for n in names
    ]
    for a in range(k):
        for b in range(a + 1, k):
            out[a, b] = _poisson_bracket(params, funcs[a], funcs[b], state, h=h)
            out[b, a] = -out[a, b]
    return out


def _invariant_jacobian(params, names, state, h=1e-6):
    n = state.dim
    z = state.as_vector()
    rows = []
    for name in names:
        g = np.empty(2 * n)
        for k in range(2 * n):
            step = h * max(1.0, abs(z[k]))
            zp, zm = z.copy(), z.copy()
            zp[k] += step
            zm[k] -= step
            vp = classical_invariants(params, PhaseState.from_vector(zp))[name]
            vm = classical_invariants(params, PhaseState.from_vector(zm))[name]
            g[k] = (vp - vm) / (2 * step)
        rows.append(g)
    return np.array(rows)


def independence_names(dim, fixed_i=1):
    """The 2N-1 member family {H, C^(m), C_(m), I_ii} with one fixed i.

    C_(N) coincides with C^(N) and is listed once.
    """
    names = ["H"]
    names += [f"C^({m})" for m in range(2, dim + 1)]
    names += [f"C_({m})" for m in range(2, dim)]
    names.append(f"I_{fixed_i}{fixed_i}")
    return names


def independence_rank(params, state, fixed_i=1, names=None, sv_tol=1e-8):
    """Numerical rank of the invariant Jacobian at a phase-space point.

    Singular values above sv_tol times the largest count toward the rank; a
    generic state of the full family gives 2N-1.
    """
    if names is None:
        names = independence_names(state.dim, fixed_i)
    jac = _invariant_jacobian(params, names, state)
    sv = np.linalg.svd(jac, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > sv_tol * sv[0]))


def independence_rank_robust(params, rng, dim, fixed_i=1, attempts=5):
    """Rank over up to ``attempts`` random generic states; raises if every
    sampled state is rank-deficient."""
    expected = 2 * dim - 1
    rank = 0
    for _ in range(attempts):
        state = random_state(params, rng, dim)
        rank = independence_rank(params, state, fixed_i)
        if rank == expected:
            return rank
    raise RuntimeError(
        f"rank deficit across {attempts} random states (last rank {rank}, expected {expected})"
    )


def random_state(params, rng, dim, bounded=True, axis_margin=1e-3):
    """Random phase-space point from the unit ball, rejecting near-axis
    configurations so hyperspherical charts stay well conditioned."""
    threshold = continuum_threshold(params)
    for _ in range(1000):
        q = rng.uniform(-1.0, 1.0, dim)
        p = rng.uniform(-1.0, 1.0, dim)
        if np.linalg.norm(q) < 0.2 or np.linalg.norm(p) < 0.2:
            continue
        state = PhaseState(q=q, p=p)
        try:
            _, angles, _, _ = hyperspherical_transform(state)
        except ValueError:
            continue
        if any(abs(math.sin(t)) < axis_margin for t in angles[:-1]):
            continue
        if bounded and classical_hamiltonian(params, state) >= 0.9 * threshold:
            continue
        return state
    raise RuntimeError("failed to sample a generic state")


def _chart_jacobian(r, angles):
    """d q / d(r, theta) for the nested polar chart.

    q_j is r times a product of chart factors: sin(theta_k) for k < j and,
    for j < N-1, a trailing cos(theta_j).  Each derivative just swaps one
    factor, so entries are built as explicit products (no sine divisions).
    """
    n = len(angles) + 1
    sines = np.sin(angles)
    cosines = np.cos(angles)

    def unit_coord(j, swap=None):
        # q_j / r, with the theta_swap factor differentiated when requested
        val = 1.0
        for k in range(j):
            val *= cosines[k] if k == swap else sines[k]
        if j < n - 1:
            val *= -sines[j] if j == swap else cosines[j]
        return val

    jac = np.zeros((n, n))
    for j in range(n):
        jac[j, 0] = unit_coord(j)
        for a in range(min(j + 1, n - 1)):
            jac[j, a + 1] = r * unit_coord(j, swap=a)
    return jac


def hyperspherical_transform(state):
    """Cartesian (q, p) -> (r, angles, p_r, p_angles) for the nested chart

        q_j = r cos(theta_j) prod_{k<j} sin(theta_k)   (j < N),
        q_N = r prod_{k<N} sin(theta_k),

    with momenta mapped canonically via the chart Jacobian.  States too close
    to a coordinate axis (|sin theta_k| tiny for k < N-1, or r = 0) are
    rejected.
    """
    q, p = state.q, state.p
    n = q.size
    r = float(np.linalg.norm(q))
    if r <= 0:
        raise ValueError("hyperspherical chart undefined at the origin")
    angles = np.empty(n - 1)
    tail = r
    for j in range(n - 2):
        c = q[j] / tail
        c = min(1.0, max(-1.0, c))
        angles[j] = math.acos(c)
        tail = tail * math.sin(angles[j])
        if tail <= 1e-14 * r:
            raise ValueError("state too close to a coordinate axis")
    angles[n - 2] = math.atan2(q[n - 1], q[n - 2])
    jac = _chart_jacobian(r, angles)
    p_new = jac.T @ p
    return r, angles, float(p_new[0]), p_new[1:]


def inverse_hyperspherical(r, angles, p_r, p_angles):
    """Inverse of hyperspherical_transform."""
    angles = np.asarray(angles, dtype=float)
    n = angles.size + 1
    q = np.empty(n)
    for j in range(n):
        val = r
        for k in range(j):
            val *= math.sin(angles[k])
        if j < n - 1:
            val *= math.cos(angles[j])
        q[j] = val
    jac = _chart_jacobian(r, angles)
    p_new = np.concatenate([[p_r], np.asarray(p_angles, dtype=float)])
    p = np.linalg.solve(jac.T, p_new)
    return PhaseState(q=q, p=p)


def angular_momentum_squared(angles, p_angles):
    """L^2 = sum_j p_theta_j^2 prod_{k<j} 1/sin^2 theta_k."""
    total = 0.0
    weight = 1.0
    for j in range(len(p_angles)):
        total += p_angles[j] ** 2 * weight
        weight /= math.sin(angles[j]) ** 2
    return total


def radial_reduction_check(params, state, tol=1e-12):
    """Triple equality of the Hamiltonian in Cartesian, hyperspherical and
    flattened-coordinate form; returns True within tolerance."""
    from .model import classical_effective_potential

    h_cart = classical_hamiltonian(params, state)
    r, angles, p_r, p_angles = hyperspherical_transform(state)
    lsq = angular_momentum_squared(angles, p_angles)
    d = 1.0 + params.lam * r * r
    h_sph = (p_r**2 + lsq / r**2) / (2.0 * d) + params.omega**2 * r**2 / (2.0 * d)
    p_flat = p_r / math.sqrt(d)
    h_flat = 0.5 * p_flat**2 + classical_effective_potential(params, lsq, r)
    scale = max(1.0, abs(h_cart))
    return abs(h_sph - h_cart) <= tol * scale and abs(h_flat - h_cart) <= tol * scale

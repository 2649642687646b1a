"""Exact and numeric spectra: characteristic polynomials over Z, a complex
Hermitian Jacobi eigensolver, character matrices of abelian gain graphs, the
two-eigenvalue classifier, and the degree-2 minimal polynomial certificate.

The multiset spectral difference of a cover against its base is computed by
exact integer polynomial division, never by subtracting clustered numeric
spectra; the base polynomial always divides the cover polynomial, and a
nonzero remainder is reported as an internal consistency error.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (ContractViolation, DisconnectedError,
                     InternalConsistencyError, NumericError, ParameterError)
from .gains import CoverGraph, GainGraph, components, lift
from .graphs import Graph, is_connected
from .intpoly import (IntPoly, integer_roots, squarefree_decomposition,
                      squarefree_part)

DEFAULT_TOL = 1e-7

# ---------------------------------------------------------------------------
# exact characteristic polynomial


def _is_prime(n):
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n < 2:
        return False
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin for n < 3.3e24 with these witnesses
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _char_poly_mod(A, p):
    """Coefficients [c_0=1, c_1, ..., c_n] of det(xI - A) mod p (Faddeev-LeVerrier).

    Matrix products run in float64 (BLAS); p is chosen so n*p^2 < 2^53 keeps
    every dot product exact.
    """
    n = A.shape[0]
    Ap = (A % p).astype(np.float64)
    B = np.eye(n)
    coeffs = [1]
    for k in range(1, n + 1):
        AB = (Ap @ B) % p
        tr = int(round(AB.trace())) % p
        ck = (-tr * pow(k, p - 2, p)) % p
        coeffs.append(ck)
        if k < n:
            B = AB
            np.fill_diagonal(B, (B.diagonal() + ck) % p)
    return coeffs


def char_poly_int_matrix(A) -> IntPoly:
    """Exact characteristic polynomial of a square integer matrix.

    Runs Faddeev-LeVerrier modulo enough word-size primes to cover the
    coefficient bound max_i C(n,i) * rho^i (rho = max absolute row sum, an
    upper bound on every eigenvalue), then CRT-reconstructs the signed
    integers. Exact for any integer matrix, fast at desk scale.
    """
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ParameterError("matrix must be square")
    if n == 0:
        return IntPoly((1,))
    rho = max(int(np.abs(A).sum(axis=1).max()), 1)
    bound = max(math.comb(n, i) * rho**i for i in range(n + 1))
    pmax = math.isqrt((2**53 - 1) // n)
    primes, prod = [], 1
    p = pmax
    while prod <= 2 * bound:
        while not _is_prime(p):
            p -= 1
        primes.append(p)
        prod *= p
        p -= 1
    residues = [_char_poly_mod(A, p) for p in primes]
    out = []
    for i in range(n + 1):
        x = 0
        for p, res in zip(primes, residues):
            quo = prod // p
            x = (x + res[i] * quo * pow(quo % p, p - 2, p)) % prod
        if x > prod // 2:
            x -= prod
        out.append(x)
    # out[i] multiplies x^(n-i); IntPoly wants ascending order
    return IntPoly(reversed(out))


@lru_cache(maxsize=512)
def char_poly(g: Graph) -> IntPoly:
    """Exact characteristic polynomial of the 0/1 adjacency matrix."""
    return char_poly_int_matrix(g.adjacency())


def distinct_eigenvalue_count(g: Graph) -> int:
    """Number of distinct adjacency eigenvalues, via the exact square-free part."""
    if g.n == 0:
        return 0
    return squarefree_part(char_poly(g)).degree


def poly_real_roots(p: IntPoly):
    """Real root multiset of a monic integer polynomial, sorted ascending.

    The exact square-free decomposition isolates each factor with simple
    roots, so numeric rooting stays well conditioned even when the original
    polynomial has high-multiplicity roots (char polys usually do).
    """
    vals = []
    for factor, mult in squarefree_decomposition(p):
        roots = np.roots(list(reversed(factor.coeffs)))
        vals.extend(float(r.real) for r in roots for _ in range(mult))
    return np.sort(np.asarray(vals))


# ---------------------------------------------------------------------------
# numeric Hermitian eigensolver


@dataclass(frozen=True)
class Spectrum:
    """Clustered eigenvalues, sorted descending; multiplicities sum to the dimension."""

    pairs: tuple  # ((value, multiplicity), ...)

    @property
    def values(self):
        return tuple(v for v, _ in self.pairs)

    @property
    def dimension(self):
        return sum(m for _, m in self.pairs)

    def distinct(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __repr__(self):
        inner = ", ".join(f"{v:.6g}^{m}" for v, m in self.pairs)
        return f"Spectrum({inner})"


def _round_robin_rounds(n):
    """Rounds of disjoint index pairs covering every (p,q) once per sweep."""
    players = list(range(n)) + ([n] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(matrix, max_sweeps=60):
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps use the round-robin ordering so each round's disjoint complex
    Givens rotations can be applied together; the angles within a round only
    read entries that round leaves untouched, so this matches a sequential
    cyclic sweep rotation for rotation. Raises NumericError if the
    off-diagonal mass has not reached 1e-11 * max(1, ||A||_F) within
    max_sweeps sweeps.
    """
    H = np.asarray(matrix)
    is_complex = np.iscomplexobj(H) and np.abs(H.imag).max(initial=0.0) > 0.0
    if np.iscomplexobj(H) and not is_complex:
        H = H.real
    A = np.array(H, dtype=np.complex128 if is_complex else np.float64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ContractViolation("matrix must be square")
    if n == 0:
        return np.zeros(0)
    herm_err = np.abs(A - A.conj().T).max()
    if herm_err > 10 * np.finfo(float).eps * max(matrix_scale(A), 1.0):
        raise ContractViolation(f"matrix is not Hermitian (asymmetry {herm_err:.3g})")
    A = (A + A.conj().T) / 2.0
    if n == 1:
        return A.real.diagonal().copy()

    fro = np.linalg.norm(A)
    stop = 1e-11 * max(fro, 1.0)
    tiny = 1e-18 * max(fro, 1.0)
    rounds = _round_robin_rounds(n)
    old_err = np.seterr(over="ignore", invalid="ignore")
    try:
        for _ in range(max_sweeps):
            off2 = np.abs(A) ** 2
            np.fill_diagonal(off2, 0.0)
            if math.sqrt(off2.sum()) <= stop:
                return np.real(A.diagonal()).copy()
            for ps, qs in rounds:
                apq = A[ps, qs]
                aab = np.abs(apq)
                safe = np.maximum(aab, 1e-300)
                if is_complex:
                    beta = apq / safe
                else:
                    beta = np.sign(apq) + (apq == 0)
                zeta = (np.real(A[qs, qs]) - np.real(A[ps, ps])) / (2.0 * safe)
                az = np.abs(zeta)
                t = np.sign(zeta) / (az + np.sqrt(zeta * zeta + 1.0))
                t = np.where(az > 1e12, 1.0 / (2.0 * np.where(zeta == 0, 1.0, zeta)), t)
                t = np.where(zeta == 0, 1.0, t)
                t = np.where(aab > tiny, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                sb = (t * c) * beta
                sbc = np.conj(sb)
                cp = A[:, ps].copy()
                cq = A[:, qs].copy()
                A[:, ps] = c * cp - sbc * cq
                A[:, qs] = sb * cp + c * cq
                rp = A[ps, :].copy()
                rq = A[qs, :].copy()
                A[ps, :] = c[:, None] * rp - sb[:, None] * rq
                A[qs, :] = sbc[:, None] * rp + c[:, None] * rq
                A[ps, qs] = 0.0
                A[qs, ps] = 0.0
                if is_complex:
                    A[ps, ps] = np.real(A[ps, ps])
                    A[qs, qs] = np.real(A[qs, qs])
    finally:
        np.seterr(**old_err)
    raise NumericError(f"Jacobi sweeps did not converge within {max_sweeps} sweeps")


def cluster_values(values, tol, scale) -> Spectrum:
    """Greedy descending clustering: adjacent values merge when closer than tol*max(1,scale)."""
    vals = sorted((float(v) for v in values), reverse=True)
    gap = tol * max(1.0, scale)
    pairs = []
    i = 0
    while i < len(vals):
        j = i + 1
        while j < len(vals) and vals[j - 1] - vals[j] <= gap:
            j += 1
        block = vals[i:j]
        pairs.append((sum(block) / len(block), len(block)))
        i = j
    return Spectrum(tuple(pairs))


def matrix_scale(matrix):
    """Deterministic spectral-radius bound: the max absolute row sum."""
    a = np.asarray(matrix)
    if a.size == 0:
        return 0.0
    return float(np.abs(a).sum(axis=1).max())


def hermitian_spectrum(matrix, tol=DEFAULT_TOL) -> Spectrum:
    """Clustered eigenvalues of a Hermitian (or real symmetric) matrix."""
    vals = jacobi_eigenvalues(matrix)
    return cluster_values(vals, tol, matrix_scale(matrix))


# ---------------------------------------------------------------------------
# character matrices of abelian gain graphs


@dataclass(frozen=True)
class RepMatrix:
    """Hermitian character matrix: base adjacency with entries replaced by
    character values of the edge gains."""

    entries: np.ndarray
    character: tuple

    def __post_init__(self):
        self.entries.flags.writeable = False

    @property
    def n(self):
        return self.entries.shape[0]


def character_value(group, j, g):
    """Value of character j at element g: prod_p exp(2*pi*i * j_p g_p / r_p)."""
    ang = 0.0
    for jp, gp, rp in zip(j, g, group.orders):
        ang += jp * gp / rp
    return cmath.exp(2j * math.pi * ang)


def rep_matrix(f: GainGraph, j) -> RepMatrix:
    """Character matrix S_j; j = all-zeros reproduces the base adjacency.

    Entry (u, v) is the character value of the gain for walking u -> v, so the
    matrix is Hermitian and its nonzero pattern equals the base adjacency.
    """
    if not f.group.is_abelian:
        raise ParameterError("character matrices require an abelian gain group")
    if len(tuple(j)) != len(f.group.orders):
        raise ParameterError(f"character index must have {len(f.group.orders)} components")
    j = tuple(int(x) % r for x, r in zip(j, f.group.orders))
    n = f.base.n
    s = np.zeros((n, n), dtype=np.complex128)
    for (u, v), g in f.gains.items():
        val = character_value(f.group, j, g)
        s[u, v] = val
        s[v, u] = val.conjugate()
    if all(x == 0 for x in j):
        s = s.real.astype(np.complex128)
    return RepMatrix(s, j)


def all_characters(group):
    """All character index tuples of an abelian group, lexicographic."""
    out = [()]
    for r in group.orders:
        out = [e + (x,) for e in out for x in range(r)]
    return out


# ---------------------------------------------------------------------------
# two-eigenvalue classification


@dataclass(frozen=True)
class TwoEvCertificate:
    """Spectral-difference verdict for a cover against its base.

    is_two_ev is true when the multiset difference of the spectra has exactly
    two distinct values theta > tau. lambda_ = theta + tau and mu = -theta*tau
    are exact integers (the pair are the roots of a monic integer quadratic).
    Connectivity of the cover is reported separately: the definition of a
    two-eigenvalue cover does not mention it, but the structure theorems
    require it, so callers combine the two fields as needed.
    """

    is_two_ev: bool
    theta: float | None = None
    tau: float | None = None
    mult_theta: int | None = None
    mult_tau: int | None = None
    lambda_: int | None = None
    mu: int | None = None
    cover_connected: bool = False
    new_distinct: int | None = None

    def as_dict(self):
        return {
            "is_two_ev": self.is_two_ev,
            "theta": None if self.theta is None else format(self.theta, ".17g"),
            "tau": None if self.tau is None else format(self.tau, ".17g"),
            "mult_theta": self.mult_theta,
            "mult_tau": self.mult_tau,
            "lambda": self.lambda_,
            "mu": self.mu,
            "cover_connected": self.cover_connected,
            "new_distinct": self.new_distinct,
        }


def spectral_difference_poly(f: GainGraph, cover: CoverGraph | None = None) -> IntPoly:
    """Exact quotient char(cover) / char(base); the division is always exact."""
    if cover is None:
        cover = lift(f)
    p_cover = char_poly(cover.graph)
    p_base = char_poly(f.base)
    quo, rem = p_cover.divmod_monic(p_base)
    if not rem.is_zero:
        raise InternalConsistencyError(
            "base characteristic polynomial does not divide the cover's; lift is broken")
    return quo


def _quadratic_multiplicities(q: IntPoly, sf: IntPoly):
    """Multiplicities of the two roots of sf (degree 2) inside q.

    Integer roots are deflated separately; an irreducible quadratic forces
    equal multiplicities of its conjugate roots, verified by exact division.
    """
    b = sf.coeffs[1]
    c = sf.coeffs[0]
    disc = b * b - 4 * c
    if disc <= 0:
        # a quotient of a symmetric char poly has real roots; equal roots
        # cannot appear in a square-free factor
        raise InternalConsistencyError("degree-2 square-free factor without two real roots")
    roots = integer_roots(IntPoly(sf.coeffs))
    if len(roots) == 2:
        (r1, _), (r2, _) = sorted(roots.items(), reverse=True)
        m1 = _deflation_count(q, r1)
        m2 = _deflation_count(q, r2)
        if m1 + m2 != q.degree:
            raise InternalConsistencyError("quotient has roots outside its square-free part")
        return float(r1), float(r2), m1, m2
    # irreducible over Q: conjugate roots carry equal multiplicity, so the
    # quotient must be an exact power of the quadratic
    m, rem = divmod(q.degree, 2)
    if rem != 0 or sf.pow(m) != q:
        raise InternalConsistencyError("square-free part of degree 2 but quotient "
                                       "is not a power of it")
    sq = math.sqrt(disc)
    theta = (-b + sq) / 2.0
    tau = (-b - sq) / 2.0
    return theta, tau, m, m


def _deflation_count(q: IntPoly, root):
    count = 0
    lin = IntPoly((-root, 1))
    while q.degree > 0:
        quo, rem = q.divmod_monic(lin)
        if not rem.is_zero:
            break
        q = quo
        count += 1
    return count


def classify_two_ev(f: GainGraph, cover: CoverGraph | None = None) -> TwoEvCertificate:
    """Classify whether the lift of f is a two-eigenvalue cover of its base.

    Exact route: divide the cover's characteristic polynomial by the base's,
    take the square-free part of the quotient via integer gcd, and read off
    whether exactly two distinct new eigenvalues remain. Multiplicities come
    from exact deflation, so no numeric tolerance enters the verdict.
    """
    if not is_connected(f.base):
        raise DisconnectedError("two-eigenvalue classification requires a connected base")
    if cover is None:
        cover = lift(f)
    quo = spectral_difference_poly(f, cover)
    sf = squarefree_part(quo)
    connected = len(components(cover)) == 1
    if sf.degree != 2:
        return TwoEvCertificate(is_two_ev=False, cover_connected=connected,
                                new_distinct=sf.degree)
    theta, tau, m1, m2 = _quadratic_multiplicities(quo, sf)
    return TwoEvCertificate(
        is_two_ev=True,
        theta=theta,
        tau=tau,
        mult_theta=m1,
        mult_tau=m2,
        lambda_=-sf.coeffs[1],
        mu=-sf.coeffs[0],
        cover_connected=connected,
        new_distinct=2,
    )


# ---------------------------------------------------------------------------
# degree-2 minimal polynomial certificate


def minpoly_certificate(s: RepMatrix | np.ndarray, tol=DEFAULT_TOL, regular_valency=None):
    """(lambda, mu) if the matrix has exactly two distinct eigenvalues, else None.

    Verifies S^2 = lambda*S + mu*I entrywise to 1e-8 * max(1, ||S||^2). When
    the base valency k is supplied, additionally checks mu == k and that the
    diagonal is zero (a loopless base forces both).
    """
    entries = s.entries if isinstance(s, RepMatrix) else np.asarray(s, dtype=np.complex128)
    spec = hermitian_spectrum(entries, tol)
    if spec.distinct() != 2:
        return None
    theta, tau = spec.values
    lam = theta + tau
    mu = -theta * tau
    scale = max(1.0, matrix_scale(entries) ** 2)
    resid = entries @ entries - lam * entries - mu * np.eye(entries.shape[0])
    if np.abs(resid).max() > 1e-8 * scale:
        return None
    if regular_valency is not None:
        if abs(mu - regular_valency) > 1e-8 * scale:
            return None
        if np.abs(entries.diagonal()).max() > 1e-12 * scale:
            return None
    return lam, mu


# ---------------------------------------------------------------------------
# block decomposition check (the module's master test)


def character_block_check(f: GainGraph, tol=DEFAULT_TOL, cover: CoverGraph | None = None):
    """Max deviation between the lift spectrum and the union of character spectra.

    For abelian gains the cover adjacency is similar to the block diagonal of
    the character matrices, so the sorted concatenation of their eigenvalues
    must match the sorted eigenvalues of the lift within clustering tolerance.
    Returns (ok, max_abs_deviation).
    """
    if not f.group.is_abelian:
        raise ParameterError("block decomposition requires an abelian gain group")
    if cover is None:
        cover = lift(f)
    union = []
    for j in all_characters(f.group):
        union.extend(jacobi_eigenvalues(rep_matrix(f, j).entries))
    union = np.sort(np.asarray(union))
    cover_vals = np.sort(jacobi_eigenvalues(cover.graph.adjacency(dtype=np.float64)))
    dev = float(np.abs(union - cover_vals).max()) if union.size else 0.0
    return dev <= tol * max(1.0, matrix_scale(cover.graph.adjacency())), dev

"""Hermitian matrix pencils: exact determinant polynomials, numeric support
function via the smallest eigenvalue, numerical-range sampling, and
spectrahedron membership.

Exact paths run over Gaussian rationals; floating paths use a cyclic Jacobi
eigensolver on the real-symmetric embedding of the Hermitian matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import GaussianRational, ParseError, parse_gaussian
from .mpoly import MultiPoly, grevlex_order

__all__ = [
    "HermitianMatrix",
    "HermitianPencil",
    "EigenResult",
    "EigenError",
    "pencil_det",
    "det_along_line",
    "eigen_hermitian",
    "support_function",
    "sample_numrange_boundary",
    "spectrahedron_contains",
    "dual_boundary_point",
    "parse_pencil_text",
    "format_pencil_text",
]

EIGEN_TOL = 1e-12
GEOM_TOL = 1e-9
MAX_SWEEPS = 100


class EigenError(RuntimeError):
    """Jacobi iteration failed to converge or the input is not Hermitian."""


class HermitianMatrix:
    """Square matrix over Gaussian rationals equal to its conjugate transpose."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = [tuple(GaussianRational.from_value(v) for v in row) for row in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for j in range(n):
            if rows[j][j].im:
                raise ValueError(f"diagonal entry ({j},{j}) must be real")
            for k in range(j + 1, n):
                if rows[j][k] != rows[k][j].conjugate():
                    raise ValueError(f"entries ({j},{k}) and ({k},{j}) not conjugate")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    @classmethod
    def zeros(cls, n):
        z = GaussianRational(0)
        return cls([[z] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls(
            [[GaussianRational(1 if j == k else 0) for k in range(n)] for j in range(n)]
        )

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j][k]

    def __eq__(self, other):
        return isinstance(other, HermitianMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def add(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def scale(self, c) -> "HermitianMatrix":
        c = Fraction(c)
        return HermitianMatrix([[v * c for v in row] for row in self.entries])

    def shift(self, c) -> "HermitianMatrix":
        """self + c * identity for rational c."""
        c = Fraction(c)
        return HermitianMatrix(
            [
                [v + c if j == k else v for k, v in enumerate(row)]
                for j, row in enumerate(self.entries)
            ]
        )

    def trace(self) -> Fraction:
        return sum((self.entries[j][j].re for j in range(self.n)), Fraction(0))

    def to_complex_array(self) -> np.ndarray:
        return np.array(
            [[v.to_complex() for v in row] for row in self.entries], dtype=complex
        )

    def is_positive_definite(self) -> bool:
        """Exact Sylvester criterion: all leading principal minors positive."""
        for k in range(1, self.n + 1):
            minor = _gaussian_det(
                [row[:k] for row in self.entries[:k]]
            )
            if minor.im:
                raise ValueError("hermitian minor came out complex")
            if minor.re <= 0:
                return False
        return True

    def __repr__(self):
        return f"HermitianMatrix(n={self.n})"


def _gaussian_det(rows) -> GaussianRational:
    """Cofactor determinant of a small matrix of Gaussian rationals."""
    n = len(rows)
    if n == 0:
        return GaussianRational(1)
    if n == 1:
        return rows[0][0]
    det = GaussianRational(0)
    for k in range(n):
        if rows[0][k].is_zero:
            continue
        sub = [r[:k] + r[k + 1 :] for r in rows[1:]]
        term = rows[0][k] * _gaussian_det(sub)
        det = det + term if k % 2 == 0 else det - term
    return det


class HermitianPencil:
    """Pair (K, L) of same-size Hermitian matrices.

    Defines the numerical range of K + iL, its boundary support function, the
    determinant curve det(x0 + x1 K + x2 L) = 0 and the spectrahedron
    {1 + x1 K + x2 L >= 0}.
    """

    __slots__ = ("K", "L", "_float_cache")

    def __init__(self, K: HermitianMatrix, L: HermitianMatrix):
        if K.n != L.n:
            raise ValueError("K and L must have the same size")
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "_float_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("HermitianPencil is immutable")

    @property
    def n(self) -> int:
        return self.K.n

    @classmethod
    def from_matrix(cls, entries) -> "HermitianPencil":
        """Split a complex square matrix A into A = K + iL exactly."""
        rows = [[GaussianRational.from_value(v) for v in row] for row in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        half = Fraction(1, 2)
        K = [
            [(rows[j][k] + rows[k][j].conjugate()) * half for k in range(n)]
            for j in range(n)
        ]
        minus_half_i = GaussianRational(0, Fraction(-1, 2))
        L = [
            [(rows[j][k] - rows[k][j].conjugate()) * minus_half_i for k in range(n)]
            for j in range(n)
        ]
        return cls(HermitianMatrix(K), HermitianMatrix(L))

    def centroid(self) -> tuple[Fraction, Fraction]:
        """(tr K / n, tr L / n); always a point of the numerical range."""
        return self.K.trace() / self.n, self.L.trace() / self.n

    def translated(self, c1, c2) -> "HermitianPencil":
        """Pencil of (K - c1, L - c2); shifts the numerical range by (-c1, -c2)."""
        return HermitianPencil(self.K.shift(-Fraction(c1)), self.L.shift(-Fraction(c2)))

    def _floats(self):
        cache = self._float_cache
        if "K" not in cache:
            cache["K"] = self.K.to_complex_array()
            cache["L"] = self.L.to_complex_array()
        return cache["K"], cache["L"]

    def combine_float(self, x1: float, x2: float) -> np.ndarray:
        Kf, Lf = self._floats()
        return x1 * Kf + x2 * Lf

    def combine_exact(self, x1, x2, shift=0) -> HermitianMatrix:
        """shift * identity + x1 K + x2 L over exact rationals."""
        return self.K.scale(Fraction(x1)).add(self.L.scale(Fraction(x2))).shift(
            Fraction(shift)
        )

    def __repr__(self):
        return f"HermitianPencil(n={self.n})"


# --- exact determinant curve -------------------------------------------------
#
# Entries of x0*1 + x1*K + x2*L are linear trivariate polynomials with
# Gaussian-rational coefficients; the determinant is expanded by cofactors in
# a small dict-based polynomial ring, then checked to be real.


def _gp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            prev = out.get(exp)
            val = ca * cb if prev is None else prev + ca * cb
            if val.is_zero:
                out.pop(exp, None)
            else:
                out[exp] = val
    return out


def _gp_addsub(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        val = out.get(e, GaussianRational(0)) + (c if sign > 0 else -c)
        if val.is_zero:
            out.pop(e, None)
        else:
            out[e] = val
    return out


def _gp_det(rows: list[list[dict]]) -> dict:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    det: dict = {}
    for k in range(n):
        if not rows[0][k]:
            continue
        sub = [r[:k] + r[k + 1 :] for r in rows[1:]]
        term = _gp_mul(rows[0][k], _gp_det(sub))
        det = _gp_addsub(det, term, 1 if k % 2 == 0 else -1)
    return det


def pencil_det(P: HermitianPencil, variables=("x0", "x1", "x2")) -> MultiPoly:
    """Exact determinant polynomial det(x0*1 + x1*K + x2*L).

    Homogeneous of degree n with real rational coefficients; a nonzero
    imaginary part in any coefficient signals a broken Hermitian invariant
    and raises ValueError.
    """
    n = P.n
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            entry: dict = {}
            if j == k:
                entry[(1, 0, 0)] = GaussianRational(1)
            kv = P.K[j, k]
            if not kv.is_zero:
                entry[(0, 1, 0)] = kv
            lv = P.L[j, k]
            if not lv.is_zero:
                entry[(0, 0, 1)] = lv
            row.append(entry)
        rows.append(row)
    det = _gp_det(rows)
    terms = {}
    for exp, c in det.items():
        if c.im:
            raise ValueError(f"determinant coefficient at {exp} is not real: {c}")
        terms[exp] = c.re
    p = MultiPoly(variables, terms, grevlex_order(3))
    if not p.is_zero and p.homogeneous_degree() != n:
        raise ValueError("pencil determinant is not homogeneous of degree n")
    return p


def det_along_line(A: HermitianMatrix, B: HermitianMatrix):
    """Exact coefficients (ascending) of det(A + t B) as a polynomial in t."""
    if A.n != B.n:
        raise ValueError("size mismatch")
    n = A.n
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            entry = {}
            av = A[j, k]
            if not av.is_zero:
                entry[(0, 0, 0)] = av
            bv = B[j, k]
            if not bv.is_zero:
                entry[(0, 1, 0)] = bv
            row.append(entry)
        rows.append(row)
    det = _gp_det(rows)
    if not det:
        return (Fraction(0),)
    top = max(e[1] for e in det)
    out = [Fraction(0)] * (top + 1)
    for exp, c in det.items():
        if c.im:
            raise ValueError("determinant along line is not real")
        out[exp[1]] = c.re
    return tuple(out)


# --- floating eigensolver ----------------------------------------------------


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenvalues, orthonormal eigenvectors, and the residual
    max_k ||M v_k - lambda_k v_k||."""

    eigenvalues: tuple
    eigenvectors: tuple  # tuple of complex tuples, one per eigenvalue
    residual: float


def _jacobi_real_symmetric(S: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi rotations on a real symmetric matrix.

    Returns (eigenvalues, V) with columns of V the eigenvectors; rotations run
    until the off-diagonal Frobenius mass drops below tol * scale.
    """
    A = S.copy()
    n = A.shape[0]
    V = np.eye(n)
    scale = max(np.linalg.norm(A), 1.0)

    def offdiag_norm():
        # summed directly over off-diagonal entries; the difference of squared
        # norms cancels catastrophically once A is nearly diagonal
        total = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    total += A[p, q] * A[p, q]
        return math.sqrt(total)

    for _ in range(max_sweeps):
        if offdiag_norm() <= tol * scale:
            return np.diag(A).copy(), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = 0.5 * math.atan2(2.0 * apq, A[q, q] - A[p, p])
                c = math.cos(theta)
                s = math.sin(theta)
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    if offdiag_norm() > tol * scale:
        raise EigenError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return np.diag(A).copy(), V


def eigen_hermitian(
    M, tol: float = EIGEN_TOL, max_sweeps: int = MAX_SWEEPS
) -> EigenResult:
    """Full spectrum of a complex Hermitian matrix.

    Embeds M = X + iY into the real symmetric [[X, -Y], [Y, X]], runs cyclic
    Jacobi, and collapses the duplicated eigenpairs; eigenvectors come back
    orthonormal over the complex inner product.
    """
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    if M.shape != (n, n):
        raise EigenError("matrix must be square")
    herm_defect = np.abs(M - M.conj().T).max() if n else 0.0
    scale = max(np.abs(M).max() if n else 0.0, 1.0)
    if herm_defect > 1e-10 * scale:
        raise EigenError(f"matrix is not Hermitian (defect {herm_defect:.3e})")
    M = (M + M.conj().T) / 2.0
    X = M.real
    Y = M.imag
    S = np.block([[X, -Y], [Y, X]])
    vals, V = _jacobi_real_symmetric(S, tol, max_sweeps)
    idx = np.argsort(vals, kind="stable")
    vals = vals[idx]
    V = V[:, idx]
    # each eigenvalue of M appears twice; take every second embedding vector
    # and re-orthonormalize within clusters over C
    eigvals = []
    eigvecs = []
    for i in range(0, 2 * n, 2):
        lam = 0.5 * (vals[i] + vals[i + 1])
        eigvals.append(lam)
    pool = [V[:n, i] + 1j * V[n:, i] for i in range(2 * n)]
    chosen: list[np.ndarray] = []
    for i, lam in enumerate(eigvals):
        best = None
        for cand in pool[2 * i : 2 * i + 2]:
            w = cand.copy()
            for other_lam, other_vec in zip(eigvals[:i], chosen):
                if abs(other_lam - lam) < 1e-8 * scale + 1e-12:
                    w = w - np.vdot(other_vec, w) * other_vec
            nw = np.linalg.norm(w)
            if best is None or nw > best[0]:
                best = (nw, w)
        nw, w = best
        if nw < 1e-6:
            # degenerate cluster ate both candidates; draw from the full pool
            for cand in pool:
                w = cand.copy()
                for other_lam, other_vec in zip(eigvals[:i], chosen):
                    if abs(other_lam - lam) < 1e-8 * scale + 1e-12:
                        w = w - np.vdot(other_vec, w) * other_vec
                nw = np.linalg.norm(w)
                if nw > 1e-6:
                    break
            else:
                raise EigenError("could not extract an orthonormal eigenbasis")
        chosen.append(w / nw)
    residual = 0.0
    for lam, v in zip(eigvals, chosen):
        residual = max(residual, float(np.linalg.norm(M @ v - lam * v)))
    return EigenResult(
        eigenvalues=tuple(float(v) for v in eigvals),
        eigenvectors=tuple(tuple(complex(c) for c in v) for v in chosen),
        residual=residual,
    )


def support_function(P: HermitianPencil, x, tol: float = EIGEN_TOL) -> float:
    """Signed distance of the origin to the supporting line with inner normal x:
    the smallest eigenvalue of x1 K + x2 L."""
    x1, x2 = float(x[0]), float(x[1])
    if x1 == 0.0 and x2 == 0.0:
        raise ValueError("zero direction")
    vals, _ = _jacobi_real_symmetric(
        _embed(P.combine_float(x1, x2)), tol, MAX_SWEEPS
    )
    return float(np.sort(vals)[0])


def _embed(M: np.ndarray) -> np.ndarray:
    X = M.real
    Y = M.imag
    return np.block([[X, -Y], [Y, X]])


def sample_numrange_boundary(P: HermitianPencil, m: int, tol: float = EIGEN_TOL):
    """Supporting-line contact points of the numerical range.

    For each direction theta_j = 2 pi j / m returns (theta_j, (y1, y2), h)
    where h is the support value and y the quadratic-form image of a smallest
    eigenvector.
    """
    if m < 3:
        raise ValueError("need at least 3 directions")
    Kf, Lf = P._floats()
    out = []
    for j in range(m):
        theta = 2.0 * math.pi * j / m
        x1, x2 = math.cos(theta), math.sin(theta)
        res = eigen_hermitian(x1 * Kf + x2 * Lf, tol=tol)
        eta = np.array(res.eigenvectors[0])
        y1 = float(np.real(np.vdot(eta, Kf @ eta)))
        y2 = float(np.real(np.vdot(eta, Lf @ eta)))
        out.append((theta, (y1, y2), res.eigenvalues[0]))
    return out


def spectrahedron_contains(
    P: HermitianPencil, pt, strict: bool = False, tol: float = GEOM_TOL
) -> bool:
    """Membership in S = {x : 1 + x1 K + x2 L positive semidefinite}."""
    x1, x2 = float(pt[0]), float(pt[1])
    if x1 == 0.0 and x2 == 0.0:
        return True
    lam = 1.0 + support_function(P, (x1, x2))
    return lam > tol if strict else lam >= -tol


def dual_boundary_point(P: HermitianPencil, x, tol: float = GEOM_TOL):
    """Boundary point -(x1, x2)/h(x) of the dual convex set.

    Requires h(x) < 0, i.e. the origin interior to the numerical range;
    otherwise raises ValueError("origin not interior").
    """
    h = support_function(P, x)
    if h >= -tol:
        raise ValueError("origin not interior")
    return (-float(x[0]) / h, -float(x[1]) / h)


# --- text format ---------------------------------------------------------------
#
# Structured text, one matrix row per line:
#
#   n 3
#   K
#   0 -1 0
#   -1 0 1
#   0 1 0
#   L
#   -1/4 -1/2 1
#   -1/2 -1/4 -1/2
#   1 -1/2 -1/4
#
# Alternatively a single complex matrix from which K and L derive exactly:
#
#   n 2
#   A
#   1+2*i 3
#   3 -i


def parse_pencil_text(text: str) -> HermitianPencil:
    lines = text.splitlines()
    n = None
    sections: dict[str, list] = {}
    current: str | None = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("n"):
            rest = line[1:].replace("=", " ").strip()
            if rest.isdigit() and n is None:
                n = int(rest)
                continue
        if low in ("k", "l", "a"):
            current = low
            sections[current] = []
            continue
        if current is None:
            raise ParseError(
                f"unexpected content {line!r} before a matrix section", line=lineno
            )
        row = []
        for col, tok in enumerate(line.split(), start=1):
            try:
                row.append(parse_gaussian(tok))
            except ParseError as exc:
                raise ParseError(
                    f"bad matrix entry {tok!r}: {exc}", line=lineno, column=col
                ) from None
        sections[current].append((lineno, row))
    if n is None:
        raise ParseError("missing size line 'n <int>'")

    def build(name) -> list:
        rows = sections[name]
        if len(rows) != n:
            raise ParseError(
                f"matrix {name.upper()} has {len(rows)} rows, expected {n}",
                line=rows[-1][0] if rows else None,
            )
        out = []
        for lineno, row in rows:
            if len(row) != n:
                raise ParseError(
                    f"row has {len(row)} entries, expected {n}", line=lineno
                )
            out.append(row)
        return out

    if "a" in sections:
        if "k" in sections or "l" in sections:
            raise ParseError("give either A or the pair K, L, not both")
        return HermitianPencil.from_matrix(build("a"))
    if "k" not in sections or "l" not in sections:
        raise ParseError("need sections K and L (or a single matrix A)")
    try:
        return HermitianPencil(HermitianMatrix(build("k")), HermitianMatrix(build("l")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_pencil_text(P: HermitianPencil) -> str:
    lines = [f"n {P.n}"]
    for name, M in (("K", P.K), ("L", P.L)):
        lines.append(name)
        for row in M.entries:
            lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"

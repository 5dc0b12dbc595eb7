"""The complex twisted group algebra: regular representation, c-regular
classes, center, and the Wedderburn block degrees.

Unit-modulus cocycle values make every regular matrix unitary and the
algebra star-closed, so all spectral work happens on Hermitian matrices.
Algebras are immutable; ``wedderburn`` is a pure function of (A, seed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohomology import Cocycle
from .errors import CrossCheckMismatch, DegreeNotIntegral, NumericDegeneracy
from .groups import FiniteGroup, conjugacy_classes

TOL_COCYCLE = 1e-12
TOL_CLASS_SUM = 1e-9
TOL_EIG_GAP = 1e-8
TOL_RANK = 1e-8
TOL_INT = 1e-6
WEDDERBURN_RETRIES = 5


class TwistedAlgebra:
    """C^c G on the basis {g sigma} with g sigma * h sigma = a(g,h) gh sigma."""

    def __init__(self, group: FiniteGroup, table: np.ndarray,
                 cocycle: Cocycle | None = None, check: bool = True):
        self.group = group
        tab = np.ascontiguousarray(np.asarray(table, dtype=np.complex128))
        if tab.shape != (group.order, group.order):
            raise ValueError("cocycle table shape mismatch")
        self.table = tab
        self.cocycle = cocycle  # exact integer backing when available
        self._cache: dict = {}
        if check:
            self._validate()
        self.table.setflags(write=False)

    @classmethod
    def from_cocycle(cls, c: Cocycle) -> "TwistedAlgebra":
        return cls(c.group, c.unit_table(), cocycle=c, check=False)

    def _validate(self) -> None:
        n = self.group.order
        if np.max(np.abs(np.abs(self.table) - 1.0)) > 1e-9:
            raise ValueError("cocycle values must have unit modulus")
        if np.max(np.abs(self.table[0] - 1.0)) > 1e-9 or \
                np.max(np.abs(self.table[:, 0] - 1.0)) > 1e-9:
            raise ValueError("cocycle is not normalized")
        mul = self.group.mul
        lhs = self.table[:, :, None] * self.table[mul, :]
        rhs = self.table[None, :, :] * self.table[:, mul]
        if np.max(np.abs(lhs - rhs)) > TOL_COCYCLE * n:
            raise ValueError("multiplicative cocycle identity fails")

    @property
    def order(self) -> int:
        return self.group.order

    def left_regular(self, g: int) -> np.ndarray:
        """Matrix of left multiplication by g sigma on the basis."""
        n = self.group.order
        L = np.zeros((n, n), dtype=np.complex128)
        h = np.arange(n)
        L[self.group.mul[g, h], h] = self.table[g, h]
        return L

    def right_regular(self, g: int) -> np.ndarray:
        n = self.group.order
        R = np.zeros((n, n), dtype=np.complex128)
        h = np.arange(n)
        R[self.group.mul[h, g], h] = self.table[h, g]
        return R

    def action_matrix(self, v: np.ndarray) -> np.ndarray:
        """Left multiplication by the algebra element with coefficients v."""
        n = self.group.order
        M = np.zeros((n, n), dtype=np.complex128)
        for g in np.nonzero(np.abs(v) > 0)[0]:
            M[self.group.mul[g], np.arange(n)] += v[g] * self.table[g]
        return M

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Product of two coefficient vectors."""
        n = self.group.order
        out = np.zeros(n, dtype=np.complex128)
        for g in np.nonzero(np.abs(u) > 0)[0]:
            np.add.at(out, self.group.mul[g], u[g] * self.table[g] * v)
        return out

    def star(self, v: np.ndarray) -> np.ndarray:
        """(g sigma)* = conj(a(g, g^-1)) g^-1 sigma, extended antilinearly."""
        n = self.group.order
        inv = self.group.inv
        out = np.zeros(n, dtype=np.complex128)
        g = np.arange(n)
        out[inv] = np.conj(v * self.table[g, inv])
        return out

    def identity_vector(self) -> np.ndarray:
        e = np.zeros(self.group.order, dtype=np.complex128)
        e[0] = 1.0
        return e

    def __repr__(self) -> str:
        return f"TwistedAlgebra({self.group.name})"


def alpha_tilde(A: TwistedAlgebra, x: int, g: int) -> complex:
    """The conjugation twist a(x,g) * a(g, x^g)^-1."""
    xg = A.group.conj(x, g)
    return A.table[x, g] * np.conj(A.table[g, xg])


def _alpha_tilde_row(A: TwistedAlgebra, x: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectors (x^g, twist(x, g)) over all g."""
    G = A.group
    n = G.order
    g = np.arange(n)
    xg = G.mul[G.mul[G.inv, x][g], g]
    tw = A.table[x, g] * np.conj(A.table[g, xg])
    return xg, tw


@dataclass(frozen=True)
class RegularClassRecord:
    representative: int
    c_regular: bool
    class_sum: np.ndarray


@dataclass(frozen=True)
class RegularClassData:
    records: list[RegularClassRecord]

    @property
    def flags(self) -> list[bool]:
        return [r.c_regular for r in self.records]

    @property
    def regular_count(self) -> int:
        return sum(r.c_regular for r in self.records)

    def regular_representatives(self) -> list[int]:
        return [r.representative for r in self.records if r.c_regular]


def c_regular_classes(A: TwistedAlgebra, tol: float = TOL_CLASS_SUM) -> RegularClassData:
    """Flag each class by its averaged twisted class sum being nonzero.

    Cross-checked against the centralizer criterion (twist 1 on all of
    C_G(x)); disagreement means the algebra data is inconsistent.
    """
    key = ("c_regular", tol)
    if key in A._cache:
        return A._cache[key]
    G = A.group
    records = []
    for cls in conjugacy_classes(G):
        x = cls.representative
        xg, tw = _alpha_tilde_row(A, x)
        vec = np.zeros(G.order, dtype=np.complex128)
        np.add.at(vec, xg, tw)
        vec /= cls.centralizer_order
        nonzero = bool(np.max(np.abs(vec)) > tol)
        cent = np.nonzero(G.mul[:, x] == G.mul[x, :])[0]
        by_centralizer = bool(np.max(np.abs(tw[cent] - 1.0)) < 1e-6)
        if nonzero != by_centralizer:
            raise CrossCheckMismatch(
                f"class-sum and centralizer criteria disagree at x={x}")
        records.append(RegularClassRecord(representative=x, c_regular=nonzero,
                                          class_sum=vec))
    data = RegularClassData(records=records)
    if not data.records[0].c_regular:
        raise CrossCheckMismatch("identity class must be c-regular")
    A._cache[key] = data
    return data


def center_basis(A: TwistedAlgebra) -> list[np.ndarray]:
    """The nonzero twisted class sums; dimension verified independently."""
    if "center" in A._cache:
        return A._cache["center"]
    data = c_regular_classes(A)
    vecs = [r.class_sum for r in data.records if r.c_regular]
    dim = _center_dimension(A)
    if dim != len(vecs):
        raise CrossCheckMismatch(
            f"center dimension {dim} != {len(vecs)} regular class sums")
    A._cache["center"] = vecs
    return vecs


def _center_dimension(A: TwistedAlgebra) -> int:
    """dim of {z : z commutes with every generator's regular action}."""
    G = A.group
    gens = G.gen_set()
    if not gens:
        return G.order
    stacks = [A.left_regular(g) - A.right_regular(g) for g in gens]
    M = np.concatenate(stacks, axis=0)
    s = np.linalg.svd(M, compute_uv=False)
    scale = max(1.0, float(s[0])) if s.size else 1.0
    return int(np.sum(s < TOL_RANK * scale)) + G.order - len(s)


@dataclass(frozen=True)
class WedderburnData:
    idempotents: list[np.ndarray]
    degrees: list[int]
    residual: float
    seed: int

    @property
    def block_count(self) -> int:
        return len(self.degrees)


def wedderburn(A: TwistedAlgebra, seed: int = 0) -> WedderburnData:
    """Central primitive idempotents and block degrees of C^c G.

    A random Hermitian central element is diagonalized on the regular
    module; eigenvalue clusters give the spectral projectors, and each
    degree is sqrt(rank).  Retries with fresh seeds on degeneracy, raises
    DegreeNotIntegral if a rank fails integer certification.
    """
    key = ("wedderburn", seed)
    if key in A._cache:
        return A._cache[key]
    n = A.group.order
    center = center_basis(A)
    dim = len(center)
    last_error = None
    for attempt in range(WEDDERBURN_RETRIES):
        rng = np.random.default_rng(seed + 7919 * attempt)
        coeff = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        z = np.zeros(n, dtype=np.complex128)
        for c, vec in zip(coeff, center):
            z += c * vec
        z = z + A.star(z)
        Z = A.action_matrix(z)
        herm_defect = np.max(np.abs(Z - Z.conj().T))
        if herm_defect > 1e-8:
            raise CrossCheckMismatch("regular action of z + z* is not Hermitian")
        evals, evecs = np.linalg.eigh(Z)
        spread = max(evals[-1] - evals[0], 1.0)
        clusters = _cluster(evals, TOL_EIG_GAP * spread)
        if len(clusters) != dim:
            last_error = NumericDegeneracy(
                f"{len(clusters)} eigenvalue clusters for center of dim {dim}")
            continue
        idempotents = []
        degrees = []
        for idx in clusters:
            rank = len(idx)
            d = np.sqrt(rank)
            if abs(d - round(d)) > TOL_INT:
                raise DegreeNotIntegral(
                    f"block rank {rank} is not a perfect square")
            degrees.append(int(round(d)))
            P = evecs[:, idx] @ evecs[:, idx].conj().T
            idempotents.append(P[:, 0].copy())  # e = P applied to 1 sigma
        if sum(d * d for d in degrees) != n:
            raise DegreeNotIntegral("degree formula failed after rounding")
        residual = _idempotent_residual(A, idempotents)
        if residual > 1e-8:
            last_error = NumericDegeneracy(
                f"idempotent defect {residual:.2e}")
            continue
        data = WedderburnData(idempotents=idempotents,
                              degrees=sorted(degrees),
                              residual=float(residual), seed=seed)
        A._cache[key] = data
        return data
    raise last_error or NumericDegeneracy("wedderburn failed")


def _cluster(evals: np.ndarray, gap: float) -> list[list[int]]:
    clusters = [[0]]
    for i in range(1, evals.size):
        if evals[i] - evals[i - 1] < gap:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def _idempotent_residual(A: TwistedAlgebra, idempotents: list[np.ndarray]) -> float:
    worst = 0.0
    total = np.zeros(A.group.order, dtype=np.complex128)
    for e in idempotents:
        ee = A.multiply(e, e)
        worst = max(worst, float(np.max(np.abs(ee - e))))
        total += e
    worst = max(worst, float(np.max(np.abs(total - A.identity_vector()))))
    return worst

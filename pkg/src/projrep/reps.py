"""Explicit projective representations and the Clifford toolkit.

Representations are unitary matrices per group element over a unit-modulus
cocycle table.  Isomorphism always means intertwiner dimension one;
similarity classes are never compared by matrix equality.  All values are
immutable and safe to share; randomized splits are pure in (input, seed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CocycleMismatch,
    CrossCheckMismatch,
    FactorizationFailure,
    InertiaMismatch,
    NotNormal,
    NumericDegeneracy,
    PhaseInstability,
)
from .groups import FiniteGroup, Quotient, Subgroup, conjugacy_classes, quotient_group
from .twisted import RegularClassData, TwistedAlgebra, c_regular_classes, wedderburn

TOL_REP = 1e-8
TOL_RANK = 1e-8
TOL_CHECK = 1e-6
SPLIT_RETRIES = 5


class ProjRep:
    """A unitary projective representation: phi(x) phi(y) = a(x,y) phi(xy)."""

    def __init__(self, group: FiniteGroup, table: np.ndarray, matrices: np.ndarray,
                 check: bool = True):
        self.group = group
        self.table = np.ascontiguousarray(np.asarray(table, dtype=np.complex128))
        self.matrices = np.ascontiguousarray(np.asarray(matrices,
                                                        dtype=np.complex128))
        if self.matrices.shape[0] != group.order:
            raise ValueError("one matrix per group element required")
        self.degree = int(self.matrices.shape[1])
        if check:
            self._validate()
        self.table.setflags(write=False)
        self.matrices.setflags(write=False)

    def _validate(self) -> None:
        d = self.degree
        eye = np.eye(d)
        if np.max(np.abs(self.matrices[0] - eye)) > TOL_REP:
            raise ValueError("phi(1) is not the identity")
        for g in range(self.group.order):
            M = self.matrices[g]
            if np.max(np.abs(M @ M.conj().T - eye)) > TOL_REP:
                raise ValueError(f"phi({g}) is not unitary")
        # phi(g) phi(y) = a(g,y) phi(gy) on generators suffices: the relation
        # propagates to products of generators through the cocycle identity
        if self.defect() > TOL_REP:
            raise ValueError("matrices violate the cocycle relation")

    def defect(self, full: bool = False) -> float:
        """Max residual of phi(x) phi(y) - a(x,y) phi(xy)."""
        G = self.group
        xs = range(G.order) if full else (G.gen_set() or [0])
        worst = 0.0
        for x in xs:
            prod = self.matrices[x] @ self.matrices
            target = self.table[x][:, None, None] * self.matrices[G.mul[x]]
            worst = max(worst, float(np.max(np.abs(prod - target))))
        return worst

    def matrix(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def __repr__(self) -> str:
        return f"ProjRep({self.group.name}, degree={self.degree})"


def _nullspace(M: np.ndarray, tol: float = TOL_RANK) -> list[np.ndarray]:
    """Orthonormal basis of the right null space."""
    if M.shape[0] == 0:
        return [v for v in np.eye(M.shape[1], dtype=np.complex128)]
    _, s, vh = np.linalg.svd(M)
    scale = max(1.0, float(s[0]) if s.size else 1.0)
    rank = int(np.sum(s > tol * scale))
    return [vh[i].conj() for i in range(rank, M.shape[1])]


def intertwiner_space(r1: ProjRep, r2: ProjRep,
                      tol: float = TOL_CHECK) -> tuple[int, list[np.ndarray]]:
    """Solutions of X r1(g) = r2(g) X; orthonormal under Frobenius."""
    if r1.group.order != r2.group.order or \
            not np.array_equal(r1.group.mul, r2.group.mul):
        raise CocycleMismatch("representations live on different groups")
    if np.max(np.abs(r1.table - r2.table)) > tol:
        raise CocycleMismatch("cocycles differ beyond tolerance")
    d1, d2 = r1.degree, r2.degree
    gens = r1.group.gen_set()
    if not gens:
        basis = [v.reshape(d2, d1) for v in np.eye(d1 * d2, dtype=np.complex128)]
        return d1 * d2, basis
    blocks = []
    eye1 = np.eye(d1)
    eye2 = np.eye(d2)
    for g in gens:
        blocks.append(np.kron(eye2, r1.matrices[g].T)
                      - np.kron(r2.matrices[g], eye1))
    null = _nullspace(np.concatenate(blocks, axis=0))
    return len(null), [v.reshape(d2, d1) for v in null]


def is_irreducible(r: ProjRep) -> bool:
    """Commutant dimension one."""
    dim, _ = intertwiner_space(r, r)
    return dim == 1


def restrict_rep(r: ProjRep, H: Subgroup) -> ProjRep:
    """Same matrices on H, cocycle restricted; lives on H.as_group()."""
    if H.parent is not r.group:
        raise ValueError("subgroup of a different group")
    el = H.elements
    return ProjRep(H.as_group(), r.table[np.ix_(el, el)], r.matrices[el],
                   check=False)


def tensor_reps(r1: ProjRep, r2: ProjRep) -> ProjRep:
    """Kronecker product; the cocycles multiply pointwise."""
    if r1.group is not r2.group and \
            not np.array_equal(r1.group.mul, r2.group.mul):
        raise CocycleMismatch("tensor factors live on different groups")
    mats = np.stack([np.kron(r1.matrices[g], r2.matrices[g])
                     for g in range(r1.group.order)])
    return ProjRep(r1.group, r1.table * r2.table, mats, check=False)


def character(r: ProjRep, regular: RegularClassData | None = None) -> np.ndarray:
    """Traces at class representatives; zero off the c-regular classes."""
    classes = conjugacy_classes(r.group)
    chi = np.array([np.trace(r.matrices[c.representative]) for c in classes])
    if regular is None:
        regular = c_regular_classes(TwistedAlgebra(r.group, r.table, check=False))
    for value, rec in zip(chi, regular.records):
        if not rec.c_regular and abs(value) > TOL_CHECK * max(1, r.degree):
            raise CrossCheckMismatch(
                "character does not vanish on a non-regular class")
    return chi


def _character_key(r: ProjRep) -> tuple:
    classes = conjugacy_classes(r.group)
    chi = [np.trace(r.matrices[c.representative]) for c in classes]
    return tuple((round(v.real, 6) + 0.0, round(v.imag, 6) + 0.0) for v in chi)


def split_regular(A: TwistedAlgebra, seed: int = 0) -> list[ProjRep]:
    """One irreducible per Wedderburn block, split off the regular module.

    Inside the image of a central idempotent the commutant of the left
    action is the right multiplications, so an eigenspace of a generic
    Hermitian right multiplication is a single irreducible copy.
    """
    w = wedderburn(A, seed=seed)
    out = []
    for e_vec in w.idempotents:
        E = A.action_matrix(e_vec)
        evals, evecs = np.linalg.eigh((E + E.conj().T) / 2)
        V = evecs[:, evals > 0.5]
        expected = int(round(np.sqrt(V.shape[1])))
        if expected * expected != V.shape[1]:
            raise NumericDegeneracy("idempotent image has unexpected rank")
        out.append(_split_block(A, V, expected, seed))
    out.sort(key=lambda r: (r.degree, _character_key(r)))
    return out


def _right_action_matrix(A: TwistedAlgebra, v: np.ndarray) -> np.ndarray:
    n = A.group.order
    M = np.zeros((n, n), dtype=np.complex128)
    h = np.arange(n)
    for g in np.nonzero(np.abs(v) > 0)[0]:
        M[A.group.mul[h, g], h] += v[g] * A.table[h, g]
    return M


def _split_block(A: TwistedAlgebra, V: np.ndarray, degree: int,
                 seed: int) -> ProjRep:
    n = A.group.order
    last = None
    for attempt in range(SPLIT_RETRIES):
        rng = np.random.default_rng(seed + 104729 * attempt + degree)
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        b = z + A.star(z)
        C = V.conj().T @ _right_action_matrix(A, b) @ V
        evals, evecs = np.linalg.eigh((C + C.conj().T) / 2)
        # pick the lowest eigenvalue cluster; it must have dim = degree
        gap = TOL_RANK * max(1.0, float(evals[-1] - evals[0]))
        k = 1
        while k < evals.size and evals[k] - evals[k - 1] < gap:
            k += 1
        if k != degree:
            last = NumericDegeneracy(f"eigenspace of dim {k}, expected {degree}")
            continue
        W, _ = np.linalg.qr(V @ evecs[:, :degree])
        mats = np.empty((n, degree, degree), dtype=np.complex128)
        for g in range(n):
            LgW = np.zeros((n, degree), dtype=np.complex128)
            h = np.arange(n)
            LgW[A.group.mul[g, h]] = A.table[g, h][:, None] * W[h]
            mats[g] = W.conj().T @ LgW
        try:
            rep = ProjRep(A.group, A.table, mats)
        except ValueError as exc:
            last = NumericDegeneracy(str(exc))
            continue
        if not is_irreducible(rep):
            last = NumericDegeneracy("split block is reducible")
            continue
        return rep
    raise last or NumericDegeneracy("block split failed")


@dataclass(frozen=True)
class Constituent:
    rep: ProjRep
    multiplicity: int
    projector: np.ndarray


def decompose(r: ProjRep, seed: int = 0) -> list[Constituent]:
    """Isotypic decomposition via eigenspaces of a generic commutant element.

    Constituents are pairwise non-isomorphic and sorted by (degree,
    character); multiplicities satisfy sum(mult * deg) = deg(r).
    """
    dim, basis = intertwiner_space(r, r)
    if dim == 1:
        return [Constituent(rep=r, multiplicity=1,
                            projector=np.eye(r.degree, dtype=np.complex128))]
    d = r.degree
    last = None
    for attempt in range(SPLIT_RETRIES):
        rng = np.random.default_rng(seed + 7127 * attempt + d)
        H = np.zeros((d, d), dtype=np.complex128)
        for X in basis:
            c = rng.standard_normal() + 1j * rng.standard_normal()
            H += c * X
        H = H + H.conj().T
        evals, evecs = np.linalg.eigh(H)
        gap = 1e-7 * max(1.0, float(evals[-1] - evals[0]))
        pieces = []
        start = 0
        for i in range(1, d + 1):
            if i == d or evals[i] - evals[i - 1] > gap:
                pieces.append(evecs[:, start:i])
                start = i
        try:
            subreps = []
            for W in pieces:
                mats = np.einsum("ak,gab,bl->gkl", W.conj(), r.matrices, W)
                sub = ProjRep(r.group, r.table, mats)
                if not is_irreducible(sub):
                    raise NumericDegeneracy("eigenspace is not irreducible")
                subreps.append((sub, W))
        except (ValueError, NumericDegeneracy) as exc:
            last = exc if isinstance(exc, NumericDegeneracy) \
                else NumericDegeneracy(str(exc))
            continue
        groups: list[list[int]] = []
        for i, (sub, _) in enumerate(subreps):
            placed = False
            for grp in groups:
                if intertwiner_space(subreps[grp[0]][0], sub)[0] == 1:
                    grp.append(i)
                    placed = True
                    break
            if not placed:
                groups.append([i])
        out = []
        for grp in groups:
            proj = np.zeros((d, d), dtype=np.complex128)
            for i in grp:
                W = subreps[i][1]
                proj += W @ W.conj().T
            out.append(Constituent(rep=subreps[grp[0]][0],
                                   multiplicity=len(grp), projector=proj))
        if sum(c.multiplicity * c.rep.degree for c in out) != d:
            last = NumericDegeneracy("isotypic dimensions do not add up")
            continue
        out.sort(key=lambda c: (c.rep.degree, _character_key(c.rep)))
        return out
    raise last or NumericDegeneracy("decompose failed")


def conjugate_rep(r: ProjRep, N: Subgroup, g: int, A: TwistedAlgebra) -> ProjRep:
    """x -> twist(x, g) phi(x^g): the conjugate over the same cocycle."""
    G = A.group
    if N.parent is not G:
        raise ValueError("subgroup of a different group")
    el = N.elements
    pos = N.positions()
    mats = np.empty_like(r.matrices)
    for i, x in enumerate(el):
        xg = G.conj(int(x), g)
        if pos[xg] < 0:
            raise NotNormal("conjugation leaves the subgroup")
        tw = A.table[x, g] * np.conj(A.table[g, xg])
        mats[i] = tw * r.matrices[pos[xg]]
    return ProjRep(r.group, r.table, mats, check=False)


def is_inertial(r: ProjRep, N: Subgroup, g: int, A: TwistedAlgebra) -> bool:
    dim, _ = intertwiner_space(r, conjugate_rep(r, N, g, A))
    return dim == 1


def transport_rep(r: ProjRep, H: Subgroup, g: int,
                  A: TwistedAlgebra) -> tuple[ProjRep, Subgroup]:
    """Move a representation of H to one of H^g = g^-1 H g.

    y -> twist(x, g) phi(x) for x = y^(g^-1); the result lives over the
    restricted cocycle of the conjugate subgroup.
    """
    G = A.group
    target = sorted(G.conj(int(x), g) for x in H.elements)
    Ht = Subgroup(G, target)
    posH = H.positions()
    d = r.degree
    mats = np.empty((Ht.order, d, d), dtype=np.complex128)
    for j, y in enumerate(Ht.elements):
        x = G.conj(int(y), int(G.inv[g]))
        tw = A.table[x, g] * np.conj(A.table[g, y])
        mats[j] = tw * r.matrices[posH[x]]
    el = Ht.elements
    return ProjRep(Ht.as_group(), A.table[np.ix_(el, el)], mats), Ht


def inertia_group(r: ProjRep, N: Subgroup, A: TwistedAlgebra) -> Subgroup:
    """All g whose twisted conjugate of r is isomorphic to r.

    Membership is constant on cosets of N, so one test per coset suffices.
    """
    G = A.group
    quot = quotient_group(G, N)
    members = []
    for t in quot.section:
        if is_inertial(r, N, int(t), A):
            members.extend(G.mul[int(t), N.elements].tolist())
    J = Subgroup(G, members)  # closure is checked by the constructor
    return J


@dataclass(frozen=True)
class CliffordExtension:
    """An extension of an inertia-invariant irreducible to its inertia group.

    ``extension`` lives on J.as_group() with the numerically read cocycle
    ``beta``; ``delta`` = restricted cocycle / beta is coset-constant with
    trivial rows and columns on N, and ``b_table`` is its quotient read-out.
    """

    base: ProjRep
    inertia: Subgroup
    n_in_j: Subgroup
    extension: ProjRep
    beta: np.ndarray
    delta: np.ndarray
    quotient: Quotient
    b_table: np.ndarray


def clifford_extend(r: ProjRep, N: Subgroup, J: Subgroup,
                    A: TwistedAlgebra) -> CliffordExtension:
    """Extend the invariant irreducible r of N to its inertia group J.

    Y(n t) = conj(a(n,t)) phi(n) T_t with T_t a phase-fixed unitary
    intertwiner from r to its t^-1-conjugate; this choice makes the
    obstruction delta exactly trivial on N in both arguments.
    """
    G = A.group
    Jg = J.as_group()
    jtab = A.table[np.ix_(J.elements, J.elements)]
    A_J = TwistedAlgebra(Jg, jtab, check=False)
    n_in_j = Subgroup(Jg, J.positions()[N.elements])
    if not np.array_equal(n_in_j.as_group().mul, r.group.mul):
        raise ValueError("restricted subgroup does not match the rep's group")
    quot = quotient_group(Jg, n_in_j)
    d = r.degree
    transversal = [int(t) for t in quot.section]
    T: dict[int, np.ndarray] = {0: np.eye(d, dtype=np.complex128)}
    for t in transversal[1:]:
        conj = conjugate_rep(r, n_in_j, int(Jg.inv[t]), A_J)
        dim, basis = intertwiner_space(r, conj)
        if dim != 1:
            raise InertiaMismatch(f"no intertwiner at coset rep {t}")
        X = basis[0]
        lam = float(np.real(np.trace(X.conj().T @ X))) / d
        U = X / np.sqrt(lam)
        if np.max(np.abs(U @ U.conj().T - np.eye(d))) > 1e-7:
            raise PhaseInstability("intertwiner is not proportional to unitary")
        tr = np.trace(U)
        if abs(tr) > 1e-8 * d:
            U = U * (np.conj(tr) / abs(tr))
        else:
            flat = U.reshape(-1)
            idx = int(np.argmax(np.abs(flat) > 1e-6))
            e = flat[idx]
            U = U * (np.conj(e) / abs(e))
        T[t] = U
    npos = n_in_j.positions()
    mats = np.empty((Jg.order, d, d), dtype=np.complex128)
    for j in range(Jg.order):
        t = transversal[int(quot.projection[j])]
        nn = int(Jg.mul[j, Jg.inv[t]])
        mats[j] = np.conj(jtab[nn, t]) * (r.matrices[npos[nn]] @ T[t])
    # read beta from Y(g) Y(h) = beta Y(gh)
    nj = Jg.order
    beta = np.empty((nj, nj), dtype=np.complex128)
    for g in range(nj):
        prod = mats[g] @ mats
        targets = mats[Jg.mul[g]]
        scal = np.einsum("gab,gab->g", prod, targets.conj()) / d
        resid = np.max(np.abs(prod - scal[:, None, None] * targets))
        if resid > TOL_CHECK * d:
            raise PhaseInstability(f"product at {g} is not a scalar multiple")
        beta[g] = scal / np.abs(scal)
    Y = ProjRep(Jg, beta, mats, check=False)
    if Y.defect() > TOL_CHECK:
        raise PhaseInstability("extension violates its own cocycle")
    delta = jtab * np.conj(beta)
    nmask = n_in_j.elements
    if np.max(np.abs(delta[nmask, :] - 1)) > TOL_CHECK or \
            np.max(np.abs(delta[:, nmask] - 1)) > TOL_CHECK:
        raise PhaseInstability("obstruction is not trivial on the base subgroup")
    b_table = delta[np.ix_(quot.section, quot.section)]
    spread = np.abs(delta - b_table[np.ix_(quot.projection, quot.projection)])
    if np.max(spread) > TOL_CHECK:
        raise PhaseInstability("obstruction is not constant on cosets")
    return CliffordExtension(base=r, inertia=J, n_in_j=n_in_j, extension=Y,
                             beta=beta, delta=delta, quotient=quot,
                             b_table=b_table)


def inflate_rep_on(G: FiniteGroup, W: ProjRep, quot: Quotient) -> ProjRep:
    """Pull a representation of G/N back to G through the projection."""
    proj = quot.projection
    return ProjRep(G, W.table[np.ix_(proj, proj)], W.matrices[proj], check=False)


def factor_over_extension(X: ProjRep, ext: CliffordExtension,
                          seed: int = 0) -> ProjRep:
    """The quotient factor W with X = Y (x) inf W, via the N-hom space.

    The inertia group acts on Hom_N(res Y, res X) by w -> X(g) w Y(g)^-1;
    this action is exactly trivial on N and its cocycle is the obstruction
    delta, so it reads out as a projective representation of J/N.
    """
    Y = ext.extension
    Jg = Y.group
    if X.group.order != Jg.order or not np.array_equal(X.group.mul, Jg.mul):
        raise CocycleMismatch("X does not live on the inertia group")
    # the W-action cocycle is X's cocycle divided by beta; it must be an
    # exact inflation (trivial on N both ways, constant on cosets)
    delta = X.table * np.conj(ext.beta)
    nmask = ext.n_in_j.elements
    if np.max(np.abs(delta[nmask, :] - 1)) > TOL_CHECK or \
            np.max(np.abs(delta[:, nmask] - 1)) > TOL_CHECK:
        raise CocycleMismatch("X's cocycle does not match the base on N")
    quot = ext.quotient
    b_table = delta[np.ix_(quot.section, quot.section)]
    if np.max(np.abs(delta - b_table[np.ix_(quot.projection,
                                            quot.projection)])) > TOL_CHECK:
        raise CocycleMismatch("obstruction of X is not constant on cosets")
    V = ext.base
    d_x, d_v = X.degree, V.degree
    npos = ext.n_in_j.elements
    gens_local = [int(npos[g]) for g in V.group.gen_set()]
    blocks = []
    for gl, gstd in zip(gens_local, V.group.gen_set()):
        blocks.append(np.kron(X.matrices[gl], np.eye(d_v))
                      - np.kron(np.eye(d_x), V.matrices[gstd].T))
    hom = _nullspace(np.concatenate(blocks, axis=0)) if blocks else \
        [v for v in np.eye(d_x * d_v, dtype=np.complex128)]
    mult = len(hom)
    if mult == 0:
        raise FactorizationFailure("base constituent absent from restriction")
    ws = [h.reshape(d_x, d_v) for h in hom]
    nq = quot.group.order
    Wm = np.empty((nq, mult, mult), dtype=np.complex128)
    for c in range(nq):
        g = int(quot.section[c])
        imgs = [X.matrices[g] @ w @ Y.matrices[g].conj().T for w in ws]
        for i in range(mult):
            for j in range(mult):
                Wm[c, i, j] = np.sum(np.conj(ws[i]) * imgs[j])
    W = ProjRep(quot.group, b_table, Wm)
    # certify the factorization: X is isomorphic to Y tensor (inflated W)
    W_J = inflate_rep_on(Jg, W, quot)
    dim, _ = intertwiner_space(tensor_reps(Y, W_J), X, tol=10 * TOL_CHECK)
    if dim != 1:
        raise FactorizationFailure("tensor reconstruction is not isomorphic")
    return W


def induce_rep(r: ProjRep, H: Subgroup, A: TwistedAlgebra) -> ProjRep:
    """Block-monomial induced representation over a minimal left transversal."""
    G = A.group
    if H.parent is not G:
        raise ValueError("subgroup of a different group")
    n = G.order
    coset_of = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        coset_of[G.mul[g, H.elements]] = len(reps)
        reps.append(g)
    k = len(reps)
    d = r.degree
    pos = H.positions()
    mats = np.zeros((n, k * d, k * d), dtype=np.complex128)
    for g in range(n):
        for j, tj in enumerate(reps):
            gt = int(G.mul[g, tj])
            i = int(coset_of[gt])
            h = int(G.mul[G.inv[reps[i]], gt])
            scal = A.table[g, tj] * np.conj(A.table[reps[i], h])
            mats[g, i * d:(i + 1) * d, j * d:(j + 1) * d] = \
                scal * r.matrices[pos[h]]
    return ProjRep(G, A.table, mats)

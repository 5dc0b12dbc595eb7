"""Second cohomology with complex-unit coefficients on small groups.

Cocycles are stored additively: an integer table t with modulus m encodes the
complex cocycle exp(2*pi*i*t/m).  The multiplier of G is assembled prime by
prime: for each p with p^2 | |G| the classes of exponent p^j are computed as

    ker(cocycle identity mod q) / (coboundaries mod q + character carries)

with q = p^floor(v_p(|G|)/2), which bounds the exponent of the p-part.  The
carry tables account for coboundaries of complex cochains whose values are
not q-th roots of unity; without them the quotient Z^2(mu_q)/B^2(mu_q)
overcounts (already for C2).  Everything here is immutable after
construction; the solver context is read-only and safe to share.
"""

from __future__ import annotations

import hashlib
from math import gcd

import numpy as np

from .errors import (
    GroupTooLargeForH2,
    ModulusMismatch,
    NotCentral,
    NotCyclic,
)
from .groups import (
    FiniteGroup,
    Quotient,
    Subgroup,
    centralizer_of_set,
    commutator_subgroup,
    factorize,
    quotient_group,
)

DEFAULT_H2_CAP = 48


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# -- linear algebra mod prime powers ---------------------------------------


def _rref_mod_p(M: np.ndarray, p: int):
    """Reduced row echelon form over GF(p).  Returns (R, pivots).

    Forward elimination keeps rows below unreduced (entries stay well inside
    int64 since every update adds less than p^2); reductions happen only on
    pivot rows and on the columns being inspected.
    """
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        colv = M[r:, c] % p
        nz = np.nonzero(colv)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] %= p
        piv = int(M[r, c])
        if piv != 1:
            M[r] = (M[r] * pow(piv, p - 2, p)) % p
        f = M[r + 1:, c] % p
        touch = np.nonzero(f)[0]
        if touch.size:
            M[r + 1 + touch] -= np.outer(f[touch], M[r])
        pivots.append((r, c))
        r += 1
    for i in range(len(pivots) - 1, 0, -1):
        ri, ci = pivots[i]
        M[ri] %= p
        f = M[:ri, ci] % p
        touch = np.nonzero(f)[0]
        if touch.size:
            M[touch] -= np.outer(f[touch], M[ri])
    if pivots:
        M[:len(pivots)] %= p
    return M, pivots


def kernel_mod_prime_power(M: np.ndarray, p: int, k: int) -> list[np.ndarray]:
    """Generators of {v : M v = 0 mod p^k} as a subgroup of (Z/p^k)^cols.

    Recursion on k: v = K x + p y with (x, y) in the kernel of [MK/p | M]
    mod p^(k-1), where K spans the kernel mod p.
    """
    q = p**k
    M = np.asarray(M, dtype=np.int64) % q
    R, pivots = _rref_mod_p(M, p)
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(M.shape[1]) if c not in pivot_cols]
    basis = []
    for f in free:
        v = np.zeros(M.shape[1], dtype=np.int64)
        v[f] = 1
        for r, c in pivots:
            v[c] = (-int(R[r, f])) % p
        basis.append(v)
    if k == 1 or not basis:
        return basis
    K = np.stack(basis, axis=1)
    MK = M @ K
    assert np.all(MK % p == 0)
    Mrec = np.concatenate([MK // p, M], axis=1) % (p ** (k - 1))
    kappa = K.shape[1]
    out = []
    for w in kernel_mod_prime_power(Mrec, p, k - 1):
        out.append((K @ w[:kappa] + p * w[kappa:]) % q)
    return out


def solve_mod_prime_power(M: np.ndarray, t: np.ndarray, p: int, k: int):
    """One solution of M u = t mod p^k, or None if inconsistent."""
    q = p**k
    M = np.asarray(M, dtype=np.int64) % q
    t = np.asarray(t, dtype=np.int64) % q
    aug = np.concatenate([M, t[:, None]], axis=1)
    R, pivots = _rref_mod_p(aug, p)
    last = M.shape[1]
    if any(c == last for _, c in pivots):
        return None
    u1 = np.zeros(last, dtype=np.int64)
    for r, c in pivots:
        u1[c] = R[r, last]
    if k == 1:
        return u1
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(last) if c not in pivot_cols]
    basis = []
    for f in free:
        v = np.zeros(last, dtype=np.int64)
        v[f] = 1
        for r, c in pivots:
            v[c] = (-int(R[r, f])) % p
        basis.append(v)
    resid = t - M @ u1
    assert np.all(resid % p == 0)
    t1 = resid // p
    if basis:
        K = np.stack(basis, axis=1)
        Mrec = np.concatenate([(M @ K) // p, M], axis=1)
        sub = solve_mod_prime_power(Mrec, t1, p, k - 1)
        if sub is None:
            return None
        kappa = K.shape[1]
        u = u1 + K @ sub[:kappa] + p * sub[kappa:]
    else:
        sub = solve_mod_prime_power(M, t1, p, k - 1)
        if sub is None:
            return None
        u = u1 + p * sub
    return u % q


def smith_mod_prime_power(P: np.ndarray, p: int, k: int, rows: int):
    """Smith form of a Z/p^k module presentation (columns are relations).

    coker = (Z/q)^rows / colspan(P).  Pivoting on minimal p-valuation keeps
    every entry reduced mod q, so there is no coefficient growth.  Returns
    (invariants, uinv) with one invariant per row coordinate, ascending, and
    uinv's column i the generator of the i-th cyclic factor in the original
    coordinates (mod q).
    """
    q = p**k
    A = np.asarray(P, dtype=np.int64) % q
    assert A.ndim == 2 and A.shape[0] == rows
    cols = A.shape[1]
    uinv = np.eye(rows, dtype=np.int64)
    if A.size == 0:
        return [q] * rows, uinv
    s = 0
    vals: list[int] = []
    while s < min(rows, cols):
        # minimal-valuation entry of the trailing block
        block = A[s:, s:]
        piv = None
        for v in range(k):
            nz = np.nonzero(block % (p ** (v + 1)))
            if nz[0].size:
                piv = (v, s + int(nz[0][0]), s + int(nz[1][0]))
                break
        if piv is None:
            break
        v, bi, bj = piv
        if bi != s:
            A[[s, bi]] = A[[bi, s]]
            uinv[:, [s, bi]] = uinv[:, [bi, s]]
        if bj != s:
            A[:, [s, bj]] = A[:, [bj, s]]
        unit = int(A[s, s]) // p**v
        uinv_unit = pow(unit, -1, q)
        A[s] = (A[s] * uinv_unit) % q
        uinv[:, s] = (uinv[:, s] * unit) % q  # U^-1 picks up the inverse op
        pv = p**v
        for i in range(rows):
            if i == s or A[i, s] == 0:
                continue
            f = int(A[i, s]) // pv
            A[i] = (A[i] - f * A[s]) % q
            uinv[:, s] = (uinv[:, s] + f * uinv[:, i]) % q
        for j in range(s + 1, cols):
            if A[s, j]:
                A[:, j] = (A[:, j] - (int(A[s, j]) // pv) * A[:, s]) % q
        vals.append(v)
        s += 1
    invariants = [p**v for v in vals] + [q] * (rows - s)
    return invariants, uinv


# -- cochains and cocycles --------------------------------------------------


class Cocycle:
    """A normalized 2-cocycle with values in the m-th roots of unity.

    The table holds exponents: the complex value at (x, y) is
    exp(2*pi*i*table[x, y]/modulus).
    """

    def __init__(self, group: FiniteGroup, modulus: int, table, check: bool = True):
        self.group = group
        self.modulus = int(modulus)
        tab = np.ascontiguousarray(np.asarray(table, dtype=np.int64)) % self.modulus \
            if self.modulus > 1 else np.zeros((group.order, group.order), dtype=np.int64)
        if tab.shape != (group.order, group.order):
            raise ModulusMismatch("table shape does not match group order")
        self.table = tab
        self.table.setflags(write=False)
        if check:
            if np.any(self.table[0]) or np.any(self.table[:, 0]):
                raise ModulusMismatch("cocycle is not normalized")
            if not self.is_cocycle():
                raise ModulusMismatch("table violates the cocycle identity")

    def is_cocycle(self) -> bool:
        """Exact check of a(x,y)+a(xy,z) = a(y,z)+a(x,yz) mod m on all triples."""
        t, mul, m = self.table, self.group.mul, self.modulus
        lhs = t[:, :, None] + t[mul, :]
        rhs = t[None, :, :] + t[:, mul]
        return bool(np.all((lhs - rhs) % m == 0))

    def unit_table(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.table / self.modulus)

    def power(self, k: int) -> "Cocycle":
        return Cocycle(self.group, self.modulus, (k * self.table) % self.modulus,
                       check=False)

    def with_modulus(self, m: int) -> "Cocycle":
        if m % self.modulus:
            raise ModulusMismatch(f"{self.modulus} does not divide {m}")
        return Cocycle(self.group, m, self.table * (m // self.modulus), check=False)

    def mul(self, other: "Cocycle") -> "Cocycle":
        if other.group is not self.group:
            raise ModulusMismatch("cocycles live on different groups")
        m = _lcm(self.modulus, other.modulus)
        t = self.table * (m // self.modulus) + other.table * (m // other.modulus)
        return Cocycle(self.group, m, t % m, check=False)

    def restrict(self, H: Subgroup) -> "Cocycle":
        if H.parent is not self.group:
            raise ModulusMismatch("subgroup of a different group")
        el = H.elements
        return Cocycle(H.as_group(), self.modulus,
                       self.table[np.ix_(el, el)], check=False)

    def is_identity_table(self) -> bool:
        return not np.any(self.table)

    def hash_hex(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.modulus).encode())
        h.update(self.table.tobytes())
        return h.hexdigest()[:16]

    def __repr__(self) -> str:
        return f"Cocycle({self.group.name}, mod {self.modulus})"


def trivial_cocycle(G: FiniteGroup, modulus: int | None = None) -> Cocycle:
    m = modulus if modulus is not None else max(G.order, 1)
    return Cocycle(G, m, np.zeros((G.order, G.order), dtype=np.int64), check=False)


class Cochain1:
    """A normalized 1-cochain (value 0 at the identity)."""

    def __init__(self, group: FiniteGroup, modulus: int, values):
        self.group = group
        self.modulus = int(modulus)
        vals = np.asarray(values, dtype=np.int64) % self.modulus
        if vals.shape != (group.order,) or vals[0] != 0:
            raise ModulusMismatch("bad 1-cochain")
        self.values = vals

    def coboundary(self) -> Cocycle:
        """delta z (x, y) = z(x) + z(y) - z(xy)."""
        v, mul, m = self.values, self.group.mul, self.modulus
        tab = (v[:, None] + v[None, :] - v[mul]) % m
        return Cocycle(self.group, m, tab, check=False)


def is_cocycle(a: Cocycle) -> bool:
    return a.is_cocycle()


# -- the multiplier ----------------------------------------------------------


def _flat(table: np.ndarray) -> np.ndarray:
    """Nonidentity block of a table, flattened."""
    return np.ascontiguousarray(table[1:, 1:]).reshape(-1)


def _unflat(v: np.ndarray, n: int) -> np.ndarray:
    tab = np.zeros((n, n), dtype=np.int64)
    tab[1:, 1:] = v.reshape(n - 1, n - 1)
    return tab


def _cocycle_constraints(G: FiniteGroup) -> np.ndarray:
    """Identity constraints with the third slot running over generators.

    Rows F(x, y, g) = a(x,y) + a(xy,g) - a(y,g) - a(x,yg) for all nonidentity
    x, y and generators g suffice: F of a longer word z*g is an integer
    combination of F(., ., z) and F(., ., g) rows (the 2-coboundary of F
    vanishes identically), and BFS generation reaches every element.
    """
    n = G.order
    gens = G.gen_set()
    m = n - 1
    N = m * m
    rows = len(gens) * N
    M = np.zeros((rows, N), dtype=np.int16)
    X, Y = np.meshgrid(np.arange(1, n), np.arange(1, n), indexing="ij")
    xf, yf = X.reshape(-1), Y.reshape(-1)
    ridx = np.arange(N)
    for bi, g in enumerate(gens):
        base = bi * N
        np.add.at(M, (base + ridx, ridx), 1)                       # a(x, y)
        xy = G.mul[xf, yf]
        ok = xy != 0
        np.add.at(M, (base + ridx[ok], (xy[ok] - 1) * m + (g - 1)), 1)   # a(xy, g)
        np.add.at(M, (base + ridx, (yf - 1) * m + (g - 1)), -1)          # a(y, g)
        yg = G.mul[yf, g]
        ok = yg != 0
        np.add.at(M, (base + ridx[ok], (xf[ok] - 1) * m + (yg[ok] - 1)), -1)  # a(x, yg)
    return M


def _coboundary_columns(G: FiniteGroup) -> np.ndarray:
    """delta of the unit 1-cochains, one flattened column per nonidentity g."""
    if "delta_cols" in G._cache:
        return G._cache["delta_cols"]
    n = G.order
    if n == 1:
        return np.zeros((0, 0), dtype=np.int64)
    cols = []
    for g in range(1, n):
        tab = np.zeros((n, n), dtype=np.int64)
        tab[g, :] += 1
        tab[:, g] += 1
        tab[G.mul == g] -= 1
        cols.append(_flat(tab))
    out = np.stack(cols, axis=1)
    out.setflags(write=False)
    G._cache["delta_cols"] = out
    return out


def _character_carries(G: FiniteGroup) -> list[tuple[int, np.ndarray]]:
    """Carry tables of a primary generating set of Hom(G, Q/Z).

    For a character with values r_g / q the q-th root cochain has coboundary
    exp(2*pi*i*carry/q') for any modulus q'; the integer carry table
    (r_x + r_y - r_xy)/q takes values in {0, 1}.
    """
    if "carries" in G._cache:
        return G._cache["carries"]
    out: list[tuple[int, np.ndarray]] = []
    der = commutator_subgroup(G)
    if der.order < G.order:
        quot = quotient_group(G, der)
        A, proj = quot.group, quot.projection
        na = A.order
        exp_a = A.exponent()
        pairs_x, pairs_y = np.meshgrid(np.arange(1, na), np.arange(1, na),
                                       indexing="ij")
        px, py = pairs_x.reshape(-1), pairs_y.reshape(-1)
        pxy = A.mul[px, py]
        rows = px.size
        for ell, j in factorize(exp_a).items():
            q = ell**j
            M = np.zeros((rows, na - 1), dtype=np.int64)
            r = np.arange(rows)
            np.add.at(M, (r, px - 1), 1)
            np.add.at(M, (r, py - 1), 1)
            ok = pxy != 0
            np.add.at(M, (r[ok], pxy[ok] - 1), -1)
            for gen in kernel_mod_prime_power(M, ell, j):
                if not np.any(gen):
                    continue
                values = np.concatenate([[0], gen])
                vg = values[proj]
                carry = (vg[:, None] + vg[None, :] - values[proj[G.mul]]) // q
                out.append((ell, _flat(carry)))
    G._cache["carries"] = out
    return out


class SchurMultiplier:
    """H^2(G, C*) with invariant factors, basis coclasses, and a solver.

    ``invariants`` lists cyclic orders d_1 | d_2 | ...; ``basis[i]`` is a
    representative cocycle of order d_i stored mod |G|.
    """

    def __init__(self, group: FiniteGroup, invariants: list[int],
                 basis: list[Cocycle],
                 prime_tables: dict[int, tuple[int, list]], assumed: bool = False):
        self.group = group
        self.invariants = list(invariants)
        self.basis = list(basis)
        self.modulus = max(group.order, 1)
        # per prime p: (q_p, list over basis slots of flat tables mod q_p or None)
        self._prime_tables = prime_tables
        self.assumed_complete = assumed

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariants:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return self.invariants[-1] if self.invariants else 1

    def coclass(self, vector) -> "Coclass":
        vec = tuple(int(v) % d for v, d in zip(vector, self.invariants))
        if len(vec) != len(self.invariants):
            raise ValueError("exponent vector has wrong length")
        n = self.group.order
        acc = np.zeros((n, n), dtype=np.int64)
        for e, c in zip(vec, self.basis):
            acc += e * c.table * (self.modulus // c.modulus)
        rep = Cocycle(self.group, self.modulus, acc % self.modulus, check=False)
        return Coclass(self, vec, rep)

    def trivial_coclass(self) -> "Coclass":
        return self.coclass([0] * len(self.invariants))

    def coclasses(self) -> list["Coclass"]:
        """All coclasses in lexicographic exponent-vector order."""
        out = []
        vec = [0] * len(self.invariants)
        total = self.order
        for k in range(total):
            rem, v = k, []
            for d in reversed(self.invariants):
                v.append(rem % d)
                rem //= d
            out.append(self.coclass(tuple(reversed(v))))
        return out

    def resolve(self, table: np.ndarray, modulus: int) -> tuple[int, ...]:
        """Exponent vector of a valid cocycle table over the basis.

        Solves  table = sum_i e_i basis_i + coboundary + carries  one prime
        at a time and combines the exponents by CRT.
        """
        G = self.group
        n = G.order
        if table.shape != (n, n):
            raise ModulusMismatch("table shape mismatch")
        M_all = _lcm(modulus, self.modulus)
        t_flat = _flat(np.asarray(table, dtype=np.int64)) * (M_all // modulus)
        delta = _coboundary_columns(G)
        carries = _character_carries(G)
        k_basis = len(self.invariants)
        crt: list[tuple[int, int]] = [(1, 0)] * k_basis
        for p, e in factorize(M_all).items():
            q = p**e
            cols = []
            for i in range(k_basis):
                qp, tabs = self._prime_tables.get(p, (1, [None] * k_basis))
                tab = tabs[i] if tabs else None
                if tab is None:
                    cols.append(np.zeros(t_flat.size, dtype=np.int64))
                else:
                    cols.append(tab * (q // qp))
            cols.append(delta)
            for ell, carry in carries:
                if ell == p:
                    cols.append(carry[:, None])
            A = np.concatenate([c if c.ndim == 2 else c[:, None] for c in cols],
                               axis=1)
            sol = solve_mod_prime_power(A, t_flat, p, e)
            if sol is None:
                raise ModulusMismatch(
                    f"table is not a {G.name} cocycle class over the basis")
            for i in range(k_basis):
                dp = p ** min(e, _valuation(self.invariants[i], p))
                if dp > 1:
                    crt[i] = _crt(crt[i], (dp, int(sol[i]) % dp))
        return tuple(crt[i][1] % self.invariants[i] for i in range(k_basis))

    def is_trivial_class(self, table: np.ndarray, modulus: int) -> bool:
        return not any(self.resolve(table, modulus))

    def __repr__(self) -> str:
        return f"SchurMultiplier({self.group.name}, invariants={self.invariants})"


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _crt(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Combine congruences (mod_a, val_a), (mod_b, val_b) with coprime moduli."""
    ma, va = a
    mb, vb = b
    m = ma * mb
    x = va * mb * pow(mb, -1, ma) + vb * ma * pow(ma, -1, mb) if ma > 1 else vb
    return (m, x % m)


def schur_multiplier(G: FiniteGroup, cap: int = DEFAULT_H2_CAP) -> SchurMultiplier:
    """The Schur multiplier of G with solver context, for |G| <= cap."""
    if G.order > cap:
        raise GroupTooLargeForH2(f"|{G.name}| = {G.order} exceeds cap {cap}")
    if "schur" in G._cache:
        return G._cache["schur"]
    n = G.order
    parts: dict[int, list[tuple[int, np.ndarray]]] = {}
    if n > 1:
        constraints = _cocycle_constraints(G)
        delta = _coboundary_columns(G)
        carries = _character_carries(G)
        for p, e in factorize(n).items():
            k = e // 2
            if k == 0:
                continue
            q = p**k
            zgens = kernel_mod_prime_power(constraints, p, k)
            if not zgens:
                continue
            Z = np.stack(zgens, axis=1)
            bcols = [delta] + [c[:, None] for ell, c in carries if ell == p]
            B = np.concatenate(bcols, axis=1)
            rel = kernel_mod_prime_power(np.concatenate([Z, B], axis=1), p, k)
            kappa = Z.shape[1]
            R = [w[:kappa] for w in rel]
            pres = np.stack(R, axis=1) if R else np.zeros((kappa, 0), dtype=np.int64)
            diag, uinv = smith_mod_prime_power(pres, p, k, kappa)
            plist = []
            for slot, d in enumerate(diag):
                if d <= 1:
                    continue
                tab = (Z @ uinv[:, slot]) % q
                plist.append((int(d), tab))
            if plist:
                parts[p] = plist  # ascending prime-power orders
    # merge the p-parts into invariant factors d_1 | d_2 | ...
    width = max((len(v) for v in parts.values()), default=0)
    invariants = []
    basis = []
    prime_tables: dict[int, tuple[int, list]] = {}
    m = max(n, 1)
    for slot in range(width):
        d = 1
        acc = np.zeros((n, n), dtype=np.int64)
        for p, plist in parts.items():
            shifted = slot - (width - len(plist))
            if shifted < 0:
                continue
            dp, tab = plist[shifted]
            d *= dp
            q = p ** (factorize(n)[p] // 2)
            acc += _unflat(tab, n) * (m // q)
        invariants.append(d)
        rep = Cocycle(G, m, acc % m, check=False)
        assert rep.is_cocycle()
        basis.append(rep)
    for p, plist in parts.items():
        q = p ** (factorize(n)[p] // 2)
        aligned: list = [None] * width
        for i, (dp, tab) in enumerate(plist):
            aligned[width - len(plist) + i] = tab
        prime_tables[p] = (q, aligned)
    mult = SchurMultiplier(G, invariants, basis, prime_tables)
    G._cache["schur"] = mult
    return mult


# -- coclasses ---------------------------------------------------------------


class Coclass:
    """An element of the multiplier: exponent vector plus a representative."""

    def __init__(self, multiplier: SchurMultiplier, vector: tuple[int, ...],
                 representative: Cocycle):
        self.multiplier = multiplier
        self.vector = tuple(int(v) for v in vector)
        self.representative = representative

    @property
    def order(self) -> int:
        out = 1
        for e, d in zip(self.vector, self.multiplier.invariants):
            out = _lcm(out, d // gcd(d, e))
        return out

    def is_trivial(self) -> bool:
        return not any(self.vector)

    def power(self, k: int) -> "Coclass":
        return self.multiplier.coclass([k * e for e in self.vector])

    def mul(self, other: "Coclass") -> "Coclass":
        assert other.multiplier is self.multiplier
        return self.multiplier.coclass(
            [a + b for a, b in zip(self.vector, other.vector)])

    def inverse(self) -> "Coclass":
        return self.multiplier.coclass([-e for e in self.vector])

    def label(self) -> str:
        return "[" + ",".join(str(v) for v in self.vector) + "]"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Coclass)
                and other.multiplier is self.multiplier
                and other.vector == self.vector)

    def __hash__(self) -> int:
        return hash((id(self.multiplier), self.vector))

    def __repr__(self) -> str:
        return f"Coclass({self.multiplier.group.name}, {self.label()})"


def coclass_order(c: Coclass) -> int:
    """Minimal k with c^k trivial."""
    return c.order


def restrict_coclass(c: Coclass, H: Subgroup, cap: int = DEFAULT_H2_CAP) -> Coclass:
    """The class of the restricted representative inside H's multiplier."""
    rc = c.representative.restrict(H)
    mult_H = schur_multiplier(H.as_group(), cap)
    vec = mult_H.resolve(rc.table, rc.modulus)
    return mult_H.coclass(vec)


def inflate_coclass(b: Coclass, quot: Quotient, mult_G: SchurMultiplier) -> Coclass:
    """Pull a coclass of G/N back to G through the projection."""
    cocycle_G = inflate_cocycle(b.representative, quot, mult_G.group)
    vec = mult_G.resolve(cocycle_G.table, cocycle_G.modulus)
    return mult_G.coclass(vec)


def inflate_cocycle(c: Cocycle, quot: Quotient, G: FiniteGroup) -> Cocycle:
    """Table pullback a(x, y) = a(Nx, Ny); exact inflation form."""
    if quot.group is not c.group:
        raise ModulusMismatch("cocycle does not live on the quotient")
    proj = quot.projection
    tab = c.table[np.ix_(proj, proj)]
    return Cocycle(G, c.modulus, tab, check=False)


def pi_part(c: Coclass, pi) -> tuple[Coclass, Coclass]:
    """Split c = c_pi * c_pi' with coprime orders (CRT exponents)."""
    o = c.order
    u = pi.part(o)
    v = o // u
    if u == 1:
        return c.multiplier.trivial_coclass(), c
    if v == 1:
        return c, c.multiplier.trivial_coclass()
    e = v * pow(v, -1, u)
    c_pi = c.power(e)
    c_rest = c.mul(c_pi.inverse())
    return c_pi, c_rest


def cocycle_from_extension(E: FiniteGroup, Z: Subgroup,
                           section: np.ndarray | None = None
                           ) -> tuple[Cocycle, Quotient]:
    """The cocycle of E/Z defined by a transversal of a central cyclic Z.

    a(x, y) is the discrete log of s(x) s(y) s(xy)^-1 against a fixed
    generator of Z.
    """
    if centralizer_of_set(E, Z.elements).order != E.order:
        raise NotCentral(f"subgroup of order {Z.order} is not central in {E.name}")
    gen = next((int(z) for z in Z.elements if E.order_of(int(z)) == Z.order), None)
    if gen is None:
        raise NotCyclic(f"central subgroup of order {Z.order} is not cyclic")
    quot = quotient_group(E, Z)
    if section is None:
        section = quot.section
    else:
        section = np.asarray(section, dtype=np.int64)
        if not np.array_equal(quot.projection[section],
                              np.arange(quot.group.order)):
            raise ValueError("section is not a transversal")
    dlog = {}
    z = 0
    for j in range(Z.order):
        dlog[z] = j
        z = int(E.mul[z, gen])
    nq = quot.group.order
    tab = np.zeros((nq, nq), dtype=np.int64)
    for i in range(nq):
        si = int(section[i])
        prods = E.mul[si, section]
        for j in range(nq):
            ij = int(quot.group.mul[i, j])
            zval = int(E.mul[int(prods[j]), int(E.inv[section[ij]])])
            tab[i, j] = dlog[zval]
    c = Cocycle(quot.group, Z.order, tab, check=False)
    assert c.is_cocycle()
    return c, quot


def multiplier_from_central_extension(E: FiniteGroup, Z: Subgroup,
                                      seed: int = 0) -> tuple[SchurMultiplier, Quotient]:
    """Multiplier of E/Z assuming the extension cocycle generates it.

    Used when the quotient exceeds the direct computation cap and a covering
    group is known (e.g. a perfect central extension).  The class order is
    measured with the numeric degree-one test; completeness of the basis is
    the caller's responsibility.
    """
    c, quot = cocycle_from_extension(E, Z)
    Q = quot.group
    order = None
    for k in sorted(_divisors(Z.order)):
        if is_trivial_coclass_numeric(Q, c.power(k).unit_table(), seed=seed):
            order = k
            break
    assert order is not None
    m = Q.order
    if order == 1:
        mult = SchurMultiplier(Q, [], [], {}, assumed=True)
    else:
        assert len(factorize(order)) == 1, "extension class must have prime-power order"
        (p,) = factorize(order).keys()
        rep = Cocycle(Q, m, c.table * (m // c.modulus), check=False)
        prime_tables = {p: (c.modulus, [_flat(c.table)])}
        mult = SchurMultiplier(Q, [order], [rep], prime_tables, assumed=True)
        # self-check: the basis resolves to the unit vector, triviality to zero
        assert mult.resolve(rep.table, m) == (1 % order,)
        assert mult.resolve(np.zeros((Q.order, Q.order), dtype=np.int64), m) == (0,)
    Q._cache["schur"] = mult
    return mult, quot


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_trivial_coclass_numeric(G: FiniteGroup, unit_table: np.ndarray,
                               seed: int = 0, tol: float = 1e-6) -> bool:
    """True iff the twisted algebra over this table has a degree-1 block.

    A degree-1 projective representation trivializes its cocycle, so this is
    a class-triviality test that needs no exact arithmetic.
    """
    from .twisted import TwistedAlgebra, wedderburn

    A = TwistedAlgebra(G, unit_table)
    return 1 in wedderburn(A, seed=seed).degrees

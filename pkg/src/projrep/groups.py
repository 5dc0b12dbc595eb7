"""Finite group arithmetic on dense Cayley tables.

Elements are indices 0..order-1 with 0 the identity.  All objects are
immutable after construction (internal caches are append-only), so they can
be shared freely across threads; every operation here is a pure function of
its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ClosureTooLarge,
    ComplementSearchExhausted,
    NotNormal,
    NotPermutation,
    NotPiSeparable,
)

DEFAULT_ORDER_CAP = 200

_HALL_SEED = 1729
_HALL_RETRIES = 500


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (orders are tiny)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n)))


@dataclass(frozen=True)
class PiSet:
    """A set of primes; the complement is taken against Pi(G) on demand."""

    primes: frozenset[int]

    def __init__(self, primes) -> None:
        object.__setattr__(self, "primes", frozenset(int(p) for p in primes))

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(sorted(self.primes))

    def part(self, n: int) -> int:
        """The pi-part of a positive integer."""
        out = 1
        for p, e in factorize(n).items():
            if p in self.primes:
                out *= p**e
        return out

    def coprime_part(self, n: int) -> int:
        return n // self.part(n)

    def is_pi_number(self, n: int) -> bool:
        return self.part(n) == n

    def is_pi_prime_number(self, n: int) -> bool:
        return self.part(n) == 1

    def complement_in(self, n: int) -> "PiSet":
        """Complement relative to the primes dividing n."""
        return PiSet(p for p in prime_divisors(n) if p not in self.primes)

    def label(self) -> str:
        return "{" + ",".join(str(p) for p in sorted(self.primes)) + "}"

    def __repr__(self) -> str:
        return f"PiSet({self.label()})"


class FiniteGroup:
    """A finite group given by its Cayley table, identity at index 0."""

    def __init__(self, mul, name: str = "G", generators=None, validate: bool = True):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int64))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise ValueError("Cayley table must be square")
        self.mul = mul
        self.order = int(mul.shape[0])
        self.name = name
        self.identity = 0
        if generators is None:
            generators = [g for g in range(1, self.order)]
        self.generators = [int(g) for g in generators]
        # inv[g] is the unique h with mul[g, h] == 0
        rows, cols = np.nonzero(mul == 0)
        inv = np.empty(self.order, dtype=np.int64)
        inv[rows] = cols
        self.inv = inv
        self._cache: dict = {}
        if validate:
            self._validate()
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    def _validate(self) -> None:
        n = self.order
        rng = np.arange(n)
        if not (np.array_equal(self.mul[0], rng) and np.array_equal(self.mul[:, 0], rng)):
            raise ValueError("index 0 is not an identity")
        if not np.all(np.sort(self.mul, axis=1) == rng):
            raise ValueError("Cayley table rows are not permutations")
        if not np.all(np.sort(self.mul, axis=0) == rng[:, None]):
            raise ValueError("Cayley table columns are not permutations")
        if not np.all(self.mul[self.inv, rng] == 0) or not np.all(self.mul[rng, self.inv] == 0):
            raise ValueError("inverse law fails")
        if n <= 256:
            # (ab)c == a(bc) on all triples, chunked over a to bound memory
            step = max(1, 4096 // max(n, 1))
            for a0 in range(0, n, step):
                a1 = min(n, a0 + step)
                if not np.array_equal(self.mul[self.mul[a0:a1]],
                                      self.mul[a0:a1][:, self.mul]):
                    raise ValueError("Cayley table is not associative")
        if closure(self, [0] + self.generators).size != n:
            raise ValueError("generators do not generate the group")

    # -- basic arithmetic ------------------------------------------------

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return int(self.mul[self.mul[self.inv[g], x], g])

    def power(self, g: int, k: int) -> int:
        k = k % self.order_of(g)
        out, base = 0, g
        while k:
            if k & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            k >>= 1
        return out

    def order_of(self, g: int) -> int:
        return int(self.element_orders()[g])

    def element_orders(self) -> np.ndarray:
        if "orders" not in self._cache:
            n = self.order
            orders = np.empty(n, dtype=np.int64)
            for g in range(n):
                k, x = 1, g
                while x != 0:
                    x = int(self.mul[x, g])
                    k += 1
                orders[g] = k
            orders.setflags(write=False)
            self._cache["orders"] = orders
        return self._cache["orders"]

    def exponent(self) -> int:
        out = 1
        for k in np.unique(self.element_orders()):
            out = out * int(k) // _gcd(out, int(k))
        return out

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            self._cache["abelian"] = bool(np.array_equal(self.mul, self.mul.T))
        return self._cache["abelian"]

    def gen_set(self) -> list[int]:
        """A small generating set: greedy over descending element order."""
        if "gen_set" not in self._cache:
            if self.order == 1:
                gens: list[int] = []
            elif closure(self, self.generators).size == self.order and \
                    len(self.generators) <= 4:
                gens = list(self.generators)
            else:
                orders = self.element_orders()
                by_order = sorted(range(1, self.order),
                                  key=lambda g: (-orders[g], g))
                gens = []
                size = 1
                for g in by_order:
                    trial = closure(self, gens + [g])
                    if trial.size > size:
                        gens.append(g)
                        size = trial.size
                    if size == self.order:
                        break
            self._cache["gen_set"] = gens
        return self._cache["gen_set"]

    def subgroup(self, elements) -> "Subgroup":
        return Subgroup(self, elements)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [0])

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def primes(self) -> tuple[int, ...]:
        return prime_divisors(self.order)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# -- permutation closure -------------------------------------------------


def _as_perm(seq, points: int) -> tuple[int, ...]:
    """Validate a 1-based image list and return a 0-based tuple."""
    try:
        imgs = [int(v) for v in seq]
    except (TypeError, ValueError) as exc:
        raise NotPermutation(f"not an integer sequence: {seq!r}") from exc
    if len(imgs) != points or sorted(imgs) != list(range(1, points + 1)):
        raise NotPermutation(f"not a permutation of 1..{points}: {seq!r}")
    return tuple(v - 1 for v in imgs)


def build_group(generators, name: str = "G", points: int | None = None,
                cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Close a list of permutations (1-based image lists) into a group.

    Element 0 is the identity; the remaining elements are ordered by BFS
    from the identity, right-multiplying by the generators in input order.
    Permutations compose left to right: (p*q)(i) = q(p(i)).
    """
    gen_seqs = [list(g) for g in generators]
    if points is None:
        points = max((len(g) for g in gen_seqs), default=1)
    perms = [_as_perm(g, points) for g in gen_seqs]
    ident = tuple(range(points))
    elems: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in perms:
            y = tuple(g[v] for v in x)
            if y not in index:
                if len(elems) >= cap:
                    raise ClosureTooLarge(
                        f"closure of {name!r} exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
        i += 1
    n = len(elems)
    arr = np.array(elems, dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for j in range(n):
        composed = arr[j][arr]          # row i = elems[i] followed by elems[j]
        for i in range(n):
            mul[i, j] = index[tuple(composed[i])]
    gen_idx = []
    for g in perms:
        gi = index.get(g)
        if gi is None:
            raise NotPermutation("generator escaped its own closure")  # unreachable
        if gi != 0 and gi not in gen_idx:
            gen_idx.append(gi)
    group = FiniteGroup(mul, name=name, generators=gen_idx or [0])
    group._cache["perm_points"] = points
    group._cache["perm_elements"] = arr
    return group


# -- subgroups -----------------------------------------------------------


class Subgroup:
    """A subgroup as a sorted index set inside a parent group."""

    def __init__(self, parent: FiniteGroup, elements):
        self.parent = parent
        el = np.unique(np.asarray(list(elements), dtype=np.int64))
        if el.size == 0 or el[0] != 0:
            raise ValueError("subgroups must contain the identity")
        self.elements = el
        self.order = int(el.size)
        self._cache: dict = {}
        prods = parent.mul[np.ix_(el, el)]
        if not np.isin(prods, el).all() or not np.isin(parent.inv[el], el).all():
            raise ValueError("index set is not closed")
        self.elements.setflags(write=False)

    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def contains(self, g: int) -> bool:
        return bool(self.mask()[g])

    def mask(self) -> np.ndarray:
        if "mask" not in self._cache:
            m = np.zeros(self.parent.order, dtype=bool)
            m[self.elements] = True
            m.setflags(write=False)
            self._cache["mask"] = m
        return self._cache["mask"]

    def is_normal(self) -> bool:
        if "normal" not in self._cache:
            G, m = self.parent, self.mask()
            ok = True
            for g in range(G.order):
                conj = G.mul[G.mul[G.inv[g], self.elements], g]
                if not m[conj].all():
                    ok = False
                    break
            self._cache["normal"] = ok
        return self._cache["normal"]

    def as_group(self) -> FiniteGroup:
        """Re-index this subgroup as a standalone group (cached).

        Standalone index i corresponds to parent index ``elements[i]``;
        ``elements`` therefore doubles as the embedding map.
        """
        if "group" not in self._cache:
            el = self.elements
            pos = np.full(self.parent.order, -1, dtype=np.int64)
            pos[el] = np.arange(self.order)
            sub_mul = pos[self.parent.mul[np.ix_(el, el)]]
            sub = FiniteGroup(sub_mul, name=f"{self.parent.name}|{self.order}",
                              validate=False)
            self._cache["group"] = sub
            self._cache["pos"] = pos
        return self._cache["group"]

    def positions(self) -> np.ndarray:
        """Parent index -> standalone index (or -1)."""
        self.as_group()
        return self._cache["pos"]

    def sub_indices(self, H: "Subgroup") -> np.ndarray:
        """Standalone indices of a smaller subgroup H <= self."""
        if not self.mask()[H.elements].all():
            raise ValueError("not a subgroup of this subgroup")
        return self.positions()[H.elements]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and np.array_equal(other.elements, self.elements))

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements.tobytes()))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


def closure(G: FiniteGroup, seed) -> np.ndarray:
    """Subgroup generated by an index set, as a sorted index array.

    Words in the seed elements suffice (inverses are powers in a finite
    group), so this is a BFS over right multiplication by the seed.
    """
    gens = sorted({int(s) for s in seed} | {0})
    seen = np.zeros(G.order, dtype=bool)
    seen[gens] = True
    out = gens[:]
    i = 0
    while i < len(out):
        x = out[i]
        for g in gens:
            y = int(G.mul[x, g])
            if not seen[y]:
                seen[y] = True
                out.append(y)
        i += 1
    return np.array(sorted(out), dtype=np.int64)


def conjugacy_classes(G: FiniteGroup) -> list["ConjClass"]:
    """Partition into conjugacy classes, ordered by representative index."""
    if "classes" in G._cache:
        return G._cache["classes"]
    n = G.order
    rng = np.arange(n)
    assigned = np.full(n, -1, dtype=np.int64)
    out = []
    for x in range(n):
        if assigned[x] >= 0:
            continue
        members = np.unique(G.mul[G.mul[G.inv, x][rng], rng])
        assigned[members] = len(out)
        cent = n // members.size
        assert cent * members.size == n
        out.append(ConjClass(representative=x, members=members,
                             centralizer_order=cent))
    G._cache["classes"] = out
    G._cache["class_of"] = assigned
    return out


def class_of(G: FiniteGroup) -> np.ndarray:
    conjugacy_classes(G)
    return G._cache["class_of"]


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: np.ndarray
    centralizer_order: int

    @property
    def size(self) -> int:
        return int(self.members.size)


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    """All g with gx = xg."""
    els = np.nonzero(G.mul[:, x] == G.mul[x, :])[0]
    return Subgroup(G, els)


def centralizer_of_set(G: FiniteGroup, elements) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    for x in elements:
        mask &= G.mul[:, x] == G.mul[x, :]
    return Subgroup(G, np.nonzero(mask)[0])


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    m = H.mask()
    keep = []
    for g in range(G.order):
        conj = G.mul[G.mul[G.inv[g], H.elements], g]
        if m[conj].all():
            keep.append(g)
    return Subgroup(G, keep)


def derived_subgroup(G: FiniteGroup, elements) -> Subgroup:
    """Commutator subgroup of the subgroup spanned by ``elements``."""
    el = np.asarray(list(elements), dtype=np.int64)
    comms = set()
    for g in el:
        # [g, h] = g^-1 h^-1 g h for all h in the set at once
        t = G.mul[G.mul[G.mul[G.inv[g], G.inv[el]], g], el]
        comms.update(int(v) for v in np.unique(t))
    return Subgroup(G, closure(G, comms))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    if "derived" not in G._cache:
        G._cache["derived"] = derived_subgroup(G, range(G.order))
    return G._cache["derived"]


def is_solvable(G: FiniteGroup) -> bool:
    if "solvable" not in G._cache:
        H = commutator_subgroup(G)
        while True:
            if H.order == 1:
                G._cache["solvable"] = True
                break
            D = derived_subgroup(G, H.elements)
            if D.order == H.order:
                G._cache["solvable"] = False
                break
            H = D
    return G._cache["solvable"]


# -- Sylow and Hall machinery ---------------------------------------------


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, by normalizer climbing from a p-element."""
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]
    P = _sylow_uncached(G, p)
    G._cache[key] = P
    return P


def _sylow_uncached(G: FiniteGroup, p: int) -> Subgroup:
    target = PiSet([p]).part(G.order)
    P = G.trivial_subgroup()
    if target == 1:
        return P
    orders = G.element_orders()
    is_p_elem = np.array([_is_prime_power(int(o), p) for o in orders])
    while P.order < target:
        N = normalizer(G, P)
        cand = [y for y in N.elements
                if is_p_elem[y] and not P.contains(int(y))]
        grown = False
        for y in cand:
            # y normalizes P and is a p-element, so <P, y> is a p-group
            P = Subgroup(G, closure(G, list(P.elements) + [int(y)]))
            grown = True
            break
        if not grown:
            # exhaustive fallback: any p-element extending P inside a p-group
            for y in np.nonzero(is_p_elem)[0]:
                if P.contains(int(y)):
                    continue
                C = closure(G, list(P.elements) + [int(y)])
                if _is_prime_power(C.size, p):
                    P = Subgroup(G, C)
                    grown = True
                    break
            if not grown:
                raise RuntimeError("Sylow climb stalled")  # impossible
    return P


def _is_prime_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def o_pi(G: FiniteGroup, pi: PiSet) -> Subgroup:
    """The largest normal pi-subgroup, by class-union closure."""
    key = ("o_pi", tuple(sorted(pi.primes)))
    if key in G._cache:
        return G._cache[key]
    H = _o_pi_uncached(G, pi)
    G._cache[key] = H
    return H


def _o_pi_uncached(G: FiniteGroup, pi: PiSet) -> Subgroup:
    classes = conjugacy_classes(G)
    orders = G.element_orders()
    cand = [c for c in classes
            if pi.is_pi_number(int(orders[c.representative]))]
    current = {0}
    grown = True
    while grown:
        grown = False
        for c in cand:
            if int(c.representative) in current:
                continue
            trial = closure(G, list(current) + list(c.members))
            if pi.is_pi_number(trial.size):
                current = set(int(v) for v in trial)
                grown = True
    H = Subgroup(G, sorted(current))
    assert H.is_normal()
    return H


@dataclass(frozen=True)
class Quotient:
    """A quotient group with its projection and a coset-representative section."""

    group: FiniteGroup
    projection: np.ndarray
    section: np.ndarray


def quotient_group(G: FiniteGroup, N: Subgroup) -> Quotient:
    """Cayley table on cosets of a normal subgroup.

    Cosets are ordered by their minimal element; the section records that
    minimal representative, so the identity coset is index 0 with
    representative 0.
    """
    if not N.is_normal():
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.name}")
    n = G.order
    proj = np.full(n, -1, dtype=np.int64)
    section = []
    for g in range(n):
        if proj[g] >= 0:
            continue
        members = G.mul[g, N.elements]
        proj[members] = len(section)
        section.append(g)
    section = np.array(section, dtype=np.int64)
    q = section.size
    mul_q = proj[G.mul[np.ix_(section, section)]]
    Qg = FiniteGroup(mul_q, name=f"{G.name}/{N.order}", validate=False)
    return Quotient(group=Qg, projection=proj, section=section)


def preimage(G: FiniteGroup, quot: Quotient, H_q: Subgroup) -> Subgroup:
    """Pull a subgroup of the quotient back to the parent."""
    m = np.zeros(quot.group.order, dtype=bool)
    m[H_q.elements] = True
    return Subgroup(G, np.nonzero(m[quot.projection])[0])


@dataclass
class NormalSeries:
    """An ascending normal series with pi/pi' factor tags."""

    terms: list[Subgroup]
    factor_pi_tags: list[str]
    reaches_group: bool = True

    @property
    def length(self) -> int:
        return len(self.terms)


def pi_series(G: FiniteGroup, pi: PiSet) -> NormalSeries:
    """The characteristic series 1 <= O_pi <= O_pipi' <= ... (duplicates dropped).

    Terminates at G exactly when G is pi-separable; otherwise the series is
    returned as far as it goes with ``reaches_group`` false.
    """
    terms = [G.trivial_subgroup()]
    tags: list[str] = []
    tag_sets = [pi, pi.complement_in(G.order)]
    tag_names = ["pi", "pi_prime"]
    which = 0
    stalls = 0
    current = terms[0]
    while current.order < G.order and stalls < 2:
        quot = quotient_group(G, current)
        O = o_pi(quot.group, tag_sets[which])
        new = preimage(G, quot, O)
        if new.order == current.order:
            stalls += 1
        else:
            stalls = 0
            terms.append(new)
            tags.append(tag_names[which])
            current = new
        which ^= 1
    return NormalSeries(terms=terms, factor_pi_tags=tags,
                        reaches_group=current.order == G.order)


def alternating_pi_series(G: FiniteGroup, pi: PiSet) -> NormalSeries:
    """Strictly alternating pi/pi' series 1, O_pi, O_pipi', ..., ending at G
    with a pi'-tagged final factor (trivial repeats kept)."""
    if not is_pi_separable(G, pi):
        raise NotPiSeparable(f"{G.name} is not {pi.label()}-separable")
    terms = [G.trivial_subgroup()]
    tags: list[str] = []
    tag_sets = [pi, pi.complement_in(G.order)]
    tag_names = ["pi", "pi_prime"]
    which = 0
    current = terms[0]
    guard = 0
    while current.order < G.order:
        quot = quotient_group(G, current)
        O = o_pi(quot.group, tag_sets[which])
        current = preimage(G, quot, O)
        terms.append(current)
        tags.append(tag_names[which])
        which ^= 1
        guard += 1
        if guard > 4 * G.order:
            raise RuntimeError("series did not terminate")  # impossible
    if not tags or tags[-1] == "pi":
        terms.append(G.full_subgroup())
        tags.append("pi_prime")
    return NormalSeries(terms=terms, factor_pi_tags=tags, reaches_group=True)


def is_pi_separable(G: FiniteGroup, pi: PiSet) -> bool:
    key = ("pi_sep", tuple(sorted(pi.primes)))
    if key not in G._cache:
        G._cache[key] = pi_series(G, pi).reaches_group
    return G._cache[key]


def is_p_solvable(G: FiniteGroup, p: int) -> bool:
    return is_pi_separable(G, PiSet([p]))


def hall_subgroup(G: FiniteGroup, pi: PiSet) -> Subgroup:
    """A Hall pi-subgroup of a pi-separable group.

    Recursion along the pi-series: pull a Hall subgroup of G/O_pi(G) back;
    when O_pi(G) = 1 the pullback K through O_pi'(G) needs a complement,
    found by randomized probing over pi-elements with an exhaustive
    deterministic fallback.
    """
    if not is_pi_separable(G, pi):
        raise NotPiSeparable(f"{G.name} is not {pi.label()}-separable")
    key = ("hall", tuple(sorted(pi.primes)))
    if key not in G._cache:
        G._cache[key] = _hall_rec(G, pi)
    return G._cache[key]


def _hall_rec(G: FiniteGroup, pi: PiSet) -> Subgroup:
    target = pi.part(G.order)
    if target == G.order:
        return G.full_subgroup()
    if target == 1:
        return G.trivial_subgroup()
    N1 = o_pi(G, pi)
    if N1.order > 1:
        quot = quotient_group(G, N1)
        return preimage(G, quot, _hall_rec(quot.group, pi))
    N = o_pi(G, pi.complement_in(G.order))
    assert N.order > 1, "pi-separable group with trivial O_pi and O_pi'"
    quot = quotient_group(G, N)
    K = preimage(G, quot, _hall_rec(quot.group, pi))
    return _hall_complement(G, K, pi, target)


def _hall_complement(G: FiniteGroup, K: Subgroup, pi: PiSet, target: int) -> Subgroup:
    """Grow a Hall pi-subgroup of K over its pi-elements."""
    orders = G.element_orders()
    pi_elems = [int(y) for y in K.elements if pi.is_pi_number(int(orders[y]))]
    rng = np.random.default_rng(_HALL_SEED + G.order)
    current = [0]
    size = 1
    retries = 0
    while size < target:
        cand = [y for y in pi_elems if y not in set(current)]
        grown = False
        while retries < _HALL_RETRIES and cand:
            y = int(cand[rng.integers(len(cand))])
            trial = closure(G, current + [y])
            if pi.is_pi_number(trial.size):
                current, size, grown = list(trial), trial.size, True
                break
            retries += 1
        if not grown:
            for y in cand:  # exhaustive fallback, ascending
                trial = closure(G, current + [y])
                if pi.is_pi_number(trial.size):
                    current, size, grown = list(trial), trial.size, True
                    break
            if not grown:
                raise ComplementSearchExhausted(
                    f"no Hall {pi.label()}-complement found in {G.name}")
    return Subgroup(G, current)


def hall_higman_check(G: FiniteGroup, p: int) -> bool:
    """C_G(O_p(G)) <= O_p(G) for p-solvable G with O_p'(G) = 1.

    Returns a vacuous pass when the hypotheses fail; must never be false on
    valid input.
    """
    if not is_p_solvable(G, p):
        return True
    pp = PiSet([p])
    if o_pi(G, pp.complement_in(G.order)).order > 1:
        return True
    P = o_pi(G, pp)
    C = centralizer_of_set(G, P.elements)
    return bool(P.mask()[C.elements].all())

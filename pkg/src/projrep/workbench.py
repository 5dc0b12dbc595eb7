"""Run configuration, sweep execution, group I/O, and report persistence.

A run maps (group, coclass, check, parameter) tasks over a bounded thread
pool; every randomized step is seeded from (config seed, group, coclass)
alone, so identical configurations produce byte-identical reports
regardless of scheduling.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .catalog import catalog, coclass_contexts, get_group
from .cohomology import DEFAULT_H2_CAP
from .errors import ConfigError, ParseError, UnknownGroup
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    PiSet,
    build_group,
    is_solvable,
    prime_divisors,
)
from .twisted import wedderburn
from .verify import (
    CheckResult,
    CoclassContext,
    pi_decompose,
    verify_a5_negative_control,
    verify_basic,
    verify_clifford_laws,
    verify_ito_michler,
    verify_normal_sylow_criterion,
    verify_pi_theorem,
)

CHECK_NAMES = ("basic", "ito-michler", "sylow-criterion", "pi-theorem",
               "clifford-laws", "a5-control", "decompose")

DEFAULT_TOLERANCES = {
    "check": 1e-6,
    "eigenvalue_gap": 1e-8,
    "rank": 1e-8,
    "integrality": 1e-6,
}


@dataclass
class RunConfig:
    groups: list[str] = field(default_factory=lambda: ["all"])
    checks: list[str] = field(default_factory=lambda: list(CHECK_NAMES))
    primes: list[int] | None = None
    pi_sets: list[PiSet] | None = None
    tol: float = 1e-6
    seed: int = 0
    h2_cap: int = DEFAULT_H2_CAP
    order_cap: int = DEFAULT_ORDER_CAP
    out: Path | None = None
    jobs: int = 1

    def validate(self) -> None:
        if self.tol <= 0:
            raise ConfigError("tolerance must be positive")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if self.h2_cap < 1 or self.order_cap < 1:
            raise ConfigError("caps must be positive")
        for c in self.checks:
            if c not in CHECK_NAMES:
                raise ConfigError(f"unknown check {c!r}; "
                                  f"known: {', '.join(CHECK_NAMES)}")

    def group_names(self) -> list[str]:
        if self.groups == ["all"]:
            return [e.name for e in catalog()]
        return list(self.groups)


def _task_seed(seed: int, *parts: str) -> int:
    h = hashlib.sha256(("|".join(parts)).encode()).digest()
    return (seed * 0x9E3779B1 + int.from_bytes(h[:4], "big")) % (2**31)


def resolve_group(name: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """A catalog name, or a path to a group JSON file."""
    try:
        return get_group(name)
    except UnknownGroup:
        p = Path(name)
        if p.exists():
            return load_group(p, cap=order_cap)
        raise


def contexts_for(name: str, config: RunConfig) -> list[CoclassContext]:
    seed = _task_seed(config.seed, name)
    if any(e.name == name for e in catalog()):
        ctxs = coclass_contexts(name, h2_cap=config.h2_cap, seed=seed)
    else:
        from .cohomology import schur_multiplier, trivial_cocycle
        G = resolve_group(name, config.order_cap)
        if G.order <= config.h2_cap:
            mult = schur_multiplier(G, cap=config.h2_cap)
            ctxs = [CoclassContext(G, c.representative, label=c.label(),
                                   seed=seed, coclass=c)
                    for c in mult.coclasses()]
        else:
            ctxs = [CoclassContext(G, trivial_cocycle(G), label="trivial",
                                   seed=seed)]
    for i, ctx in enumerate(ctxs):
        ctx.seed = _task_seed(config.seed, name, ctx.label)
    return ctxs


def _check_tasks(name: str, ctxs, config: RunConfig):
    """Yield callables producing CheckResult lists for one group."""
    G = ctxs[0].group
    primes = config.primes or list(prime_divisors(G.order))
    pis = config.pi_sets
    if pis is None:
        ps = prime_divisors(G.order)
        pis = [PiSet([p]) for p in ps] + \
            [PiSet([p, q]) for i, p in enumerate(ps) for q in ps[i + 1:]]
    for ctx in ctxs:
        if "basic" in config.checks:
            yield lambda c=ctx: [verify_basic(c, h2_cap=config.h2_cap)]
        if "ito-michler" in config.checks:
            for p in primes:
                yield lambda c=ctx, q=p: [verify_ito_michler(c, q)]
        if "sylow-criterion" in config.checks:
            for p in primes:
                yield lambda c=ctx, q=p: [verify_normal_sylow_criterion(c, q)]
        if "pi-theorem" in config.checks:
            for pi in pis:
                yield lambda c=ctx, q=pi: [verify_pi_theorem(c, q)]
        if "clifford-laws" in config.checks:
            yield lambda c=ctx: _clifford_check(c)
        if "a5-control" in config.checks and name == "A5" \
                and ctx.label in ("[0]", "trivial"):
            yield lambda c=ctx: [verify_a5_negative_control(c)]
        if "decompose" in config.checks:
            yield lambda c=ctx, n=name: _decompose_check(c, n)


def _clifford_check(ctx: CoclassContext) -> list[CheckResult]:
    """Clifford dimension laws over one normal core per prime."""
    from .groups import o_pi
    from .reps import split_regular
    from .twisted import TwistedAlgebra
    G = ctx.group
    cores = []
    seen = set()
    for p in prime_divisors(G.order):
        N = o_pi(G, PiSet([p]).complement_in(G.order))
        if 1 < N.order < G.order and N.elements.tobytes() not in seen:
            seen.add(N.elements.tobytes())
            cores.append(N)
    if not cores:
        return [CheckResult(
            name="clifford_laws", group=G.name, coclass=ctx.label, param="-",
            lhs=None, rhs=None, verdict="inapplicable",
            reason="no proper nontrivial p-complement core")]
    out = []
    for N in cores:
        alg = TwistedAlgebra(N.as_group(),
                             ctx.algebra.table[np.ix_(N.elements, N.elements)],
                             check=False)
        V = split_regular(alg, seed=ctx.seed)[-1]
        out.append(verify_clifford_laws(ctx, N, V))
    return out


def _decompose_check(ctx: CoclassContext, name: str) -> list[CheckResult]:
    G = ctx.group
    if not is_solvable(G) or G.order > 60:
        return [CheckResult(
            name="decompose", group=G.name, coclass=ctx.label, param="-",
            lhs=None, rhs=None, verdict="inapplicable",
            reason="certificates are swept on solvable groups of order <= 60")]
    out = []
    for p in prime_divisors(G.order):
        pi = PiSet([p])
        for V in ctx.irreps:
            cert, rep = pi_decompose(V, pi, ctx)
            rep.witnesses["index"] = cert.index
            rep.witnesses["factor_degrees"] = cert.factor_degrees
            rep.witnesses["residual"] = cert.residual
            out.append(rep)
    return out


def run(config: RunConfig) -> tuple[int, list[CheckResult]]:
    """Execute the configured sweep; returns (exit_status, results)."""
    config.validate()
    names = config.group_names()
    all_tasks = []
    for name in names:
        ctxs = contexts_for(name, config)
        all_tasks.extend(_check_tasks(name, ctxs, config))
    results: list[CheckResult] = []
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            for chunk in pool.map(lambda t: t(), all_tasks):
                results.extend(chunk)
    else:
        for t in all_tasks:
            results.extend(t())
    results.sort(key=lambda r: (r.group, r.coclass, r.name, r.param))
    if config.out is not None:
        write_reports(results, config)
    status = 1 if any(r.verdict == "fail" for r in results) else 0
    return status, results


def write_reports(results: list[CheckResult], config: RunConfig) -> None:
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "results.jsonl", "w") as fh:
        for r in results:
            record = r.to_dict()
            record["seed"] = config.seed
            record["tolerances"] = DEFAULT_TOLERANCES | {"check": config.tol}
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    counts: dict[tuple[str, str], dict[str, int]] = {}
    for r in results:
        row = counts.setdefault((r.group, r.name),
                                {"pass": 0, "fail": 0, "inapplicable": 0})
        row[r.verdict] += 1
    with open(out / "summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["group", "check", "pass", "fail", "inapplicable"])
        for (group, check), row in sorted(counts.items()):
            writer.writerow([group, check, row["pass"], row["fail"],
                             row["inapplicable"]])


# -- single-shot reports ------------------------------------------------------


def degrees_report(ctx: CoclassContext, tol: float = 1e-6) -> dict:
    w = wedderburn(ctx.algebra, seed=ctx.seed)
    return {
        "group": ctx.group.name,
        "coclass": ctx.label,
        "coclass_order": ctx.order,
        "degrees": w.degrees,
        "c_regular_classes": ctx.regular_data.regular_representatives(),
        "seed": ctx.seed,
        "residual": w.residual,
        "cocycle_hash": ctx.cocycle.hash_hex(),
        "tolerances": DEFAULT_TOLERANCES | {"check": tol},
    }


def multiplier_report(G: FiniteGroup, h2_cap: int = DEFAULT_H2_CAP) -> dict:
    mult = G._cache.get("schur")
    if mult is None:
        from .cohomology import schur_multiplier
        mult = schur_multiplier(G, cap=h2_cap)
    return {
        "group": G.name,
        "invariants": mult.invariants,
        "order": mult.order,
        "exponent": mult.exponent,
        "basis_hashes": [c.hash_hex() for c in mult.basis],
        "assumed_complete": mult.assumed_complete,
    }


def regular_classes_report(ctx: CoclassContext) -> dict:
    data = ctx.regular_data
    return {
        "group": ctx.group.name,
        "coclass": ctx.label,
        "regular_count": data.regular_count,
        "flags": data.flags,
        "representatives": data.regular_representatives(),
        "cocycle_hash": ctx.cocycle.hash_hex(),
        "seed": ctx.seed,
    }


# -- group JSON ---------------------------------------------------------------


def parse_group_json(doc: dict, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    try:
        name = str(doc["name"])
        points = int(doc["points"])
        gens = [list(map(int, g)) for g in doc["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad group document: {exc}") from exc
    if "cayley" not in doc:
        return build_group(gens, name=name, points=points, cap=cap)
    # canonical export path: the table is authoritative, the generators are
    # its right-regular permutations and must agree with it
    from .errors import ClosureTooLarge
    if points > cap:
        raise ClosureTooLarge(f"group of order {points} exceeds cap {cap}")
    try:
        mul = np.asarray(doc["cayley"], dtype=np.int64).reshape(points, points)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad cayley table: {exc}") from exc
    gen_idx = []
    for p in gens:
        if len(p) != points:
            raise ParseError("generator length does not match points")
        g = p[0] - 1
        if not 0 <= g < points:
            raise ParseError("generator image out of range")
        if not np.array_equal(np.asarray(p, dtype=np.int64) - 1, mul[:, g]):
            raise ParseError("generator permutation disagrees with the table")
        gen_idx.append(g)
    try:
        return FiniteGroup(mul, name=name,
                           generators=[g for g in gen_idx if g] or [0])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_group(path, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read group file {path}: {exc}") from exc
    return parse_group_json(doc, cap=cap)


def export_group(G: FiniteGroup) -> dict:
    """Canonical export: right-regular generator permutations plus the
    flat row-major Cayley table.  Reloading reproduces the table exactly."""
    gens = [(G.mul[:, g] + 1).tolist() for g in (G.gen_set() or [0])]
    return {
        "name": G.name,
        "points": G.order,
        "generators": gens,
        "cayley": [int(v) for v in G.mul.reshape(-1)],
    }


def export_cocycle(c) -> dict:
    return {
        "group": c.group.name,
        "modulus": c.modulus,
        "table": [int(v) for v in c.table.reshape(-1)],
    }


def parse_cocycle_json(doc: dict, G: FiniteGroup):
    from .cohomology import Cocycle
    try:
        m = int(doc["modulus"])
        flat = np.asarray(doc["table"], dtype=np.int64)
        tab = flat.reshape(G.order, G.order)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad cocycle document: {exc}") from exc
    try:
        return Cocycle(G, m, tab)
    except Exception as exc:
        raise ParseError(f"invalid cocycle table: {exc}") from exc

"""Parameter grids, random sampling and threaded sweeps.

The desk-scale grids enumerate every canonical parameter of dimension up
to ``n_max`` built from a finite summand alphabet.  Sweeps fan out over a
thread pool sized by the ``LG_NUM_THREADS`` environment variable and
return results in input order.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import GaussianRational, gr
from .params import (
    ComplexCharacter,
    DiscreteSummand,
    Parameter,
    RealCharacter,
    central_character,
    conductor_bound,
)
from .twisting import twisted_l_factor
from .converse import gl1_signature, twist_family

GRID_SHIFTS = (gr(0), gr(1), gr(1, 2), gr(0, 1), gr(1, 1))


def num_threads() -> int:
    try:
        return max(1, int(os.environ.get("LG_NUM_THREADS", "")))
    except ValueError:
        return min(8, os.cpu_count() or 1)


def parallel_map(fn: Callable, items: Sequence, threads: int | None = None) -> list:
    threads = num_threads() if threads is None else threads
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def complex_grid(n_max=3, N_range=range(-3, 4), shifts=GRID_SHIFTS) -> list[Parameter]:
    alphabet = [ComplexCharacter(N, t) for N in N_range for t in shifts]
    out = []
    for n in range(1, n_max + 1):
        for combo in itertools.combinations_with_replacement(alphabet, n):
            out.append(Parameter.complex(*combo))
    return out


def real_grid(n_max=3, N_range=range(1, 4), shifts=GRID_SHIFTS) -> list[Parameter]:
    chars = [RealCharacter(e, t) for e in (0, 1) for t in shifts]
    discs = [DiscreteSummand(N, t) for N in N_range for t in shifts]
    out = []
    for q in range(0, n_max // 2 + 1):
        for p in range(0, n_max - 2 * q + 1):
            if p + q == 0:
                continue
            for dd in itertools.combinations_with_replacement(discs, q):
                for cc in itertools.combinations_with_replacement(chars, p):
                    out.append(Parameter.real(*cc, *dd))
    return out


def random_gaussian_rational(rng: random.Random, max_num=12, max_den=12,
                             complex_prob=0.5) -> GaussianRational:
    def part():
        return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    im = part() if rng.random() < complex_prob else Fraction(0)
    return GaussianRational(part(), im)


def _shift_pool(rng, n, max_num, max_den):
    # small pools force repeated shifts and shifts differing by integers
    base = [random_gaussian_rational(rng, max_num, max_den) for _ in range(max(1, n // 2))]
    return [rng.choice(base) + rng.randint(-2, 2) if rng.random() < 0.7
            else random_gaussian_rational(rng, max_num, max_den) for _ in range(n)]


def random_complex_parameter(rng: random.Random, n_max=5, N_max=6,
                             max_num=12, max_den=12) -> Parameter:
    n = rng.randint(1, n_max)
    ts = _shift_pool(rng, n, max_num, max_den)
    Ns = [rng.randint(-N_max, N_max) for _ in range(n)]
    if n > 1 and rng.random() < 0.5:
        Ns[1] = Ns[0]
    return Parameter.complex(*(ComplexCharacter(N, t) for N, t in zip(Ns, ts)))


def random_real_parameter(rng: random.Random, n_max=5, N_max=5,
                          max_num=12, max_den=12) -> Parameter:
    n = rng.randint(1, n_max)
    q = rng.randint(0, n // 2)
    p = n - 2 * q
    ts = _shift_pool(rng, p + q, max_num, max_den)
    chars = [RealCharacter(rng.randint(0, 1), t) for t in ts[:p]]
    discs = [DiscreteSummand(rng.randint(1, N_max), u) for u in ts[p:]]
    return Parameter.real(*chars, *discs)


def signature(p: Parameter, bound: int) -> tuple:
    return tuple(twisted_l_factor(p, tw) for tw in twist_family(p.field, bound))


def undistinguished_pairs(params: Iterable[Parameter], threads=None) -> list[tuple]:
    """Pairs of distinct parameters that agree on the whole twist family
    used by :func:`~lconverse.converse.distinguish` for that pair.

    A pair's family is fixed by ``b = max`` of the two conductor bounds,
    so for each ``b`` the parameters of bound ``<= b`` are grouped by their
    L-factors over the family for ``b``; any group of size two or more is a
    failure.  This is equivalent to running the pairwise search on every
    pair, without the quadratic cost.
    """
    params = list(dict.fromkeys(params))
    bounds = [conductor_bound(p) for p in params]
    failures = []
    for b in sorted(set(bounds)):
        members = [p for p, pb in zip(params, bounds) if pb <= b]
        sigs = parallel_map(lambda p: signature(p, b), members, threads)
        groups = defaultdict(list)
        for p, sig in zip(members, sigs):
            groups[sig].append(p)
        for group in groups.values():
            for i, j in itertools.combinations(range(len(group)), 2):
                # report each pair once, at its own bound
                if max(conductor_bound(group[i]), conductor_bound(group[j])) == b:
                    failures.append((group[i], group[j]))
    return failures


def gl3_violations(params: Iterable[Parameter], threads=None) -> list[tuple]:
    """Distinct pairs sharing central character and all GL(1)-twisted L-factors."""
    params = list(dict.fromkeys(params))
    keys = parallel_map(lambda p: (central_character(p), gl1_signature(p)), params, threads)
    groups = defaultdict(list)
    for p, k in zip(params, keys):
        groups[k].append(p)
    return [pair for g in groups.values() for pair in itertools.combinations(g, 2)]

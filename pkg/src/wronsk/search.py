"""Seeded random search for rational families with a nonzero constant Wronskian.

Every trial draws its randomness from ``random.Random(f"{seed}:{index}")``,
so a report depends only on (n, config, seed) and never on worker count.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import linalg
from .errors import InvalidConfigError
from .laurent import LaurentPoly, Rational
from .rational import RationalFunction, family_pole_profile, wronskian_rational
from .wronskian import WronskianTag, classify_result

POLE_SET = (Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2),
            Rational(1, 2), Rational(-1, 2), Rational(3))

MAX_REDRAWS = 1000


@dataclass(frozen=True)
class SearchConfig:
    trials: int = 1000
    degree_bound: int = 2    # degree of the polynomial part
    pole_bound: int = 3      # distinct poles per family (at least 2 are used)
    order_bound: int = 2     # pole order per function
    coeff_bound: int = 5     # integer coefficients drawn from [-coeff_bound, coeff_bound]

    def validate(self):
        if self.trials < 1:
            raise InvalidConfigError("trials must be at least 1")
        if self.degree_bound < 0:
            raise InvalidConfigError("degree_bound must be nonnegative")
        if not 2 <= self.pole_bound <= len(POLE_SET):
            raise InvalidConfigError(f"pole_bound must lie in [2, {len(POLE_SET)}]")
        if self.order_bound < 1 or self.coeff_bound < 1:
            raise InvalidConfigError("order_bound and coeff_bound must be positive")


@dataclass
class SearchReport:
    seed: int
    n: int
    trials: int
    config: dict
    class_counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        return cls(**json.loads(text))


def _nonzero(rng: random.Random, bound: int) -> int:
    v = rng.randint(1, bound)
    return v if rng.random() < 0.5 else -v


def random_family(rng: random.Random, n: int, config: SearchConfig) -> list[RationalFunction]:
    """n linearly independent rational functions whose joint profile has >= 2 poles.

    Functions are drawn in partial-fraction coordinates, so independence is
    an exact rank test on those coordinates; rejected draws are redrawn.
    """
    for _ in range(MAX_REDRAWS):
        k = rng.randint(2, config.pole_bound)
        poles = sorted(rng.sample(POLE_SET, k))
        coords, fam = [], []
        for _ in range(n):
            vec: dict[tuple, int] = {}
            f = RationalFunction.zero()
            deg = rng.randint(0, config.degree_bound)
            poly = {e: rng.randint(-config.coeff_bound, config.coeff_bound) for e in range(deg + 1)}
            vec.update({("t", e): c for e, c in poly.items()})
            f = f + LaurentPoly(poly)
            for b in poles:
                if rng.random() < 0.3:
                    continue
                m = rng.randint(1, config.order_bound)
                for j in range(1, m + 1):
                    c = _nonzero(rng, config.coeff_bound) if j == m else \
                        rng.randint(-config.coeff_bound, config.coeff_bound)
                    vec[(b, j)] = c
                    if c:
                        f = f + RationalFunction.pole_term(b, j, c)
            coords.append(vec)
            fam.append(f)
        if len(family_pole_profile(fam)) < 2:
            continue
        keys = sorted({key for v in coords for key in v}, key=repr)
        if linalg.rank([[v.get(key, 0) for key in keys] for v in coords]) < n:
            continue
        return fam
    raise RuntimeError("could not draw an admissible family")


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def run_trial(n: int, config: SearchConfig, seed: int, index: int):
    """Return (tag value, counterexample or None) for one trial."""
    fam = random_family(trial_rng(seed, index), n, config)
    klass = classify_result(wronskian_rational(fam, "cofactor"))
    if klass.tag is not WronskianTag.NONZERO_CONSTANT:
        return klass.tag.value, None
    # independent second determinant path before reporting anything
    again = classify_result(wronskian_rational(fam, "bareiss"))
    if again.tag is not WronskianTag.NONZERO_CONSTANT or again.value != klass.value:
        raise AssertionError(f"determinant paths disagree on trial {index}")
    return klass.tag.value, {"trial": index, "functions": [str(f) for f in fam],
                             "value": str(klass.value)}


def _run_chunk(args):
    n, config, seed, start, stop = args
    return [run_trial(n, config, seed, i) for i in range(start, stop)]


def default_workers() -> int:
    env = os.environ.get("WRONSK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InvalidConfigError(f"WRONSK_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def conjecture_search(n: int, config: SearchConfig, seed: int,
                      workers: int | None = None) -> SearchReport:
    if n < 3:
        raise InvalidConfigError("the conjecture search is for n >= 3")
    config.validate()
    workers = workers or default_workers()
    chunk = max(1, min(250, config.trials // (4 * workers) or 1))
    jobs = [(n, config, seed, s, min(s + chunk, config.trials))
            for s in range(0, config.trials, chunk)]
    if workers == 1:
        results = [r for job in jobs for r in _run_chunk(job)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_run_chunk, jobs) for r in part]
    counts = {tag.value: 0 for tag in WronskianTag}
    found = []
    for tag, example in results:
        counts[tag] += 1
        if example is not None:
            found.append(example)
    return SearchReport(seed=seed, n=n, trials=config.trials, config=asdict(config),
                        class_counts=counts, counterexamples=found)

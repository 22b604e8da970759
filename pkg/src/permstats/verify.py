"""Exhaustive enumeration of S_n, joint distributions and theorem checks.

Every check scans all of S_n in lexicographic order.  The scan is split
into independent slices by first letter so it can fan out to worker
processes; slice results merge by summing counters.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import signed
from .perm import Permutation, inverse, sign, swap_values
from .poly import MultiPoly, binomial_expand
from .statistics import (
    ascent_count, cyclic_stats, depth, descent_count, displacement, drop_count,
    drp, excedance_count, linear_stats,
)
from .triple import phi_triple, phi_triple_image, phi_triple_inverse, trace_violations

__all__ = [
    "MAX_N", "MAX_VERIFY_N", "SCALAR_STATS", "SET_STATS", "THEOREMS",
    "DistributionTable", "CheckReport",
    "enumerate_sn", "joint_polynomial", "set_valued_distribution",
    "check_theorem", "binomial_expand",
]

MAX_N = 12
MAX_VERIFY_N = 9
DEFAULT_VARIABLES = ("q", "t", "x", "y", "s")


def _exc_hat_plus_fix_hat(p: Sequence[int]) -> int:
    return sum(1 for i in range(2, len(p) + 1) if p[i - 1] >= i)


def _exc_hat(p: Sequence[int]) -> int:
    return sum(1 for i in range(2, len(p) + 1) if p[i - 1] > i)


def _fix_hat(p: Sequence[int]) -> int:
    return sum(1 for i in range(2, len(p) + 1) if p[i - 1] == i)


SCALAR_STATS: dict[str, Callable[[Sequence[int]], int]] = {
    "depth": depth,
    "drp": drp,
    "exc": excedance_count,
    "des": descent_count,
    "asc": ascent_count,
    "exc-hat": _exc_hat,
    "aexc": drop_count,
    "fix-hat": _fix_hat,
    "exc-hat+fix-hat": _exc_hat_plus_fix_hat,
}


def _suc_set(p):
    return (linear_stats(p).suc_positions,)


def _fix_set(p):
    return (cyclic_stats(p).fix_positions_capped,)


def _linear_triple(p):
    s = linear_stats(p)
    return s.asc2_values, s.des_values, s.suc_values


def _cyclic_triple(p):
    s = cyclic_stats(p)
    return s.exc_hat_values, s.aexc_values, s.fix_hat_values


SET_STATS: dict[str, Callable[[Sequence[int]], tuple[tuple[int, ...], ...]]] = {
    "suc-set": _suc_set,
    "fix-set": _fix_set,
    "asc2-des-suc": _linear_triple,
    "exc-aexc-fix": _cyclic_triple,
}


def _stat_name(name: str) -> str:
    return name.strip().lower().replace("_", "-")


def enumerate_sn(n: int, first: int | None = None) -> Iterator[Permutation]:
    """All of S_n in lexicographic order, optionally only those starting with ``first``."""
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"n must be an integer in 1..{MAX_N}, got {n!r}")
    wrap = Permutation._trusted
    if first is None:
        for p in itertools.permutations(range(1, n + 1)):
            yield wrap(p)
        return
    if not 1 <= first <= n:
        raise ValueError(f"first letter {first} outside 1..{n}")
    rest = [x for x in range(1, n + 1) if x != first]
    for tail in itertools.permutations(rest):
        yield wrap((first, *tail))


def joint_polynomial(n: int, stats: Sequence[str], signed: bool = False,
                     variables: Sequence[str] | None = None) -> MultiPoly:
    """Sum over S_n of ``sign^signed * prod var_k ** stat_k(p)``.

    Variables default to ``q, t, x, y, s`` in the order the statistics
    are listed.
    """
    names = [_stat_name(s) for s in stats]
    if not names:
        raise ValueError("at least one statistic is required")
    unknown = [s for s in names if s not in SCALAR_STATS]
    if unknown:
        raise ValueError(f"unknown statistic(s) {unknown}; choose from {sorted(SCALAR_STATS)}")
    if variables is None:
        if len(names) > len(DEFAULT_VARIABLES):
            raise ValueError("too many statistics for the default variables")
        variables = DEFAULT_VARIABLES[:len(names)]
    funcs = [SCALAR_STATS[s] for s in names]
    counts: Counter = Counter()
    for p in enumerate_sn(n):
        key = tuple(f(p) for f in funcs)
        counts[key] += sign(p) if signed else 1
    return MultiPoly(variables, counts)


@dataclass(frozen=True)
class DistributionTable:
    """Histogram of a set-valued statistic over S_n."""
    statistic: str
    n: int
    counts: dict = field(compare=False)

    def __post_init__(self):
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("distribution counts must be positive")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @staticmethod
    def encode_key(key: tuple[tuple[int, ...], ...]) -> str:
        """``((5, 6), (1, 2), (3,))`` -> ``'{5,6};{1,2};{3}'``."""
        return ";".join("{" + ",".join(map(str, s)) + "}" for s in key)

    def rows(self) -> list[tuple[str, int]]:
        keys = sorted(self.counts, key=lambda k: (tuple(len(s) for s in k), k))
        return [(self.encode_key(k), self.counts[k]) for k in keys]

    def to_json(self) -> dict:
        return {"statistic": self.statistic, "n": self.n,
                "rows": [{"key": k, "count": c} for k, c in self.rows()]}


def set_valued_distribution(n: int, stat: str) -> DistributionTable:
    name = _stat_name(stat)
    if name not in SET_STATS:
        raise ValueError(f"unknown set statistic {stat!r}; choose from {sorted(SET_STATS)}")
    f = SET_STATS[name]
    counts = Counter(f(p) for p in enumerate_sn(n))
    return DistributionTable(name, n, dict(counts))


@dataclass(frozen=True)
class CheckReport:
    theorem: str
    n: int
    passed: bool
    witness: Permutation | None = None
    elapsed: float = 0.0
    detail: str = ""

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed check must carry a witness")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.theorem} n={self.n} ({self.elapsed:.2f}s)"
        if self.detail:
            text += f" {self.detail}"
        if self.witness is not None:
            text += f" witness={self.witness}"
        return text


# --- per-slice scanners --------------------------------------------------
#
# A scanner takes (n, first) and returns (witness, message, data) where
# data maps names to Counters; witness is the first failing permutation.

def _scan_suc_fix(n, first):
    suc, fix = Counter(), Counter()
    for p in enumerate_sn(n, first):
        suc[linear_stats(p).suc_positions] += 1
        fix[cyclic_stats(p).fix_positions_capped] += 1
    return None, "", {"suc": suc, "fix": fix}


def _scan_triple(n, first):
    lin, cyc = Counter(), Counter()
    for p in enumerate_sn(n, first):
        image = phi_triple_image(p)
        lt = _linear_triple(image)
        ct = _cyclic_triple(p)
        lin[_linear_triple(p)] += 1
        cyc[ct] += 1
        if lt != ct:
            return p, f"transport {lt} != {ct}", {}
        if phi_triple_inverse(image) != p:
            return p, "inverse(phi(p)) != p", {}
        if phi_triple_image(phi_triple_inverse(p)) != p:
            return p, "phi(inverse(s)) != s", {}
    return None, "", {"linear": lin, "cyclic": cyc}


def _scan_joint(n, first):
    left, right = Counter(), Counter()
    for p in enumerate_sn(n, first):
        left[depth(p), excedance_count(p)] += 1
        right[drp(p), descent_count(p)] += 1
    return None, "", {"depth-exc": left, "drp-des": right}


def _scan_signed(stat):
    f = SCALAR_STATS[stat]

    def scan(n, first):
        poly = Counter()
        for p in enumerate_sn(n, first):
            poly[f(p),] += sign(p)
        return None, "", {"poly": poly}
    return scan


def _scan_sign_bijection(n, first):
    by_class, image_class = Counter(), Counter()
    preimage = {}
    for w in enumerate_sn(n, first):
        s = sign(w)
        d = depth(w)
        fw = signed.f_map(w)
        if fw[0] != w[0] or sign(fw) != s or drp(fw) != d:
            return w, f"f={fw} breaks first letter, sign or drp=depth", {}
        if fw in preimage:
            return w, f"f({w}) = f({preimage[fw]}) = {fw}", {}
        preimage[fw] = w
        by_class[s, d] += 1
        image_class[sign(fw), drp(fw)] += 1

        v = signed.foata_map(w)
        if signed.foata_map_inverse(v) != w:
            return w, "foata roundtrip fails", {}
        if v[0] != w[0] or drop_count(w) != descent_count(v) or drp(v) != d:
            return w, f"foata image {v} breaks first letter, nexc=des or depth=drp", {}
        if w[0] >= 3:
            tw = swap_values(w, 1, 2)
            if signed.foata_map(tw) != swap_values(v, 1, 2):
                return w, "foata does not commute with the (1,2) twist", {}
            if depth(tw) != d or drp(tw) != drp(w):
                return w, "(1,2) twist changes depth or drp", {}
        elif w[0] == 1:
            stages = signed.psi1_detailed(w).stages
            for a, b in zip(stages, stages[1:]):
                if depth(b) != depth(a) - 1 or drp(b) != drp(a) - 1:
                    return w, f"transposition step {a} -> {b} is not a unit decrease", {}
    return None, "", {"domain": by_class, "image": image_class}


def _scan_displacement(n, first):
    for w in enumerate_sn(n, first):
        d = depth(w)
        if d != depth(inverse(w)) or d != displacement(w):
            return w, "depth, inverse depth and half displacement disagree", {}
    return None, "", {}


def _scan_drop_des(n, first):
    for p in enumerate_sn(n, first):
        image, trace = phi_triple(p)
        problems = trace_violations(p, image, trace)
        if problems:
            return p, "; ".join(problems), {}
    return None, "", {}


def _scan_eulerian(n, first):
    data = {k: Counter() for k in ("exc-hat+fix-hat", "asc", "des", "exc")}
    for p in enumerate_sn(n, first):
        for k, c in data.items():
            c[SCALAR_STATS[k](p)] += 1
    return None, "", data


# --- finishers -----------------------------------------------------------

def _univariate(counter: Counter, var: str = "q") -> MultiPoly:
    return MultiPoly((var,), {(k[0] if isinstance(k, tuple) else k,): c
                              for k, c in counter.items()})


def _finish_equal(a, b):
    def finish(n, data):
        ok = data[a] == data[b]
        return ok, f"{len(data[a])} keys" if ok else f"{a} and {b} tables differ"
    return finish


def _finish_joint(n, data):
    left = MultiPoly(("q", "t"), data["depth-exc"])
    right = MultiPoly(("q", "t"), data["drp-des"])
    return left == right, str(left) if left == right else f"{left} != {right}"


def _finish_signed(n, data):
    poly = _univariate(data["poly"])
    expected = binomial_expand(n)
    return poly == expected, str(poly) if poly == expected else f"{poly} != {expected}"


def _finish_sign_bijection(n, data):
    ok = data["domain"] == data["image"]
    return ok, "sign/depth classes match" if ok else "sign-class distributions differ"


def _finish_eulerian(n, data):
    polys = {k: _univariate(v, "t") for k, v in data.items()}
    ok = len(set(polys.values())) == 1
    return ok, str(polys["asc"]) if ok else ", ".join(f"{k}: {v}" for k, v in polys.items())


def _finish_ok(n, data):
    return True, ""


@dataclass(frozen=True)
class _Theorem:
    scan: Callable
    finish: Callable
    summary: str


THEOREMS: dict[str, _Theorem] = {
    "suc-fix": _Theorem(_scan_suc_fix, _finish_equal("suc", "fix"),
                        "SUC and FIX position sets are equidistributed"),
    "triple": _Theorem(_scan_triple, _finish_equal("linear", "cyclic"),
                       "phi_triple carries (Exc-hat, Aexc, Fix-hat) to (Asc2, Des, Suc)"),
    "depth-exc-drp-des": _Theorem(_scan_joint, _finish_joint,
                                  "(depth, exc) and (drp, des) are equidistributed"),
    "signed-depth": _Theorem(_scan_signed("depth"), _finish_signed,
                             "signed depth polynomial is (1-q)^(n-1)"),
    "signed-drp": _Theorem(_scan_signed("drp"), _finish_signed,
                           "signed drp polynomial is (1-q)^(n-1)"),
    "sign-bijection": _Theorem(_scan_sign_bijection, _finish_sign_bijection,
                               "f preserves first letter and sign, carries depth to drp"),
    "displacement": _Theorem(_scan_displacement, _finish_ok,
                             "depth(w) = depth(w^-1) = half total displacement"),
    "drop-des": _Theorem(_scan_drop_des, _finish_ok,
                         "gluing-trace lemmas and Drop = Des"),
    "eulerian": _Theorem(_scan_eulerian, _finish_eulerian,
                         "exc-hat + fix-hat, asc, des and exc share the Eulerian distribution"),
}


def _run_slice(args):
    theorem, n, first = args
    return THEOREMS[theorem].scan(n, first)


def check_theorem(theorem: str, n: int, jobs: int = 1) -> CheckReport:
    """Verify one identity exhaustively over S_n."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {list(THEOREMS)}")
    if not isinstance(n, int) or not 1 <= n <= MAX_VERIFY_N:
        raise ValueError(f"n must be in 1..{MAX_VERIFY_N}, got {n!r}")
    start = time.perf_counter()
    tasks = [(theorem, n, first) for first in range(1, n + 1)]
    if jobs > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_slice, tasks))
    else:
        parts = [_run_slice(t) for t in tasks]

    for witness, message, _ in parts:
        if witness is not None:
            return CheckReport(theorem, n, False, witness,
                               time.perf_counter() - start, message)
    merged: dict[str, Counter] = {}
    for _, _, data in parts:
        for k, c in data.items():
            merged.setdefault(k, Counter()).update(c)
    merged = {k: Counter({e: v for e, v in c.items() if v}) for k, c in merged.items()}
    passed, detail = THEOREMS[theorem].finish(n, merged)
    witness = None
    if not passed:
        # distribution mismatches have no single culprit; report the first permutation
        witness = Permutation._trusted(range(1, n + 1))
    return CheckReport(theorem, n, passed, witness, time.perf_counter() - start, detail)

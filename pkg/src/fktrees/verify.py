"""Extremal certificates: enumerate a class, eigensolve every member, and
compare the minimizer set against the predicted extremal family.

A certificate records the class key, the number of non-isomorphic members,
the minimal first Dirichlet eigenvalue, every minimizer within the tie
tolerance (two eigenvalues closer than the tolerance are treated as equal,
so false uniqueness verdicts cannot occur), the predicted set, and the
verdict.  Verdicts for the settled characterizations are MATCH/MISMATCH by
set equality of canonical codes; the diameter classes with D >= 5 are only
conjectured, so their verdicts are CONJECTURE-MATCH (every minimizer is one
of the conjectured candidates) or CONJECTURE-MISMATCH.

Sweeps iterate all feasible keys of one theorem up to a maximum order,
enumerating each order once and bucketing the population by key.  With
jobs > 1 the per-order work runs in separate processes; results are merged
in sorted key order, so the output is deterministic either way.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .enumeration import DEFAULT_CAP, ClassKey, free_trees
from .errors import CapExceededError, EmptyClassError
from .families import predicted_extremal
from .spectral import first_eigenpair
from .trees import TreeInvariants, canonical_code, invariants

__all__ = [
    "TIE_TOL",
    "ExtremalCertificate",
    "THEOREMS",
    "verify_class",
    "empty_class_certificate",
    "verify_theorem_sweep",
    "theorem_keys",
    "certificate_json",
    "all_match",
]

TIE_TOL = 1e-8

THEOREMS = ("T13", "T14", "Kloburstel", "D4")


@dataclass(frozen=True)
class ExtremalCertificate:
    key: ClassKey
    population: int
    lambda_min: float | None
    minimizers: tuple[str, ...]
    predicted: tuple[str, ...]
    verdict: str
    tol: float


def certificate_json(cert: ExtremalCertificate) -> dict:
    return {
        "key": str(cert.key),
        "population": cert.population,
        "lambda_min": cert.lambda_min,
        "minimizers": list(cert.minimizers),
        "predicted": list(cert.predicted),
        "verdict": cert.verdict,
        "tol": cert.tol,
    }


def all_match(certs) -> bool:
    return all(c.verdict in ("MATCH", "CONJECTURE-MATCH") for c in certs)


def _population_records(
    n: int, cap: int = DEFAULT_CAP
) -> list[tuple[str, TreeInvariants, float]]:
    """(canonical code text, invariants, lambda1) for every tree of order n."""
    records = []
    for tree in free_trees(n, cap):
        records.append(
            (
                canonical_code(tree).text,
                invariants(tree),
                first_eigenpair(tree).lambda1,
            )
        )
    return records


def _certificate_from_records(
    key: ClassKey, records, tol: float
) -> ExtremalCertificate:
    members = [(code, lam) for code, inv, lam in records if key.contains(inv)]
    if not members:
        return empty_class_certificate(key, tol)
    lam_min = min(lam for _, lam in members)
    minimizers = tuple(sorted(code for code, lam in members if lam <= lam_min + tol))
    prediction = predicted_extremal(key)
    predicted = tuple(sorted({canonical_code(t).text for t in prediction.trees}))
    if prediction.conjecture:
        verdict = (
            "CONJECTURE-MATCH"
            if set(minimizers) <= set(predicted)
            else "CONJECTURE-MISMATCH"
        )
    else:
        verdict = "MATCH" if minimizers == predicted else "MISMATCH"
    return ExtremalCertificate(
        key=key,
        population=len(members),
        lambda_min=lam_min,
        minimizers=minimizers,
        predicted=predicted,
        verdict=verdict,
        tol=tol,
    )


def empty_class_certificate(key: ClassKey, tol: float = TIE_TOL) -> ExtremalCertificate:
    return ExtremalCertificate(
        key=key,
        population=0,
        lambda_min=None,
        minimizers=(),
        predicted=(),
        verdict="EMPTY_CLASS",
        tol=tol,
    )


def verify_class(
    key: ClassKey, tol: float = TIE_TOL, cap: int = DEFAULT_CAP
) -> ExtremalCertificate:
    """Certificate for a single feasible class key.

    Raises EmptyClassError for infeasible parameters and CapExceededError
    when the order exceeds the enumeration cap.
    """
    if key.n > cap:
        raise CapExceededError(f"order {key.n} exceeds cap {cap}")
    if not key.feasible():
        raise EmptyClassError(f"class {key} admits no tree")
    records = _population_records(key.n, cap)
    return _certificate_from_records(key, records, tol)


def theorem_keys(theorem: str, n_max: int) -> list[ClassKey]:
    """All feasible keys a theorem speaks about, up to order n_max."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; pick one of {THEOREMS}")
    keys: list[ClassKey] = []
    if theorem == "T13":
        for n in range(3, n_max + 1):
            for m in range(1, n // 2 + 1):
                keys.append(ClassKey("NM", n, m=m))
    elif theorem == "T14":
        for n in range(3, n_max + 1):
            for m in range(1, n // 2 + 1):
                for b in range(2, n):
                    key = ClassKey("NMB", n, m=m, b=b)
                    if key.feasible():
                        keys.append(key)
    elif theorem == "Kloburstel":
        for n in range(3, n_max + 1):
            for k in range(1, n - 1):
                keys.append(ClassKey("NK", n, k=k))
    else:  # D4
        for n in range(5, n_max + 1):
            keys.append(ClassKey("ND", n, D=4))
    return keys


def verify_theorem_sweep(
    theorem: str,
    n_max: int,
    tol: float = TIE_TOL,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> list[ExtremalCertificate]:
    """Certificates for every feasible key of a theorem up to n_max.

    The sweep passes iff every certificate verdict is MATCH (or
    CONJECTURE-MATCH for conjectured classes).
    """
    if n_max > cap:
        raise CapExceededError(f"n_max {n_max} exceeds cap {cap}")
    keys = theorem_keys(theorem, n_max)
    orders = sorted({k.n for k in keys})
    if jobs > 1:
        worker = functools.partial(_population_records, cap=cap)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            record_lists = list(pool.map(worker, orders))
        records_by_n = dict(zip(orders, record_lists))
    else:
        records_by_n = {n: _population_records(n, cap) for n in orders}
    certs = [
        _certificate_from_records(key, records_by_n[key.n], tol) for key in keys
    ]
    return certs

"""Reproduction checks run by ``stringlink verify-paper`` and the acceptance tests.

Each check returns a :class:`CheckResult` carrying the computed values, so a
failing row explains itself.  All sampling is seeded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .braid import permutation, random_braid, random_pure_braid, sorting_braid, to_slice_word
from .diagram import (
    WHITEHEAD_EVENTS,
    StringLinkDiagram,
    borromean,
    commutator,
    compose,
    conjugate,
    embed,
    hopf,
    invert,
    linking_matrix,
    random_string_link,
    split_knot,
    trivial,
    validate,
    whitehead,
    wiggle,
)
from .magnus import DEFAULT_Q, delta, first_nonvanishing_weight, index_sequences, longitudes, mu


@dataclass
class CheckResult:
    number: int
    label: str
    passed: bool
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def row(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{self.number:2d}] {self.label} : {status}"
        return f"{line}  ({self.detail})" if self.detail else line


def pure_diagram(w) -> StringLinkDiagram:
    return validate(to_slice_word(w))


def _pairs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def sato_levine_values(d: StringLinkDiagram, q: int) -> dict[tuple[int, int], int]:
    return {(i, j): mu(d, (i, i, j, j), q) for i, j in _pairs(d.strands)}


def _all_mu(d: StringLinkDiagram, q: int, weight: int = 4) -> dict[tuple[int, ...], int]:
    q = max(q, weight - 1)
    return {I: mu(d, I, q) for I in index_sequences(d.strands, weight)}


def corpus() -> dict[str, StringLinkDiagram]:
    """Named diagrams used by the sanity checks."""
    return {
        "trivial2": trivial(2),
        "hopf": hopf(),
        "hopf_inverse": invert(hopf()),
        "whitehead": whitehead(),
        "borromean": borromean(),
        "clasp_commutator": commutator(hopf(), whitehead()),
        "trefoil_in_2": split_knot(2, 1, "trefoil"),
        "figure_eight_in_3": split_knot(3, 2, "figure_eight"),
        "whitehead_13_in_3": embed(whitehead(), 3, [1, 3]),
        "pure3": pure_diagram(random_pure_braid(3, 5, 11)),
        "pure4": pure_diagram(random_pure_braid(4, 4, 12)),
        "random2": random_string_link(2, 10, 3),
        "random3": random_string_link(3, 10, 7),
    }


# -- individual criteria -----------------------------------------------------


def check_commutator_witness(q: int = DEFAULT_Q) -> CheckResult:
    c = commutator(hopf(), whitehead())
    values = {2: (mu(c, (1, 1, 2, 2), q), delta(c, (1, 1, 2, 2), q))}
    for n in (3, 4):
        e = embed(c, n, [1, 2])
        values[n] = (mu(e, (1, 1, 2, 2), q), delta(e, (1, 1, 2, 2), q))
    ok = all(abs(m) == 1 and d == 0 for m, d in values.values())
    detail = ", ".join(f"n={n}: mu={m} delta={d}" for n, (m, d) in values.items())
    return CheckResult(1, "mu_C(1122) = ±1", ok, detail, {"values": values})


def check_pure_braid_vanishing(q: int = DEFAULT_Q, seeds: int = 100) -> CheckResult:
    bad_comm, bad_general = [], []
    for seed in range(seeds):
        n, length = 2 + seed % 3, 1 + seed % 12
        for only, bad in ((True, bad_comm), (False, bad_general)):
            d = pure_diagram(random_pure_braid(n, length, seed, commutator_only=only))
            nonzero = {k: v for k, v in sato_levine_values(d, q).items() if v}
            if nonzero:
                bad.append((seed, nonzero))
    ok = not bad_comm and not bad_general
    detail = (f"commutator-only: {seeds - len(bad_comm)}/{seeds} zero; "
              f"general: {seeds - len(bad_general)}/{seeds} zero")
    if bad_general:
        seed, vals = bad_general[0]
        detail += f"; e.g. general seed {seed}: {vals}"
    return CheckResult(2, "pure braid mu(iijj) = 0", ok, detail,
                       {"commutator_failures": bad_comm, "general_failures": bad_general})


def check_conjugation_vanishing(q: int = DEFAULT_Q, samples: int = 50) -> CheckResult:
    nonzero, mismatched, lk_zero, lk_zero_bad = 0, 0, 0, 0
    for k in range(samples):
        n = 2 + k % 3
        s = random_string_link(n, 8, k)
        p = pure_diagram(random_pure_braid(n, 1 + k % 6, 1000 + k))
        conj = sato_levine_values(conjugate(s, p), q)
        plain = sato_levine_values(p, q)
        if any(conj.values()):
            nonzero += 1
        if conj != plain:
            mismatched += 1
        if not any(any(row) for row in linking_matrix(p)):
            lk_zero += 1
            lk_zero_bad += any(conj.values())
    ok = nonzero == 0
    detail = (f"{samples - nonzero}/{samples} zero; mu(sps^-1) = mu(p) in "
              f"{samples - mismatched}/{samples}; lk-zero p: {lk_zero - lk_zero_bad}/{lk_zero} zero")
    return CheckResult(3, "conjugate mu(iijj) = 0", ok, detail,
                       {"nonzero": nonzero, "mismatched": mismatched,
                        "lk_zero": lk_zero, "lk_zero_nonzero": lk_zero_bad})


def additivity_pool() -> list[StringLinkDiagram]:
    """Linking-number-zero string links of widths 2 and 3."""
    pool = [whitehead(), invert(whitehead())]
    for k in range(2):
        pool.append(commutator(random_string_link(2, 5, 40 + k), random_string_link(2, 5, 50 + k)))
    pool.append(conjugate(random_string_link(2, 6, 60), whitehead()))
    for pos in ([1, 2], [2, 3], [1, 3]):
        pool.append(embed(whitehead(), 3, pos))
    for k in range(2):
        pool.append(pure_diagram(random_pure_braid(3, 1, 70 + k, commutator_only=True)))
        pool.append(commutator(random_string_link(3, 4, 80 + k), random_string_link(3, 4, 90 + k)))
        s = random_string_link(3, 5, 100 + k)
        pool.append(conjugate(s, pure_diagram(random_pure_braid(3, 1, 110 + k, commutator_only=True))))
    return pool


def check_additivity(q: int = DEFAULT_Q) -> CheckResult:
    pool = additivity_pool()
    values = [sato_levine_values(d, q) for d in pool]
    total = failures = 0
    for a, b in itertools.product(range(len(pool)), repeat=2):
        if pool[a].strands != pool[b].strands:
            continue
        ab = sato_levine_values(compose(pool[a], pool[b]), q)
        total += 1
        if any(ab[k] != values[a][k] + values[b][k] for k in ab):
            failures += 1
    return CheckResult(4, "mu(ab) = mu(a) + mu(b) on lk = 0", failures == 0,
                       f"{total - failures}/{total} pairs additive", {"pairs": total})


def check_commutator_linking(pairs: int = 100) -> CheckResult:
    bad = 0
    for k in range(pairs):
        n = 2 + k % 3
        a, b = random_string_link(n, 6, 2 * k), random_string_link(n, 6, 2 * k + 1)
        if any(any(row) for row in linking_matrix(commutator(a, b))):
            bad += 1
    return CheckResult(5, "lk([a,b]) = 0", bad == 0, f"{pairs - bad}/{pairs} zero")


def degree_one_matrix(d: StringLinkDiagram) -> list[list[int]]:
    """``[i][j]`` = coefficient of ``X_i`` in the longitude of component ``j``."""
    longs = longitudes(d, 1)
    n = d.strands
    return [[longs[j].coefficient((i + 1,)) for j in range(n)] for i in range(n)]


def sample_pure_braids(count: int):
    """Random braid words closed up by a sorting braid, so they are pure."""
    for k in range(count):
        n, length = 2 + k % 4, k % 17
        w = random_braid(n, length, 5000 + k)
        yield w * sorting_braid(permutation(w))


def check_degree_one(count: int = 1000) -> CheckResult:
    diagrams = [pure_diagram(w) for w in sample_pure_braids(count)] + list(corpus().values())
    bad = sum(degree_one_matrix(d) != linking_matrix(d) for d in diagrams)
    return CheckResult(6, "degree-1 longitude = signed crossing lk", bad == 0,
                       f"{len(diagrams) - bad}/{len(diagrams)} agree")


def wiggles_of(d: StringLinkDiagram):
    widths = d.word.widths()
    for k, side in ((0, "right"), (len(d.events) // 2, "left"), (len(d.events), "right")):
        yield wiggle(d, k, widths[k], side)
        yield wiggle(d, k, 1, "left" if side == "right" else "right")


def check_null_and_wiggle(q: int = DEFAULT_Q) -> CheckResult:
    null_bad, wiggle_bad, wiggles = [], [], 0
    for name, d in corpus().items():
        if any(_all_mu(compose(d, invert(d)), q).values()):
            null_bad.append(name)
        base = _all_mu(d, q)
        for w in wiggles_of(d):
            wiggles += 1
            if _all_mu(w, q) != base:
                wiggle_bad.append(name)
    n = len(corpus())
    ok = not null_bad and not wiggle_bad
    return CheckResult(7, "mu(d d^-1) = 0 and mu(wiggle d) = mu(d)", ok,
                       f"null {n - len(null_bad)}/{n}, wiggles {wiggles - len(wiggle_bad)}/{wiggles}")


def check_borromean(q: int = DEFAULT_Q) -> CheckResult:
    b = borromean()
    w = first_nonvanishing_weight(b, 4, q)
    m = mu(b, (1, 2, 3), q)
    return CheckResult(8, "Borromean first weight 3, mu(123) = ±1", w == 3 and abs(m) == 1,
                       f"weight={w} mu(123)={m}")


def check_split_knot_centrality(q: int = DEFAULT_Q, samples: int = 20) -> CheckResult:
    bad = 0
    for k in range(samples):
        n = 2 + k % 2
        i = 1 + k % n
        knot = split_knot(n, i, "trefoil")
        sigma = random_string_link(n, 6, 300 + k)
        if _all_mu(compose(knot, sigma), q) != _all_mu(compose(sigma, knot), q):
            bad += 1
    return CheckResult(9, "K_i sigma and sigma K_i share mu", bad == 0,
                       f"{samples - bad}/{samples} agree")


def check_whitehead_lock(q: int = DEFAULT_Q) -> CheckResult:
    w = whitehead()
    lk = linking_matrix(w)[0][1]
    sl = mu(w, (1, 1, 2, 2), q)
    locked = w.events == WHITEHEAD_EVENTS
    return CheckResult(10, "Whitehead lk = 0, mu(1122) = ±1", lk == 0 and abs(sl) == 1 and locked,
                       f"lk={lk} mu(1122)={sl} locked_word={locked}")


CHECKS: tuple[Callable[..., CheckResult], ...] = (
    check_commutator_witness,
    check_pure_braid_vanishing,
    check_conjugation_vanishing,
    check_additivity,
    check_commutator_linking,
    check_degree_one,
    check_null_and_wiggle,
    check_borromean,
    check_split_knot_centrality,
    check_whitehead_lock,
)


def run_all(q: int = DEFAULT_Q) -> list[CheckResult]:
    out = []
    for check in CHECKS:
        if "q" in check.__code__.co_varnames[: check.__code__.co_argcount]:
            out.append(check(q=q))
        else:
            out.append(check())
    return out

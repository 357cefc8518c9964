"""Nilpotency series and the executable form of the index bound.

Four series are computed for an ideal B of an algebra L:

* right powers      B^1 = B, B^{n+1} = B^n . B
* left powers       ^1B = B, ^{1+n}B = B . ^nB
* general powers    B^{{n}} = sum of B^{{i}} . B^{{j}} over i+j = n
* strong filtration B^<n>, spanned by all products of elements of L with at
  least n factors in B, computed as a least fixpoint over weight levels

plus the translate series D . L^k and L^k . D, the chain B_k = B^k + Es(B),
and a battery of inclusion checks. Negative verdicts are reported as
definitive only when they come from a genuine fixed point, never from an
exhausted bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from random import Random

from .algebra import AlgebraDef, IdealHandle, bracket, es_of, subspace_product
from .fields import Field
from .linalg import (
    Subspace,
    Vector,
    contains,
    is_subspace_of,
    span,
    subspace_sum,
    zero_vector,
)


class SeriesKind(str, Enum):
    RIGHT_POWERS = "right_powers"
    LEFT_POWERS = "left_powers"
    GENERAL_POWERS = "general_powers"
    STRONG_FILTRATION = "strong_filtration"
    BK_CHAIN = "bk_chain"
    RIGHT_TRANSLATES = "right_translates"
    LEFT_TRANSLATES = "left_translates"


class ChainVerificationError(RuntimeError):
    """A series invariant that follows from the theory failed on an instance."""


# kinds whose recurrence is a function of the previous entry alone, so a
# repeated entry is a genuine fixed point and the table extends constantly
_ONE_STEP_KINDS = frozenset({
    SeriesKind.RIGHT_POWERS, SeriesKind.LEFT_POWERS,
    SeriesKind.RIGHT_TRANSLATES, SeriesKind.LEFT_TRANSLATES,
    SeriesKind.BK_CHAIN,
})


@dataclass(frozen=True)
class SeriesTable:
    kind: SeriesKind
    entries: tuple[tuple[int, Subspace], ...]
    stabilized: bool
    terminated_zero: bool

    def dims(self) -> list[int]:
        return [s.dim for _, s in self.entries]

    def entry(self, k: int) -> Subspace:
        """Entry at index k, extending past the computed range when sound.

        Zero termination extends any kind (zero is absorbing). A stabilized
        table extends only for one-step recurrences, where a repeat really is
        a fixed point; the general/strong tables never extend that way, and
        an unfinished table raises KeyError past its range.
        """
        for idx, s in self.entries:
            if idx == k:
                return s
        last_k, last = self.entries[-1]
        if k > last_k and (self.terminated_zero or
                           (self.stabilized and self.kind in _ONE_STEP_KINDS)):
            return last
        raise KeyError(f"{self.kind.value} table has no entry {k}")

    def first_zero_index(self) -> int | None:
        """Least index k >= 1 whose entry is the zero subspace."""
        for k, s in self.entries:
            if k >= 1 and s.is_zero():
                return k
        return None


def _one_step_series(b: IdealHandle, n_max: int, kind: SeriesKind,
                     multiply_on_right: bool) -> SeriesTable:
    alg = b.algebra
    entries: list[tuple[int, Subspace]] = [(0, alg.full_space()), (1, b.space)]
    current = b.space
    terminated_zero = current.is_zero()
    stabilized = False
    n = 1
    while not terminated_zero and not stabilized and n < n_max:
        if multiply_on_right:
            nxt = subspace_product(current, b.space, alg)
        else:
            nxt = subspace_product(b.space, current, alg)
        n += 1
        entries.append((n, nxt))
        if nxt.is_zero():
            terminated_zero = True
        elif nxt == current:
            # fixed point of X -> X.B (resp. B.X): every later entry is equal
            stabilized = True
        current = nxt
    return SeriesTable(kind, tuple(entries), stabilized, terminated_zero)


def right_powers(b: IdealHandle, n_max: int) -> SeriesTable:
    """B^0 = L, B^1 = B, B^{n+1} = B^n . B, stopping early at zero or a fixed point."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return _one_step_series(b, n_max, SeriesKind.RIGHT_POWERS, multiply_on_right=True)


def left_powers(b: IdealHandle, n_max: int) -> SeriesTable:
    """^0B = L, ^1B = B, ^{1+n}B = B . ^nB, the left-sided dual."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return _one_step_series(b, n_max, SeriesKind.LEFT_POWERS, multiply_on_right=False)


def general_powers(b: IdealHandle, n_max: int) -> SeriesTable:
    """Spans of length-n products under arbitrary bracketing.

    A length-n product splits uniquely at its top node, so the exact
    recurrence B^{{n}} = sum over i+j=n of B^{{i}} . B^{{j}} needs no
    fixpoint. For an ideal the chain decreases, so zero is absorbing and the
    loop may stop there; a nonzero repeat is recorded as stabilized but is
    not treated as definitive.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    alg = b.algebra
    levels: dict[int, Subspace] = {1: b.space}
    entries: list[tuple[int, Subspace]] = [(1, b.space)]
    terminated_zero = b.space.is_zero()
    memo: dict[tuple[Subspace, Subspace], Subspace] = {}
    n = 1
    while not terminated_zero and n < n_max:
        n += 1
        acc = alg.zero_space()
        for i in range(1, n):
            pair = (levels[i], levels[n - i])
            if pair not in memo:
                memo[pair] = subspace_product(pair[0], pair[1], alg)
            acc = subspace_sum(acc, memo[pair])
        levels[n] = acc
        entries.append((n, acc))
        terminated_zero = acc.is_zero()
    stabilized = len(entries) >= 2 and entries[-1][1] == entries[-2][1] \
        and not terminated_zero
    return SeriesTable(SeriesKind.GENERAL_POWERS, tuple(entries), stabilized,
                       terminated_zero)


def strong_filtration(b: IdealHandle, n_max: int) -> SeriesTable:
    """Weight filtration B^<m> as a simultaneous least fixpoint.

    Levels 0..n_max start at (L, B, 0, ..., 0) and absorb every product
    W_i . W_j into level min(i+j, n_max) until nothing changes; capping the
    target level is sound because the true filtration is decreasing. The
    fixpoint exit condition is precisely W_i . W_j inside W_{i+j} for all
    computed pairs. Dimensions only grow, so the round cap below cannot be
    hit without a bug.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    alg = b.algebra
    w: list[Subspace] = [alg.full_space(), b.space] + \
        [alg.zero_space() for _ in range(n_max - 1)]
    memo: dict[tuple[Subspace, Subspace], Subspace] = {}
    for _ in range(n_max * alg.dim + 2):
        changed = False
        for i in range(n_max + 1):
            if w[i].is_zero():
                continue
            for j in range(n_max + 1):
                if (i == 0 and j == 0) or w[j].is_zero():
                    continue
                pair = (w[i], w[j])
                if pair not in memo:
                    memo[pair] = subspace_product(pair[0], pair[1], alg)
                p = memo[pair]
                if p.is_zero():
                    continue
                t = min(i + j, n_max)
                if not is_subspace_of(p, w[t]):
                    w[t] = subspace_sum(w[t], p)
                    changed = True
        if not changed:
            break
    else:
        raise AssertionError("strong filtration failed to stabilize within its round cap")
    for m in range(1, n_max + 1):
        assert is_subspace_of(w[m], w[m - 1]), "strong filtration is not decreasing"
    entries: list[tuple[int, Subspace]] = []
    terminated_zero = False
    for m in range(1, n_max + 1):
        entries.append((m, w[m]))
        if w[m].is_zero():
            terminated_zero = True
            break
    stabilized = len(entries) >= 2 and entries[-1][1] == entries[-2][1] \
        and not terminated_zero
    return SeriesTable(SeriesKind.STRONG_FILTRATION, tuple(entries), stabilized,
                       terminated_zero)


def _translate_series(d: Subspace, k_max: int, alg: AlgebraDef, kind: SeriesKind,
                      multiply_on_right: bool) -> SeriesTable:
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    full = alg.full_space()
    entries: list[tuple[int, Subspace]] = [(0, d)]
    current = d
    terminated_zero = current.is_zero()
    stabilized = False
    k = 0
    while not terminated_zero and not stabilized and k < k_max:
        nxt = subspace_product(current, full, alg) if multiply_on_right \
            else subspace_product(full, current, alg)
        k += 1
        entries.append((k, nxt))
        if nxt.is_zero():
            terminated_zero = True
        elif nxt == current:
            stabilized = True
        current = nxt
    return SeriesTable(kind, tuple(entries), stabilized, terminated_zero)


def right_translates(d: Subspace, k_max: int, alg: AlgebraDef) -> SeriesTable:
    """D, D.L, (D.L).L, ...: spans of right products d a_k ... a_1."""
    return _translate_series(d, k_max, alg, SeriesKind.RIGHT_TRANSLATES, True)


def left_translates(d: Subspace, k_max: int, alg: AlgebraDef) -> SeriesTable:
    """D, L.D, L.(L.D), ...: spans of left products a_1(a_2(...(a_k d)))."""
    return _translate_series(d, k_max, alg, SeriesKind.LEFT_TRANSLATES, False)


@dataclass(frozen=True)
class EsNilVerdict:
    """Least k with the k-fold translate of Es(B) zero, if any.

    `definitive` distinguishes a genuine fixed point ("no k ever works") from
    an exhausted k_max. Since Es(B) is an ideal its translate series is
    decreasing, so with the default k_max = dim+1 the verdict is always
    definitive.
    """

    k: int | None
    definitive: bool
    table: SeriesTable

    @property
    def found(self) -> bool:
        return self.k is not None


def es_nil_index(b: IdealHandle, side: str, k_max: int | None = None) -> EsNilVerdict:
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    alg = b.algebra
    if k_max is None:
        k_max = alg.dim + 1
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    d = es_of(b)
    if side == "right":
        table = right_translates(d, k_max, alg)
    else:
        table = left_translates(d, k_max, alg)
    for k, s in table.entries:
        if s.is_zero():
            return EsNilVerdict(max(k, 1), True, table)
    return EsNilVerdict(None, table.stabilized, table)


def bk_chain(b: IdealHandle, k_max: int) -> SeriesTable:
    """The chain B_0 = L, B_1 = B, B_k = B^k + Es(B) for k >= 2.

    Each entry is re-verified to be a two-sided ideal and the chain to be
    decreasing; a failure would contradict the theory on a verified algebra,
    so it is raised as ChainVerificationError rather than reported. The
    stabilized flag is set only once the underlying power series has stopped,
    which makes the constant extension in entry() sound.
    """
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    alg = b.algebra
    es = es_of(b)
    powers = right_powers(b, k_max)
    entries: list[tuple[int, Subspace]] = [(0, alg.full_space()), (1, b.space)]
    terminated_zero = False
    stabilized = False
    for k in range(2, k_max + 1):
        bk = subspace_sum(powers.entry(k), es)
        entries.append((k, bk))
        if bk.is_zero():
            terminated_zero = True
            break
        if bk == entries[-2][1] and powers.entries[-1][0] <= k:
            # underlying power series has already stopped, so B_k is constant now
            stabilized = True
            break
    checked: set[Subspace] = set()
    full = alg.full_space()
    for k, space in entries:
        if space in checked:
            continue
        checked.add(space)
        if not is_subspace_of(subspace_product(space, full, alg), space) or \
                not is_subspace_of(subspace_product(full, space, alg), space):
            raise ChainVerificationError(f"B_{k} is not a two-sided ideal")
    for (k, upper), (_, lower) in zip(entries, entries[1:]):
        if not is_subspace_of(lower, upper):
            raise ChainVerificationError(f"B_{k} does not contain B_{k + 1}")
    return SeriesTable(SeriesKind.BK_CHAIN, tuple(entries), stabilized, terminated_zero)


def random_vector_in(space: Subspace, rng: Random, field: Field) -> Vector:
    """Random field combination of the basis rows (zero when the space is zero)."""
    v = zero_vector(field, space.ambient_dim)
    for row in space.basis:
        v = v + Vector(field, row).scale(field.random(rng))
    return v


def _random_right_product(alg: AlgebraDef, b_space: Subspace, length: int,
                          weight: int, rng: Random) -> Vector:
    """Evaluate a random right product with `weight` factors drawn from b_space."""
    positions = set(rng.sample(range(length), weight))
    factors = []
    for pos in range(length):
        if pos in positions:
            factors.append(random_vector_in(b_space, rng, alg.field))
        else:
            factors.append(random_vector_in(alg.full_space(), rng, alg.field))
    acc = factors[0]
    for f in factors[1:]:
        acc = bracket(acc, f, alg)
    return acc


@dataclass(frozen=True)
class InclusionCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class InclusionReport:
    seed: int
    samples: int
    checks: tuple[InclusionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_paper_inclusions(b: IdealHandle, n_max: int, k_max: int | None = None,
                            seed: int = 0, samples: int = 20) -> InclusionReport:
    """Machine-check the inclusion lemmas on one ideal.

    (a) B^n inside ^nB + Es(B); (b) sampled right products of weight n lie in
    B_n = B^n + Es(B); (c) with B Es_k-right nil, sampled right products of
    weight >= 2l lie in (B^l).L^k; (d) B^<i> . B^<j> inside B^<i+j>;
    (e) B^k inside B^{{k}} inside B^<k>. Sampling is seeded; the seed and
    sample count are part of the report.
    """
    alg = b.algebra
    if k_max is None:
        k_max = alg.dim + 1
    rng = Random(seed)
    checks: list[InclusionCheck] = []

    es = es_of(b)
    rp = right_powers(b, n_max)
    lp = left_powers(b, n_max)
    gp = general_powers(b, n_max)
    sf = strong_filtration(b, n_max)
    chain = bk_chain(b, max(2, n_max))
    es_right = es_nil_index(b, "right", k_max)

    # (a) right powers inside left powers + Es(B)
    for n in range(1, n_max + 1):
        try:
            lhs, rhs = rp.entry(n), subspace_sum(lp.entry(n), es)
        except KeyError:
            break
        ok = is_subspace_of(lhs, rhs)
        checks.append(InclusionCheck(
            f"right_power_{n}_in_left_plus_es", ok,
            f"dim B^{n} = {lhs.dim}, dim (^{n}B + Es) = {rhs.dim}"))

    # (b) sampled right products of weight n lie in B_n
    for n in range(1, min(3, n_max) + 1):
        bad = 0
        for _ in range(samples):
            length = rng.randint(n, n + 2)
            v = _random_right_product(alg, b.space, length, n, rng)
            try:
                target = chain.entry(n)
            except KeyError:
                target = subspace_sum(rp.entry(n), es)
            if not contains(target, v):
                bad += 1
        checks.append(InclusionCheck(
            f"weight_{n}_right_products_in_chain", bad == 0,
            f"{samples - bad}/{samples} sampled products inside B_{n}"))

    # (c) high-weight right products land in the k-translated power
    if es_right.found:
        k = es_right.k
        for ell in (k, k + 1):
            try:
                power = rp.entry(ell)
            except KeyError:
                continue
            translated = right_translates(power, k, alg).entry(k)
            bad = 0
            for _ in range(samples):
                length = rng.randint(2 * ell, 2 * ell + 2)
                weight = rng.randint(2 * ell, length)
                v = _random_right_product(alg, b.space, length, weight, rng)
                if not contains(translated, v):
                    bad += 1
            checks.append(InclusionCheck(
                f"weight_{2 * ell}_right_products_in_power_{ell}_translate_{k}",
                bad == 0,
                f"{samples - bad}/{samples} sampled products inside (B^{ell}).L^{k}"))

    # (d) filtration levels multiply into their weight sum
    memo: dict[tuple[Subspace, Subspace], Subspace] = {}
    level = {0: alg.full_space()}
    level.update({m: s for m, s in sf.entries})
    max_level = max(level)
    ok_d = True
    worst = ""
    for i in sorted(level):
        for j in sorted(level):
            if i == 0 and j == 0:
                continue
            target_idx = i + j
            try:
                target = sf.entry(target_idx) if target_idx >= 1 else level[0]
            except KeyError:
                continue
            pair = (level[i], level[j])
            if pair not in memo:
                memo[pair] = subspace_product(pair[0], pair[1], alg)
            if not is_subspace_of(memo[pair], target):
                ok_d = False
                worst = f"B^<{i}> . B^<{j}> escapes B^<{i + j}>"
    checks.append(InclusionCheck(
        "filtration_products_respect_weight", ok_d,
        worst or f"all products up to level {max_level} respected"))

    # (e) powers inside general powers inside the filtration
    for k in range(1, n_max + 1):
        try:
            bp, gk, wk = rp.entry(k), gp.entry(k), sf.entry(k)
        except KeyError:
            break
        ok = is_subspace_of(bp, gk) and is_subspace_of(gk, wk)
        checks.append(InclusionCheck(
            f"power_sandwich_{k}", ok,
            f"dims {bp.dim} <= {gk.dim} <= {wk.dim}"))

    return InclusionReport(seed, samples, tuple(checks))


@dataclass(frozen=True)
class SeriesBundle:
    right: SeriesTable
    left: SeriesTable
    general: SeriesTable
    strong: SeriesTable
    chain: SeriesTable
    es_space: Subspace
    es_right: EsNilVerdict
    es_left: EsNilVerdict


def compute_series(b: IdealHandle, n_max: int, k_max: int | None = None) -> SeriesBundle:
    """All series tables and Es translate verdicts for one ideal."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    return SeriesBundle(
        right=right_powers(b, n_max),
        left=left_powers(b, n_max),
        general=general_powers(b, n_max),
        strong=strong_filtration(b, n_max),
        chain=bk_chain(b, n_max),
        es_space=es_of(b),
        es_right=es_nil_index(b, "right", k_max),
        es_left=es_nil_index(b, "left", k_max),
    )


FOUND = "found"
NEVER = "never"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class NilpotencyProfile:
    right_index: int | None
    right_status: str
    left_index: int | None
    left_status: str
    general_index: int | None
    general_status: str
    strong_index: int | None
    strong_status: str
    es_right_nil_k: int | None
    es_right_definitive: bool
    es_left_nil_k: int | None
    es_left_definitive: bool
    theorem_bound: int | None
    alt_bound: int | None
    bound_satisfied: bool | None
    bound_verdict: str  # "satisfied" | "violated" | "undetermined" | "n/a"


def index_bound(n: int) -> int:
    """The strong-nilpotency degree bound 4n^2 - 2n + 1."""
    return 4 * n * n - 2 * n + 1


def _one_step_status(table: SeriesTable) -> tuple[int | None, str]:
    idx = table.first_zero_index()
    if idx is not None:
        return idx, FOUND
    return None, NEVER if table.stabilized else UNDETERMINED


def profile_from_series(bundle: SeriesBundle, n_max: int) -> NilpotencyProfile:
    right_index, right_status = _one_step_status(bundle.right)
    left_index, left_status = _one_step_status(bundle.left)

    general_index = bundle.general.first_zero_index()
    strong_index = bundle.strong.first_zero_index()
    if right_status == NEVER:
        # B^n contains the nonzero fixed point for every n, and
        # B^n <= B^{{n}} <= B^<n>, so neither of the larger series can vanish.
        general_status = strong_status = NEVER
        general_index = strong_index = None
    else:
        general_status = FOUND if general_index is not None else UNDETERMINED
        strong_status = FOUND if strong_index is not None else UNDETERMINED

    theorem_bound = index_bound(right_index) if right_index is not None else None
    alt_bound = None
    if right_index is not None and bundle.es_right.found:
        alt_bound = index_bound(max(right_index, bundle.es_right.k))

    if theorem_bound is None:
        bound_satisfied, bound_verdict = None, "n/a"
    elif strong_index is not None:
        bound_satisfied = strong_index <= theorem_bound
        check_bound = alt_bound if alt_bound is not None else theorem_bound
        if strong_index <= check_bound:
            bound_verdict = "satisfied"
        else:
            bound_verdict = "violated" if bundle.es_right.found else "n/a"
    else:
        check_bound = alt_bound if alt_bound is not None else theorem_bound
        if bundle.es_right.found and n_max >= check_bound:
            # the theorem guarantees a strong index at most check_bound
            bound_satisfied, bound_verdict = False, "violated"
        else:
            bound_satisfied, bound_verdict = None, "undetermined"

    if right_index is not None and general_index is not None:
        assert right_index <= general_index, "index sandwich violated (right/general)"
    if general_index is not None and strong_index is not None:
        assert general_index <= strong_index, "index sandwich violated (general/strong)"

    return NilpotencyProfile(
        right_index=right_index, right_status=right_status,
        left_index=left_index, left_status=left_status,
        general_index=general_index, general_status=general_status,
        strong_index=strong_index, strong_status=strong_status,
        es_right_nil_k=bundle.es_right.k, es_right_definitive=bundle.es_right.definitive,
        es_left_nil_k=bundle.es_left.k, es_left_definitive=bundle.es_left.definitive,
        theorem_bound=theorem_bound, alt_bound=alt_bound,
        bound_satisfied=bound_satisfied, bound_verdict=bound_verdict,
    )


def nilpotency_profile(b: IdealHandle, n_max: int, k_max: int | None = None) -> NilpotencyProfile:
    """Assemble every index, the Es verdicts and the bound check for one ideal.

    When a right index n is found, n_max should be at least 4n^2 - 2n + 1 for
    the bound check to be decidable; otherwise it reports undetermined.
    """
    return profile_from_series(compute_series(b, n_max, k_max), n_max)

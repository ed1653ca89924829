"""
The minimal semistable Schubert variety for the torus action on G(r, n)
with the linearization n * omega_r, and a standard monomial witness search.

A witness of degree ``d`` is a chain ``u_1 <= u_2 <= ... <= u_{dn}`` of
tuples, each below ``w``, in which every value of ``[1, n]`` occurs exactly
``d * r`` times. The product of the corresponding Pluecker coordinates is a
T-invariant standard monomial that does not vanish identically on X(w).
"""

from __future__ import annotations

__all__ = [
    "NonCoprimeError", "SemistableWitness", "require_coprime",
    "minimal_semistable", "is_semistable_nonempty", "semistable_witness",
    "is_valid_witness",
]

from dataclasses import dataclass

from .core import (
    ColumnTuple, GrassmannianContext, InvalidTupleError, all_tuples, bruhat_leq,
)


class NonCoprimeError(InvalidTupleError):
    """Raised when a verdict is requested for gcd(r, n) != 1."""


@dataclass(frozen=True)
class SemistableWitness:
    chain: tuple[ColumnTuple, ...]
    degree: int = 1


def require_coprime(ctx: GrassmannianContext) -> None:
    if not ctx.coprime:
        raise NonCoprimeError(
            f"r={ctx.r} and n={ctx.n} are not coprime; semistability differs from stability there"
        )


def minimal_semistable(ctx: GrassmannianContext) -> ColumnTuple:
    """
    ``(a_1, ..., a_r)`` with ``a_i`` the least integer such that ``a_i * r >= i * n``.

    >>> minimal_semistable(GrassmannianContext(4, 9))
    (3, 5, 7, 9)
    """
    require_coprime(ctx)
    r, n = ctx.r, ctx.n
    return tuple((i * n + r - 1) // r for i in range(1, r + 1))


def is_semistable_nonempty(w: ColumnTuple, ctx: GrassmannianContext) -> bool:
    return bruhat_leq(minimal_semistable(ctx), w)


def is_valid_witness(witness: SemistableWitness, w: ColumnTuple, ctx: GrassmannianContext) -> bool:
    chain, d = witness.chain, witness.degree
    if d < 1 or len(chain) != d * ctx.n:
        return False
    if not all(bruhat_leq(u, w) for u in chain):
        return False
    if not all(bruhat_leq(u, v) for u, v in zip(chain, chain[1:])):
        return False
    counts = [0] * (ctx.n + 1)
    for u in chain:
        for b in u:
            counts[b] += 1
    return all(c == d * ctx.r for c in counts[1:])


def semistable_witness(
    w: ColumnTuple, ctx: GrassmannianContext, degree: int = 1,
) -> SemistableWitness | None:
    """
    Depth-first search for a witness chain of the given degree.

    Candidates are tried in lexicographic order, so the returned chain is
    deterministic. Returns ``None`` when no chain exists.
    """
    require_coprime(ctx)
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    r, n = ctx.r, ctx.n
    length = degree * n
    quota = degree * r
    below_w = [u for u in all_tuples(ctx) if bruhat_leq(u, w)]

    counts = [0] * (n + 2)
    chain: list[ColumnTuple] = []
    dead: set[tuple] = set()

    def feasible(last: ColumnTuple, steps_left: int) -> bool:
        # a value x can still be placed at position i only if last[i] <= x <= w[i]
        need_below = 0
        for x in range(1, n + 1):
            need_below += quota - counts[x]
            slots = sum(1 for b in last if b <= x)
            if need_below > steps_left * slots:
                return False
        need_above = 0
        for x in range(n, 0, -1):
            need_above += quota - counts[x]
            slots = sum(1 for b in w if b >= x)
            if need_above > steps_left * slots:
                return False
        return True

    def search() -> bool:
        steps_left = length - len(chain)
        if steps_left == 0:
            return True
        last = chain[-1] if chain else below_w[0]
        key = (last, tuple(counts))
        if key in dead:
            return False
        for u in below_w:
            if chain and not bruhat_leq(last, u):
                continue
            if any(counts[b] >= quota for b in u):
                continue
            for b in u:
                counts[b] += 1
            chain.append(u)
            if feasible(u, steps_left - 1) and search():
                return True
            chain.pop()
            for b in u:
                counts[b] -= 1
        dead.add(key)
        return False

    if not below_w or not search():
        return None
    return SemistableWitness(tuple(chain), degree)

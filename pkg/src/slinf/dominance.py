"""The dominance order on Z-partitions.

lam dominates mu when a chain of one-step branchings leads from lam down to
mu (at equal widths: equal shift classes).  The chain search is the
brute-force oracle; ``dominates_interlace`` is a closed-form fast path whose
agreement with the oracle is verified exhaustively by the ``interlace``
suite rather than assumed.  The remaining predicates test HYPOTHESES of
closed-form sufficient conditions; their conclusion (dominance) is enforced
by the verify suites, never inside the predicates, so each piece stays
falsifiable on its own.
"""

from __future__ import annotations

from functools import cache
from typing import Sequence

from .partitions import ShiftClass, _children, as_zpartition, canonicalize


@cache
def _dominates(top: ShiftClass, target: ShiftClass) -> bool:
    # Both arguments canonical, len(top) >= len(target).  Memoized on the
    # (intermediate, target) pair, so queries against a fixed target share
    # all intermediate results.
    if len(top) == len(target):
        return top == target
    return any(_dominates(child, target) for child in _children(top))


def dominates_oracle(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Chain oracle for dominance: search one-step restrictions from lam down to mu.

    Intermediates are canonicalized at every step, which keeps the search
    space finite (entries stay bounded by lam[0] - lam[-1]).  Shifting
    either argument does not change the answer.  A wider mu yields False.
    """
    top = canonicalize(lam)
    target = canonicalize(mu)
    if len(top) < len(target):
        return False
    return _dominates(top, target)


def dominates_interlace(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Closed-form dominance test: some shift of mu interlaces lam.

    True iff #lam >= #mu and there is an integer D with
    lam_i >= mu_i + D >= lam_{i + #lam - #mu} for 1 <= i <= #mu, decided as
    an interval-nonemptiness check.  Contract: agrees with dominates_oracle
    on every input of the acceptance grid; any disagreement fails the build.
    """
    lam = as_zpartition(lam)
    mu = as_zpartition(mu)
    gap = len(lam) - len(mu)
    if gap < 0:
        return False
    lo = max(lam[i + gap] - mu[i] for i in range(len(mu)))
    hi = min(lam[i] - mu[i] for i in range(len(mu)))
    return lo <= hi


def gap_criterion(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """All-pairs gap test: mu_k - mu_{#mu - #lam + l} >= lam_k - lam_l for 1 <= k < l <= #lam.

    Defined whenever #mu >= #lam (ValueError otherwise, since the indices
    make no sense for a narrower mu).  Once #mu >= 4 * #lam this criterion
    characterizes dominance of lam by mu; the ``lgts2`` suite checks that
    equivalence exhaustively against the chain oracle.  Invariant under
    shifting either argument.
    """
    mu = as_zpartition(mu)
    lam = as_zpartition(lam)
    if len(mu) < len(lam):
        raise ValueError(f"need #mu >= #lam, got {len(mu)} < {len(lam)}")
    off = len(mu) - len(lam)
    n = len(lam)
    return all(
        mu[k] - mu[off + l] >= lam[k] - lam[l]
        for k in range(n)
        for l in range(k + 1, n)
    )


def equal_ends_hypotheses(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Hypotheses of the equal-endpoints sandwich condition (mu is the wide one).

    True iff #mu >= #lam, lam and mu share their first and last entries, and
    mu_i >= lam_i >= mu_{#mu - #lam + i} for 1 <= i <= #lam.  The tested
    conclusion -- mu dominates lam -- lives in the ``lemmas`` suite.
    """
    lam = as_zpartition(lam)
    mu = as_zpartition(mu)
    if len(mu) < len(lam):
        return False
    if lam[0] != mu[0] or lam[-1] != mu[-1]:
        return False
    off = len(mu) - len(lam)
    return all(mu[i] >= lam[i] >= mu[off + i] for i in range(len(lam)))


def tight_gaps_hypotheses(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Hypotheses of the tight-gap condition: majorized gaps with one equality.

    True iff #mu >= 2 * #lam, mu_k - mu_{#mu - #lam + l} >= lam_k - lam_l for
    every pair 1 <= k < l <= #lam, and equality holds for at least one pair.
    Conclusion (mu dominates lam) is enforced by the ``lemmas`` suite.
    """
    lam = as_zpartition(lam)
    mu = as_zpartition(mu)
    if len(mu) < 2 * len(lam):
        return False
    off = len(mu) - len(lam)
    n = len(lam)
    pairs = [(k, l) for k in range(n) for l in range(k + 1, n)]
    if not all(mu[k] - mu[off + l] >= lam[k] - lam[l] for k, l in pairs):
        return False
    return any(mu[k] - mu[off + l] == lam[k] - lam[l] for k, l in pairs)


def wide_window_hypotheses(lam: Sequence[int], mu: Sequence[int], i: int) -> bool:
    """Hypotheses of the wide-middle-window condition at position i (1-indexed).

    True iff #lam <= i <= #mu - i and mu_i - mu_{#mu - i + 1} >= lam_1 - lam_#lam:
    the i-th entries from both ends of mu straddle the full spread of lam.
    Conclusion (mu dominates lam) is enforced by the ``lemmas`` suite.
    """
    lam = as_zpartition(lam)
    mu = as_zpartition(mu)
    if i < 1:
        raise ValueError("i must be a positive index")
    if not len(lam) <= i <= len(mu) - i:
        return False
    return mu[i - 1] - mu[len(mu) - i] >= lam[0] - lam[-1]

"""Theorem parameters, regime predicates and the verification report type."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InputError
from ..graph import Graph, min_degree
from ..parity import OddCycleFamily, contains_cycle_of_length, is_family_free

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"
NOT_APPLICABLE = "not_applicable"

IN_REGIME = "in_regime"
BELOW_REGIME = "below_regime"


def _flag(ok: bool) -> str:
    return PASS if ok else FAIL


@dataclass(frozen=True)
class TheoremParams:
    """``r`` (chromatic bound) and ``k`` (forbidden cycle ``C_{2k+1}``)."""

    r: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.k < 1:
            raise InputError("r and k must be positive integers")

    @property
    def f(self) -> int:
        """Smallest admissible ``k``: ``2r+1`` when ``r = 2``, else ``3r+4``."""
        return 2 * self.r + 1 if self.r == 2 else 3 * self.r + 4

    def n_threshold(self) -> int:
        return 108 * (self.r + 1) ** self.r * self.k

    def regime_checks(self, n: int, min_r: int = 2) -> dict[str, str]:
        return {
            f"r>={min_r}": _flag(self.r >= min_r),
            "k>=f(r)": _flag(self.k >= self.f),
            "n>=108(r+1)^r*k": _flag(n >= self.n_threshold()),
        }

    def in_regime(self, n: int) -> bool:
        return self.r >= 2 and self.k >= self.f and n >= self.n_threshold()

    def degree_floor_ok(self, G: Graph) -> bool:
        """``δ(G) >= n/(2r+2)`` in exact integer arithmetic."""
        return G.n > 0 and min_degree(G) * (2 * self.r + 2) >= G.n

    @property
    def cycle_length(self) -> int:
        return 2 * self.k + 1


@dataclass(frozen=True)
class FamilyParams:
    """Parameters derived from an odd-cycle family: ``p`` and ``k``."""

    family: OddCycleFamily

    @property
    def p(self) -> int:
        return self.family.p

    @property
    def k(self) -> int:
        return self.family.k

    def n_threshold(self) -> int:
        return 108 * (2 * self.p + 1) ** (2 * self.p) * self.k

    def regime_checks(self, n: int) -> dict[str, str]:
        return {
            "k>=4p+1": _flag(self.k >= 4 * self.p + 1),
            "n>=108(2p+1)^(2p)*k": _flag(n >= self.n_threshold()),
        }

    def in_regime(self, n: int) -> bool:
        return self.k >= 4 * self.p + 1 and n >= self.n_threshold()

    def degree_floor_ok(self, G: Graph) -> bool:
        """``δ(G) >= n/(2(2p+1))`` in exact integer arithmetic."""
        return G.n > 0 and min_degree(G) * 2 * (2 * self.p + 1) >= G.n


@dataclass
class VerificationReport:
    target: str
    preconditions: dict[str, str]
    regime: dict[str, str]
    conclusion: str
    tier: str
    witnesses: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "preconditions": dict(self.preconditions),
            "regime": dict(self.regime),
            "conclusion": self.conclusion,
            "tier": self.tier,
            "witnesses": self.witnesses,
            "notes": list(self.notes),
        }


def make_report(target: str, preconditions: dict[str, str], regime: dict[str, str],
                holds: bool | None, witnesses: dict | None = None,
                notes: list[str] | None = None) -> VerificationReport:
    """Combine hypothesis checks, regime checks and the raw conclusion into a verdict.

    ``holds`` is the conclusion evaluated on the graph regardless of
    hypotheses (None when it could not be evaluated).  A failed hypothesis
    makes the verdict not-applicable; an undecided one makes it inconclusive;
    otherwise the verdict is pass/fail, tiered by whether the graph is in the
    parameter regime where the statement is claimed.
    """
    witnesses = dict(witnesses or {})
    notes = list(notes or [])
    if holds is not None:
        witnesses.setdefault("raw_conclusion", _flag(holds))
    in_regime = all(v == PASS for v in regime.values())
    tier = IN_REGIME if in_regime else BELOW_REGIME
    statuses = set(preconditions.values())
    if FAIL in statuses:
        notes.append("hypotheses fail: the statement says nothing about this graph")
        return VerificationReport(target, preconditions, regime, NOT_APPLICABLE,
                                  NOT_APPLICABLE, witnesses, notes)
    if INCONCLUSIVE in statuses or holds is None:
        notes.append("a hypothesis or the conclusion could not be decided within budget")
        return VerificationReport(target, preconditions, regime, INCONCLUSIVE, tier,
                                  witnesses, notes)
    conclusion = _flag(holds)
    if not in_regime:
        if conclusion == FAIL:
            notes.append("below-regime observation: the statement is only claimed in regime, "
                         "so this is not a refutation")
        else:
            notes.append("below regime: conclusion holds but is not claimed here")
    elif conclusion == FAIL:
        notes.append("in-regime failure: counterexample to the statement")
    return VerificationReport(target, preconditions, regime, conclusion, tier, witnesses, notes)


def freeness_check(G: Graph, lengths: OddCycleFamily | int, budget: int | None) -> tuple[str, dict]:
    """Precondition status for C_L-freeness (or family freeness) plus witness data."""
    if isinstance(lengths, int):
        out = contains_cycle_of_length(G, lengths, budget)
        violated = lengths if out.found else None
    else:
        out = is_family_free(G, lengths, budget)
        violated = out.violated_length
    if out.exceeded:
        return INCONCLUSIVE, {"nodes": out.nodes}
    if out.found:
        return FAIL, {"violated_length": violated, "cycle": list(out.witness.vertices)}
    return PASS, {}

"""The QH*(Fl_n) engine.

Elements are sparse maps (degree vector, permutation) -> coefficient.  The
only multiplication rule built in is the quantum Chevalley formula (product
with a divisor class sigma^{s_i}); everything else is obtained by expanding a
Schubert class as an exact rational combination of Chevalley words applied to
the identity class, which closes the ring because divisor classes generate.

The same machinery with the quantum terms switched off yields the classical
cup product, which agrees with the q=0 truncation of the quantum product.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import rootsys, weyl
from .reporting import VerifyReport
from .rootsys import Root
from .weyl import DegreeVector, Permutation, identity, length, sgn_alpha

# a QClass: finite formal sum of coefficients on (degree, permutation) pairs
QClass = dict[tuple[DegreeVector, Permutation], Fraction]
BasisKey = tuple[DegreeVector, Permutation]


class NotInSpanError(RuntimeError):
    """The generator expansion failed; indicates an engine bug."""


def qclass(u: Permutation, lam: Optional[DegreeVector] = None) -> QClass:
    n = len(u)
    if lam is None:
        lam = rootsys.zero_degree(n)
    return {(lam, u): 1}


def qclass_add(a: QClass, b: QClass, scale=1) -> QClass:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def qclass_equal(a: QClass, b: QClass) -> bool:
    return {k: c for k, c in a.items() if c} == {k: c for k, c in b.items() if c}


# --- quantum Chevalley formula --------------------------------------------

@lru_cache(maxsize=None)
def _chevalley_moves(
    w: Permutation, i: int, quantum: bool
) -> tuple[tuple[Optional[Root], Permutation], ...]:
    """Moves of the (quantum) Chevalley formula on a single basis class.

    For each positive root gamma = e_a - e_b with <chi_i, gamma^vee> = 1
    (i.e. a <= i < b): a classical move to w s_gamma when the length goes up
    by one, and a quantum move (tagged with gamma) when it drops by
    <2 rho, gamma^vee> - 1 = 2(b-a) - 1.
    """
    n = len(w)
    lw = length(w)
    out = []
    for a in range(1, i + 1):
        for b in range(i + 1, n + 1):
            wp = list(w)
            wp[a - 1], wp[b - 1] = wp[b - 1], wp[a - 1]
            wp = tuple(wp)
            d = length(wp) - lw
            if d == 1:
                out.append((None, wp))
            elif quantum and d == 1 - 2 * (b - a):
                out.append(((a, b), wp))
    return tuple(out)


def quantum_chevalley(i: int, c: QClass, n: int, quantum: bool = True) -> QClass:
    """Multiply a class by the divisor sigma^{s_i}, extending linearly."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple index {i} out of range for n={n}")
    out: QClass = {}
    for (lam, w), coeff in c.items():
        for gamma, wp in _chevalley_moves(w, i, quantum):
            if gamma is None:
                nl = lam
            else:
                a, b = gamma
                nl = tuple(
                    lam[k - 1] + (1 if a <= k <= b - 1 else 0) for k in range(1, n)
                )
            key = (nl, wp)
            v = out.get(key, 0) + coeff
            if v:
                out[key] = v
            else:
                del out[key]
    return out


# --- generator-expansion engine -------------------------------------------

class RingEngine:
    """Per-rank engine holding word-span bases and expansion eliminations.

    ``quantum=False`` gives the classical cup-product engine (same algorithm
    with quantum Chevalley moves disabled).
    """

    def __init__(self, n: int, quantum: bool = True):
        if n < 2:
            raise ValueError("rank must be at least 2")
        self.n = n
        self.quantum = quantum
        # degree -> list of (word, class); words are prefix-closed across degrees
        self._word_basis: dict[int, list[tuple[tuple[int, ...], QClass]]] = {
            0: [((), qclass(identity(n)))]
        }
        # degree -> elimination rows (pivot, vec, combo)
        self._rows: dict[int, list] = {}
        self._expansions: dict[Permutation, list] = {}

    # - word spans -
    def _build_words(self, d: int) -> None:
        for dd in range(max(self._word_basis) + 1, d + 1):
            rows: list = []
            kept = []
            for word, cls in self._word_basis[dd - 1]:
                for i in range(1, self.n):
                    nc = quantum_chevalley(i, cls, self.n, self.quantum)
                    vec = {k: Fraction(c) for k, c in nc.items()}
                    _eliminate(vec, rows)
                    if vec:
                        piv = min(vec)
                        cv = vec[piv]
                        rows.append((piv, {k: v / cv for k, v in vec.items()}))
                        kept.append((word + (i,), nc))
            self._word_basis[dd] = kept

    def _spanning(self, d: int):
        """Spanning elements (mu, word, class) with <2 rho, mu> + |word| = d."""
        self._build_words(d)
        n = self.n
        for mu in sorted(itertools.product(range(d // 2 + 1), repeat=n - 1)):
            s2 = 2 * sum(mu)
            if s2 > d or (not self.quantum and s2 > 0):
                continue
            for word, cls in self._word_basis[d - s2]:
                if s2 == 0:
                    shifted = cls
                else:
                    shifted = {
                        (rootsys.add_degrees(lam, mu), w): c
                        for (lam, w), c in cls.items()
                    }
                yield mu, word, shifted

    def _expander(self, d: int) -> list:
        if d not in self._rows:
            rows: list = []
            for mu, word, cls in self._spanning(d):
                vec = {k: Fraction(c) for k, c in cls.items()}
                combo = {(mu, word): Fraction(1)}
                _eliminate(vec, rows, combo)
                if vec:
                    piv = min(vec)
                    cv = vec[piv]
                    rows.append(
                        (
                            piv,
                            {k: v / cv for k, v in vec.items()},
                            {k: v / cv for k, v in combo.items()},
                        )
                    )
            self._rows[d] = rows
        return self._rows[d]

    # - public operations -
    def expand_in_generators(
        self, u: Permutation
    ) -> list[tuple[DegreeVector, tuple[int, ...], Fraction]]:
        """sigma^u = sum of coeff * q_mu * (word applied to sigma^id), exactly."""
        if u not in self._expansions:
            rows = self._expander(length(u))
            vec: dict = {(rootsys.zero_degree(self.n), u): Fraction(1)}
            combo: dict = {}
            _eliminate(vec, rows, combo)
            if vec:
                raise NotInSpanError(f"class of {u} not spanned at degree {length(u)}")
            self._expansions[u] = [
                (mu, word, -c) for (mu, word), c in combo.items() if c
            ]
        return self._expansions[u]

    def apply_word(self, word: Sequence[int], cls: QClass) -> QClass:
        for i in word:
            cls = quantum_chevalley(i, cls, self.n, self.quantum)
        return cls

    def product(self, u: Permutation, v: Permutation) -> QClass:
        """sigma^u * sigma^v via generator expansion of the shorter factor."""
        if len(u) != len(v) or len(u) != self.n:
            raise ValueError("rank mismatch")
        if length(u) > length(v):
            u, v = v, u
        expansion = self.expand_in_generators(u)
        base = qclass(v)
        # shared-prefix evaluation: the expansion words are prefix-closed
        cache: dict[tuple[int, ...], QClass] = {(): base}

        def word_class(word: tuple[int, ...]) -> QClass:
            if word in cache:
                return cache[word]
            cls = quantum_chevalley(
                word[-1], word_class(word[:-1]), self.n, self.quantum
            )
            cache[word] = cls
            return cls

        out: QClass = {}
        for mu, word, coeff in expansion:
            for (lam, w), c in word_class(word).items():
                key = (rootsys.add_degrees(lam, mu), w)
                val = out.get(key, 0) + coeff * c
                if val:
                    out[key] = val
                else:
                    del out[key]
        return _as_integral(out)


def _eliminate(vec: dict, rows: list, combo: Optional[dict] = None) -> None:
    """Reduce vec (and its spanning-combination bookkeeping) against rows."""
    for row in rows:
        piv, rvec = row[0], row[1]
        c = vec.get(piv)
        if not c:
            continue
        for k, rv in rvec.items():
            nv = vec.get(k, 0) - c * rv
            if nv:
                vec[k] = nv
            else:
                vec.pop(k, None)
        if combo is not None:
            for k, rv in row[2].items():
                nv = combo.get(k, 0) - c * rv
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)


def _as_integral(cls: QClass) -> QClass:
    out = {}
    for k, c in cls.items():
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise NotInSpanError(f"non-integral coefficient {c} at {k}")
            c = c.numerator
        out[k] = c
    return out


@lru_cache(maxsize=None)
def get_engine(n: int, quantum: bool = True) -> RingEngine:
    return RingEngine(n, quantum)


def quantum_product(u: Permutation, v: Permutation) -> QClass:
    """sigma^u * sigma^v in QH*(Fl_n), with product invariants enforced."""
    out = get_engine(len(u), True).product(u, v)
    check_product_invariants(out, length(u) + length(v))
    return out


def classical_product(u: Permutation, v: Permutation) -> QClass:
    """Cup product sigma^u cup sigma^v = the q=0 part of the quantum product."""
    return get_engine(len(u), False).product(u, v)


def expand_in_generators(u: Permutation):
    return get_engine(len(u), True).expand_in_generators(u)


def structure_constant(
    u: Permutation, v: Permutation, w: Permutation, lam: DegreeVector
) -> int:
    """The Gromov-Witten coefficient of q_lam sigma^w in sigma^u * sigma^v."""
    if length(u) + length(v) != length(w) + rootsys.pair_2rho(lam):
        return 0
    if not rootsys.is_nonnegative(lam):
        return 0
    return quantum_product(u, v).get((lam, w), 0)


def check_product_invariants(cls: QClass, degree: int) -> None:
    """Degree axiom, positivity, and integrality of a Schubert-class product."""
    for (lam, w), c in cls.items():
        if not rootsys.is_nonnegative(lam):
            raise AssertionError(f"negative curve degree {lam} in product")
        if length(w) + rootsys.pair_2rho(lam) != degree:
            raise AssertionError(f"degree axiom violated at {(lam, w)}")
        if not (isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)):
            raise AssertionError(f"non-integral structure constant {c}")
        if c < 0:
            raise AssertionError(f"negative structure constant {c} at {(lam, w)}")


# --- grading and filtration ------------------------------------------------

GradePair = tuple[int, int]


def gr_alpha(i: int, lam: DegreeVector, w: Permutation) -> GradePair:
    """Z^2-grade of q_lam sigma^w with respect to the simple root alpha_i."""
    a = sgn_alpha(w, i) + rootsys.pair_root(i, lam)
    total = length(w) + rootsys.pair_2rho(lam)
    return (a, total - a)


def grade_add(a: GradePair, b: GradePair) -> GradePair:
    return (a[0] + b[0], a[1] + b[1])


def verify_filtration(n: int, i: int, degree_cap: int) -> VerifyReport:
    """F_a * F_b subset F_{a+b} (lexicographic order), swept over basis pairs.

    Checked on pure Schubert classes; multiplying by q-monomials shifts both
    sides of the inequality by the same grade, so this case is exhaustive.
    """
    report = VerifyReport("filtration", n)
    perms = weyl.all_permutations(n)
    zero = rootsys.zero_degree(n)
    for u in perms:
        for v in perms:
            if length(u) + length(v) > degree_cap:
                continue
            bound = grade_add(gr_alpha(i, zero, u), gr_alpha(i, zero, v))
            prod = quantum_product(u, v)
            bad = [
                (lam, w)
                for (lam, w) in prod
                if gr_alpha(i, lam, w) > bound
            ]
            report.record(not bad, (u, v, bad) if bad else None)
    return report


# --- Peterson-Woodward comparison -----------------------------------------

@dataclass(frozen=True)
class PWLift:
    lambda_B: DegreeVector
    delta_P_prime: frozenset[int]


def peterson_woodward_lift(lam_rep: DegreeVector, delta_p: Iterable[int]) -> PWLift:
    """The unique lift lambda_B of lambda_P with <gamma, lambda_B> in {0, -1}.

    Works per connected component [a, b] of Delta_P: the consecutive
    differences d_i = lam_i - lam_{i-1} (i = a..b+1) must form a
    non-decreasing sequence taking at most two adjacent values, with their
    sum pinned by the fixed coefficients outside the component; that forces
    the floor/ceiling split of the average.
    """
    n = len(lam_rep) + 1
    dp = sorted(set(delta_p))
    if not set(dp) <= set(range(1, n)):
        raise ValueError("Delta_P out of range")
    lam = list(lam_rep)
    ext = lambda k: lam[k - 1] if 1 <= k <= n - 1 else 0
    for comp in _components(dp):
        a, b = comp[0], comp[-1]
        count = b - a + 2  # differences d_a .. d_{b+1}
        total = ext(b + 1) - ext(a - 1)
        q, r = divmod(total, count)
        diffs = [q] * (count - r) + [q + 1] * r
        acc = ext(a - 1)
        for idx, i in enumerate(range(a, b + 1)):
            acc += diffs[idx]
            lam[i - 1] = acc
    lam_b = tuple(lam)
    for gamma in rootsys.parabolic_positive_roots(dp, n):
        if rootsys.pair_positive_root(gamma, lam_b) not in (0, -1):
            raise RuntimeError(f"PW lift failed at root {gamma}")  # engine bug
    dpp = frozenset(i for i in dp if rootsys.pair_root(i, lam_b) == 0)
    return PWLift(lam_b, dpp)


def _components(indices: list[int]) -> list[list[int]]:
    comps: list[list[int]] = []
    for i in indices:
        if comps and comps[-1][-1] == i - 1:
            comps[-1].append(i)
        else:
            comps.append([i])
    return comps


def psi_alpha(
    i: int, lam_p: DegreeVector, w: Permutation
) -> tuple[DegreeVector, Permutation]:
    """Injection QH*(G/P_{alpha_i}) -> QH*(G/B): q_{lam_P} sigma^w -> q_{lam_B} sigma^{w w_P w_{P'}}.

    ``lam_p`` is any representative of the class modulo Z alpha_i^vee.  For
    lam_P = 0 the lift is 0 and Delta_{P'} = Delta_P, so the image of the
    identity class is the identity class.
    """
    n = len(w)
    if sgn_alpha(w, i):
        raise ValueError(f"{w} is not a minimal coset representative for P_alpha_{i}")
    lift = peterson_woodward_lift(lam_p, (i,))
    w_p = weyl.simple_reflection(i, n)
    tail = w_p if i in lift.delta_P_prime else identity(n)
    return lift.lambda_B, weyl.multiply(weyl.multiply(w, w_p), tail)


# --- quantum -> classical reduction ----------------------------------------

@dataclass(frozen=True)
class ReduceState:
    u: Permutation
    v: Permutation
    w: Permutation
    lam: DegreeVector


@dataclass
class ReduceTrace:
    states: list[ReduceState]
    rules: list[str]
    terminal: str  # "classical" | "zero" | "stuck"
    value: Optional[int]

    def summary_lines(self) -> list[str]:
        out = []
        for idx, st in enumerate(self.states):
            head = "  " if idx == 0 else f"= [{self.rules[idx - 1]}] "
            out.append(
                f"{head}N[u={weyl.perm_to_string(st.u)}, v={weyl.perm_to_string(st.v)}; "
                f"w={weyl.perm_to_string(st.w)}, lam={','.join(map(str, st.lam))}]"
            )
        if self.terminal == "zero":
            out.append("= 0 (vanishing criterion)")
        elif self.terminal == "stuck":
            out.append("stuck: no reduction rule applies")
        else:
            out.append(f"= {self.value}")
        return out


def _vanishes(st: ReduceState) -> bool:
    """Vanishing criterion: some simple root with grade excess on the target."""
    n = len(st.u)
    return any(
        sgn_alpha(st.w, i) + rootsys.pair_root(i, st.lam)
        > sgn_alpha(st.u, i) + sgn_alpha(st.v, i)
        for i in range(1, n)
    )


def reduce_step(
    u: Permutation, v: Permutation, w: Permutation, lam: DegreeVector
) -> list[tuple[str, ReduceState]]:
    """All single-step rewrites of N_{u,v}^{w,lam} with equal value.

    For each simple root alpha_i where the grade-additivity condition
    sgn(w) + <alpha, lam> = sgn(u) + sgn(v) holds, the constant equals a
    3-point invariant of the P^1-fibration G/B -> G/P_{alpha_i} and depends
    only on the coset data: take u, v to their coset minima u', v', flip
    either back up, and re-lift (w, lam) through Peterson-Woodward to the
    matching grade.  This subsumes the degree-lowering identities and the
    lam = 0 exchange rule as special cases.
    """
    n = len(u)
    out: list[tuple[str, ReduceState]] = []
    for i in range(1, n):
        p = rootsys.pair_root(i, lam)
        if sgn_alpha(w, i) + p != sgn_alpha(u, i) + sgn_alpha(v, i):
            continue
        si = weyl.simple_reflection(i, n)
        alpha_vee = rootsys.coroot((i, i + 1), n)
        u_min = weyl.multiply(u, si) if sgn_alpha(u, i) else u
        v_min = weyl.multiply(v, si) if sgn_alpha(v, i) else v
        w_min = weyl.multiply(w, si) if sgn_alpha(w, i) else w
        # PW representative: pairing against alpha_i in {0, -1}
        c0 = (p + 1) // 2
        lam_b = tuple(a - c0 * b for a, b in zip(lam, alpha_vee))
        pair_b = p - 2 * c0
        for e_u in (0, 1):
            for e_v in (0, 1):
                s = e_u + e_v
                sgn_w = (s - pair_b) % 2
                c = (s - pair_b - sgn_w) // 2
                nxt = ReduceState(
                    weyl.multiply(u_min, si) if e_u else u_min,
                    weyl.multiply(v_min, si) if e_v else v_min,
                    weyl.multiply(w_min, si) if sgn_w else w_min,
                    tuple(a + c * b for a, b in zip(lam_b, alpha_vee)),
                )
                if nxt != ReduceState(u, v, w, lam):
                    out.append((f"alpha_{i}[{e_u}{e_v}]", nxt))
    return out


def reduce_trace(
    u: Permutation,
    v: Permutation,
    w: Permutation,
    lam: DegreeVector,
    verify: bool = True,
) -> ReduceTrace:
    """Reduce N_{u,v}^{w,lam} to a classical constant or a certified zero.

    Breadth-first search over the reduce_step rewrite graph for a state with
    lam = 0 (evaluated classically) or a state where the vanishing criterion
    applies; reports "stuck" if the reachable component contains neither.
    With ``verify`` every state on the returned chain is re-checked
    numerically via structure_constant.
    """
    n = len(u)
    zero = rootsys.zero_degree(n)
    start = ReduceState(u, v, w, lam)
    parent: dict[ReduceState, tuple[ReduceState, str]] = {start: (start, "")}
    queue = [start]
    goal = None
    terminal = "stuck"
    while queue:
        st = queue.pop(0)
        if _vanishes(st):
            goal, terminal = st, "zero"
            break
        if st.lam == zero:
            goal, terminal = st, "classical"
            break
        for rule, nxt in reduce_step(st.u, st.v, st.w, st.lam):
            if nxt not in parent:
                parent[nxt] = (st, rule)
                queue.append(nxt)
    if goal is None:
        return _finish([start], [], "stuck", None, verify)
    chain = [goal]
    rules = []
    while chain[-1] != start:
        prev, rule = parent[chain[-1]]
        rules.append(rule)
        chain.append(prev)
    chain.reverse()
    rules.reverse()
    if terminal == "zero":
        value = 0
    else:
        value = classical_product(goal.u, goal.v).get((zero, goal.w), 0)
    return _finish(chain, rules, terminal, value, verify)


def _finish(states, rules, terminal, value, verify) -> ReduceTrace:
    trace = ReduceTrace(states, rules, terminal, value)
    if verify:
        vals = [
            structure_constant(st.u, st.v, st.w, st.lam)
            for st in states
            if rootsys.is_nonnegative(st.lam)
        ]
        if len(set(vals)) > 1:
            raise AssertionError(f"reduction chain not constant: {vals}")
        if value is not None and vals and vals[0] != value:
            raise AssertionError(f"chain value {vals[0]} != terminal value {value}")
    return trace

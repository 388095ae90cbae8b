"""Seidel operator in closed form, the quantum Pieri rule, and sweeps.

The Seidel operator T is quantum multiplication by sigma^{s_1...s_{n-1}}; on
the basis it acts by T(sigma^u) = q_{lambda(u)} sigma^{u^1}, where u^1 is the
left rotation of u and lambda(u) is read off the canonical factorization.
Every product with a hook class sigma^{s_{n-m}...s_{n-1}} then reduces to a
classical cup product conjugated by powers of T.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import qhring, rootsys, weyl
from .qhring import QClass
from .reporting import VerifyReport
from .weyl import DegreeVector, Permutation


def seidel_apply(u: Permutation) -> tuple[DegreeVector, Permutation]:
    """T(sigma^u) = q_{lambda(u)} sigma^{s_1...s_{n-1} u}."""
    return weyl.lambda_of(u), weyl.multiply(weyl.n_cycle(len(u)), u)


def seidel_power(u: Permutation, k: int) -> tuple[DegreeVector, Permutation]:
    """T^k(sigma^u) = q_{lambda(u,k)} sigma^{u^k}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return weyl.lambda_cumulative(u, k), weyl.u_up(u, k)


class PieriFormulaError(RuntimeError):
    """The closed-form q-prefactor failed to divide; an implementation bug."""


@dataclass
class PieriResult:
    closed_form: QClass
    engine_form: Optional[QClass] = None

    @property
    def agrees(self) -> Optional[bool]:
        if self.engine_form is None:
            return None
        return qhring.qclass_equal(self.closed_form, self.engine_form)


def quantum_pieri(m: int, u: Permutation, engine_check: bool = False) -> PieriResult:
    """sigma^{s_{n-m}...s_{n-1}} * sigma^u by the Seidel closed form.

    With k = n - u(n):
        q_1^{-1} q_2^{-2} ... q_{n-1}^{1-n} q_{lambda(u,k)}
            T^{n-k}(sigma^{s_{n-m}...s_{n-1}} cup sigma^{u^k}),
    computed termwise from the classical cup product.  The inverse prefactor
    must divide out exactly; a negative final exponent raises.
    """
    n = len(u)
    k = n - u[-1]
    base = weyl.lambda_cumulative(u, k)
    prefactor = tuple(-i for i in range(1, n))
    cup = qhring.classical_product(weyl.hook(n, m), weyl.u_up(u, k))
    out: QClass = {}
    zero = rootsys.zero_degree(n)
    for (lam, w), c in cup.items():
        assert lam == zero
        shift, w_up = seidel_power(w, n - k)
        q = tuple(a + b + p for a, b, p in zip(shift, base, prefactor))
        if min(q, default=0) < 0:
            raise PieriFormulaError(
                f"negative exponent {q} at term {w} for m={m}, u={u}"
            )
        key = (q, w_up)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]
    result = PieriResult(out)
    if engine_check:
        result.engine_form = qhring.quantum_product(weyl.hook(n, m), u)
    return result


# --- verification sweeps ---------------------------------------------------

def verify_seidel(n: int) -> VerifyReport:
    """T(sigma^u) closed form against the engine for every u in S_n."""
    report = VerifyReport("seidel", n)
    full_hook = weyl.hook(n, n - 1)
    for u in weyl.all_permutations(n):
        lam, up = seidel_apply(u)
        prod = qhring.quantum_product(full_hook, u)
        ok = qclass_matches(prod, lam, up)
        report.record(ok, None if ok else (u, prod))
    return report


def verify_pieri(n: int, engine_check: bool = True) -> VerifyReport:
    """Closed-form Pieri for every hook size and u.

    With ``engine_check`` each closed form is compared against the full
    engine product; without it only the formula's divisibility and
    invariants are exercised (full products dominate the runtime).
    """
    report = VerifyReport("pieri", n)
    for m in range(1, n):
        for u in weyl.all_permutations(n):
            try:
                res = quantum_pieri(m, u, engine_check=engine_check)
            except PieriFormulaError as err:
                report.record(False, (m, u, err))
                continue
            ok = res.agrees if engine_check else True
            report.record(bool(ok), None if ok else (m, u, res))
    return report


def verify_support(n: int) -> VerifyReport:
    """q-support of hook products: interval coroots ending at n-1, only for u(n) != n."""
    report = VerifyReport("support", n)
    zero = rootsys.zero_degree(n)
    for m in range(1, n):
        hook = weyl.hook(n, m)
        for u in weyl.all_permutations(n):
            prod = qhring.quantum_product(hook, u)
            bad = []
            for (lam, w) in prod:
                if lam == zero:
                    continue
                if u[-1] == n:
                    bad.append((lam, w, "quantum term with u(n)=n"))
                    continue
                # lambda must be alpha_k^vee + ... + alpha_{n-1}^vee
                ones = [i for i, a in enumerate(lam, start=1) if a == 1]
                interval = (
                    set(lam) <= {0, 1}
                    and ones
                    and ones[-1] == n - 1
                    and ones == list(range(ones[0], n))
                )
                if not interval:
                    bad.append((lam, w, "non-interval degree"))
            report.record(not bad, (m, u, bad) if bad else None)
    return report


def qclass_matches(prod: QClass, lam: DegreeVector, w: Permutation) -> bool:
    return qhring.qclass_equal(prod, {(lam, w): 1})


def explore_classical_equality(n: int, i: int, j: int) -> list[dict]:
    """For every u, does sigma^{s_i...s_j} * sigma^u equal the cup product?

    Records descriptive data per permutation; draws no conclusion about a
    characterization.
    """
    if not 1 <= i <= j <= n - 1:
        raise ValueError("need 1 <= i <= j <= n-1")
    left = weyl.from_word(range(i, j + 1), n)
    rows = []
    for u in weyl.all_permutations(n):
        quantum = qhring.quantum_product(left, u)
        classical = qhring.classical_product(left, u)
        rows.append(
            {
                "one_line": weyl.perm_to_string(u),
                "word": weyl.word_to_string(weyl.canonical_word(u)),
                "descents": list(weyl.descent_set(u)),
                "u_n": u[-1],
                "equal": qhring.qclass_equal(quantum, classical),
            }
        )
    return rows

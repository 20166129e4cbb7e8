"""Verification suites: each runs exact checks at a fixed degree and reports counts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .operators import (
    E_closed_matrix,
    E_q_oracle_matrix,
    M_QT,
    OperatorMatrix,
    hall_adjoint,
    limit_matrix_q1,
    limit_matrix_t1,
    nabla1_qt,
    nabla1_qt_matrix,
    nabla1_qt_p_n_expected,
    nabla_closed_matrix,
    nabla_q_closed,
    nabla_q_closed_matrix,
    nabla_q_oracle,
    nabla_q_oracle_matrix,
    op_D,
    nabla_star_closed,
    to_matrix,
)
from .partitions import partitions_of, remove_part
from .product import (
    coefficient_index,
    odot,
    odot_q,
    structure_const,
    structure_const_q,
)
from .qscalar import RationalFunction1, limit_q1, scalar_text
from .symfunc import SymFunc, lift, s_to_p

SUITES = ("main1", "nabla", "product", "leibniz", "d-operator")


@dataclass
class Check:
    name: str
    count: int = 0
    failures: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.count += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()


@dataclass
class Report:
    suite: str
    n: int
    k: Optional[int]
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list:
        head = f"verify {self.suite} n={self.n}" + (f" k={self.k}" if self.k is not None else "")
        out = [head]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  [{status}] {c.name}: {c.count - c.failures}/{c.count}"
            out.append(line)
            if c.counterexample:
                out.append(f"         first counterexample: {c.counterexample}")
        out.append("result: " + ("pass" if self.passed else "FAIL"))
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "k": self.k,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "count": c.count,
                    "failures": c.failures,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                }
                for c in self.checks
            ],
        }


def _compare_matrices(check: Check, got: OperatorMatrix, expected: OperatorMatrix) -> None:
    for i, row in enumerate(list(partitions_of(got.n))):
        for j, col in enumerate(partitions_of(got.n)):
            a, b = got[i, j], expected[i, j]
            check.record(
                a == b,
                lambda: f"entry (p[{row.text()}] <- p[{col.text()}]): {scalar_text(a)} != {scalar_text(b)}",
            )


# ---------------------------------------------------------------------------


def verify_main1(n: int, k: int = 1) -> Report:
    report = Report("main1", n, k)
    c = Check("E_closed equals q->1 limit of omega (nabla_q oracle)^* omega")
    _compare_matrices(c, E_closed_matrix(n, k), limit_matrix_q1(E_q_oracle_matrix(n, k)))
    report.checks.append(c)
    c = Check("nabla_star_closed equals q->1 limit of (nabla_q oracle)^*")
    _compare_matrices(
        c,
        to_matrix(lambda f: nabla_star_closed(f, k), n),
        limit_matrix_q1(hall_adjoint(nabla_q_oracle_matrix(n, k))),
    )
    report.checks.append(c)
    return report


def verify_nabla(n: int, k: int = 1) -> Report:
    report = Report("nabla", n, k)
    c = Check("nabla_q_closed equals nabla_q oracle")
    _compare_matrices(c, nabla_q_closed_matrix(n, k), nabla_q_oracle_matrix(n, k))
    report.checks.append(c)
    c = Check("q->1 limit of nabla_q_closed equals nabla_closed")
    _compare_matrices(c, limit_matrix_q1(nabla_q_closed_matrix(n, k)), nabla_closed_matrix(n, k))
    report.checks.append(c)
    return report


def verify_product(n: int, k: Optional[int] = None) -> Report:
    report = Report("product", n, None)
    parts = partitions_of(n)
    two_route = Check("q->1 limit of odot_q coordinates equals structure_const")
    closed_q = Check("structure_const_q equals odot_q coordinates")
    vanishing = Check("structure_const vanishes for negative coefficient index")
    products = {}
    for i, l1 in enumerate(parts):
        for l2 in parts[i:]:
            products[(l1, l2)] = products[(l2, l1)] = odot_q(SymFunc.p(l1), SymFunc.p(l2), n)
    for l1 in parts:
        for l2 in parts:
            r = products[(l1, l2)]
            for mu in parts:
                got, want = limit_q1(r.coeff(mu)), structure_const(l1, l2, mu)
                two_route.record(got == want, lambda: f"({l1.text()}; {l2.text()}; {mu.text()}): {got} != {want}")
                cq = structure_const_q(l1, l2, mu)
                closed_q.record(cq == r.coeff(mu), lambda: f"({l1.text()}; {l2.text()}; {mu.text()})")
                if coefficient_index(l1, l2, mu) < 0:
                    vanishing.record(want == 0, lambda: f"({l1.text()}; {l2.text()}; {mu.text()}) = {want}")
    commut = Check("odot is commutative")
    for i, l1 in enumerate(parts):
        for l2 in parts[i:]:
            a = odot(SymFunc.p(l1), SymFunc.p(l2), n)
            b = odot(SymFunc.p(l2), SymFunc.p(l1), n)
            commut.record(a == b, lambda: f"({l1.text()}; {l2.text()})")
    neutral = Check("s_n is neutral for odot and odot_q")
    sn = s_to_p((n,)) if n else SymFunc.constant(1)
    for lam in parts:
        f = SymFunc.p(lam)
        neutral.record(odot(sn, f, n) == f, lambda: f"s_n odot p[{lam.text()}]")
        neutral.record(odot_q(sn, f, n) == lift(f, "q"), lambda: f"s_n odot_q p[{lam.text()}]")
    report.checks += [two_route, closed_q, vanishing, commut, neutral]
    return report


# ---------------------------------------------------------------------------


def _random_scalar(rng: random.Random) -> RationalFunction1:
    q = RationalFunction1.q()
    choices = [
        lambda: RationalFunction1(rng.randint(-5, 5) or 1),
        lambda: RationalFunction1(Fraction(rng.randint(-9, 9), rng.randint(1, 4))),
        lambda: q ** rng.randint(1, 3) - rng.randint(-2, 2),
        lambda: (1 + q) / (1 - q ** rng.randint(2, 3)),
    ]
    return rng.choice(choices)()


def random_homogeneous(rng: random.Random, n: int, terms: int = 3) -> SymFunc:
    parts = partitions_of(n)
    out = SymFunc()
    for _ in range(rng.randint(1, terms)):
        out = out + SymFunc.p(rng.choice(parts), _random_scalar(rng))
    return out if out else SymFunc.p(parts[0], RationalFunction1(1))


def leibniz_pairs(count: int, max_degree: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        total = rng.randint(2, max_degree)
        a = rng.randint(1, total - 1)
        pairs.append((random_homogeneous(rng, a), random_homogeneous(rng, total - a)))
    return pairs


def verify_leibniz(n: int, k: Optional[int] = 1, count: int = 200, seed: int = 0) -> Report:
    """Leibniz rule on random pairs with deg f + deg g <= n.

    With k=None the pairs cycle through k = 1, 2, 3, 4.
    """
    report = Report("leibniz", n, k)
    closed = Check("nabla_q_closed(f g) = nabla_q_closed(f) g + f nabla_q_closed(g)")
    oracle = Check("nabla_q oracle satisfies the Leibniz rule")
    split = Check("nabla_q_closed(p_lambda) = sum_i p_(lambda minus part i) nabla_q_closed(p_lambda_i)")
    if n >= 2:
        for i, (f, g) in enumerate(leibniz_pairs(count, n, seed)):
            kk = k if k is not None else i % 4 + 1
            desc = lambda: f"k = {kk}, f = {f.text()}, g = {g.text()}"
            lhs = nabla_q_closed(f * g, kk)
            closed.record(lhs == nabla_q_closed(f, kk) * g + f * nabla_q_closed(g, kk), desc)
            lhs = nabla_q_oracle(f * g, kk)
            oracle.record(lhs == nabla_q_oracle(f, kk) * g + f * nabla_q_oracle(g, kk), desc)
    for kk in ([k] if k is not None else [1, 2, 3, 4]):
        for m in range(1, n + 1):
            for lam in partitions_of(m):
                want = SymFunc()
                for i, part in enumerate(lam):
                    want = want + SymFunc.p(remove_part(lam, i)) * nabla_q_closed(SymFunc.p((part,)), kk)
                split.record(nabla_q_closed(SymFunc.p(lam), kk) == want, lambda: f"k = {kk}, p[{lam.text()}]")
    report.checks += [closed, oracle, split]
    return report


def verify_d_operator(n: int, k: Optional[int] = None) -> Report:
    report = Report("d-operator", n, None)
    display = Check("nabla1_qt(p_n) equals the closed display")
    divisible = Check("f - D f is a polynomial multiple of (1-q)(1-t)")
    restriction = Check("t=1 restriction of the nabla1_qt matrix equals the nabla_q oracle (k=1)")
    if n >= 1:
        got = nabla1_qt(SymFunc.p((n,)))
        display.record(got == nabla1_qt_p_n_expected(n), lambda: got.text())
    for lam in partitions_of(n):
        f = lift(SymFunc.p(lam), "qt")
        diff = f - op_D(f)
        for mu, c in diff.terms.items():
            ok = c.is_polynomial() and c.num.exact_div(M_QT.num) is not None
            divisible.record(ok, lambda: f"p[{lam.text()}] at p[{mu.text()}]")
    _compare_matrices(restriction, limit_matrix_t1(nabla1_qt_matrix(n)), nabla_q_oracle_matrix(n, 1))
    report.checks += [display, divisible, restriction]
    return report


def run_suite(name: str, n: int, k: int = 1, **kwargs) -> Report:
    runners = {
        "main1": verify_main1,
        "nabla": verify_nabla,
        "product": verify_product,
        "leibniz": verify_leibniz,
        "d-operator": verify_d_operator,
    }
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return runners[name](n, k, **kwargs)

"""CNF handling and the satisfiability-to-minsize reduction.

A conforming formula (no unit clauses, both polarities of every variable
used, no tautological or contained clauses, every clause disjoint from some
other, and each disjoint clause pair pierced by a third clause in exactly one
literal each) maps to a graph whose tree-minimal rooted insize is at most 1
exactly when the formula is satisfiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph


class CnfError(ValueError):
    pass


class DimacsFormatError(CnfError):
    pass


class TriviallySatisfiableError(CnfError):
    """Preprocessing short-circuit: the formula is satisfiable outright."""


class TriviallyUnsatisfiableError(CnfError):
    """Preprocessing short-circuit: the formula is unsatisfiable outright."""


class PreprocessRequiredError(CnfError):
    """The formula does not satisfy the structural preconditions yet."""


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are frozensets of DIMACS-style nonzero literals (+v / -v)."""

    num_vars: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self):
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range")

    @classmethod
    def of(cls, num_vars: int, clauses) -> "CnfFormula":
        return cls(num_vars, tuple(frozenset(c) for c in clauses))


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    num_clauses = None
    lits: list[int] = []
    clauses: list[frozenset[int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsFormatError(f"bad problem line: {raw!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsFormatError(f"bad problem line: {raw!r}")
            continue
        if num_vars is None:
            raise DimacsFormatError("clause data before 'p cnf' header")
        try:
            tokens = [int(t) for t in line.split()]
        except ValueError:
            raise DimacsFormatError(f"non-integer token on line {raw!r}")
        for t in tokens:
            if t == 0:
                if not lits:
                    raise DimacsFormatError("empty clause in input")
                clauses.append(frozenset(lits))
                lits = []
            else:
                lits.append(t)
    if lits:
        clauses.append(frozenset(lits))
    if num_vars is None:
        raise DimacsFormatError("missing 'p cnf' header")
    if num_clauses is not None and num_clauses != len(clauses):
        raise DimacsFormatError(
            f"header announces {num_clauses} clauses, found {len(clauses)}"
        )
    return CnfFormula.of(num_vars, clauses)


def to_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    for c in phi.clauses:
        lines.append(" ".join(str(l) for l in sorted(c, key=abs)) + " 0")
    return "\n".join(lines) + "\n"


def sat_truth_table(phi: CnfFormula) -> bool:
    """Exhaustive satisfiability test, up to 24 variables."""
    n = phi.num_vars
    if n > 24:
        raise CnfError("truth-table oracle is limited to 24 variables")
    clause_masks = []
    for c in phi.clauses:
        pos = 0
        neg = 0
        for lit in c:
            if lit > 0:
                pos |= 1 << (lit - 1)
            else:
                neg |= 1 << (-lit - 1)
        clause_masks.append((pos, neg))
    for assign in range(1 << n):
        ok = True
        for pos, neg in clause_masks:
            if not (assign & pos) and (assign & neg) == neg:
                ok = False
                break
        if ok:
            return True
    return False


def _pierced(cj: frozenset, ck: frozenset, clauses) -> bool:
    for cp in clauses:
        if cp is cj or cp is ck:
            continue
        if len(cp & cj) == 1 and len(cp & ck) == 1:
            return True
    return False


def conformity_violations(phi: CnfFormula) -> list[str]:
    """Structural preconditions the reduction needs; empty list = conforming."""
    out = []
    clauses = phi.clauses
    lits_seen = set().union(*clauses) if clauses else set()
    if not clauses:
        out.append("formula has no clauses")
        return out
    for c in clauses:
        if len(c) < 2:
            out.append(f"unit clause {sorted(c)}")
        if any(-l in c for l in c):
            out.append(f"tautological clause {sorted(c)}")
    for v in range(1, phi.num_vars + 1):
        if v not in lits_seen or -v not in lits_seen:
            out.append(f"variable {v} does not occur with both polarities")
    for cj, ck in combinations(clauses, 2):
        if cj < ck or ck < cj:
            out.append(f"clause containment {sorted(cj)} / {sorted(ck)}")
        if cj == ck:
            out.append(f"duplicate clause {sorted(cj)}")
    for c in clauses:
        if all(c & other for other in clauses if other is not c):
            out.append(f"clause {sorted(c)} intersects every other clause")
    for cj, ck in combinations(clauses, 2):
        if not (cj & ck) and not _pierced(cj, ck, clauses):
            out.append(
                f"disjoint pair {sorted(cj)} / {sorted(ck)} lacks a piercing clause"
            )
    return out


def _renumber(clauses: list[frozenset[int]]) -> CnfFormula:
    vars_used = sorted({abs(l) for c in clauses for l in c})
    remap = {v: i + 1 for i, v in enumerate(vars_used)}
    new = [frozenset((1 if l > 0 else -1) * remap[abs(l)] for l in c) for c in clauses]
    return CnfFormula.of(len(vars_used), new)


def preprocess_cnf(phi: CnfFormula) -> CnfFormula:
    """Equisatisfiable rewrite into the conforming form.

    Raises TriviallySatisfiableError / TriviallyUnsatisfiableError when the
    cleanup alone settles the formula.
    """
    clauses = [frozenset(c) for c in phi.clauses]

    def propagate(assigned_true: int, cls):
        nxt = []
        for c in cls:
            if assigned_true in c:
                continue
            c2 = c - {-assigned_true}
            if not c2:
                raise TriviallyUnsatisfiableError(
                    f"unit propagation of {assigned_true} empties a clause"
                )
            nxt.append(c2)
        return nxt

    changed = True
    while changed:
        changed = False
        # tautologies and duplicates / supersets
        cleaned = []
        for c in clauses:
            if any(-l in c for l in c):
                changed = True
                continue
            cleaned.append(c)
        clauses = cleaned
        pruned = []
        for c in clauses:
            if any(o < c for o in clauses) or any(
                o == c for o in pruned
            ):
                changed = True
                continue
            pruned.append(c)
        clauses = pruned
        if not clauses:
            raise TriviallySatisfiableError("all clauses eliminated by cleanup")
        # unit clauses
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is not None:
            clauses = propagate(next(iter(unit)), clauses)
            if not clauses:
                raise TriviallySatisfiableError("unit propagation satisfied all clauses")
            changed = True
            continue
        # pure literals (a polarity that never occurs)
        lits_seen = set().union(*clauses)
        pure = next((l for l in lits_seen if -l not in lits_seen), None)
        if pure is not None:
            clauses = propagate(pure, clauses)
            if not clauses:
                raise TriviallySatisfiableError("pure-literal elimination satisfied all clauses")
            changed = True
            continue
        # a clause intersecting every other clause can be set wholly true
        if len(clauses) == 1:
            raise TriviallySatisfiableError("single non-tautological clause")
        hub = next(
            (
                c
                for c in clauses
                if all(c & other for other in clauses if other is not c)
            ),
            None,
        )
        if hub is not None:
            raise TriviallySatisfiableError(
                f"clause {sorted(hub)} intersects every other clause"
            )

    result = _renumber(clauses)
    if not any(
        not (cj & ck) and not _pierced(cj, ck, result.clauses)
        for cj, ck in combinations(result.clauses, 2)
    ):
        return result

    # pierce all disjoint pairs with two fresh variables x, y forced equal
    n = result.num_vars
    x, y = n + 1, n + 2
    new_clauses = [c | {x, y} for c in result.clauses]
    new_clauses += [c | {-x, -y} for c in result.clauses]
    new_clauses += [frozenset({-x, y}), frozenset({x, -y})]
    out = CnfFormula.of(n + 2, new_clauses)
    leftover = conformity_violations(out)
    if leftover:
        raise CnfError(f"preprocessing failed to conform: {leftover}")
    return out


def sat_to_graph(phi: CnfFormula) -> tuple[Graph, dict]:
    """Build the reduction graph of a conforming formula.

    Vertices: root w = 0; clique V of 2n variable slots; literal set X of 2n
    vertices (x_i at 2i-1, negation at 2i, shifted past V); clause vertices.
    rho_-(graph) <= 1 iff phi is satisfiable.
    """
    violations = conformity_violations(phi)
    if violations:
        raise PreprocessRequiredError("; ".join(violations))
    n = phi.num_vars
    m = len(phi.clauses)

    def lit_index(lit: int) -> int:  # 1..2n
        return 2 * abs(lit) - (1 if lit > 0 else 0)

    W = 0
    V = lambda i: i                    # 1..2n
    X = lambda i: 2 * n + i            # 1..2n -> 2n+1..4n
    C = lambda j: 4 * n + 1 + j        # 0..m-1

    edges = []
    for i in range(1, 2 * n + 1):
        edges.append((W, V(i)))
        edges.append((V(i), X(i)))
        for i2 in range(i + 1, 2 * n + 1):
            edges.append((V(i), V(i2)))
    for i in range(1, 2 * n + 1):
        for i2 in range(i + 1, 2 * n + 1):
            # literals are adjacent unless they are complementary
            if (i + 1) // 2 != (i2 + 1) // 2:
                edges.append((X(i), X(i2)))
    for j, c in enumerate(phi.clauses):
        for lit in c:
            edges.append((X(lit_index(lit)), C(j)))
        for j2 in range(j + 1, m):
            if len(c & phi.clauses[j2]) == 1:
                edges.append((C(j), C(j2)))
    g = Graph(4 * n + 1 + m, edges)
    labels = {
        "w": W,
        "v": list(range(1, 2 * n + 1)),
        "literals": {
            lit: X(lit_index(lit))
            for v in range(1, n + 1)
            for lit in (v, -v)
        },
        "clauses": [C(j) for j in range(m)],
    }
    return g, labels

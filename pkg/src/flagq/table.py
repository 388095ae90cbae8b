"""Persistent structure-constant tables.

Stored as line-oriented text, one record per term:

    n u v w lambda coeff

with one-line permutations as concatenated digits and lambda as a
comma-separated coefficient list; records sorted by (u, v, lambda, w) so
identical tables are byte-identical.  Lines starting with '#' carry metadata.
"""
from __future__ import annotations

import datetime
from dataclasses import dataclass, field
from pathlib import Path

from . import weyl
from .qhring import QClass, get_engine
from .weyl import Permutation

FORMAT_VERSION = 1


@dataclass
class StructureTable:
    n: int
    entries: dict[tuple[Permutation, Permutation], QClass] = field(default_factory=dict)
    metadata: dict[str, str] = field(default_factory=dict)

    def put(self, u: Permutation, v: Permutation, cls: QClass) -> None:
        self.entries[(u, v)] = dict(cls)
        self.entries[(v, u)] = dict(cls)

    def get(self, u: Permutation, v: Permutation) -> QClass | None:
        return self.entries.get((u, v))

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"# flagq-table version={FORMAT_VERSION} n={self.n}"]
        for key, val in sorted(self.metadata.items()):
            lines.append(f"# {key}={val}")
        records = []
        for (u, v), cls in self.entries.items():
            us, vs = weyl.perm_to_string(u), weyl.perm_to_string(v)
            for (lam, w), c in cls.items():
                records.append(
                    (us, vs, lam, weyl.perm_to_string(w), int(c))
                )
        for us, vs, lam, ws, c in sorted(set(records)):
            lam_s = ",".join(str(a) for a in lam)
            lines.append(f"{self.n} {us} {vs} {ws} {lam_s} {c}")
        path.write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "StructureTable":
        path = Path(path)
        table = None
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if table is None and "flagq-table" in line:
                    parts = dict(
                        p.split("=", 1) for p in line.split() if "=" in p
                    )
                    table = cls(n=int(parts["n"]))
                elif table is not None and "=" in line:
                    k, _, v = line[1:].strip().partition("=")
                    table.metadata[k] = v
                continue
            if table is None:
                raise ValueError(f"{path}:{lineno}: missing table header")
            try:
                ns, us, vs, ws, lam_s, cs = line.split()
                if int(ns) != table.n:
                    raise ValueError("rank mismatch")
                u = weyl.perm_from_string(us)
                v = weyl.perm_from_string(vs)
                w = weyl.perm_from_string(ws)
                lam = tuple(int(a) for a in lam_s.split(","))
                c = int(cs)
            except ValueError as e:
                raise ValueError(f"{path}:{lineno}: bad record ({e})") from e
            table.entries.setdefault((u, v), {})[(lam, w)] = c
        if table is None:
            raise ValueError(f"{path}: empty table file")
        return table


def build_table(n: int, degree_cap: int | None = None) -> StructureTable:
    """Full quantum product table over S_n pairs (u <= v in one-line order)."""
    from . import __version__

    table = StructureTable(n)
    table.metadata["engine"] = __version__
    table.metadata["generated"] = (
        datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    )
    engine = get_engine(n, True)
    perms = weyl.all_permutations(n)
    for i, u in enumerate(perms):
        for v in perms[i:]:
            if degree_cap is not None and weyl.length(u) + weyl.length(v) > degree_cap:
                continue
            table.put(u, v, engine.product(u, v))
    return table

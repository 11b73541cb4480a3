"""One-graph invariant report with a fixed JSON field order."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bei import v_init, v_number
from .domination import gamma_c
from .graph import Graph
from .structure import (
    induced_matching_number,
    initial_graph,
    is_closed_labeling,
    longest_induced_path,
    theta_clique_cover,
)

FIELDS = (
    "n",
    "edges",
    "connected",
    "closed",
    "v",
    "v_at_Kn",
    "gamma_c",
    "theta",
    "ell",
    "im_initial",
    "v_init",
    "lf_max",
    "achieving_prime",
)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    edges: list[list[int]]
    connected: bool
    closed: bool
    v: int
    v_at_Kn: int | None
    gamma_c: int | None
    theta: int
    ell: int
    im_initial: int | None
    v_init: int | None
    lf_max: int | None
    achieving_prime: dict

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def to_text(self) -> str:
        rows = []
        for name in FIELDS:
            value = self.as_dict()[name]
            if name == "edges":
                value = " ".join(f"{u}-{v}" for u, v in value) or "(none)"
            elif name == "achieving_prime":
                s = ",".join(map(str, value["S"]))
                value = f"P_{{{s}}}"
            elif value is None:
                value = "n/a"
            rows.append(f"{name:16s} {value}")
        rows.append(f"{'triple':16s} {self.triple()}")
        return "\n".join(rows)

    def triple(self) -> str:
        """(v, v_init, reg) with reg shown only where the closed-graph formula applies."""
        reg = self.ell if self.closed and self.connected else "?"
        init = "n/a" if self.v_init is None else self.v_init
        return f"({self.v}, {init}, {reg})"


def build_report(g: Graph) -> InvariantReport:
    connected = g.is_connected()
    closed = is_closed_labeling(g).closed
    vr = v_number(g)
    dom = gamma_c(g) if connected else None
    theta, _ = theta_clique_cover(g)
    im_initial = induced_matching_number(initial_graph(g)) if closed else None
    return InvariantReport(
        n=g.n,
        edges=[list(e) for e in g.edges],
        connected=connected,
        closed=closed,
        v=vr.v,
        v_at_Kn=vr.v_at_Kn,
        gamma_c=dom.gamma_c if dom else None,
        theta=theta,
        ell=longest_induced_path(g),
        im_initial=im_initial,
        v_init=v_init(g) if g.edges else None,
        lf_max=dom.lf_max if dom and g.n >= 2 else None,
        achieving_prime=vr.achieving_prime.as_dict(),
    )

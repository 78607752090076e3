"""Claim-checking harness: each check evaluates one published statement on
one instance and reports pass, fail, or vacuous (hypothesis not met).

Suites are named manifests of checks over graph presets. A fail aborts the
suite after serializing the counterexample, so downstream reports never
mix with a broken solver state. Vacuous results are reported distinctly to
prove the hypothesis tests themselves ran.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from .classic import domination_number, satisfies_pendant_theorem_hypothesis
from .codec import graph6_str
from .formulas import (gamma_Zg_cycle_power, gamma_Zg_path,
                       game_values_bridge, game_values_hamming, hat_values)
from .game import DOM, L, LL, TOTAL, Z, Player, game_value, profile
from .graphs import Graph, generate
from .products import (bridge_graph, cartesian_product, hat_construction,
                       lexicographic_product)
from .smallgraphs import connected_graphs
from .structure import is_claw_free, is_weakly_claw_free, is_Z_insensitive
from .trees import enumerate_free_trees

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class CheckReport:
    check: str
    graph: str  # graph6 of the instance, or a parameter string
    status: str
    values: dict

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


class SuiteFailure(RuntimeError):
    def __init__(self, report: CheckReport, counterexample_path: str | None):
        self.report = report
        self.counterexample_path = counterexample_path
        super().__init__(f"check {report.check} failed on {report.graph}")


def _report(check: str, G: Graph | str, ok: bool | None, values: dict) -> CheckReport:
    name = G if isinstance(G, str) else graph6_str(G)
    status = VACUOUS if ok is None else (PASS if ok else FAIL)
    return CheckReport(check, name, status, values)


def check_hierarchy(G: Graph) -> CheckReport:
    """Lattice order of the seven invariants, Dominator-start side, plus
    both four-term game chains on the Staller-start side."""
    p = profile(G)
    v = p.as_flat_dict()
    ok = (v["gamma"] <= v["z_d"] <= v["dom_d"]
          and v["z_d"] <= v["total_d"]
          and max(v["dom_d"], v["total_d"]) <= v["l_d"] <= v["ll_d"]
          and v["gamma"] <= v["gamma_t"] <= v["total_d"]
          and v["z_s"] <= v["dom_s"] <= v["l_s"] <= v["ll_s"]
          and v["z_s"] <= v["total_s"] <= v["l_s"])
    return _report("hierarchy", G, ok, v)


def check_lexicographic_total(G: Graph, n: int) -> CheckReport:
    left = game_value(G, TOTAL)
    right = game_value(lexicographic_product(G, generate("empty", n)), Z)
    return _report("lex_total", G, left == right,
                   {"n": n, "total_d": left, "z_d_product": right})


def check_lexicographic_complete(G: Graph, n: int) -> CheckReport:
    left = game_value(G, DOM)
    right = game_value(lexicographic_product(G, generate("complete", n)), Z)
    return _report("lex_complete", G, left == right,
                   {"n": n, "dom_d": left, "z_d_product": right})


def check_even_Z_theorem(G: Graph) -> CheckReport:
    z = game_value(G, Z)
    if z % 2 == 1:
        return _report("even_z", G, None, {"z_d": z})
    l = game_value(G, L)
    return _report("even_z", G, z + 1 <= l, {"z_d": z, "l_d": l})


def check_Z_insensitive_equality(G: Graph) -> CheckReport:
    if not is_Z_insensitive(G):
        return _report("z_insensitive_eq", G, None, {"z_insensitive": False})
    vals = {"z_insensitive": True,
            "z_d": game_value(G, Z), "dom_d": game_value(G, DOM),
            "z_s": game_value(G, Z, Player.STALLER),
            "dom_s": game_value(G, DOM, Player.STALLER)}
    ok = vals["z_d"] == vals["dom_d"] and vals["z_s"] == vals["dom_s"]
    return _report("z_insensitive_eq", G, ok, vals)


def check_structure_chain(G: Graph) -> CheckReport:
    """claw-free implies weakly claw-free implies Z-insensitive."""
    cf = is_claw_free(G)
    wcf = is_weakly_claw_free(G)
    vals: dict = {"claw_free": cf, "weakly_claw_free": wcf}
    if cf and G.is_isolate_free() and not wcf:
        return _report("structure_chain", G, False, vals)
    if not wcf:
        return _report("structure_chain", G, None, vals)
    zi = is_Z_insensitive(G)
    vals["z_insensitive"] = zi
    return _report("structure_chain", G, zi, vals)


def check_twin_lemmas(G: Graph) -> CheckReport:
    """Deleting one vertex of a twin pair preserves the game value: the
    Dominator-start domination game for true twins, the total game for
    false twins."""
    from .structure import find_twins
    applied = 0
    vals: dict = {}
    for kind, variant, tag in (("true", DOM, "dom_d"), ("false", TOTAL, "total_d")):
        for u, v in find_twins(G, kind):
            H = G.delete_vertex(v)
            if not H.is_isolate_free():
                continue
            applied += 1
            before = game_value(G, variant)
            after = game_value(H, variant)
            if before != after:
                vals.update({"kind": kind, "pair": [u, v], tag: before,
                             f"{tag}_deleted": after})
                return _report("twin_lemmas", G, False, vals)
    if applied == 0:
        return _report("twin_lemmas", G, None, {"applicable_pairs": 0})
    return _report("twin_lemmas", G, True, {"applicable_pairs": applied})


def check_pendant_theorem(G: Graph) -> CheckReport:
    if not satisfies_pendant_theorem_hypothesis(G):
        return _report("pendant", G, None, {"hypothesis": False})
    gamma, _ = domination_number(G)
    gg = game_value(G, DOM)
    return _report("pendant", G, gg == 2 * gamma - 1,
                   {"hypothesis": True, "gamma": gamma, "dom_d": gg})


def check_path_formula(n_max: int = 20) -> list[CheckReport]:
    out = []
    for n in range(2, n_max + 1):
        got = game_value(generate("path", n), Z)
        want = gamma_Zg_path(n)
        out.append(_report("path_formula", f"P_{n}", got == want,
                           {"solver": got, "formula": want}))
    return out


def check_cycle_power_formula(N_max: int = 14, n_max: int = 3) -> list[CheckReport]:
    out = []
    for N in range(3, N_max + 1):
        for n in range(1, n_max + 1):
            got = game_value(generate("cycle_power", N, n), Z)
            want = gamma_Zg_cycle_power(N, n)
            out.append(_report("cycle_power_formula", f"C_{N}^{n}",
                               got == want, {"solver": got, "formula": want}))
    return out


def check_spot_values() -> list[CheckReport]:
    """The quoted preliminary values: gamma_t and game values of P_6 and of
    the 2x3 grid."""
    from .classic import total_domination_number
    out = []
    P6 = generate("path", 6)
    grid = cartesian_product(generate("complete", 2), generate("path", 3))
    for name, G, want_t, want_g in (("P_6", P6, 4, 3), ("K_2xP_3", grid, 2, 3)):
        gt = total_domination_number(G)[0]
        gg = game_value(G, DOM)
        zg = game_value(G, Z)
        out.append(_report("spot_values", name,
                           gt == want_t and gg == want_g and zg == want_g,
                           {"gamma_t": gt, "dom_d": gg, "z_d": zg}))
    return out


def check_hamming_and_bridge_and_hat() -> list[CheckReport]:
    out = []
    for m, n in ((2, 3), (2, 4), (2, 5), (3, 5), (3, 6)):
        G = cartesian_product(generate("complete", m), generate("complete", n))
        want = game_values_hamming(m, n)
        vals = {"z_d": game_value(G, Z), "l_d": game_value(G, L),
                "ll_d": game_value(G, LL), "formula": want}
        ok = vals["z_d"] == vals["l_d"] == vals["ll_d"] == want
        out.append(_report("hamming", f"K_{m}xK_{n}", ok, vals))
    for m, n in ((3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5)):
        G = bridge_graph(m, n)
        want = game_values_bridge(m, n)
        vals = {"z_d": game_value(G, Z), "l_d": game_value(G, L),
                "ll_d": game_value(G, LL), "formula": want}
        ok = vals["z_d"] == vals["l_d"] == vals["ll_d"] == want
        out.append(_report("bridge", f"G_{m},{n}", ok, vals))
    for name, base in (("P_3", generate("path", 3)),
                       ("K_3", generate("complete", 3))):
        H = hat_construction(base)
        want = hat_values(base.n)
        vals = {"z_d": game_value(H, Z), "gamma": domination_number(H)[0],
                "dom_d": game_value(H, DOM),
                "formula": [want.gamma_Zg, want.gamma, want.gamma_g]}
        ok = (vals["z_d"] == want.gamma_Zg and vals["gamma"] == want.gamma
              and vals["dom_d"] == want.gamma_g)
        out.append(_report("hat", f"hat({name})", ok, vals))
    return out


def _connected_upto(max_order: int) -> Iterable[Graph]:
    for n in range(2, max_order + 1):
        yield from connected_graphs(n)


def _suite_structure(max_order: int) -> Iterable[CheckReport]:
    for G in _connected_upto(max_order):
        yield check_structure_chain(G)


def _suite_products(max_order: int) -> Iterable[CheckReport]:
    for G in _connected_upto(max_order):
        for n in (2, 3):
            yield check_lexicographic_total(G, n)
            yield check_lexicographic_complete(G, n)


def _suite_theorems(max_order: int) -> Iterable[CheckReport]:
    for G in _connected_upto(max_order):
        yield check_hierarchy(G)
        yield check_Z_insensitive_equality(G)
        yield check_even_Z_theorem(G)
        yield check_twin_lemmas(G)
        if G.n >= 3:
            yield check_pendant_theorem(G)
    for n in range(2, 13):
        for T in enumerate_free_trees(n):
            yield check_even_Z_theorem(T)


def _suite_spotvalues(max_order: int) -> Iterable[CheckReport]:
    yield from check_spot_values()
    yield from check_path_formula()
    yield from check_cycle_power_formula()
    yield from check_hamming_and_bridge_and_hat()


SUITES: dict[str, tuple[Callable[[int], Iterable[CheckReport]], int]] = {
    # name -> (generator over max_order, default max_order)
    "structure": (_suite_structure, 7),
    "products": (_suite_products, 4),
    "theorems": (_suite_theorems, 6),
    "spotvalues": (_suite_spotvalues, 0),
}


def run_suite(name: str, max_order: int | None = None,
              out_path: str | None = None) -> list[CheckReport]:
    """Run a named suite; report order follows the manifest. On the first
    failure, write the counterexample next to the report and raise."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    gen, default_order = SUITES[name]
    order = default_order if max_order is None else max_order
    reports: list[CheckReport] = []
    sink = open(out_path, "w") if out_path else None
    try:
        for report in gen(order):
            reports.append(report)
            if sink:
                sink.write(report.to_json() + "\n")
            if report.status == FAIL:
                ce_path = (out_path or f"{name}-suite") + ".counterexample.json"
                with open(ce_path, "w") as fh:
                    fh.write(report.to_json() + "\n")
                raise SuiteFailure(report, ce_path)
    finally:
        if sink:
            sink.close()
    return reports

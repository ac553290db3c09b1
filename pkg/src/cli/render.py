"""
Output records and their two renderings.

Every verb produces plain records (str, int, bool, lists, dicts). Structured
mode writes each record as one line of JSON with sorted keys; text mode is
rendered from the same record, so both modes carry the same content.
"""
import json
from typing import Any, Callable, Dict, List

Record = Dict[str, Any]


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _render_eval(r: Record) -> str:
    return r["result"]


def _render_norm(r: Record) -> str:
    return f"norm_A={r['norm_A']} norm_B={r['norm_B']} grid={r['grid']}"


def _render_rep_eval(r: Record) -> str:
    return f"{r['rep']} {r['matrix_text']}"


def _render_separate(r: Record) -> str:
    return f"{r['separator']} witness={r['witness_text']}"


def _render_irred(r: Record) -> str:
    return f"{r['rep']} irreducible={_flag(r['irreducible'])} span_dimension={r['span_dimension']}"


def _render_orbit(r: Record) -> str:
    exps = ",".join(str(e) for e in r["exps"])
    angles = ",".join(r["angles"])
    return f"N={r['N']} k={r['k']} exps=[{exps}] angles=[{angles}]"


def _render_chain(r: Record) -> str:
    return f"V_{r['p']}: {_flag(r['in_chain'])}"


def _render_points(r: Record) -> str:
    lines = [f"{item['point']}: {item['value']}" for item in r["values"]]
    if "positive" in r:
        lines.append(f"minimal={_flag(r['minimal'])} positive={_flag(r['positive'])}")
    return "\n".join(lines)


def _render_spectrum(r: Record) -> str:
    return "{" + ", ".join(r["spectrum"]) + "}"


def _render_prime(r: Record) -> str:
    return str(r["prime"])


def _render_df(r: Record) -> str:
    return r["verdict"]


def _render_g1(r: Record) -> str:
    equivalent = "n/a" if r["equivalent_to_rep"] is None else _flag(r["equivalent_to_rep"])
    return f"g1 invariant={_flag(r['invariant'])} equivalent_to_rep={equivalent}"


def _render_faithful(r: Record) -> str:
    return "none" if r["witness"] is None else f"j={r['witness']}"


def _render_converge(r: Record) -> str:
    return f"{r['result']} delta0={_flag(r['is_delta0'])} depth={r['depth']}"


TEXT_RENDERERS: Dict[str, Callable[[Record], str]] = {
    "eval": _render_eval,
    "mul": _render_eval,
    "norm": _render_norm,
    "rep-eval": _render_rep_eval,
    "separate": _render_separate,
    "irred-check": _render_irred,
    "mu-orbits": _render_orbit,
    "chain-check": _render_chain,
    "witness": _render_points,
    "wiener-invert": _render_points,
    "spectrum": _render_spectrum,
    "choose-prime": _render_prime,
    "df-check": _render_df,
    "g1-check": _render_g1,
    "faithful-witness": _render_faithful,
    "converge": _render_converge,
}


def render_text(record: Record) -> str:
    return TEXT_RENDERERS[record["verb"]](record)


def render_structured(record: Record) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def render(records: List[Record], mode: str) -> List[str]:
    renderer = render_structured if mode == "structured" else render_text
    return [renderer(r) for r in records]

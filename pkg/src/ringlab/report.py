"""Report assembly and serialization (JSON and Markdown)."""

from __future__ import annotations

import json
from importlib import resources

from . import __version__
from .ideals import Ideal
from .predicates import Verdict

TOOL = "ringlab"


def envelope(kind: str, command: dict) -> dict:
    return {"tool": TOOL, "version": __version__, "kind": kind, "command": command}


def verdict_entry(v: Verdict, I: Ideal) -> dict:
    return {
        "predicate": v.predicate,
        "holds": v.holds,
        "witness": v.witness_labels(I.ring),
        "witness_indices": None if v.witness is None else list(v.witness),
        "mode": v.mode.value,
    }


def load_schema() -> dict:
    return json.loads(resources.files("ringlab").joinpath("report.schema.json").read_text())


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_cell(v) for v in value) + ")" if value else "()"
    return str(value).replace("|", "\\|")


def _table(headers, rows) -> list[str]:
    out = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    out += ["| " + " | ".join(_cell(c) for c in row) + " |" for row in rows]
    return out


def _classify_md(r):
    lines = [f"## classify `{r['ring']}` (order {r['order']}, {r['mode']})", ""]
    proper = [res for res in r["results"] if res["verdicts"]]
    preds = [v["predicate"] for v in proper[0]["verdicts"]] if proper else []
    rows = []
    for res in r["results"]:
        cells = [res["ideal"], res["size"]]
        if not res["verdicts"]:
            cells += ["not proper"] + ["-"] * (len(preds) - 1)
        for v in res["verdicts"]:
            cells.append(("yes" if v["holds"] else "no " + _cell(v["witness"])))
        cells.append(res["quotient_char"])
        rows.append(cells)
    lines += _table(["ideal", "size", *preds, "char(R/I)"], rows)
    return lines


def _audit_md(r):
    lines = ["## audit", ""]
    rows = [[c["tag"], c["status"], c["instances"], c["nonvacuous"], "; ".join(c["notes"])] for c in r["claims"]]
    lines += _table(["claim", "status", "instances", "nonvacuous", "notes"], rows)
    witnesses = [c for c in r["claims"] if c["witness"]]
    for c in witnesses:
        lines += ["", f"### {c['tag']} witness (recheck: {_cell(c.get('witness_rechecked'))})", ""]
        facts = c["witness"]["facts"]
        lines += _table(["ring", "ideal", "predicate", "holds", "witness"],
                        [[f.get("ring", "-"), f.get("ideal", "-"), f["predicate"], f["holds"], f.get("witness")] for f in facts])
    s = r["summary"]
    lines += ["", "summary: " + ", ".join(f"{k}={v}" for k, v in s.items())]
    return lines


def _search_md(r):
    lines = [f"## search {r['lo']}..{r['hi']} `{r['predicate']}` ({r['mode']})", "", "n: " + ", ".join(map(str, r["results"]))]
    if r.get("exclusions") is not None:
        lines += [""] + _table(["n", "witness"], [[e["n"], e["witness"]] for e in r["exclusions"]])
    return lines


def _witness_md(r):
    lines = [f"## witness in `{r['ring']}`, ideal `{r['ideal']}`", ""]
    m = r["memberships"]
    lines += _table(["element", "in ideal"], [["a^3 - b^3", m["cube_difference"]], ["a - b", m["difference"]],
                                               ["a^2 + ab + b^2", m["factor"]]])
    lines += ["", f"pair {_cell(r['witness'])}: " + ("valid cdf counterexample" if r["counterexample"] else "not a counterexample")]
    return lines


def to_markdown(report: dict) -> str:
    kind = report["kind"]
    lines = [f"# {TOOL} {report['version']} {kind}", ""]
    lines += {"classify": _classify_md, "audit": _audit_md, "search": _search_md, "witness": _witness_md}[kind](report)
    if "timings" in report:
        lines += ["", "timings (s): " + ", ".join(f"{k}={v:.3f}" for k, v in report["timings"].items())]
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    return to_json(report) if fmt == "json" else to_markdown(report)

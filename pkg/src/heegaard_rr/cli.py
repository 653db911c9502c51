"""Command-line front end: ``heegaard-rr <analyze|derive|synth|certify|compare>``.

Exit codes: 0 claim established, 1 valid input but claim not established,
2 invalid input.
"""

from __future__ import annotations

import argparse
import difflib
import hashlib
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .certify import (
    DcpCandidate,
    SFDeclaration,
    canonical_json,
    certify_sums,
    compare_splittings,
    dcp_search,
    distance_bracket,
    verify_pair_witness,
)
from .freegroup import BasisMap, CyclicWord, WordError, format_letters
from .presentations import (
    EliminateGenerator,
    InvertRelator,
    PermuteRelators,
    Presentation,
    PresentationError,
    Rename,
    apply_step,
    syllable_stats,
)
from .rrdiagram import DiagramError, RRDiagram, SynthesisError, complexity, content_hash, extract_words, parse, serialize, synthesize
from .rrdiagram.geometry import class_counts, detect_rectangles, dual_words
from .rrdiagram.graph import GraphError, classify_graph_form, graph_from_words

EXIT_OK, EXIT_NOT_ESTABLISHED, EXIT_INVALID = 0, 1, 2


class InputError(Exception):
    pass


# -- inputs -------------------------------------------------------------------------


def data_dir() -> Path:
    env = os.environ.get("HEEGAARD_RR_DATA")
    if env:
        return Path(env)
    return Path(str(resources.files("heegaard_rr") / "data"))


def resolve(path: str) -> Path:
    """Literal path if it exists, else ``data/<name>`` looked up in the data directory."""
    p = Path(path)
    if p.exists():
        return p
    parts = p.parts
    if parts and parts[0] == "data":
        q = data_dir().joinpath(*parts[1:])
        if q.exists():
            return q
    raise InputError(f"{path}: no such file")


def read_text(path: str) -> str:
    try:
        return resolve(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_diagram(path: str) -> RRDiagram:
    text = read_text(path)
    try:
        return parse(text)
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_presentation(arg: str) -> Presentation:
    text = arg if arg.lstrip().startswith("<") else read_text(arg)
    try:
        return Presentation.parse(text.strip())
    except PresentationError as exc:
        raise InputError(f"{arg}: {exc}") from exc


# -- reports ------------------------------------------------------------------------


def report(command: str, inputs: dict, findings: dict, verdicts: dict) -> dict:
    return {"command": command, "inputs": inputs, "findings": findings,
            "verdicts": verdicts, "versions": {"heegaard_rr": __version__}}


def graph_json(words, gens) -> dict:
    try:
        g = graph_from_words(words, gens=gens)
    except GraphError as exc:
        return {"form": f"invalid: {exc}", "ss": 0, "tt": 0, "mixed": 0, "loops": 0, "valences": {}}
    try:
        form = classify_graph_form(g).value
    except GraphError as exc:
        form = f"invalid: {exc}"
    return {"form": form, "ss": g.ss, "tt": g.tt, "mixed": g.mixed, "loops": g.loops,
            "valences": dict(sorted(g.valences.items()))}


def graph_line(name: str, g: dict) -> str:
    return f"{name}: {g['form']} (ss={g['ss']}, tt={g['tt']}, mixed={g['mixed']}, loops={g['loops']})"


def presentation_lines(p: Presentation) -> list[str]:
    return [str(r) for r in p.relators]


# -- commands -----------------------------------------------------------------------


def cmd_analyze(args) -> tuple[int, dict, list[str]]:
    d = load_diagram(args.diagram)
    p = extract_words(d)
    dual = dual_words(d)
    fams = detect_rectangles(d)
    counts = class_counts(d)
    findings = {
        "relators": presentation_lines(p),
        "complexity": complexity(d),
        "labels": {"A": list(d.hex_a.labels), "B": list(d.hex_b.labels)},
        "class_counts": {h: {f"{c}{e}": n for (c, e), n in sorted(cnt.items())} for h, cnt in counts.items()},
        "relator_graph": graph_json(p.relators, ("A", "B")),
        "dual_words": {k: str(v) for k, v in dual.items()},
        "dual_graph": graph_json(dual.values(), ("X", "Y")),
        "rectangles": {t: list(f.values) for t, f in fams.items()},
    }
    rep = report("analyze", {args.diagram: content_hash(d)}, findings, {})
    lines = [f"relator {i}: {r}" for i, r in enumerate(findings["relators"])]
    lines += [f"complexity: {findings['complexity']}",
              graph_line("relator graph", findings["relator_graph"]),
              graph_line("dual graph", findings["dual_graph"])]
    lines += [f"rectangles {t}: {v}" for t, v in findings["rectangles"].items()]
    return EXIT_OK, rep, lines


def _step_from_json(obj: dict):
    op = obj.get("op")
    try:
        if op == "eliminate":
            return EliminateGenerator(int(obj["relator"]), str(obj["generator"]))
        if op == "rename":
            return Rename(BasisMap.relabel(obj["map"]))
        if op == "invert":
            return InvertRelator(int(obj["relator"]))
        if op == "permute":
            return PermuteRelators(tuple(int(i) for i in obj["order"]))
        if op == "expect":
            return ("expect", Presentation.parse(obj["presentation"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad step {obj}: {exc}") from exc
    raise InputError(f"unknown step op {op!r}")


def letter_diff(expected: CyclicWord, got: CyclicWord) -> list[str]:
    e = [str(x) for x in expected.letters]
    g = [str(x) for x in got.letters]
    out = []
    for tag, i1, i2, j1, j2 in difflib.SequenceMatcher(a=e, b=g, autojunk=False).get_opcodes():
        if tag != "equal":
            out.append(f"    {tag} expected[{i1}:{i2}]={format_letters(expected.letters[i1:i2], fold=False) or '1'}"
                       f" got[{j1}:{j2}]={format_letters(got.letters[j1:j2], fold=False) or '1'}")
    return out


def presentation_diff(expected: Presentation, got: Presentation) -> list[str]:
    out = []
    if expected.generators != got.generators:
        out.append(f"  generators: expected {','.join(expected.generators)} got {','.join(got.generators)}")
    for i in range(max(len(expected.relators), len(got.relators))):
        e = expected.relators[i] if i < len(expected.relators) else None
        g = got.relators[i] if i < len(got.relators) else None
        if e == g:
            continue
        out.append(f"  relator {i}: expected {e} got {g}")
        if e is not None and g is not None:
            out += letter_diff(e, g)
    return out


def cmd_derive(args) -> tuple[int, dict, list[str]]:
    raw = read_text(args.script)
    try:
        script = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.script}: invalid JSON: {exc}") from exc
    if not isinstance(script, dict):
        raise InputError(f"{args.script}: script must be a JSON object")
    if args.presentation:
        p = load_presentation(args.presentation)
    elif "start" in script:
        try:
            p = Presentation.parse(script["start"])
        except PresentationError as exc:
            raise InputError(f"{args.script}: start: {exc}") from exc
    else:
        raise InputError("no starting presentation given")
    steps = [_step_from_json(s) for s in script.get("steps", [])]
    lines = [f"start: {p}"]
    stages = [{"step": "start", "presentation": str(p), "total_length": p.total_length()}]
    expects = []
    code = EXIT_OK
    for step in steps:
        if isinstance(step, tuple):
            want = step[1]
            ok = want == p
            expects.append({"expected": str(want), "ok": ok})
            lines.append(f"expect {'ok' if ok else 'MISMATCH'}: {want}")
            if not ok:
                lines += presentation_diff(want, p)
                code = EXIT_NOT_ESTABLISHED
            continue
        try:
            p, done = apply_step(p, step)
        except (PresentationError, WordError) as exc:
            raise InputError(f"step '{step}' failed: {exc}") from exc
        lines.append(f"{done}: {p}")
        stages.append({"step": str(done), "presentation": str(p), "total_length": p.total_length()})
    rep = report("derive", {args.script: hashlib.sha256(raw.encode("utf-8")).hexdigest()}, {"stages": stages, "expects": expects},
                 {"all_expects_pass": code == EXIT_OK})
    return code, rep, lines


def cmd_synth(args) -> tuple[int, dict, list[str]]:
    p = load_presentation(args.presentation)
    try:
        d = synthesize(p, clockwise=not args.counterclockwise)
    except (SynthesisError, PresentationError) as exc:
        rep = report("synth", {args.presentation: str(p)}, {"error": str(exc)}, {"realizes": False})
        return EXIT_NOT_ESTABLISHED, rep, [f"synthesis failed: {exc}"]
    text = serialize(d)
    Path(args.out).write_text(text + "\n", encoding="utf-8")
    back = extract_words(d)
    stats = syllable_stats(back)
    realizes = back.canonical() == _as_ab(p).canonical()
    findings = {"labels": {"A": list(d.hex_a.labels), "B": list(d.hex_b.labels)},
                "class_counts": {"A": [len(f) for f in d.hex_a.slots[:3]],
                                 "B": [len(f) for f in d.hex_b.slots[:3]]},
                "pair_counts": {f"{m},{n}": c for (m, n), c in sorted(stats.pairs.items())},
                "complexity": complexity(d), "extracted": presentation_lines(back),
                "output": args.out, "diagram_hash": content_hash(d)}
    rep = report("synth", {args.presentation: str(p)}, findings, {"realizes": realizes})
    lines = [f"A labels {findings['labels']['A']}, B labels {findings['labels']['B']}",
             f"class counts A {findings['class_counts']['A']}, B {findings['class_counts']['B']}",
             f"complexity {findings['complexity']}", f"realizes: {str(realizes).lower()}",
             f"wrote {args.out}"]
    return (EXIT_OK if realizes else EXIT_NOT_ESTABLISHED), rep, lines


def _as_ab(p: Presentation) -> Presentation:
    from .presentations import rename
    g1, g2 = p.generators
    return p if (g1, g2) == ("A", "B") else rename(p, BasisMap.relabel({g1: "A", g2: "B"}))


def _parse_sf(specs: list[str]) -> dict[str, SFDeclaration]:
    out = {}
    for spec in specs or []:
        try:
            cid, rest = spec.split("=", 1)
            parts = rest.split(":")
            if parts[0] == "16a":
                out[cid] = SFDeclaration("16a")
            else:
                form, a, b, pattern = parts
                out[cid] = SFDeclaration(form, int(a), int(b), CyclicWord.parse(pattern))
        except (ValueError, WordError) as exc:
            raise InputError(f"bad --sf {spec!r}: expected ID=16a or ID=16b:A:B:PATTERN") from exc
    return out


def cmd_certify(args) -> tuple[int, dict, list[str]]:
    d = load_diagram(args.diagram)
    sums = certify_sums(d)
    findings = {"sums": sums.to_json()}
    lines = [f"SUMS: {'certified ' + str({t: (m, n) for t, m, n in sums.witnesses}) if sums else sums.reason}"]
    pair = None
    if args.pair:
        ids = args.pair.split(",")
        if len(ids) != 2:
            raise InputError("--pair needs two ids: ALPHA,BETA")
        try:
            res = verify_pair_witness(d, ids[0], ids[1], _parse_sf(args.sf))
        except KeyError as exc:
            raise InputError(f"{args.diagram}: {exc.args[0]}") from exc
        findings["pair"] = res.to_json()
        lines.append(f"pair {ids[0]},{ids[1]}: {'verified' if res else res.reason}")
        pair = res if res else None
    if args.dcp_trials:
        bad = dcp_search(d, seed=args.seed, trials=args.dcp_trials)
        findings["dcp_search"] = {"seed": args.seed, "trials": args.dcp_trials,
                                  "candidates": [_dcp_json(c) for c in bad]}
        lines.append(f"DCP search (seed {args.seed}, {args.dcp_trials} trials): {len(bad)} candidates")
    bracket = distance_bracket(d, sums if sums else None, pair)
    findings["distance"] = bracket.to_json()
    lines.append(f"distance bracket: {bracket}")
    rep = report("certify", {args.diagram: content_hash(d)}, findings, {"distance": str(bracket)})
    return (EXIT_OK if bracket.exact() == 3 else EXIT_NOT_ESTABLISHED), rep, lines


def _dcp_json(c: DcpCandidate) -> dict:
    return {"hexagon": c.hexagon, "direction": list(c.direction), "word_hprime": str(c.word_hprime)}


def cmd_compare(args) -> tuple[int, dict, list[str]]:
    d1, d2 = load_diagram(args.first), load_diagram(args.second)
    r = compare_splittings(d1, d2)
    rep = report("compare", {args.first: content_hash(d1), args.second: content_hash(d2)},
                 r.to_json(), {"verdict": r.verdict})
    lines = []
    for name, s in ((args.first, r.first), (args.second, r.second)):
        lines.append(f"{name}: complexity {s.complexity}, SUMS {s.sums}, dual graph {s.graph_form} "
                     f"(ss={s.ss}, tt={s.tt}, mixed={s.mixed}), unique minimizer {s.unique_minimizer}")
    lines.append(f"verdict: {r.verdict} ({r.reason})")
    return (EXIT_OK if r.verdict == "NotHomeomorphic" else EXIT_NOT_ESTABLISHED), rep, lines


# -- entry point -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    ap = argparse.ArgumentParser(prog="heegaard-rr", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"heegaard-rr {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="words, complexity, graphs and rectangles")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("derive", parents=[common], help="replay a Tietze script and check its expects")
    p.add_argument("paths", nargs="+", metavar="[PRESENTATION] SCRIPT")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("synth", parents=[common], help="build a diagram from a minimal presentation")
    p.add_argument("presentation")
    p.add_argument("out")
    p.add_argument("--counterclockwise", action="store_true", help="flip the A-hexagon chirality")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("certify", parents=[common], help="SUMS certificate, pair witness, distance bracket")
    p.add_argument("diagram")
    p.add_argument("--pair", metavar="ALPHA,BETA")
    p.add_argument("--sf", action="append", metavar="ID=FORM",
                   help="declared SF form per curve: ID=16a or ID=16b:A:B:PATTERN")
    p.add_argument("--dcp-trials", type=int, default=0, metavar="N",
                   help="also run N seeded disjoint-curve falsification trials")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("compare", parents=[common], help="distinguish two splittings by minimal complexity")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "derive":
        if len(args.paths) > 2:
            print("heegaard-rr: error: derive takes [PRESENTATION] SCRIPT", file=sys.stderr)
            return EXIT_INVALID
        args.presentation = args.paths[0] if len(args.paths) == 2 else None
        args.script = args.paths[-1]
    try:
        code, rep, lines = args.func(args)
    except InputError as exc:
        print(f"heegaard-rr: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    for line in lines:
        print(line)
    if args.json:
        text = canonical_json(rep)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())

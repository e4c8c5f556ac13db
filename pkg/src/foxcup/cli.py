"""Command-line interface: ``python -m foxcup <command> ...``.

Exit status is 0 on success, 1 for bad input or usage, 2 when a search
budget or size limit is hit.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .cup import cup_matrix
from .echelon import echelon_presentation
from .group_ring import augmented_fox, double_fox, fox_derivative
from .homology import h1_integral
from .intlinalg import render_matrix
from .sunada.formats import parse_group_spec
from .sunada.groups import GroupError, are_conjugate_subgroups, is_almost_conjugate
from .sunada.pipeline import SunadaError, sunada_pipeline
from .sunada.rewriting import RewriteError
from .sunada.search import DEFAULT_BUDGET, BudgetExceeded, find_epimorphisms
from .words import LOWER, PresentationError, parse_presentation, parse_word


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _digest(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode())
        h.update(b"\0")
    return h.hexdigest()[:16]


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PresentationError(f"cannot read {path}: {exc.strerror}") from None


def _fmt(x) -> str:
    return str(x)


def _generator(token: str) -> int:
    if len(token) == 1 and token in LOWER:
        return LOWER.index(token) + 1
    if token.isdigit() and int(token) > 0:
        return int(token)
    raise PresentationError(f"bad generator {token!r}: use a lowercase letter or a positive number")


def cmd_fox(args) -> tuple[dict, str]:
    i = _generator(args.index)
    s = _generator(args.second) if args.second else 0
    letters = [LOWER.index(c.lower()) + 1 for c in args.word if c.lower() in LOWER]
    n = args.n or max(letters + [i, s])
    w = parse_word(args.word, n)
    if args.second:
        value = double_fox(w, s, i, n)
        return {"word": args.word, "index": args.index, "second": args.second, "value": value}, str(value)
    if args.augmented:
        value = augmented_fox(w, i, n)
        return {"word": args.word, "index": args.index, "value": value}, str(value)
    d = fox_derivative(w, i, n).render()
    return {"word": args.word, "index": args.index, "derivative": d}, d


def cmd_echelon(args) -> tuple[dict, str]:
    P = parse_presentation(_read(args.presentation))
    E = echelon_presentation(P)
    text = E.base.to_text()
    result = {"presentation": text, "transform": E.transform, "jacobian": E.jacobian}
    out = text + "# transform C\n" + render_matrix(E.transform) + "\n# jacobian\n" + render_matrix(E.jacobian)
    return result, out


def cmd_cup(args) -> tuple[dict, str]:
    P = parse_presentation(_read(args.presentation))
    c = cup_matrix(P)
    result = {
        "b": c.b,
        "dim_h2": c.dim_h2,
        "matrix": [[_fmt(x) for x in row] for row in c.entries],
        "rank": c.rank,
        "nullity": c.nullity,
    }
    out = "\n".join(
        [
            f"b={c.b}",
            f"dim H2={c.dim_h2}",
            "cup matrix (rows: relators "
            + ",".join(map(str, c.relator_indices))
            + "; columns: pairs "
            + " ".join(f"{i}{j}" for i, j in c.pairs)
            + ")",
            render_matrix(result["matrix"]),
            f"rank={c.rank}",
            f"nullity={c.nullity}",
        ]
    )
    return result, out


def cmd_homology(args) -> tuple[dict, str]:
    h = h1_integral(parse_presentation(_read(args.presentation)))
    return h.as_dict(), h.render()


def cmd_almost_conjugate(args) -> tuple[dict, str]:
    spec = parse_group_spec(_read(args.group))
    if len(spec.subgroups) != 2:
        raise GroupError("group file must list exactly two 'sub:' lines")
    G, (H1, H2) = spec.group, spec.subgroups
    ac = is_almost_conjugate(G, H1, H2)
    cj = are_conjugate_subgroups(G, H1, H2)
    result = {"order": G.order, "orders": [len(H1), len(H2)], "almost_conjugate": ac, "conjugate": cj}
    out = f"|G|={G.order} |H1|={len(H1)} |H2|={len(H2)}\nalmost conjugate: {ac}\nconjugate: {cj}"
    return result, out


def cmd_epi_search(args) -> tuple[dict, str]:
    P = parse_presentation(_read(args.presentation))
    G = parse_group_spec(_read(args.group)).group
    found = find_epimorphisms(P, G, args.max_results, args.budget)
    images = [[_label(G, g) for g in phi.images] for phi in found]
    result = {"count": len(found), "images": images}
    lines = [f"{len(found)} epimorphism(s)"]
    for imgs in images:
        lines.append("  " + ", ".join(f"{P.render_word((k + 1,))} -> {g}" for k, g in enumerate(imgs)))
    return result, "\n".join(lines)


def _label(G, g) -> str:
    lab = G.labels[g]
    if isinstance(lab, tuple) and len(lab) == 2 and all(isinstance(x, int) for x in lab):
        return f"({lab[0]},{lab[1]})"
    return f"e{g}"


def cmd_sunada(args) -> tuple[dict, str]:
    P = parse_presentation(_read(args.presentation))
    spec = parse_group_spec(_read(args.group))
    if len(spec.subgroups) != 2:
        raise GroupError("group file must list exactly two 'sub:' lines")
    r = sunada_pipeline(P, spec.group, *spec.subgroups, simplify=not args.no_simplify, budget=args.budget)
    result = r.as_dict()
    result["images"] = [_label(spec.group, g) for g in r.images]
    lines = [f"epimorphism images: {' '.join(result['images'])}", f"index: {r.index}"]
    for k in range(2):
        c = r.cup[k]
        lines += [
            f"--- subgroup {k + 1}",
            r.presentations[k].to_text().rstrip(),
            f"H1 = {r.homology[k].render()}",
            f"b={c.b} dim H2={c.dim_h2} rank={c.rank} nullity={c.nullity}",
        ]
    lines += [
        f"homology distinguishes: {r.homology_distinguishes}",
        f"cup nullity distinguishes: {r.cup_distinguishes}",
        f"note: {r.caveat}",
    ]
    return result, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="foxcup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit a JSON record")
        p.add_argument("--timing", action="store_true", help="include wall time in the JSON record")
        p.set_defaults(func=func)
        return p

    p = add("fox", cmd_fox, "Fox derivative of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--index", required=True, help="generator letter (or 1-based number)")
    p.add_argument("--augmented", action="store_true", help="augment the derivative")
    p.add_argument("--second", help="also differentiate by this generator and augment (eps_{second,index})")
    p.add_argument("--n", type=int, help="alphabet size (default: largest letter used)")

    p = add("echelon", cmd_echelon, "echelon presentation and transform")
    p.add_argument("presentation")
    p = add("cup", cmd_cup, "cup product map H1 ^ H1 -> H2")
    p.add_argument("presentation")
    p = add("homology", cmd_homology, "integral first homology")
    p.add_argument("presentation")
    p = add("almost-conjugate", cmd_almost_conjugate, "test two subgroups for almost conjugacy")
    p.add_argument("group")
    for name, func, help_ in (
        ("epi-search", cmd_epi_search, "epimorphisms onto a finite group"),
        ("sunada", cmd_sunada, "subgroup presentations of a Sunada pair"),
    ):
        p = add(name, func, help_)
        p.add_argument("presentation")
        p.add_argument("group")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.choices["epi-search"].add_argument("--max-results", type=int, default=None)
    sub.choices["sunada"].add_argument("--no-simplify", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            raise UsageError("foxcup: error: a command is required")
        t0 = time.perf_counter()
        result, text = args.func(args)
        elapsed = time.perf_counter() - t0
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (BudgetExceeded, MemoryError) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 2
    except (PresentationError, GroupError, SunadaError, RewriteError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        inputs = [str(v) for k, v in sorted(vars(args).items()) if k not in ("func", "json", "timing")]
        files = [Path(v).read_text() for v in inputs if Path(v).is_file()]
        record = {"command": args.command, "input_digest": _digest(*inputs, *files), "results": result}
        if args.timing:
            record["wall_time"] = elapsed
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(text)
    return 0

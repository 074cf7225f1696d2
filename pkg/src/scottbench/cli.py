"""Command line front door.

Exit codes: 0 verified/exhausted/ok, 1 violation or counterexample found,
2 usage or input error.  All reports are deterministic (sorted keys, sorted
witnesses), so golden-file comparisons and rerun diffs stay byte-identical.
"""

import argparse
import hashlib
import json
import re
import sys
from pathlib import Path

from . import cache as cache_mod
from .canonical import canonical_form, encode_poset
from .closed_sets import adjunction_report, down_set_lattice
from .enumeration import ENUMERATION_CAP, enumerate_posets, posets_upto
from .errors import (
    MaterializationCapExceeded,
    ConsonanceCapExceeded,
    SizeCapExceeded,
    UnknownName,
    UnknownTheorem,
    WorkbenchError,
)
from .finspace import compactness, separation, sobriety, topology_space
from .jsonio import DocumentError, dumps, poset_from_doc, poset_to_doc, to_jsonable
from .orderprops import profile, spectrum
from .poset import lattice_ops, named_poset
from .powerspace import consonance_transfer, is_consonant
from .theorems import REGISTRY, run_theorem

_NAME_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\((\d+(?:,\s*\d+)*)\))?$")


def _load_subject(arg):
    """A poset from a JSON document path or a generator name like chain(3)."""
    path = Path(arg)
    if path.is_file():
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        if isinstance(doc, dict) and "poset" in doc:
            kind = doc.get("kind", "scott")
            return poset_from_doc(doc["poset"]), kind
        return poset_from_doc(doc), "scott"
    m = _NAME_RE.match(arg)
    if m:
        params = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
        return named_poset(m.group(1), *params), "scott"
    raise DocumentError(f"{arg!r} is neither a file nor a recognized name")


def _section(fn):
    try:
        return fn()
    except (MaterializationCapExceeded, ConsonanceCapExceeded, SizeCapExceeded) as exc:
        return {"skipped": str(exc)}


def _analysis(P, kind):
    canon = canonical_form(P).poset
    X = topology_space(canon, kind)
    spec_poset = X.spec
    out = {
        "subject": poset_to_doc(P),
        "canonical": encode_poset(canon),
        "kind": kind,
    }
    ops = lattice_ops(spec_poset)
    out["lattice"] = _section(lambda: to_jsonable(profile(spec_poset)))
    if ops.is_lattice and spec_poset.n:
        out["spectrum"] = _section(lambda: to_jsonable(spectrum(spec_poset)))
    out["space"] = _section(
        lambda: {
            "sobriety": to_jsonable(sobriety(X)),
            "compactness": to_jsonable(compactness(X)),
            "separation": to_jsonable(separation(X)),
        }
    )

    def closed_sets_section():
        gl = down_set_lattice(spec_poset)
        return {
            "size": len(gl),
            "adjunction": to_jsonable(adjunction_report(gl)),
        }

    out["closed_sets"] = _section(closed_sets_section)

    def powerspace_section():
        from .powerspace import powerspace_report

        body = to_jsonable(powerspace_report(X, with_commutation=spec_poset.n <= 3))
        if spec_poset.n <= 3:
            body["transfer"] = to_jsonable(consonance_transfer(X))
        return body

    out["powerspace"] = _section(powerspace_section)
    return out


def _render_markdown(doc, lines=None, depth=0):
    if lines is None:
        lines = []
        lines.append("# analysis")
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            lines.append(f"{'#' * (depth + 2)} {key}")
            _render_markdown(value, lines, depth + 1)
        else:
            lines.append(f"- {key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    P, kind = _load_subject(args.input)
    key = hashlib.sha256(
        (encode_poset(canonical_form(P).poset) + kind).encode()
    ).hexdigest()
    cached = None
    cache_file = cache_mod.cache_dir() / "analyze" / f"{key}.json"
    if cache_file.is_file():
        cached = json.loads(cache_file.read_text())
    doc = cached if cached is not None else _analysis(P, kind)
    doc["cache_key"] = key
    if cached is None:
        try:
            cache_file.parent.mkdir(parents=True, exist_ok=True)
            tmp = cache_file.with_suffix(".tmp")
            tmp.write_text(dumps(doc))
            tmp.replace(cache_file)
        except OSError:
            pass  # cache is best effort
    if args.markdown:
        sys.stdout.write(_render_markdown(to_jsonable(doc)))
    else:
        sys.stdout.write(dumps(doc))
    return 0


def cmd_verify(args):
    corpus = None
    if args.lattices_only:
        corpus = "lattices"
    if args.distributive_only:
        corpus = "distributive-lattices"
    report = run_theorem(args.theorem, args.max_n, corpus)
    sys.stdout.write(dumps(report))
    sys.stderr.write(
        f"{report.theorem}: {report.status} over {report.instances} instances "
        f"in {report.elapsed_seconds:.2f}s\n"
    )
    return 0 if not report.violations else 1


# -- property search ------------------------------------------------------------


def _lattice_flag(name):
    def pred(P):
        pr = profile(P)
        return bool(getattr(pr, name))

    return pred


def _space_flag(fn):
    return lambda P: fn(topology_space(P))


PREDICATES = {
    "lattice": lambda P: lattice_ops(P).is_lattice,
    "complete_lattice": lambda P: lattice_ops(P).is_complete,
    "distributive": _lattice_flag("distributive"),
    "prime_continuous": _lattice_flag("prime_continuous"),
    "continuous": _lattice_flag("continuous"),
    "algebraic": _lattice_flag("algebraic"),
    "quasicontinuous": _lattice_flag("quasicontinuous"),
    "quasialgebraic": _lattice_flag("quasialgebraic"),
    "hypercontinuous": _lattice_flag("hypercontinuous"),
    "hyperalgebraic": _lattice_flag("hyperalgebraic"),
    "jointly_scott_continuous": _lattice_flag("jointly_scott_continuous"),
    "sober": _space_flag(lambda X: sobriety(X).is_sober),
    "core_compact": _space_flag(lambda X: bool(compactness(X).is_core_compact)),
    "locally_compact": _space_flag(lambda X: compactness(X).is_locally_compact),
    "t1": _space_flag(lambda X: separation(X).is_T1),
    "discrete": _space_flag(lambda X: separation(X).is_discrete),
    "consonant": _space_flag(lambda X: is_consonant(X).consonant),
}


class ExpressionError(WorkbenchError):
    pass


_TOKEN_RE = re.compile(r"\s*(∧|∨|¬|&&?|\|\|?|!|\(|\)|[A-Za-z_][A-Za-z_0-9]*)")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExpressionError(f"bad token at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_property(text):
    """Predicate names combined with and/or/not (unicode or ascii)."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ExpressionError("unexpected end of expression")
        pos += 1
        return tokens[pos - 1]

    def atom():
        t = peek()
        if t is None:
            raise ExpressionError("unexpected end of expression")
        if t in ("¬", "!", "not"):
            take()
            inner = atom()
            return lambda P: not inner(P)
        if t == "(":
            take()
            inner = disjunction()
            if take() != ")":
                raise ExpressionError("missing closing parenthesis")
            return inner
        take()
        if t in PREDICATES:
            fn = PREDICATES[t]
            return fn
        raise ExpressionError(f"unknown predicate {t!r}; known: {sorted(PREDICATES)}")

    def conjunction():
        out = [atom()]
        while peek() in ("∧", "&", "&&", "and"):
            take()
            out.append(atom())
        return lambda P: all(f(P) for f in out)

    def disjunction():
        out = [conjunction()]
        while peek() in ("∨", "|", "||", "or"):
            take()
            out.append(conjunction())
        return lambda P: any(f(P) for f in out)

    expr = disjunction()
    if pos != len(tokens):
        raise ExpressionError(f"trailing tokens {tokens[pos:]!r}")
    names = [t for t in tokens if t in PREDICATES]
    return expr, names


def cmd_search(args):
    expr, names = parse_property(args.property)
    limit = min(args.max_n, ENUMERATION_CAP)
    for P in posets_upto(limit):
        if expr(P):
            values = {name: bool(PREDICATES[name](P)) for name in sorted(set(names))}
            sys.stdout.write(
                dumps(
                    {
                        "counterexample": poset_to_doc(P),
                        "canonical": encode_poset(P),
                        "predicates": values,
                    }
                )
            )
            return 1
    sys.stdout.write(dumps({"exhausted": True, "max_n": limit}))
    return 0


def cmd_enumerate(args):
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        probe = out_dir / ".write-probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        sys.stderr.write(f"cannot write to {out_dir}: {exc}\n")
        return 2
    if args.n > ENUMERATION_CAP:
        sys.stderr.write(f"enumeration capped at {ENUMERATION_CAP}\n")
        return 2
    digest = hashlib.sha256()
    count = 0
    for idx, P in enumerate(enumerate_posets(args.n)):
        body = dumps({**poset_to_doc(P), "canonical": encode_poset(P)})
        name = f"poset_{args.n}_{idx:05d}.json"
        (out_dir / name).write_text(body)
        digest.update(name.encode())
        digest.update(body.encode())
        count += 1
    manifest = {"n": args.n, "count": count, "sha256": digest.hexdigest()}
    (out_dir / "manifest.json").write_text(dumps(manifest))
    sys.stdout.write(dumps(manifest))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="scottbench",
        description="Workbench for finite posets, lattices and finite T0 spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full property report for one subject")
    a.add_argument("input", help="JSON document path or generator name like chain(3)")
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--markdown", action="store_true")
    a.set_defaults(fn=cmd_analyze)

    v = sub.add_parser("verify", help="run a registered suite over a corpus")
    v.add_argument("--theorem", required=True, choices=sorted(REGISTRY))
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--lattices-only", action="store_true")
    v.add_argument("--distributive-only", action="store_true")
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("search", help="hunt for a counterexample")
    s.add_argument("--property", required=True)
    s.add_argument("--max-n", type=int, default=5)
    s.set_defaults(fn=cmd_search)

    e = sub.add_parser("enumerate", help="write one canonical poset per class")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(fn=cmd_enumerate)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    from .enumeration import use_disk_cache

    use_disk_cache(True)
    try:
        return args.fn(args)
    except (DocumentError, ExpressionError, UnknownName, UnknownTheorem) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except WorkbenchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    finally:
        use_disk_cache(False)


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end.

Subcommands: ``expand``, ``tree``, ``giambelli``, ``product``, ``table`` and
``words``.  Output is JSON (keys sorted), plain text in the notation of the
printed tables, or DOT for trees.  Invalid input exits with status 2 and a
one-line diagnostic on stderr.

>>> code, out, err = run(["product", "--family", "C", "--k", "1", "--mu", "2,1", "--nu", "1",
...                       "--format", "text"])
>>> out.decode().strip()
'Θ_4 + 2 Θ_(3,1) + Θ_(2,1,1)'
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys

from .errors import SchubertError
from .nilcox import mixed_stanley, schubert, stanley
from .partitions import Partition, TypedKStrictPartition, sort_key, strict_partitions
from .polyalg import Dyadic, VariableSpace
from .splitting import DescentSequence, split_coeffs, y_block, z_block
from .transition import mixed_coeffs, skew_q_expansion, theta_product, transition_tree
from .weyl import (Family, ReducedWord, SignedPermutation, canonical_word,
                   count_reduced_words, elements, reduced_words)

__all__ = ["main", "run", "table_rows", "table_word", "render_split_term"]

DEFAULT_MAX_RANK = 8


class UsageError(SchubertError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _max_rank() -> int:
    raw = os.environ.get("SCHUBERT_MAX_RANK", str(DEFAULT_MAX_RANK))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SCHUBERT_MAX_RANK must be an integer, got {raw!r}") from None


def _perm(text: str, family: str) -> SignedPermutation:
    w = SignedPermutation.parse(text, Family.of(family))
    if w.rank > _max_rank():
        raise UsageError(f"rank {w.rank} exceeds SCHUBERT_MAX_RANK={_max_rank()}")
    return w


def _coeff(c):
    c = Dyadic.of(c)
    return int(c) if c.is_integer() else str(c)


def _family_name(tag: str) -> str:
    t = tag.upper()
    return t if t in ("A", "B", "C", "D") else str(Family.of(t))


# -- text rendering ---------------------------------------------------------

def _symbol(lam, letter: str) -> str:
    parts = lam.parts
    if isinstance(lam, TypedKStrictPartition) and lam.type == 2:
        letter += "'"
    inner = str(parts[0]) if len(parts) == 1 else str(Partition(parts))
    return f"{letter}_{inner}"


def _vars_text(slots, minus=False) -> str:
    names = ",".join(f"{a}_{i}" for a, i in slots)
    return f"0/{names}" if minus else names


def _schur_text(lam, slots, minus=False) -> str:
    parts = lam.parts
    if not minus and len(slots) == 1 and len(parts) == 1:
        a, i = slots[0]
        return f"{a}_{i}" + (f"^{parts[0]}" if parts[0] > 1 else "")
    inner = str(parts[0]) if len(parts) == 1 else str(Partition(parts))
    return f"s_{inner}({_vars_text(slots, minus)})"


def _join(terms: list[tuple[object, str]]) -> str:
    out = ""
    for c, body in terms:
        c = Dyadic.of(c)
        neg = c.numerator < 0
        mag = -c if neg else c
        piece = body if mag == 1 and body != "1" else (str(mag) if body == "1" else f"{mag} {body}")
        if not out:
            out = ("-" if neg else "") + piece
        else:
            out += (" - " if neg else " + ") + piece
    return out or "0"


def render_split_term(key, seq: DescentSequence, family: Family) -> str:
    q = seq.q
    factors = []
    for i, lam in enumerate(key, start=1):
        if not lam.parts:
            continue
        if i < q:
            factors.append(_schur_text(lam, z_block(seq, q + 1 - i), minus=True))
        elif i == q:
            if family is Family.A:
                factors.append(_schur_text(lam, y_block(seq, 1)))
            else:
                factors.append(_symbol(lam, "Θ" if family is Family.BC else "H"))
        else:
            factors.append(_schur_text(lam, y_block(seq, i - q + 1)))
    return " ".join(factors) or "1"


def _basis_letter(basis: str) -> str:
    return {"theta": "Θ", "eta": "H", "schur-q": "Q", "schur-p": "P", "schur-s": "s"}[basis]


def _expansion_text(terms, basis: str) -> str:
    letter = _basis_letter(basis)
    return _join([(c, _symbol(lam, letter) if lam.parts else "1") for lam, c in terms])


def _partition_terms(terms, typed: bool) -> list[dict]:
    out = []
    for lam, c in terms:
        entry = {"coeff": _coeff(c), "partition": str(Partition(lam.parts))}
        if typed:
            entry["type"] = getattr(lam, "type", 0)
        out.append(entry)
    return out


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


# -- subcommands ------------------------------------------------------------

def _scale_b(w: SignedPermutation, family: str) -> Dyadic:
    return Dyadic(1, w.num_barred) if family.upper() == "B" else Dyadic(1)


def cmd_expand(args) -> str:
    fam = Family.of(args.family)
    w = _perm(args.perm, args.family)
    basis = args.basis
    head = {"family": _family_name(args.family), "perm": str(w), "basis": basis}
    if basis == "monomial":
        return _expand_monomial(args, w, head)
    if basis in ("theta", "eta"):
        want = Family.BC if basis == "theta" else Family.D
        if fam is not want or args.k is None:
            raise UsageError(f"basis {basis} needs family {'C' if want is Family.BC else 'D'} and --k")
        terms = list(mixed_coeffs(w, args.k).terms.items())
        head["k"] = args.k
    elif basis == "schur-q":
        if fam is not Family.BC:
            raise UsageError("basis schur-q needs family B or C")
        terms = list(mixed_coeffs(w, 0).terms.items())
    elif basis == "schur-p":
        if fam is not Family.D:
            raise UsageError("basis schur-p needs family D")
        terms = list(mixed_coeffs(w, 0).terms.items())
    else:  # schur-s
        from .splitting import stanley_schur_coeffs
        if w.num_barred:
            raise UsageError("basis schur-s needs an unsigned permutation")
        terms = sorted(stanley_schur_coeffs(w).items(), key=lambda kv: sort_key(kv[0]))
    scale = _scale_b(w, args.family)
    terms = [(lam, Dyadic.of(c) * scale) for lam, c in terms]
    if args.format == "text":
        return _expansion_text(terms, basis) + "\n"
    head["terms"] = _partition_terms(terms, typed=basis == "eta")
    return _dump(head)


def _expand_monomial(args, w, head) -> str:
    fam = Family.of(args.family)
    obj = args.object
    n = max(w.rank, 1)
    nx = args.nx if args.nx is not None else max(w.length(), 1)
    if obj == "schubert":
        if fam is Family.A:
            space = VariableSpace(ny=n)
            p = schubert(w, "A", space)
        else:
            space = VariableSpace(nx=nx, ny=n, nz=n if args.double else 0)
            flavor = {"B": "B-double", "C": "C-double", "BC": "C-double", "D": "D-double"}[args.family.upper()]
            p = schubert(w, flavor, space)
    elif obj == "stanley":
        flavor = {Family.A: "G", Family.BC: "F", Family.D: "E"}[fam]
        space = VariableSpace(nx=nx) if fam is not Family.A else VariableSpace(ny=max(w.length(), 1))
        p = stanley(w, flavor, space)
    else:
        if fam is Family.A:
            raise UsageError("mixed Stanley functions need family C or D")
        space = VariableSpace(nx=nx, ny=n)
        p = mixed_stanley(w, "J" if fam is Family.BC else "I", space)
    head["object"] = obj
    if args.format == "text":
        return p.to_text() + "\n"
    head["terms"] = [{"coeff": _coeff(c), "monomial": str(m)} for m, c in p.terms.items()]
    return _dump(head)


def cmd_tree(args) -> str:
    w = _perm(args.perm, args.family)
    if Family.of(args.family) is Family.A:
        raise UsageError("transition trees need family C or D")
    tree = transition_tree(w, args.k)
    if args.format == "dot":
        return tree.to_dot()
    order = sorted(tree.nodes, key=lambda c: (c.rank, c.window))
    if args.format == "text":
        lines = []
        for x in order:
            ch = tree.nodes[x]
            tail = " ".join(str(c) for c in ch) if ch else "leaf " + _leaf(x, args.k)
            lines.append(f"{x or 'id'} -> {tail}")
        return "\n".join(lines) + "\n"
    nodes = []
    for x in order:
        ch = tree.nodes[x]
        nodes.append({"perm": str(x), "children": [str(c) for c in ch],
                      "leaf": None if ch else _leaf(x, args.k)})
    return _dump({"family": _family_name(args.family), "perm": str(w), "k": args.k, "nodes": nodes})


def _leaf(x, k) -> str:
    from .partitions import grassmannian_to_partition
    return str(grassmannian_to_partition(x, k))


def _seq(args) -> DescentSequence:
    a = _ints(args.a)
    b = _ints(args.b) if args.b is not None else None
    return DescentSequence(a, b)


def cmd_giambelli(args) -> str:
    fam = Family.of(args.family)
    w = _perm(args.perm, args.family)
    seq = _seq(args)
    split = split_coeffs(w, seq)
    scale = _scale_b(w, args.family)
    terms = [(key, Dyadic.of(c) * scale) for key, c in split.items()]
    if args.format == "text":
        return _join([(c, render_split_term(key, seq, fam)) for key, c in terms]) + "\n"
    out = []
    for key, c in terms:
        entry = {"coeff": _coeff(c), "partitions": [str(Partition(lam.parts)) for lam in key]}
        if fam is Family.D:
            entry["type"] = key[seq.q - 1].type
        out.append(entry)
    head = {"family": _family_name(args.family), "perm": str(w), "a": list(seq.a), "terms": out}
    if seq.b is not None:
        head["b"] = list(seq.b)
    return _dump(head)


def cmd_product(args) -> str:
    if Family.of(args.family) is not Family.BC:
        raise UsageError("products are available for family C")
    mu, nu = Partition(_ints(args.mu)), Partition(_ints(args.nu))
    if args.basis == "schur-p":
        if not (mu.is_strict() and nu.is_strict()):
            raise UsageError("schur-p products need strict partitions")
        found = {}
        for lam in strict_partitions(mu.weight + nu.weight):
            c = skew_q_expansion(lam, mu)[TypedKStrictPartition(nu, 0)]
            if c:
                found[lam] = c
        terms = sorted(found.items(), key=lambda kv: sort_key(kv[0]))
        head = {"basis": "schur-p"}
    else:
        if args.k is None:
            raise UsageError("theta products need --k")
        terms = list(theta_product(mu.parts, nu.parts, args.k).terms.items())
        head = {"basis": "theta", "k": args.k}
    if args.format == "text":
        return _expansion_text(terms, head["basis"]) + "\n"
    head.update({"family": "C", "mu": str(mu), "nu": str(nu), "terms": _partition_terms(terms, False)})
    return _dump(head)


def table_word(w: SignedPermutation) -> ReducedWord:
    """
    The word shown in table rows: the canonical word, except that in family D
    an element whose first entry is barred and at most -2 is shown as the
    mirror (letters 0 and 1 exchanged) of the word of its image under the
    diagram flip, which pairs each row with its primed partner.
    """
    if w.family is Family.D and w.rank and w.window[0] < -1:
        flipped = _flip(w)
        return ReducedWord(tuple({0: 1, 1: 0}.get(a, a) for a in canonical_word(flipped)))
    return canonical_word(w)


def _flip(w: SignedPermutation) -> SignedPermutation:
    # conjugation by the sign change of position 1
    win = list(w.window)
    win[0] = -win[0]
    win = [-v if abs(v) == 1 else v for v in win]
    return SignedPermutation(w.family, tuple(win))


def table_rows(family: str, rank: int, k: int):
    """(w, word, SplitExpansion, seq) for every w of the given rank increasing up to k."""
    fam = Family.of(family)
    if fam is Family.A:
        raise UsageError("tables are available for families B, C and D")
    a = tuple(range(k, rank)) or (k,)
    seq = DescentSequence(a)
    rows = []
    for w in elements(fam, rank):
        if not w.is_increasing_up_to(k):
            continue
        rows.append((w, table_word(w), split_coeffs(w, seq), seq))
    rows.sort(key=lambda r: (r[0].length(), len(r[2]),
                             tuple(tuple(sort_key(l) for l in key) for key in r[2]), r[0].window))
    return rows


def cmd_table(args) -> str:
    if args.rank > _max_rank():
        raise UsageError(f"rank {args.rank} exceeds SCHUBERT_MAX_RANK={_max_rank()}")
    fam = Family.of(args.family)
    rows = table_rows(args.family, args.rank, args.increasing_up_to)
    if args.format == "text":
        lines = []
        for w, word, split, seq in rows:
            scale = _scale_b(w, args.family)
            body = _join([(Dyadic.of(c) * scale, render_split_term(key, seq, fam)) for key, c in split.items()])
            lines.append(f"{','.join(map(str, w.padded(args.rank)))} | {word} | {body}")
        return "\n".join(lines) + "\n"
    out = []
    for w, word, split, seq in rows:
        scale = _scale_b(w, args.family)
        terms = []
        for key, c in split.items():
            entry = {"coeff": _coeff(Dyadic.of(c) * scale),
                     "partitions": [str(Partition(lam.parts)) for lam in key]}
            if fam is Family.D:
                entry["type"] = key[0].type
            terms.append(entry)
        out.append({"perm": ",".join(map(str, w.padded(args.rank))), "word": str(word), "terms": terms})
    return _dump({"family": _family_name(args.family), "rank": args.rank,
                  "a": list(rows[0][3].a) if rows else [], "rows": out})


def cmd_words(args) -> str:
    w = _perm(args.perm, args.family)
    m = args.type or 0
    words = [wd for wd in reduced_words(w) if wd.is_type(m)]
    assert len(words) == count_reduced_words(w, m)
    if args.format == "text":
        return "".join(f"{wd}\n" for wd in words) if words else "\n"
    return _dump({"family": _family_name(args.family), "perm": str(w), "type": m,
                  "count": len(words), "words": [str(wd) for wd in words]})


# -- entry points -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubsplit", description="Theta and eta expansions of Schubert polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fam = dict(choices=["A", "B", "C", "BC", "D"], type=str.upper, required=True)

    e = sub.add_parser("expand", help="mixed Stanley, Stanley or Schubert expansions")
    e.add_argument("--family", **fam)
    e.add_argument("--perm", required=True)
    e.add_argument("--k", type=int)
    e.add_argument("--basis", default="theta",
                   choices=["theta", "eta", "schur-q", "schur-p", "schur-s", "monomial"])
    e.add_argument("--object", default="schubert", choices=["schubert", "stanley", "mixed"],
                   help="what to expand in monomials (basis monomial only)")
    e.add_argument("--nx", type=int, help="number of x variables (basis monomial)")
    e.add_argument("--double", action="store_true", help="keep the z variables (basis monomial)")
    e.add_argument("--format", default="json", choices=["json", "text"])
    e.set_defaults(func=cmd_expand)

    t = sub.add_parser("tree", help="k-transition tree")
    t.add_argument("--family", **fam)
    t.add_argument("--perm", required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--format", default="dot", choices=["dot", "json", "text"])
    t.set_defaults(func=cmd_tree)

    g = sub.add_parser("giambelli", help="split expansion along descent sequences")
    g.add_argument("--family", **fam)
    g.add_argument("--perm", required=True)
    g.add_argument("--a", required=True, help="descent sequence a, e.g. 1,2")
    g.add_argument("--b", help="optional sequence b starting at 0")
    g.add_argument("--format", default="json", choices=["json", "text"])
    g.set_defaults(func=cmd_giambelli)

    pr = sub.add_parser("product", help="theta products and P structure constants")
    pr.add_argument("--family", **fam)
    pr.add_argument("--k", type=int)
    pr.add_argument("--mu", required=True)
    pr.add_argument("--nu", required=True)
    pr.add_argument("--basis", default="theta", choices=["theta", "schur-p"])
    pr.add_argument("--format", default="json", choices=["json", "text"])
    pr.set_defaults(func=cmd_product)

    tb = sub.add_parser("table", help="split expansions of all elements increasing up to k")
    tb.add_argument("--family", **fam)
    tb.add_argument("--rank", type=int, required=True)
    tb.add_argument("--increasing-up-to", type=int, default=1)
    tb.add_argument("--format", default="text", choices=["json", "text"])
    tb.set_defaults(func=cmd_table)

    wd = sub.add_parser("words", help="reduced words")
    wd.add_argument("--family", **fam)
    wd.add_argument("--perm", required=True)
    wd.add_argument("--type", type=int, help="keep words whose last m letters are nonzero")
    wd.add_argument("--format", default="text", choices=["json", "text"])
    wd.set_defaults(func=cmd_words)
    return p


def run(argv: list[str]) -> tuple[int, bytes, bytes]:
    """Run the CLI in-process and return (exit code, stdout, stderr)."""
    parser = build_parser()
    err, help_out = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(help_out):
            args = parser.parse_args(argv)
        if getattr(args, "k", None) is not None and args.k < 0:
            raise UsageError("--k must be nonnegative")
        out = args.func(args)
    except SystemExit as exc:  # --help
        return (exc.code or 0), help_out.getvalue().encode(), err.getvalue().encode()
    except (SchubertError, ValueError) as exc:
        return 2, b"", f"schubsplit: error: {exc}\n".encode()
    return 0, out.encode(), b""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(out)
    sys.stderr.buffer.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

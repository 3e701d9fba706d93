"""Session files: declarations plus commands, run in order.

A session is a sequence of ``;``-terminated statements::

    ring R = Q[x,y] order grevlex;
    ideal I = x*y - 1, y^2 - 1;
    module M = cokernel rows 2 [ [x, y] ];
    element v in M = (1, x^2);
    hom f on M = (-y, x);
    morphism H : M -> M = [ [1, 0], [0, 1] ];
    split M rank 1 seed 42 budget 200;

Run ``freesplit --help`` for the command-line flags.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import groebner, modules, splitter
from .coefficients import GF, QQ
from .errors import FreesplitError, Inconclusive
from .groebner import Ideal, Submodule
from .modules import HomFunctional, HomSubmodule, MaximalIdeal, Morphism, PresentedModule, RationalPoint
from .polyring import FreeVector, PolyRing
from .syntax import ParseError, TokenStream, tokenize

__all__ = [
    "Session",
    "Declaration",
    "Command",
    "parse_session",
    "format_session",
    "run",
    "main",
    "COMMANDS",
]

# Each command: positional argument kinds and clause kinds (required clauses marked with "!").
COMMANDS = {
    "gb": (("obj",), {}),
    "nf": (("expr",), {"mod!": "ideal"}),
    "syz": (("obj",), {}),
    "eliminate": (("int",), {"from!": "ideal"}),
    "intersect": (("ideal", "ideal"), {}),
    "saturate": (("ideal",), {"by!": "expr"}),
    "dim": (("ideal",), {}),
    "hom": (("module",), {}),
    "delta": (("module",), {"elements": "elements", "hom": "homs", "at!": "max"}),
    "mu": (("module",), {"at!": "max"}),
    "fitting": (("module", "int"), {}),
    "trace": (("module",), {"elements": "elements", "hom": "homs"}),
    "snf": (("module",), {}),
    "iso-check": (("morphism",), {}),
    "sym": (("obj",), {}),
    "mingen-check": (("module",), {"coeffs!": "exprs", "at!": "max"}),
    "avoid": ((), {"var!": "var", "primes!": "ideals"}),
    "freebasic": (("element",), {"hom": "homs"}),
    "split": (("module",), {"rank": "int", "seed": "int", "budget": "int", "restrict": "elements", "hom": "homs"}),
    "cancel": (("morphism",), {"seed": "int", "budget": "int"}),
    "hr-check": (("module",), {"base": "ideal"}),
}

_LIST_KINDS = {"elements": "element", "homs": "hom", "ideals": "ideal"}


@dataclass
class Declaration:
    kind: str  # ideal | module | element | hom | morphism
    name: str
    value: object
    parent: tuple = ()  # names of modules this object lives on


@dataclass(frozen=True)
class MaxRef:
    """``at point (..)`` or ``at ideal NAME``."""

    kind: str
    value: object


@dataclass
class Command:
    name: str
    args: tuple  # positional values
    clauses: tuple  # ((keyword, value), ...) in canonical order
    line: int = field(default=0, compare=False)

    def clause(self, key, default=None):
        for k, v in self.clauses:
            if k == key:
                return v
        return default


class Session:
    def __init__(self):
        self.ring = None
        self.ring_name = "R"
        self.objects = {}
        self.commands = []

    def add(self, decl, tok, stream):
        if decl.name in self.objects:
            raise stream.error(f"name {decl.name!r} already defined", tok)
        self.objects[decl.name] = decl

    def get(self, name, kind, stream, tok):
        decl = self.objects.get(name)
        if decl is None:
            raise stream.error(f"unknown name {name!r}", tok)
        if kind == "obj":
            if decl.kind not in ("ideal", "module"):
                raise stream.error(f"{name!r} is a {decl.kind}, expected an ideal or module", tok)
        elif decl.kind != kind:
            raise stream.error(f"{name!r} is a {decl.kind}, expected a {kind}", tok)
        return decl

    def __eq__(self, other):
        if not isinstance(other, Session):
            return NotImplemented
        if (self.ring is None) != (other.ring is None):
            return False
        if self.ring is not None and (self.ring != other.ring or self.ring.names != other.ring.names or self.ring_name != other.ring_name):
            return False
        if list(self.objects) != list(other.objects):
            return False
        for name, d in self.objects.items():
            e = other.objects[name]
            if d.kind != e.kind or d.parent != e.parent or not _value_eq(d.value, e.value):
                return False
        return self.commands == other.commands

    __hash__ = None


def _value_eq(a, b):
    if isinstance(a, Ideal):
        return isinstance(b, Ideal) and a.gens == b.gens
    if isinstance(a, (HomFunctional, modules.ModuleElement)):
        return type(a) is type(b) and a.vector == b.vector
    return a == b


# ---------------------------------------------------------------------------
# parsing


def _ring_decl(stream, session):
    start = stream.next()
    if session.ring is not None:
        raise stream.error("ring already declared", start)
    session.ring_name = stream.expect_kind("IDENT", "ring name").text
    stream.expect("=")
    ftok = stream.expect_kind("IDENT", "coefficient field")
    if ftok.text == "Q":
        fld = QQ
    elif ftok.text.startswith("F") and ftok.text[1:].isdigit():
        try:
            fld = GF(int(ftok.text[1:]))
        except ValueError as exc:
            raise stream.error(str(exc), ftok) from None
    else:
        raise stream.error(f"unknown field {ftok.text!r} (use Q or F<p>)", ftok)
    stream.expect("[")
    names = []
    if not stream.at("]"):
        while True:
            tok = stream.expect_kind("IDENT", "variable name")
            if tok.text in names:
                raise stream.error(f"duplicate variable {tok.text!r}", tok)
            names.append(tok.text)
            if not stream.accept(","):
                break
    stream.expect("]")
    order, block = "grevlex", 0
    if stream.accept("order"):
        otok = stream.expect_kind("IDENT", "order name")
        order = otok.text
        if order not in ("grevlex", "lex", "elim"):
            raise stream.error(f"unknown order {order!r}", otok)
        if order == "elim":
            block = int(stream.expect_kind("NUM", "block size").text)
            if not 0 < block <= len(names):
                raise stream.error("elimination block out of range", otok)
    session.ring = PolyRing(fld, names, order, block)


def _need_ring(stream, session, tok):
    if session.ring is None:
        raise stream.error("declare a ring first", tok)
    return session.ring


def _expr_list(stream, ring, open_="(", close=")"):
    stream.expect(open_)
    out = []
    if not stream.at(close):
        while True:
            out.append(stream.parse_expr(ring))
            if not stream.accept(","):
                break
    stream.expect(close)
    return out


def _name_list(stream):
    stream.expect("(")
    out = []
    if not stream.at(")"):
        while True:
            out.append(stream.expect_kind("IDENT", "name"))
            if not stream.accept(","):
                break
    stream.expect(")")
    return out


def _column_list(stream, ring, rows):
    stream.expect("[")
    cols = []
    if not stream.at("]"):
        while True:
            tok = stream.peek
            col = _expr_list(stream, ring, "[", "]")
            if len(col) != rows:
                raise stream.error(f"column of length {len(col)}, expected {rows}", tok)
            cols.append(FreeVector(ring, col))
            if not stream.accept(","):
                break
    stream.expect("]")
    return cols


def _ideal_decl(stream, session):
    tok = stream.next()
    ring = _need_ring(stream, session, tok)
    name = stream.expect_kind("IDENT", "ideal name")
    stream.expect("=")
    gens = [stream.parse_expr(ring)]
    while stream.accept(","):
        gens.append(stream.parse_expr(ring))
    gens = [g for g in gens if g]
    session.add(Declaration("ideal", name.text, Ideal(ring, gens)), name, stream)


def _module_decl(stream, session):
    tok = stream.next()
    ring = _need_ring(stream, session, tok)
    name = stream.expect_kind("IDENT", "module name")
    stream.expect("=")
    head = stream.expect_kind("IDENT", "module form")
    if head.text == "cokernel":
        stream.expect("rows")
        rows = int(stream.expect_kind("NUM", "row count").text)
        cols = _column_list(stream, ring, rows)
        M = PresentedModule(ring, rows, cols)
    elif head.text == "free":
        M = PresentedModule.free(ring, int(stream.expect_kind("NUM", "rank").text))
    elif head.text == "ideal":
        ref = stream.expect_kind("IDENT", "ideal name")
        M = modules.ideal_as_module(session.get(ref.text, "ideal", stream, ref).value)
    else:
        M = session.get(head.text, "module", stream, head).value
        while stream.accept("++"):
            ref = stream.expect_kind("IDENT", "module name")
            M = modules.direct_sum(M, session.get(ref.text, "module", stream, ref).value)
    session.add(Declaration("module", name.text, M), name, stream)


def _vector_on(stream, session, kind):
    tok = stream.next()
    ring = _need_ring(stream, session, tok)
    name = stream.expect_kind("IDENT", f"{kind} name")
    stream.expect("in" if kind == "element" else "on")
    mref = stream.expect_kind("IDENT", "module name")
    M = session.get(mref.text, "module", stream, mref).value
    stream.expect("=")
    vtok = stream.peek
    comps = _expr_list(stream, ring)
    if len(comps) != M.rank:
        raise stream.error(f"ArityMismatch: {len(comps)} components for a module with {M.rank} generators", vtok)
    try:
        value = modules.ModuleElement(M, comps) if kind == "element" else HomFunctional(M, comps)
    except FreesplitError as exc:
        raise stream.error(f"{type(exc).__name__}: {exc}", vtok) from None
    session.add(Declaration(kind, name.text, value, (mref.text,)), name, stream)


def _morphism_decl(stream, session):
    tok = stream.next()
    ring = _need_ring(stream, session, tok)
    name = stream.expect_kind("IDENT", "morphism name")
    stream.expect(":")
    sref = stream.expect_kind("IDENT", "source module")
    stream.expect("->")
    tref = stream.expect_kind("IDENT", "target module")
    S = session.get(sref.text, "module", stream, sref).value
    T = session.get(tref.text, "module", stream, tref).value
    stream.expect("=")
    mtok = stream.peek
    cols = _column_list(stream, ring, T.rank)
    if len(cols) != S.rank:
        raise stream.error(f"ArityMismatch: {len(cols)} columns for a source with {S.rank} generators", mtok)
    H = Morphism(S, T, cols)
    session.add(Declaration("morphism", name.text, H, (sref.text, tref.text)), name, stream)


def _command_name(stream):
    tok = stream.next()
    text = tok.text
    # hyphenated names arrive as IDENT '-' IDENT with no spaces in between
    while stream.at("-") and stream.peek.start == tok.end and stream.peek_at(1).kind == "IDENT" and stream.peek_at(1).start == stream.peek.end:
        stream.next()
        tok = stream.next()
        text += "-" + tok.text
    return text


def _command(stream, session, first):
    name = _command_name(stream)
    if name not in COMMANDS:
        raise stream.error(f"unknown command or statement {name!r}", first)
    ring = _need_ring(stream, session, first)
    positional, clause_kinds = COMMANDS[name]
    args = []
    for kind in positional:
        args.append(_value(stream, session, ring, kind))
    got = {}
    keys = {k.rstrip("!"): v for k, v in clause_kinds.items()}
    while not stream.at(";") and stream.peek.kind != "EOF":
        ktok = stream.expect_kind("IDENT", "clause keyword")
        if ktok.text not in keys:
            raise stream.error(f"unknown clause {ktok.text!r} for {name}", ktok)
        if ktok.text in got:
            raise stream.error(f"clause {ktok.text!r} given twice", ktok)
        got[ktok.text] = _value(stream, session, ring, keys[ktok.text])
    for k in clause_kinds:
        if k.endswith("!") and k[:-1] not in got:
            raise stream.error(f"{name} needs a {k[:-1]!r} clause", first)
    clauses = tuple((k, got[k]) for k in keys if k in got)
    cmd = Command(name, tuple(args), clauses, first.line)
    _check_command(cmd, session, stream, first)
    session.commands.append(cmd)


def _value(stream, session, ring, kind):
    if kind == "int":
        return int(stream.expect_kind("NUM", "integer").text)
    if kind == "expr":
        return stream.parse_expr(ring)
    if kind == "exprs":
        return tuple(_expr_list(stream, ring))
    if kind == "var":
        t = stream.expect_kind("IDENT", "variable")
        if ring.index_of(t.text) is None:
            raise stream.error(f"unknown variable {t.text!r}", t)
        return t.text
    if kind == "max":
        how = stream.expect_kind("IDENT", "'point' or 'ideal'")
        if how.text == "point":
            return MaxRef("point", tuple(_expr_list(stream, ring)))
        if how.text == "ideal":
            ref = stream.expect_kind("IDENT", "ideal name")
            session.get(ref.text, "ideal", stream, ref)
            return MaxRef("ideal", ref.text)
        raise stream.error("expected 'point' or 'ideal'", how)
    if kind in _LIST_KINDS:
        toks = _name_list(stream)
        for t in toks:
            session.get(t.text, _LIST_KINDS[kind], stream, t)
        return tuple(t.text for t in toks)
    t = stream.expect_kind("IDENT", f"{kind} name")
    session.get(t.text, kind, stream, t)
    return t.text


def _check_command(cmd, session, stream, tok):
    """Cross-reference checks: elements and functionals must belong to the module."""
    objs = session.objects
    if cmd.name in ("delta", "trace", "split", "mingen-check"):
        mname = cmd.args[0]
        for key in ("elements", "restrict", "hom"):
            for n in cmd.clause(key, ()):
                if objs[n].parent != (mname,):
                    raise stream.error(f"{n!r} does not live on module {mname!r}", tok)
    if cmd.name == "mingen-check" and len(cmd.clause("coeffs")) != objs[cmd.args[0]].value.rank:
        raise stream.error("ArityMismatch: coefficient count does not match the module", tok)
    if cmd.name == "freebasic":
        parent = objs[cmd.args[0]].parent[0]
        for n in cmd.clause("hom", ()):
            if objs[n].parent != (parent,):
                raise stream.error(f"{n!r} does not live on module {parent!r}", tok)
    at = cmd.clause("at")
    if at is not None and at.kind == "point":
        if len(at.value) != session.ring.nvars:
            raise stream.error("ArityMismatch: point length does not match the ring", tok)
        if any(not c.is_constant() for c in at.value):
            raise stream.error("point coordinates must be constants", tok)
    if cmd.name == "mingen-check" and any(not c.is_constant() for c in cmd.clause("coeffs")):
        raise stream.error("coefficients must be constants", tok)


_STATEMENTS = {
    "ring": _ring_decl,
    "ideal": _ideal_decl,
    "module": _module_decl,
    "element": lambda s, ss: _vector_on(s, ss, "element"),
    "morphism": _morphism_decl,
}


def parse_session(text):
    """Parse a whole session; raises :class:`ParseError` with line and column."""
    stream = TokenStream(tokenize(text))
    session = Session()
    while stream.peek.kind != "EOF":
        tok = stream.peek
        if tok.kind != "IDENT":
            raise stream.error(f"expected a statement, found {tok.text!r}")
        if tok.text == "hom" and stream.peek_at(2).text == "on":
            _vector_on(stream, session, "hom")
        elif tok.text in _STATEMENTS:
            _STATEMENTS[tok.text](stream, session)
        else:
            _command(stream, session, tok)
        stream.expect(";")
    return session


# ---------------------------------------------------------------------------
# printing


def _vec_text(v):
    return "(" + ", ".join(str(c) for c in v.comps) + ")"


def _cols_text(cols):
    return "[" + ", ".join("[" + ", ".join(str(c) for c in col.comps) + "]" for col in cols) + "]"


def _decl_text(d):
    if d.kind == "ideal":
        gens = [str(g) for g in d.value.gens] or ["0"]
        return f"ideal {d.name} = " + ", ".join(gens) + ";"
    if d.kind == "module":
        M = d.value
        return f"module {d.name} = cokernel rows {M.rank} {_cols_text(M.relations)};"
    if d.kind == "element":
        return f"element {d.name} in {d.parent[0]} = {_vec_text(d.value.vector)};"
    if d.kind == "hom":
        return f"hom {d.name} on {d.parent[0]} = {_vec_text(d.value.vector)};"
    if d.kind == "morphism":
        return f"morphism {d.name} : {d.parent[0]} -> {d.parent[1]} = {_cols_text(d.value.columns)};"
    raise ValueError(d.kind)


def _arg_text(v):
    if isinstance(v, MaxRef):
        if v.kind == "point":
            return "point (" + ", ".join(str(c) for c in v.value) + ")"
        return f"ideal {v.value}"
    if isinstance(v, tuple):
        return "(" + ", ".join(str(c) for c in v) + ")"
    return str(v)


def command_text(cmd):
    parts = [cmd.name] + [_arg_text(a) for a in cmd.args]
    for k, v in cmd.clauses:
        parts += [k, _arg_text(v)]
    return " ".join(parts)


def format_session(session):
    lines = []
    R = session.ring
    if R is not None:
        fname = "Q" if R.field is QQ else f"F{R.field.p}"
        order = R.order.kind + (f" {R.order.block}" if R.order.kind == "elim" else "")
        lines.append(f"ring {session.ring_name} = {fname}[{','.join(R.names)}] order {order};")
    lines += [_decl_text(d) for d in session.objects.values()]
    lines += [command_text(c) + ";" for c in session.commands]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# running


class _Failure(Exception):
    pass


def _polys(ps):
    return [str(p) for p in ps]


def _vecs(vs):
    return [[str(c) for c in v.comps] for v in vs]


def _max_ideal(session, at):
    if at.kind == "point":
        return RationalPoint([c.constant_coefficient_raw() for c in at.value])
    return MaximalIdeal(session.objects[at.value].value)


def _homsub(session, M, names):
    if names is None:
        return modules.hom_dual(M)
    return HomSubmodule(M, [session.objects[n].value for n in names])


def _elements(session, M, names):
    if names is None:
        return [g.vector for g in M.gens()]
    return [session.objects[n].value.vector for n in names]


def _split_payload(res):
    cert = {
        "rank": res.rank,
        "elements": _vecs(res.elements),
        "functionals": _vecs([f.vector for f in res.functionals]),
        "e_coeffs": [_polys(c) for c in res.e_coeffs],
        "s_coeffs": [_polys(c) for c in res.s_coeffs],
    }
    return {"rank": res.rank}, cert


def _obstruction_payload(res):
    gb = res.trace_ideal.groebner().elements
    result = {"stage": res.stage, "trace_ideal": _polys(gb)}
    cert = None
    if not res.inconclusive:
        cert = {
            "trace_ideal": _polys(gb),
            "normal_form_of_1": str(res.gb.reduce(res.trace_ideal.ring.one())),
            "witness": None if res.witness is None else [str(c) for c in res.witness],
        }
    return result, cert


def _execute(cmd, session, seed, budget, verify):
    """Returns ``(status, result, certificate, candidates)``."""
    O = session.objects
    ring = session.ring
    name = cmd.name
    arg0 = cmd.args[0] if cmd.args else None
    ref = O.get(arg0) if isinstance(arg0, str) else None

    if name == "gb":
        if ref.kind == "ideal":
            return "ok", {"basis": _polys(ref.value.groebner().elements)}, None, 0
        return "ok", {"basis": _vecs(ref.value.relation_module.groebner().elements)}, None, 0
    if name == "nf":
        G = O[cmd.clause("mod")].value.groebner()
        rem, cof = G.reduce(cmd.args[0], with_cofactors=True)
        return "ok", {"remainder": str(rem), "basis": _polys(G.elements), "cofactors": _polys(cof)}, None, 0
    if name == "syz":
        gens = ref.value if ref.kind == "ideal" else Submodule(ring, ref.value.rank, ref.value.relations)
        return "ok", {"generators": _vecs(groebner.syzygies(gens).gens)}, None, 0
    if name == "eliminate":
        I = groebner.eliminate(O[cmd.clause("from")].value, cmd.args[0])
        return "ok", {"ideal": _polys(I.gens)}, None, 0
    if name == "intersect":
        I = groebner.intersect(O[cmd.args[0]].value, O[cmd.args[1]].value)
        return "ok", {"ideal": _polys(I.groebner().elements)}, None, 0
    if name == "saturate":
        I = groebner.saturate(ref.value, cmd.clause("by"))
        return "ok", {"ideal": _polys(I.groebner().elements)}, None, 0
    if name == "dim":
        return "ok", {"dim": groebner.krull_dim(ref.value)}, None, 0
    if name == "hom":
        return "ok", {"generators": _vecs([f.vector for f in modules.hom_dual(ref.value)])}, None, 0
    if name in ("delta", "trace"):
        M = ref.value
        E = _homsub(session, M, cmd.clause("hom"))
        S = _elements(session, M, cmd.clause("elements"))
        if name == "delta":
            return "ok", {"delta": modules.delta_at(M, S, E, _max_ideal(session, cmd.clause("at")))}, None, 0
        I = modules.trace_ideal(M, E, S)
        return "ok", {"ideal": _polys(I.groebner().elements), "unit": I.is_unit()}, None, 0
    if name == "mu":
        return "ok", {"mu": modules.mu_at(ref.value, _max_ideal(session, cmd.clause("at")))}, None, 0
    if name == "fitting":
        I = modules.fitting_ideal(ref.value, cmd.args[1])
        return "ok", {"ideal": _polys(I.groebner().elements)}, None, 0
    if name == "snf":
        sf = modules.snf_decompose(ref.value)
        return "ok", {"invariants": _polys(sf.invariants), "free_rank": sf.free_rank}, None, 0
    if name == "iso-check":
        rep = modules.morphism_is_iso(ref.value)
        result = {
            "kind": rep.kind,
            "inverse": None if rep.inverse is None else _vecs(rep.inverse.columns),
            "witness": None if rep.witness is None else [str(c) for c in rep.witness.comps],
        }
        return "ok", result, None, 0
    if name == "sym":
        sym = splitter.sym_presentation(ref.value)
        return "ok", {"variables": list(sym.ring.names), "ideal": _polys(sym.ideal.gens)}, None, 0
    if name == "mingen-check":
        r = [c.constant_coefficient_raw() for c in cmd.clause("coeffs")]
        ok = splitter.minimal_generator_check(ref.value, r, _max_ideal(session, cmd.clause("at")))
        return "ok", {"minimal_generator": ok}, None, 0
    if name == "avoid":
        primes = [O[n].value for n in cmd.clause("primes")]
        v = splitter.avoid_primes(primes, ring.index_of(cmd.clause("var")), ring=ring)
        return "ok", {"value": str(v)}, None, 0
    if name == "freebasic":
        M = O[ref.parent[0]].value
        E = _homsub(session, M, cmd.clause("hom"))
        res = splitter.free_basic_certificate(M, E, ref.value.vector)
    elif name == "split":
        M = ref.value
        E = _homsub(session, M, cmd.clause("hom"))
        S = _elements(session, M, cmd.clause("restrict")) if cmd.clause("restrict") is not None else None
        res = splitter.split_search(
            M,
            E,
            rank=cmd.clause("rank", 1),
            restrict_to=S,
            seed=cmd.clause("seed", seed),
            budget=cmd.clause("budget", budget),
        )
    elif name == "cancel":
        try:
            res = splitter.bass_cancel(ref.value, seed=cmd.clause("seed", seed), budget=cmd.clause("budget", budget))
        except Inconclusive as exc:
            return "inconclusive", {"message": str(exc)}, None, exc.stats.get("candidates", 0)
        if verify:
            res.verify()
        cert = {
            "a": str(res.a),
            "x1": [str(c) for c in res.x1.comps],
            "z": [str(c) for c in res.z.comps],
            "x": [str(c) for c in res.x.comps],
            "f": [str(c) for c in res.f.vector.comps],
            "beta": _vecs(res.beta.columns),
            "gamma": _vecs(res.gamma.columns),
            "eta": _vecs(res.eta.columns),
        }
        result = {"morphism": _vecs(res.morphism.columns), "verified": bool(verify)}
        return "ok", result, cert, res.stats.get("candidates", 0)
    elif name == "hr-check":
        base = cmd.clause("base")
        rep = splitter.huneke_rossi_check(ref.value, O[base].value if base else None)
        result = {
            "match": rep.match,
            "sym_dim": rep.sym_dim,
            "stratified": rep.stratified,
            "strata": [list(s) for s in rep.strata],
        }
        return "ok", result, None, 0
    else:  # pragma: no cover - COMMANDS and this dispatcher are kept in sync
        raise _Failure(f"no runner for {name}")

    if verify:
        res.verify()
    candidates = res.stats.get("candidates", 0)
    if isinstance(res, splitter.SplitCertificate):
        result, cert = _split_payload(res)
    else:
        result, cert = _obstruction_payload(res)
    result["verified"] = bool(verify)
    return res.status, result, cert, candidates


def run(session, seed=0, budget=splitter.DEFAULT_BUDGET, verify=False, timing=True):
    """Execute every command; returns a list of report dictionaries."""
    reports = []
    for cmd in session.commands:
        t0 = time.perf_counter()
        try:
            status, result, cert, cand = _execute(cmd, session, seed, budget, verify)
        except (FreesplitError, ZeroDivisionError, ArithmeticError, ValueError, TypeError) as exc:
            status, result, cert, cand = "error", {"type": type(exc).__name__, "message": str(exc)}, None, 0
        elapsed = (time.perf_counter() - t0) * 1000.0 if timing else 0.0
        reports.append(
            {
                "cmd": command_text(cmd),
                "status": status,
                "result": result,
                "certificate": cert,
                "stats": {"candidates": cand, "elapsed_ms": round(elapsed, 3)},
            }
        )
    return reports


def _human(report):
    head = f"[{report['status']}] {report['cmd']}"
    body = json.dumps(report["result"], sort_keys=True)
    return f"{head}\n  {body}"


def main(argv=None):
    ap = argparse.ArgumentParser(prog="freesplit", description="Run a freesplit session file.")
    ap.add_argument("--in", dest="infile", default="-", help="session file (default: stdin)")
    ap.add_argument("--json", action="store_true", help="one JSON report per line")
    ap.add_argument("--seed", type=int, default=0, help="default seed for randomized commands")
    ap.add_argument("--budget", type=int, default=splitter.DEFAULT_BUDGET, help="default candidate budget per rank step")
    ap.add_argument("--verify", action="store_true", help="re-check certificates before printing")
    ap.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible output")
    args = ap.parse_args(argv)
    if args.budget < 1:
        ap.error("--budget must be positive")
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
    try:
        session = parse_session(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    reports = run(session, seed=args.seed, budget=args.budget, verify=args.verify, timing=not args.no_timing)
    for rep in reports:
        if args.json:
            print(json.dumps(rep, sort_keys=True))
        else:
            print(_human(rep))
    return 1 if any(r["status"] == "error" for r in reports) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

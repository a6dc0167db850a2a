"""Session DSL parser, command dispatch, and report rendering.

Grammar (statements end with ``;``; ``#`` starts a line comment):

    ring <field>[v1,...,vk] local?        field: Q | GF(p)
    module <name> = quot (<poly>, ...)
    module <name> = coker [[p11, ...], [p21, ...], ...]
                                          rows = generators, columns =
                                          relations; rows may be
                                          separated by ',' or ';'
    ext <M> <N> <i>?                      omit i for the full table
    tor <M> <N> <i>?
    depth <M>   dim <M>   resolve <M>   ann <M>   minprimes <M>
    ascent <oracle> <M> <N>
    fact <oracle> <N>
    verify lemma1|lemma2|theorem|oracles key=value ...
        keys: seed n vars maxdeg field oracle mode config
    <oracle> : identity | completion | henselization
             | primes{(v, ...); (v, ...); ...}

Polynomial syntax is the shared textual form, e.g. ``3*x^2*y - 1/2*y^3``.
Exactly one ring declaration is allowed per session, and it must precede
the modules.  Commands that consume modules require homogeneous
presentations and are rejected at parse time otherwise.

Reports carry the documented keys ``command``, ``inputs``, ``result``,
``evidence``, ``timing_ms`` (plus ``status`` and, on failure, ``error``);
the JSON stream validates against ``report_schema.json``.  Exit status
is 0 iff no command errored and no verify assertion failed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .ascent import AscentOracle, fact_report, theorem_report
from .derived import derived_table, ext_module, tor_module
from .errors import (
    DomainError,
    DuplicateRingError,
    HomogeneityError,
    ModascentError,
    ParseError,
    UnboundNameError,
)
from .fields import GF, QQ
from .groebner import Submodule
from .harness import CampaignConfig, run_campaign
from .invariants import (
    PrimeIdeal,
    annihilator,
    depth_module,
    dim_module,
    minimal_primes,
)
from .modules import ModulePresentation, cyclic_quotient, presentation_from_rows
from .resolutions import minimal_resolution
from .rings import PolyRing

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>\#[^\n]*)
      | (?P<string>"[^"\n]*")
      | (?P<num>\d+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<punct>[;,()\[\]{}=^*+\-/])
    """,
    re.VERBOSE,
)

_COMMANDS_ONE = ("depth", "dim", "resolve", "ann", "minprimes")
_CAMPAIGN_NAMES = ("lemma1", "lemma2", "theorem", "oracles")


class _Token:
    __slots__ = ("kind", "value", "line", "col", "start", "end")

    def __init__(self, kind, value, line, col, start, end):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col
        self.start = start
        self.end = end

    def __repr__(self):
        return f"Token({self.kind}, {self.value!r} @{self.line}:{self.col})"


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        if kind in ("ws", "comment"):
            line += value.count("\n")
            if "\n" in value:
                line_start = m.start() + value.rfind("\n") + 1
        else:
            tokens.append(_Token(kind, value, line, m.start() - line_start + 1,
                                 m.start(), m.end()))
        pos = m.end()
    return tokens


class Session:
    """A parsed session: one ring, named modules, and a command list."""

    def __init__(self):
        self.ring: PolyRing | None = None
        self.ring_decl = None  # (field_text, variables, local)
        self.modules: dict = {}
        self.module_order: list = []
        self.commands: list = []

    def lookup(self, name: str, where: _Token) -> ModulePresentation:
        if name not in self.modules:
            raise ParseErrorAt(f"unbound module name {name!r}", where,
                               cls=UnboundNameError)
        return self.modules[name]


def ParseErrorAt(message, token, cls=ParseError):
    if cls is ParseError:
        return ParseError(message, token.line, token.col)
    err = cls(f"{message} (line {token.line}, column {token.col})")
    err.line, err.col = token.line, token.col
    return err


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token helpers ---------------------------------------------------
    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            raise ParseError("unexpected end of input",
                             last.line if last else 1, last.col if last else 1)
        self.pos += 1
        return tok

    def expect(self, kind, value=None) -> _Token:
        tok = self.next()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            raise ParseErrorAt(f"expected {want!r}, found {tok.value!r}", tok)
        return tok

    def accept(self, kind, value=None) -> _Token | None:
        tok = self.peek()
        if tok and tok.kind == kind and (value is None or tok.value == value):
            self.pos += 1
            return tok
        return None

    # -- entry -------------------------------------------------------------
    def parse(self) -> Session:
        session = Session()
        while self.peek() is not None:
            self.statement(session)
        return session

    def statement(self, session: Session):
        tok = self.next()
        if tok.kind != "name":
            raise ParseErrorAt(f"expected a statement, found {tok.value!r}", tok)
        word = tok.value
        if word == "ring":
            self.ring_statement(session, tok)
        elif word == "module":
            self.module_statement(session, tok)
        elif word in _COMMANDS_ONE:
            m, mt = self.module_ref(session)
            self._require_homogeneous(session, mt)
            session.commands.append({"kind": word, "module": m, "name": mt.value})
        elif word in ("ext", "tor"):
            m, mt = self.module_ref(session)
            n, nt = self.module_ref(session)
            for t in (mt, nt):
                self._require_homogeneous(session, t)
            deg = None
            numtok = self.accept("num")
            if numtok:
                deg = int(numtok.value)
            session.commands.append({"kind": word, "M": m, "N": n,
                                     "M_name": mt.value, "N_name": nt.value,
                                     "degree": deg})
        elif word == "ascent":
            oracle = self.oracle(session)
            m, mt = self.module_ref(session)
            n, nt = self.module_ref(session)
            for t in (mt, nt):
                self._require_homogeneous(session, t)
            session.commands.append({"kind": "ascent", "oracle": oracle,
                                     "M": m, "N": n,
                                     "M_name": mt.value, "N_name": nt.value})
        elif word == "fact":
            oracle = self.oracle(session)
            n, nt = self.module_ref(session)
            self._require_homogeneous(session, nt)
            session.commands.append({"kind": "fact", "oracle": oracle,
                                     "N": n, "N_name": nt.value})
        elif word == "verify":
            nametok = self.expect("name")
            if nametok.value not in _CAMPAIGN_NAMES:
                raise ParseErrorAt(
                    f"unknown campaign {nametok.value!r}", nametok)
            pairs = {}
            while self.peek() is not None and not (
                    self.peek().kind == "punct" and self.peek().value == ";"):
                key = self.expect("name")
                self.expect("punct", "=")
                pairs[key.value] = self.verify_value()
            session.commands.append({"kind": "verify",
                                     "campaign": nametok.value, "params": pairs})
        else:
            raise ParseErrorAt(f"unknown statement {word!r}", tok)
        self.expect("punct", ";")

    def _require_homogeneous(self, session, token):
        mod = session.modules[token.value]
        if not mod.is_homogeneous:
            raise ParseErrorAt(
                f"module {token.value!r} has an inhomogeneous presentation, "
                "which this command does not support", token,
                cls=HomogeneityError)

    def verify_value(self):
        tok = self.next()
        if tok.kind == "num":
            return tok.value
        if tok.kind == "string":
            return tok.value[1:-1]
        if tok.kind == "name":
            # allow GF(32003)-style values
            if self.accept("punct", "("):
                inner = self.expect("num")
                self.expect("punct", ")")
                return f"{tok.value}({inner.value})"
            return tok.value
        raise ParseErrorAt(f"bad value {tok.value!r}", tok)

    # -- declarations -----------------------------------------------------
    def ring_statement(self, session: Session, where: _Token):
        if session.ring is not None:
            raise ParseErrorAt("duplicate ring declaration", where,
                               cls=DuplicateRingError)
        fieldtok = self.expect("name")
        if fieldtok.value == "Q":
            fieldobj = QQ
            field_text = "Q"
        elif fieldtok.value == "GF":
            self.expect("punct", "(")
            p = self.expect("num")
            self.expect("punct", ")")
            try:
                fieldobj = GF(int(p.value))
            except DomainError as exc:
                raise ParseErrorAt(str(exc), p) from exc
            field_text = f"GF({p.value})"
        else:
            raise ParseErrorAt(f"unknown field {fieldtok.value!r}", fieldtok)
        self.expect("punct", "[")
        variables = [self.expect("name").value]
        while self.accept("punct", ","):
            variables.append(self.expect("name").value)
        self.expect("punct", "]")
        local = bool(self.accept("name", "local"))
        try:
            session.ring = PolyRing(tuple(variables), fieldobj, local=local)
        except DomainError as exc:
            raise ParseErrorAt(str(exc), where) from exc
        session.ring_decl = (field_text, tuple(variables), local)

    def module_statement(self, session: Session, where: _Token):
        if session.ring is None:
            raise ParseErrorAt("no ring declared before this module", where,
                               cls=UnboundNameError)
        nametok = self.expect("name")
        self.expect("punct", "=")
        form = self.expect("name")
        if form.value == "quot":
            self.expect("punct", "(")
            polys = []
            if not (self.peek() and self.peek().kind == "punct"
                    and self.peek().value == ")"):
                polys.append(self.polynomial(session))
                while self.accept("punct", ","):
                    polys.append(self.polynomial(session))
            self.expect("punct", ")")
            module = cyclic_quotient(session.ring, polys)
        elif form.value == "coker":
            module = self.coker_matrix(session)
        else:
            raise ParseErrorAt(
                f"expected 'quot' or 'coker', found {form.value!r}", form)
        session.modules[nametok.value] = module
        session.module_order.append(nametok.value)

    def coker_matrix(self, session: Session) -> ModulePresentation:
        self.expect("punct", "[")
        rows = [self.matrix_row(session)]
        while self.accept("punct", ",") or self.accept("punct", ";"):
            rows.append(self.matrix_row(session))
        self.expect("punct", "]")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ParseErrorAt("ragged coker matrix", self.tokens[self.pos - 1])
        return presentation_from_rows(session.ring, rows)

    def matrix_row(self, session: Session) -> list:
        self.expect("punct", "[")
        row = []
        if not (self.peek() and self.peek().kind == "punct"
                and self.peek().value == "]"):
            row.append(self.polynomial(session))
            while self.accept("punct", ","):
                row.append(self.polynomial(session))
        self.expect("punct", "]")
        return row

    def polynomial(self, session: Session):
        """Slice raw text up to the next top-level delimiter and parse it."""
        start_tok = self.peek()
        if start_tok is None:
            raise ParseError("expected a polynomial, found end of input")
        depth = 0
        end = start_tok.start
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok.kind == "punct":
                if tok.value in "([{":
                    depth += 1
                elif tok.value in ")]}":
                    if depth == 0:
                        break
                    depth -= 1
                elif tok.value in (",", ";") and depth == 0:
                    break
            end = tok.end
            self.pos += 1
        text = self.text[start_tok.start:end]
        if not text.strip():
            raise ParseErrorAt("empty polynomial", start_tok)
        try:
            return session.ring.parse(text)
        except ParseError as exc:
            raise ParseError(str(exc), start_tok.line, start_tok.col) from exc

    def module_ref(self, session: Session):
        tok = self.expect("name")
        return session.lookup(tok.value, tok), tok

    def oracle(self, session: Session) -> AscentOracle:
        tok = self.expect("name")
        if tok.value in ("identity", "completion", "henselization"):
            return AscentOracle(tok.value)
        if tok.value != "primes":
            raise ParseErrorAt(f"unknown oracle {tok.value!r}", tok)
        self.expect("punct", "{")
        primes = [self.prime_group(session, tok)]
        while self.accept("punct", ";"):
            primes.append(self.prime_group(session, tok))
        self.expect("punct", "}")
        try:
            return AscentOracle.explicit_primes(primes)
        except DomainError as exc:
            raise ParseErrorAt(str(exc), tok) from exc

    def prime_group(self, session: Session, where: _Token) -> PrimeIdeal:
        self.expect("punct", "(")
        names = []
        if not (self.peek() and self.peek().kind == "punct"
                and self.peek().value == ")"):
            names.append(self.expect("name").value)
            while self.accept("punct", ","):
                names.append(self.expect("name").value)
        self.expect("punct", ")")
        ring = session.ring
        if ring is None:
            raise ParseErrorAt("no ring declared before this oracle", where,
                               cls=UnboundNameError)
        idx = []
        for nm in names:
            if nm not in ring._index:
                raise ParseErrorAt(f"unknown variable {nm!r} in prime", where)
            idx.append(ring._index[nm])
        return PrimeIdeal(ring, tuple(idx))


def parse_session(text: str) -> Session:
    """Parse a full session; raises on the first error with location."""
    return _Parser(text).parse()


def render_session(session: Session) -> str:
    """Canonical text of a session; parse(render(s)) reproduces s."""
    lines = []
    if session.ring_decl:
        field_text, variables, local = session.ring_decl
        suffix = " local" if local else ""
        lines.append(f"ring {field_text}[{','.join(variables)}]{suffix};")
    for name in session.module_order:
        lines.append(session.modules[name].to_dsl(name))
    for cmd in session.commands:
        lines.append(_render_command(cmd))
    return "\n".join(lines) + ("\n" if lines else "")


def _render_command(cmd: dict) -> str:
    kind = cmd["kind"]
    if kind in _COMMANDS_ONE:
        return f"{kind} {cmd['name']};"
    if kind in ("ext", "tor"):
        deg = f" {cmd['degree']}" if cmd["degree"] is not None else ""
        return f"{kind} {cmd['M_name']} {cmd['N_name']}{deg};"
    if kind == "ascent":
        return (f"ascent {_render_oracle(cmd['oracle'])} "
                f"{cmd['M_name']} {cmd['N_name']};")
    if kind == "fact":
        return f"fact {_render_oracle(cmd['oracle'])} {cmd['N_name']};"
    if kind == "verify":
        params = " ".join(f"{k}={v}" for k, v in cmd["params"].items())
        return f"verify {cmd['campaign']}{' ' + params if params else ''};"
    raise DomainError(f"unrenderable command {kind!r}")


def _render_oracle(oracle: AscentOracle) -> str:
    if oracle.kind != "explicit":
        return oracle.kind
    groups = ";".join("(" + ", ".join(p.generator_names()) + ")"
                      for p in oracle.primes)
    return "primes{" + groups + "}"


# ---------------------------------------------------------------------------
# execution


def _module_report(M: ModulePresentation) -> dict:
    out = {
        "presentation": M.to_dsl("_").split("= ", 1)[1].rstrip(";"),
        "generators": M.generators,
        "zero": M.is_zero(),
    }
    if M.is_homogeneous:
        out["dim"] = dim_module(M)
        out["length"] = M.length()
    return out


def _ideal_report(I: Submodule) -> dict:
    return {"generators": [str(g[0]) for g in I.groebner().elements]}


def execute(session: Session, fmt: str = "text", seed_override: int | None = None,
            out=None) -> int:
    """Run all commands; returns the exit status (0 = clean)."""
    out = out if out is not None else sys.stdout
    reports = []
    exit_status = 0
    for cmd in session.commands:
        t0 = time.perf_counter()
        report = {
            "command": _render_command(cmd).rstrip(";"),
            "inputs": _command_inputs(cmd),
            "result": None,
            "evidence": None,
            "timing_ms": 0.0,
            "status": "ok",
        }
        try:
            result, evidence, failed = _run_command(cmd, seed_override)
            report["result"] = result
            report["evidence"] = evidence
            if failed:
                exit_status = 1
        except ModascentError as exc:
            report["status"] = "error"
            report["error"] = {"class": type(exc).__name__, "message": str(exc)}
            exit_status = 1
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        reports.append(report)
    if fmt == "json":
        json.dump({"reports": reports, "exit_status": exit_status}, out, indent=2)
        out.write("\n")
    else:
        for rep in reports:
            _render_text(rep, out)
    return exit_status


def _command_inputs(cmd: dict) -> dict:
    kind = cmd["kind"]
    if kind in _COMMANDS_ONE:
        return {"module": cmd["name"]}
    if kind in ("ext", "tor"):
        return {"M": cmd["M_name"], "N": cmd["N_name"], "degree": cmd["degree"]}
    if kind == "ascent":
        return {"oracle": _render_oracle(cmd["oracle"]),
                "M": cmd["M_name"], "N": cmd["N_name"]}
    if kind == "fact":
        return {"oracle": _render_oracle(cmd["oracle"]), "N": cmd["N_name"]}
    if kind == "verify":
        return {"campaign": cmd["campaign"], "params": dict(cmd["params"])}
    return {}


def _run_command(cmd: dict, seed_override: int | None):
    """Returns (result, evidence, assertion_failed)."""
    kind = cmd["kind"]
    if kind == "depth":
        return depth_module(cmd["module"]), None, False
    if kind == "dim":
        return dim_module(cmd["module"]), None, False
    if kind == "ann":
        return _ideal_report(annihilator(cmd["module"])), None, False
    if kind == "minprimes":
        primes = minimal_primes(annihilator(cmd["module"]))
        return {"primes": [list(p.generator_names()) for p in primes]}, None, False
    if kind == "resolve":
        res = minimal_resolution(cmd["module"])
        return {
            "length": res.length,
            "minimal": res.minimal,
            "ranks": [res.complex.rank(i) for i in range(res.length + 1)],
            "differentials": [
                [[str(e) for e in row] for row in res.complex.differential(i)]
                for i in range(1, res.length + 1)
            ],
        }, None, False
    if kind in ("ext", "tor"):
        fn = ext_module if kind == "ext" else tor_module
        if cmd["degree"] is not None:
            return _module_report(fn(cmd["M"], cmd["N"], cmd["degree"])), None, False
        table = derived_table(cmd["M"], cmd["N"], kind)
        return {"entries": {str(i): _module_report(table.entries[i])
                            for i in sorted(table.entries)}}, None, False
    if kind == "ascent":
        rep = theorem_report(cmd["M"], cmd["N"], cmd["oracle"])
        result = {"conditions": rep.conditions, "agree": rep.agree,
                  "excluded": rep.excluded}
        return result, rep.as_dict()["evidence"], False
    if kind == "fact":
        rep = fact_report(cmd["N"], cmd["oracle"])
        result = {"conditions": rep.conditions, "derived": rep.derived,
                  "agree": rep.agree}
        return result, rep.as_dict()["evidence"], False
    if kind == "verify":
        params = dict(cmd["params"])
        config_path = params.pop("config", None)
        if config_path is not None:
            cfg = CampaignConfig.from_file(config_path)
        else:
            cfg = CampaignConfig.from_kv(params)
        if seed_override is not None:
            cfg = CampaignConfig(**{**cfg.__dict__, "seed": seed_override})
        res = run_campaign(cmd["campaign"], cfg)
        summary = res.summary()
        return summary, {"ok": res.ok}, not res.ok
    raise DomainError(f"unknown command {kind!r}")


def _render_text(rep: dict, out):
    out.write(f"# {rep['command']}\n")
    if rep["status"] == "error":
        err = rep["error"]
        out.write(f"error: {err['class']}: {err['message']}\n\n")
        return
    out.write(_text_value(rep["result"], indent="  ") + "\n\n")


def _text_value(value, indent="") -> str:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_text_value(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(f"{indent}- {_scalar(v) if not isinstance(v, (dict, list)) else chr(10) + _text_value(v, indent + '  ')}"
                         for v in value)
    return f"{indent}{_scalar(value)}"


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


# ---------------------------------------------------------------------------
# entry point


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="modascent",
        description="Run a session of exact commutative-algebra commands.")
    parser.add_argument("input", nargs="?", default="-",
                        help="session file, or '-' for stdin")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the seed of verify commands")
    args = parser.parse_args(argv)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        session = parse_session(text)
    except ModascentError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return execute(session, fmt=args.format, seed_override=args.seed)


def console_main():  # pragma: no cover - thin wrapper
    sys.exit(main())

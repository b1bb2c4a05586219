"""MV-terms and quasiequations: AST, parser, printer and evaluator.

Grammar (whitespace is insignificant)::

    term   := term "+" factor | factor
    factor := NAT "*" factor | "~" factor | atom
    atom   := "0" | "1" | VAR | "(" term ")"
    VAR    := "x" NAT
    qe     := [eq ("&" eq)*] "=>" (eq | vatom)
    eq     := term "=" term
    vatom  := "V[" NAT ("," NAT)* "](" VAR ")"
"""

import re
from dataclasses import dataclass
from typing import Union


class ParseError(ValueError):
    def __init__(self, message, pos, text=""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class UnassignedVariable(KeyError):
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Scalar:
    times: int
    arg: "Term"


Term = Union[Var, Zero, One, Neg, Add, Scalar]


def odot(a, b):
    return Neg(Add(Neg(a), Neg(b)))


def join(a, b):
    return Add(Neg(Add(Neg(a), b)), b)


def meet(a, b):
    return Neg(join(Neg(a), Neg(b)))


def desugar(t):
    """Rewrite into the core signature ``+``, ``~``, ``0``."""
    if isinstance(t, (Var, Zero)):
        return t
    if isinstance(t, One):
        return Neg(Zero())
    if isinstance(t, Neg):
        return Neg(desugar(t.arg))
    if isinstance(t, Add):
        return Add(desugar(t.left), desugar(t.right))
    if isinstance(t, Scalar):
        if t.times == 0:
            return Zero()
        arg = desugar(t.arg)
        out = arg
        for _ in range(t.times - 1):
            out = Add(arg, out)
        return out
    raise TypeError(f"not a term: {t!r}")


def variables(t) -> set:
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, (Zero, One)):
        return set()
    if isinstance(t, (Neg, Scalar)):
        return variables(t.arg)
    return variables(t.left) | variables(t.right)


@dataclass(frozen=True)
class VarietyAtom:
    """Formal conclusion ``v_{n_1}(y) v ... v v_{n_r}(y) = 1`` about variable ``y``.

    It holds in a finite algebra exactly when the algebra lies in
    ``V(L_{n_1}, ..., L_{n_r})`` and is evaluated on that basis.
    """

    moduli: tuple
    var: Var

    def __post_init__(self):
        if not self.moduli or any(n < 1 for n in self.moduli):
            raise ValueError("a variety atom needs positive chain moduli")


@dataclass(frozen=True)
class Quasiequation:
    premises: tuple
    conclusion: object

    def variables(self) -> set:
        out = set()
        for lhs, rhs in self.premises:
            out |= variables(lhs) | variables(rhs)
        if isinstance(self.conclusion, VarietyAtom):
            out.add(self.conclusion.var.index)
        else:
            lhs, rhs = self.conclusion
            out |= variables(lhs) | variables(rhs)
        return out

    def premise_variables(self) -> set:
        out = set()
        for lhs, rhs in self.premises:
            out |= variables(lhs) | variables(rhs)
        return out

    def __str__(self):
        return format_quasiequation(self)


# -- printing ----------------------------------------------------------------


def format_term(t) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Neg):
        return "~" + _format_factor(t.arg)
    if isinstance(t, Scalar):
        return f"{t.times}*" + _format_factor(t.arg)
    if isinstance(t, Add):
        right = format_term(t.right)
        if isinstance(t.right, Add):
            right = f"({right})"
        return f"{format_term(t.left)} + {right}"
    raise TypeError(f"not a term: {t!r}")


def _format_factor(t):
    s = format_term(t)
    return f"({s})" if isinstance(t, Add) else s


def format_quasiequation(q: Quasiequation) -> str:
    prem = " & ".join(f"{format_term(a)} = {format_term(b)}" for a, b in q.premises)
    if isinstance(q.conclusion, VarietyAtom):
        mods = ",".join(map(str, q.conclusion.moduli))
        concl = f"V[{mods}](x{q.conclusion.var.index})"
    else:
        a, b = q.conclusion
        concl = f"{format_term(a)} = {format_term(b)}"
    return f"{prem} => {concl}" if prem else f"=> {concl}"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(=>)|(V\[)|(\]\()|(x\d+)|(\d+)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastindex
        value = m.group(kind)
        start = m.start(kind)
        name = {1: "=>", 2: "V[", 3: "](", 4: "VAR", 5: "NAT"}.get(kind, value)
        toks.append((name, value, start))
        pos = m.end()
    toks.append(("EOF", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.toks[self.i + k]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = {"EOF": "end of input"}.get(kind, repr(kind))
            got = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2], self.text)
        self.i += 1
        return tok

    def term(self):
        t = self.factor()
        while self.peek()[0] == "+":
            self.take()
            t = Add(t, self.factor())
        return t

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "~":
            self.take()
            return Neg(self.factor())
        if kind == "NAT" and self.peek(1)[0] == "*":
            self.take()
            self.take()
            return Scalar(int(value), self.factor())
        return self.atom()

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "NAT":
            self.take()
            if value == "0":
                return Zero()
            if value == "1":
                return One()
            raise ParseError(f"unknown constant {value!r} (only 0 and 1 exist)", pos, self.text)
        if kind == "VAR":
            self.take()
            return Var(int(value[1:]))
        if kind == "(":
            self.take()
            t = self.term()
            self.take(")")
            return t
        got = "end of input" if kind == "EOF" else repr(value)
        raise ParseError(f"expected a term, found {got}", pos, self.text)

    def equation(self):
        lhs = self.term()
        self.take("=")
        return (lhs, self.term())

    def vatom(self):
        self.take("V[")
        moduli = [int(self.take("NAT")[1])]
        while self.peek()[0] == ",":
            self.take()
            moduli.append(int(self.take("NAT")[1]))
        pos = self.peek()[2]
        self.take("](")
        var = Var(int(self.take("VAR")[1][1:]))
        self.take(")")
        if any(n < 1 for n in moduli):
            raise ParseError("chain moduli must be positive", pos, self.text)
        return VarietyAtom(tuple(moduli), var)

    def quasiequation(self):
        premises = []
        if self.peek()[0] != "=>":
            premises.append(self.equation())
            while self.peek()[0] == "&":
                self.take()
                premises.append(self.equation())
        self.take("=>")
        if self.peek()[0] == "V[":
            conclusion = self.vatom()
        else:
            conclusion = self.equation()
        return Quasiequation(tuple(premises), conclusion)


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    p.take("EOF")
    return t


def parse_quasiequation(text: str) -> Quasiequation:
    p = _Parser(text)
    q = p.quasiequation()
    p.take("EOF")
    return q


def normalize_variables(q: Quasiequation) -> Quasiequation:
    """Renumber variables ``x0, x1, ...`` in order of first occurrence."""
    mapping = {}

    def visit(t):
        if isinstance(t, Var):
            mapping.setdefault(t.index, len(mapping))
        elif isinstance(t, (Neg, Scalar)):
            visit(t.arg)
        elif isinstance(t, Add):
            visit(t.left)
            visit(t.right)

    def rename(t):
        if isinstance(t, Var):
            return Var(mapping[t.index])
        if isinstance(t, Neg):
            return Neg(rename(t.arg))
        if isinstance(t, Scalar):
            return Scalar(t.times, rename(t.arg))
        if isinstance(t, Add):
            return Add(rename(t.left), rename(t.right))
        return t

    for a, b in q.premises:
        visit(a)
        visit(b)
    if isinstance(q.conclusion, VarietyAtom):
        visit(q.conclusion.var)
        concl = VarietyAtom(q.conclusion.moduli, rename(q.conclusion.var))
    else:
        visit(q.conclusion[0])
        visit(q.conclusion[1])
        concl = (rename(q.conclusion[0]), rename(q.conclusion[1]))
    return Quasiequation(tuple((rename(a), rename(b)) for a, b in q.premises), concl)


# -- evaluation --------------------------------------------------------------


def eval_term(A, t, assignment):
    """Value of ``t`` in algebra ``A`` with ``assignment[i]`` bound to ``x<i>``."""
    if isinstance(t, Var):
        try:
            return assignment[t.index]
        except (KeyError, IndexError):
            raise UnassignedVariable(f"x{t.index}") from None
    if isinstance(t, Zero):
        return A.zero
    if isinstance(t, One):
        return A.one
    if isinstance(t, Neg):
        return A.neg(eval_term(A, t.arg, assignment))
    if isinstance(t, Add):
        return A.add(eval_term(A, t.left, assignment), eval_term(A, t.right, assignment))
    if isinstance(t, Scalar):
        return A.scalar(t.times, eval_term(A, t.arg, assignment))
    raise TypeError(f"not a term: {t!r}")

"""Text syntax for identities and variety descriptors.

    word     := factor (('*')? factor)*
    factor   := letter ('^' posint)?
    letter   := [a-z] digits?
    identity := word '=' (word | '0')
    variety  := 'COM' | component ('+' component)*
    component:= 'G(' int ')' | 'C(' int ')' | 'SL' | catalog name | 'N{p=' int (';' identity-list)? '}'

Catalog names are ``T``, ``L``, ``K``, ``J``, ``I`` and ``X_n``.  Whitespace is
free between tokens.  Repeated components combine as joins: ``G`` by lcm,
``C`` by max, nil parts through L(I).
"""
from __future__ import annotations

from math import gcd

from . import varieties as V
from .commwords import CommWord, Equal, Identity, ZeroEq, canonical
from .config import DEFAULT_CAPS, Caps
from .errors import ParseError
from .nilcalc import NilBasis


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            found = self.peek() or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def finish(self):
        if not self.at_end():
            raise self.error(f"unexpected {self.text[self.pos]!r}")


def _letter(sc: _Scanner) -> str:
    sc.skip()
    start = sc.pos
    if sc.pos >= len(sc.text) or not ("a" <= sc.text[sc.pos] <= "z"):
        raise sc.error("expected a letter")
    sc.pos += 1
    while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
        sc.pos += 1
    return sc.text[start : sc.pos]


def _word(sc: _Scanner, names: dict[str, int]) -> CommWord:
    exps: dict[int, int] = {}
    while True:
        name = _letter(sc)
        letter = names.setdefault(name, len(names))
        power = 1
        if sc.accept("^"):
            at = sc.pos
            power = sc.integer()
            if power < 1:
                raise sc.error("exponents are positive", at)
        exps[letter] = exps.get(letter, 0) + power
        nxt = sc.peek()
        if nxt == "*":
            sc.pos += 1
        elif not ("a" <= nxt <= "z") or nxt == "":
            return CommWord.of(exps)


def _identity(sc: _Scanner, names: dict[str, int]) -> Identity:
    lhs = _word(sc, names)
    sc.expect("=")
    if sc.peek() == "=":
        raise sc.error("unexpected '='")
    if sc.peek() == "0":
        sc.pos += 1
        return canonical(ZeroEq(lhs))
    return canonical(Equal(lhs, _word(sc, names)))


def parse_identity(text: str) -> Identity:
    """Parse ``u = v`` or ``w = 0``; letters are renamed by first appearance."""
    sc = _Scanner(text)
    ident = _identity(sc, {})
    sc.finish()
    return ident


def parse_identities(text: str) -> list[Identity]:
    """Comma- or semicolon-separated identities; letters are local to each identity."""
    sc = _Scanner(text)
    out = []
    if sc.at_end():
        return out
    while True:
        out.append(_identity(sc, {}))
        if not (sc.accept(",") or sc.accept(";")):
            break
    sc.finish()
    return out


def _basis(sc: _Scanner) -> NilBasis:
    sc.expect("{")
    sc.expect("p")
    sc.expect("=")
    at = sc.pos
    p = sc.integer()
    if p < 1:
        raise sc.error("nil exponent must be >= 1", at)
    ids = []
    if sc.accept(";"):
        while sc.peek() not in ("}", ""):
            ids.append(_identity(sc, {}))
            if not (sc.accept(",") or sc.accept(";")):
                break
    sc.expect("}")
    return NilBasis(p, frozenset(ids))


def _catalog(sc: _Scanner, name: str) -> V.CatalogElement:
    if name == "T":
        return V.TRIVIAL
    if sc.accept("_"):
        return V.CatalogElement(name, sc.integer())
    return V.CatalogElement(name, V.OMEGA)


def _upper_name(sc: _Scanner) -> str:
    sc.skip()
    start = sc.pos
    while sc.pos < len(sc.text) and sc.text[sc.pos].isupper():
        sc.pos += 1
    if start == sc.pos:
        raise sc.error("expected a component")
    return sc.text[start : sc.pos]


def parse_variety(text: str, caps: Caps = DEFAULT_CAPS) -> V.VarietyDesc:
    """Parse ``COM`` or a ``+``-separated list of components into a descriptor."""
    sc = _Scanner(text)
    if sc.at_end():
        raise sc.error("empty descriptor")
    d, m, nils = 1, 0, []
    while True:
        start = sc.pos
        name = _upper_name(sc)
        if name == "COM":
            sc.finish()
            if start != 0 and text[:start].strip():
                raise sc.error("COM cannot be combined with components", start)
            return V.COM
        if name in ("G", "C"):
            sc.expect("(")
            at = sc.pos
            n = sc.integer()
            sc.expect(")")
            if name == "G":
                if n < 1:
                    raise sc.error("group exponent must be >= 1", at)
                d = d * n // gcd(d, n)
            else:
                m = max(m, n)
        elif name == "SL":
            m = max(m, 1)
        elif name == "N":
            nils.append(_basis(sc))
        elif name in V.RANK or name == "T":
            nils.append(_catalog(sc, name))
        else:
            raise sc.error(f"unknown component {name!r}", start)
        if not sc.accept("+"):
            break
    sc.finish()
    nil = nils[0] if nils else V.TRIVIAL
    for other in nils[1:]:
        nil = V.nil_join(nil, other, caps)
    return V.Composite(d, m, nil)


def render(v: V.VarietyDesc) -> str:
    """Text form accepted by :func:`parse_variety`."""
    return str(v)


def render_identity(ident: Identity) -> str:
    return str(ident)


__all__ = ["parse_identity", "parse_identities", "parse_variety", "render", "render_identity"]

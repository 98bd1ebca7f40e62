"""Free-group words on named generators.

A :class:`Word` is an immutable tuple of letters ``(name, e)`` with
``e in (+1, -1)``, always kept freely reduced, so structural equality is
group equality in the free group.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Letter = tuple[str, int]


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for name, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e!r}")
        if stack and stack[-1][0] == name and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((name, e))
    return tuple(stack)


class Word:
    """A freely reduced word in a free group.

    >>> a, b = Word.gen("a"), Word.gen("b")
    >>> str(a * b * b**-1 * b)
    'a b'
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = _reduce_letters(letters)
        self._hash = hash(self.letters)

    @classmethod
    def gen(cls, name: str) -> "Word":
        return cls(((name, 1),))

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def inverse(self) -> "Word":
        return Word((name, -e) for name, e in reversed(self.letters))

    def generators(self) -> set[str]:
        return {name for name, _ in self.letters}

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.letters if g == name)

    def occurrences(self, name: str) -> int:
        return sum(1 for g, _ in self.letters if g == name)

    def substitute(self, mapping: dict[str, "Word"]) -> "Word":
        """Replace each generator in ``mapping`` by its image word."""
        out: list[Letter] = []
        for name, e in self.letters:
            image = mapping.get(name)
            if image is None:
                out.append((name, e))
            elif e == 1:
                out.extend(image.letters)
            else:
                out.extend(image.inverse().letters)
        return Word(out)

    def cyclically_reduced(self) -> "Word":
        letters = self.letters
        i, j = 0, len(letters) - 1
        while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
            i += 1
            j -= 1
        return Word(letters[i:j + 1])

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(name if e == 1 else f"{name}^-1" for name, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def reduce(w: Word | Iterable[Letter]) -> Word:
    """Free reduction of a word or of a raw letter sequence."""
    if isinstance(w, Word):
        return Word(w.letters)
    return Word(w)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return Word(u.letters + v.letters + u.inverse().letters + v.inverse().letters)


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = w.inverse(), -k
    return Word(w.letters * k)


def gens(names: str | Sequence[str]) -> list[Word]:
    """``gens("a b")`` or ``gens(["a", "b"])`` -> single-letter words."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return [Word.gen(n) for n in names]


# ---------------------------------------------------------------------------
# text form:  a1 b1^-1 [b1^-1,d1^-1]^2 (a b)^3

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<int>[+-]?\d+)|(?P<sym>[\[\],()^*.]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


def _split_ident(ident: str, known: Sequence[str] | None) -> list[str]:
    if known is None or ident in known:
        return [ident]
    # juxtaposed names without whitespace, e.g. "a1b1"; greedy longest match
    names = sorted(known, key=len, reverse=True)
    parts, rest = [], ident
    while rest:
        for n in names:
            if rest.startswith(n):
                parts.append(n)
                rest = rest[len(n):]
                break
        else:
            raise ValueError(f"unknown generator in {ident!r}")
    return parts


class _Parser:
    def __init__(self, text: str, known: Sequence[str] | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.known = known

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value: str | None = None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"cannot parse word {self.text!r}: expected {value or 'token'}")
        self.pos += 1
        return tok

    def word(self) -> Word:
        out = Word()
        while True:
            kind, val = self.peek()
            if kind is None or val in ("]", ")", ","):
                return out
            if val in ("*", "."):
                self.take()
                continue
            out = out * self.factor()

    def factor(self) -> Word:
        kind, val = self.take()
        if kind == "ident":
            parts = _split_ident(val, self.known)
            base = Word((p, 1) for p in parts[:-1])
            atom = Word.gen(parts[-1])
            return base * self.exponent(atom)
        if kind == "int" and val == "1":
            return self.exponent(Word())
        if val == "(":
            inner = self.word()
            self.take(")")
            return self.exponent(inner)
        if val == "[":
            u = self.word()
            self.take(",")
            v = self.word()
            self.take("]")
            return self.exponent(commutator(u, v))
        raise ValueError(f"cannot parse word {self.text!r}: unexpected {val!r}")

    def exponent(self, atom: Word) -> Word:
        if self.peek()[1] == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ValueError(f"cannot parse word {self.text!r}: bad exponent {val!r}")
            return power(atom, int(val))
        return atom


def parse_word(text: str, generators: Sequence[str] | None = None) -> Word:
    """Parse the text form of a word.

    Letters are juxtaposed (whitespace optional when ``generators`` is
    given), ``^k`` raises the preceding atom to an integer power, ``[u,v]``
    is a commutator and parentheses group.  ``1`` denotes the identity.
    """
    p = _Parser(text, generators)
    w = p.word()
    if p.pos != len(p.tokens):
        raise ValueError(f"cannot parse word {text!r}: trailing input")
    return w

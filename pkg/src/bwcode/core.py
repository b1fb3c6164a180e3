"""Binary-word and code primitives.

Words are fixed-length binary vectors stored as packed Python ints so that
Hamming distance is a single XOR plus popcount.  Position 1 is the leftmost
character of the text rendering and the most significant bit of the packed
int, which makes integer order coincide with lexicographic order on the
0/1 strings.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_LENGTH = 1024


class CodeFormatError(ValueError):
    """Malformed code text file; carries the offending 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class Word:
    """A binary word of length n, packed into an int (position 1 = MSB)."""

    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"word length must be in 1..{MAX_LENGTH}, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for length {self.n}")

    @classmethod
    def from_string(cls, text: str) -> Word:
        """Parse an n-character 0/1 string, position 1 leftmost."""
        if not text or text.strip("01"):
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, n: int) -> Word:
        return cls(n, 0)

    @classmethod
    def from_support(cls, n: int, positions: Iterable[int]) -> Word:
        """Build the word whose 1s sit exactly at the given 1-based positions."""
        bits = 0
        for i in positions:
            if not 1 <= i <= n:
                raise ValueError(f"position {i} outside 1..{n}")
            bits |= 1 << (n - i)
        return cls(n, bits)

    @property
    def weight(self) -> int:
        """Hamming weight: the distance from the all-zero word."""
        return self.bits.bit_count()

    def support(self) -> frozenset[int]:
        """1-based positions carrying a 1."""
        n, bits = self.n, self.bits
        return frozenset(n - b for b in range(n) if (bits >> b) & 1)

    def complement(self) -> Word:
        return Word(self.n, self.bits ^ ((1 << self.n) - 1))

    def __xor__(self, other: Word) -> Word:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return Word(self.n, self.bits ^ other.bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def distance(u: Word, v: Word) -> int:
    """Hamming distance: number of positions where u and v differ."""
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} vs {v.n}")
    return (u.bits ^ v.bits).bit_count()


def weight(u: Word) -> int:
    return u.weight


def support(u: Word) -> frozenset[int]:
    return u.support()


def in_ball(x: Word, r: int, u: Word) -> bool:
    """True iff x lies in the radius-r Hamming ball around u."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return distance(x, u) <= r


@dataclass(frozen=True, init=False)
class Code:
    """A finite set of distinct equal-length words, stored sorted.

    Construction deduplicates silently; the sorted tuple makes equal codes
    compare equal and gives deterministic rendering.
    """

    n: int
    words: tuple[Word, ...]

    def __init__(self, words: Iterable[Word], n: int | None = None):
        unique = sorted(set(words))
        if not unique and n is None:
            raise ValueError("empty code needs an explicit length")
        length = n if n is not None else unique[0].n
        for w in unique:
            if w.n != length:
                raise ValueError(f"word {w} has length {w.n}, expected {length}")
        object.__setattr__(self, "n", length)
        object.__setattr__(self, "words", tuple(unique))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def min_distance(self) -> int:
        """Minimum pairwise distance; undefined (error) for fewer than 2 words."""
        if len(self.words) < 2:
            raise ValueError("min_distance needs at least two words")
        ints = [w.bits for w in self.words]
        best = self.n + 1
        for i, a in enumerate(ints):
            for b in ints[i + 1:]:
                dist = (a ^ b).bit_count()
                if dist < best:
                    best = dist
        return best

    def max_weight(self) -> int:
        if not self.words:
            return 0
        return max(w.weight for w in self.words)

    def weight_histogram(self) -> dict[int, int]:
        """Count of words per weight (only weights that occur)."""
        hist: dict[int, int] = {}
        for w in self.words:
            hist[w.weight] = hist.get(w.weight, 0) + 1
        return hist


def translate(code: Code, u: Word) -> Code:
    """Translate every codeword by u (componentwise mod-2 sum)."""
    if u.n != code.n:
        raise ValueError(f"length mismatch: {u.n} vs {code.n}")
    return Code((w ^ u for w in code), n=code.n)


def min_distance(code: Code) -> int:
    return code.min_distance()


def max_weight(code: Code) -> int:
    return code.max_weight()


@dataclass(frozen=True)
class SetSystemView:
    """A code seen as a set system: blocks are the codeword supports."""

    order: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        for block in self.blocks:
            for point in block:
                if not 1 <= point <= self.order:
                    raise ValueError(f"point {point} outside 1..{self.order}")


def as_set_system(code: Code) -> SetSystemView:
    return SetSystemView(code.n, tuple(w.support() for w in code))


def from_set_system(system: SetSystemView) -> Code:
    words = [Word.from_support(system.order, block) for block in system.blocks]
    return Code(words, n=system.order)


# ---------------------------------------------------------------------------
# Code text format
#
#   # optional comments
#   n=<int> [d=<int>] [e=<int>]
#   <one codeword per line, n characters of 0/1>
#
# Trailing whitespace is ignored; duplicate codeword lines are an error.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LoadedCode:
    """A code read from text, plus the optional d/e metadata it declared."""

    code: Code
    d: int | None = None
    e: int | None = None


def parse_code(text: str) -> LoadedCode:
    header: dict[str, int] | None = None
    words: list[Word] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = {}
            for token in line.split():
                key, sep, value = token.partition("=")
                if not sep or key not in ("n", "d", "e"):
                    raise CodeFormatError(f"bad header token {token!r}", lineno)
                try:
                    header[key] = int(value)
                except ValueError:
                    raise CodeFormatError(f"bad header value {token!r}", lineno) from None
            if "n" not in header:
                raise CodeFormatError("header must declare n=<length>", lineno)
            if not 1 <= header["n"] <= MAX_LENGTH:
                raise CodeFormatError(f"n={header['n']} outside 1..{MAX_LENGTH}", lineno)
            continue
        if line in seen:
            raise CodeFormatError(f"duplicate codeword {line}", lineno)
        seen.add(line)
        if len(line) != header["n"]:
            raise CodeFormatError(
                f"codeword has length {len(line)}, header says n={header['n']}", lineno
            )
        if line.strip("01"):
            raise CodeFormatError(f"codeword is not a 0/1 string: {line!r}", lineno)
        words.append(Word(header["n"], int(line, 2)))
    if header is None:
        raise CodeFormatError("no header line found (expected n=<length>)")
    if not words:
        raise CodeFormatError("no codewords found")
    return LoadedCode(Code(words, n=header["n"]), header.get("d"), header.get("e"))


def load_code(path) -> LoadedCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read())


def render_code(code: Code, d: int | None = None, e: int | None = None,
                comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    header = f"n={code.n}"
    if d is not None:
        header += f" d={d}"
    if e is not None:
        header += f" e={e}"
    out.write(header + "\n")
    for w in code:
        out.write(str(w) + "\n")
    return out.getvalue()


def save_code(code: Code, path, d: int | None = None, e: int | None = None,
              comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_code(code, d=d, e=e, comment=comment))

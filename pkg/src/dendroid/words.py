"""Freely reduced signed words over a state set.

A signed word is a product of states and their inverses; the empty word
is the identity.  Words are kept reduced at all times (adjacent inverse
pairs cancel), so equality of words is equality in the free group.
"""

from __future__ import annotations

from dataclasses import dataclass

Signed = tuple[str, int]


def _reduce(items) -> tuple[Signed, ...]:
    out: list[Signed] = []
    for s, e in items:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e}")
        if out and out[-1][0] == s and out[-1][1] == -e:
            out.pop()
        else:
            out.append((s, e))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class SignedWord:
    letters: tuple[Signed, ...] = ()

    def __init__(self, letters=()):
        object.__setattr__(self, "letters", _reduce(letters))

    # construction ----------------------------------------------------

    @classmethod
    def identity(cls) -> "SignedWord":
        return cls(())

    @classmethod
    def gen(cls, state: str, exponent: int = 1) -> "SignedWord":
        if exponent >= 0:
            return cls(((state, 1),) * exponent)
        return cls(((state, -1),) * (-exponent))

    @classmethod
    def parse(cls, text: str) -> "SignedWord":
        """Parse ``"g,h^-1,g"``; empty text or ``"Id"`` is the identity."""
        text = text.strip()
        if not text or text == "Id":
            return cls(())
        items: list[Signed] = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ValueError("empty token in word")
            name, sep, exp = token.partition("^")
            if not name:
                raise ValueError(f"bad token {token!r}")
            k = 1
            if sep:
                try:
                    k = int(exp)
                except ValueError:
                    raise ValueError(f"bad exponent in token {token!r}") from None
            sign = 1 if k > 0 else -1
            items.extend((name, sign) for _ in range(abs(k)))
        return cls(items)

    # group operations ----------------------------------------------------

    def __mul__(self, other: "SignedWord") -> "SignedWord":
        return SignedWord(self.letters + other.letters)

    def inverse(self) -> "SignedWord":
        return SignedWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "SignedWord":
        if n < 0:
            return self.inverse() ** (-n)
        out = SignedWord.identity()
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sum(self, state: str) -> int:
        return sum(e for s, e in self.letters if s == state)

    def states(self) -> set[str]:
        return {s for s, _ in self.letters}

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "Id"
        return ",".join(s if e == 1 else f"{s}^-1" for s, e in self.letters)

    def __repr__(self) -> str:
        return f"SignedWord({str(self)!r})"

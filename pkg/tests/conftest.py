"""Shared oracles, written independently of the package internals."""

from __future__ import annotations

import pytest


def gf2_polymul(a: int, b: int) -> int:
    out = 0
    i = 0
    while b >> i:
        if (b >> i) & 1:
            out ^= a << i
        i += 1
    return out


def reducible_of_degree(n: int) -> set[int]:
    """Every reducible degree-n polynomial, as products of two lower-degree factors."""
    out = set()
    for da in range(1, n // 2 + 1):
        for a in range(1 << da, 1 << (da + 1)):
            for b in range(1 << (n - da), 1 << (n - da + 1)):
                out.add(gf2_polymul(a, b))
    return out


def slow_mul(a: int, b: int, modulus: int, n: int) -> int:
    """Shift-and-add multiply, reducing after every shift."""
    res = 0
    while b:
        if b & 1:
            res ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= modulus
    return res


def slow_pow(a: int, e: int, modulus: int, n: int) -> int:
    res = 1
    for _ in range(e):
        res = slow_mul(res, a, modulus, n)
    return res


# one pass/fail line per acceptance criterion, printed at the end of the session
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, detail: str = "") -> None:
    prev = ACCEPTANCE.get(number)
    if prev is not None:
        ok = ok and prev[0]
        detail = "; ".join(d for d in (prev[1], detail) if d)
    ACCEPTANCE[number] = (ok, detail)


@pytest.fixture
def criterion():
    return record_criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

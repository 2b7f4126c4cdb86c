"""Shared store for acceptance verdicts, printed by the terminal summary hook."""

RESULTS: dict[int, tuple[bool, str]] = {}


def line(number: int, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"

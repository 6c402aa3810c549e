"""Shared record of acceptance outcomes, printed at the end of the run."""

RESULTS: dict = {}


def report(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = (ok, detail)
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail

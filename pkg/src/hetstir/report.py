"""Pass/fail record returned by every identity check."""

from __future__ import annotations

from dataclasses import dataclass


class IdentityError(ArithmeticError):
    """An exact identity that must hold failed to hold."""


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    checked: int = 0
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f": {self.failure}" if self.failure else ""
        return f"{status} {self.name} (checked={self.checked}){tail}"


def passed(name: str, checked: int) -> CheckReport:
    return CheckReport(name, True, checked)


def failed(name: str, checked: int, failure: str) -> CheckReport:
    return CheckReport(name, False, checked, failure)

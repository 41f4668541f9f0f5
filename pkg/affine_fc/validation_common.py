"""Failure records shared by the verification suites."""

from dataclasses import dataclass


@dataclass
class CheckFailure:
    suite: str
    check: str
    word: str
    message: str

    def to_dict(self) -> dict[str, str]:
        return {"word": self.word, "detail": f"{self.check}: {self.message}"}

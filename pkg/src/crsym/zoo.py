"""The bundled model zoo and zoo-file loading."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from crsym.poly import RealPoly, parse_model


@dataclass(frozen=True)
class ZooEntry:
    name: str
    model: str
    expected_total_dim: int | None = None
    citation: str = ""

    def poly(self) -> RealPoly:
        return parse_model(self.model)

    @property
    def is_control(self) -> bool:
        """Levi nondegenerate reference models are kept out of the degenerate census."""
        return self.citation == "control"

    def to_dict(self) -> dict:
        d = {"name": self.name, "model": self.model}
        if self.expected_total_dim is not None:
            d["expected_total_dim"] = self.expected_total_dim
        if self.citation:
            d["citation"] = self.citation
        return d


def _entries(data) -> list[ZooEntry]:
    if not isinstance(data, list):
        raise ValueError("a zoo file must hold a JSON array of entries")
    out = []
    for item in data:
        if not isinstance(item, dict) or "name" not in item or "model" not in item:
            raise ValueError(f"malformed zoo entry {item!r}")
        dim = item.get("expected_total_dim")
        out.append(ZooEntry(str(item["name"]), str(item["model"]), int(dim) if dim is not None else None, str(item.get("citation", ""))))
    return out


def builtin_zoo() -> list[ZooEntry]:
    text = resources.files("crsym").joinpath("data/zoo.json").read_text()
    return _entries(json.loads(text))


def load_zoo(path: str | Path | None = None) -> list[ZooEntry]:
    if path is None:
        return builtin_zoo()
    return _entries(json.loads(Path(path).read_text()))

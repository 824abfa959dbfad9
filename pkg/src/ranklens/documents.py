"""Canonical JSON documents for datasets, games, and reports.

Canonical form is a single line: sorted keys, no insignificant
whitespace, trailing newline. Parsing accepts any JSON layout;
canonicalization is byte-idempotent. Rationals render as decimal integer
strings or 'p/q' strings in lowest terms.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import DocumentError
from .model import BimatrixGame, DataSet, validate_dataset


def canonical_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def _int_list(value: Any, context: str) -> list[int]:
    _expect(isinstance(value, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in value),
            f"{context} must be a list of integers")
    return value


def dataset_to_document(dataset: DataSet) -> dict:
    return {
        "n": dataset.n,
        "observations": [
            {
                "choice": [obs.choice.row, obs.choice.col],
                "rows": list(obs.subgame.rows),
                "cols": list(obs.subgame.cols),
            }
            for obs in dataset.observations
        ],
    }


def dataset_from_document(document: Any) -> DataSet:
    _expect(isinstance(document, dict), "dataset document must be a JSON object")
    _expect(isinstance(document.get("n"), int) and not isinstance(document.get("n"), bool),
            "field 'n' must be an integer")
    observations = document.get("observations")
    _expect(isinstance(observations, list), "field 'observations' must be a list")
    triples = []
    for idx, entry in enumerate(observations):
        context = f"observation {idx}"
        _expect(isinstance(entry, dict), f"{context} must be an object")
        choice = _int_list(entry.get("choice"), f"{context} field 'choice'")
        _expect(len(choice) == 2, f"{context} field 'choice' must have exactly two entries")
        rows = _int_list(entry.get("rows"), f"{context} field 'rows'")
        cols = _int_list(entry.get("cols"), f"{context} field 'cols'")
        triples.append(((choice[0], choice[1]), rows, cols))
    return validate_dataset(triples, document["n"])


def dataset_to_text(dataset: DataSet) -> str:
    return canonical_json(dataset_to_document(dataset))


def dataset_from_text(text: str) -> DataSet:
    return dataset_from_document(parse_json(text))


def _fraction_to_str(value: Fraction) -> str:
    return str(value)


def _fraction_from_document(value: Any, context: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{context} must be an integer or a 'p/q' string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{context} is not a valid rational: {exc}") from None


def game_to_document(game: BimatrixGame) -> dict:
    return {
        "n": game.n,
        "A": [[_fraction_to_str(x) for x in row] for row in game.a],
        "B": [[_fraction_to_str(x) for x in row] for row in game.b],
    }


def game_from_document(document: Any) -> BimatrixGame:
    _expect(isinstance(document, dict), "game document must be a JSON object")
    n = document.get("n")
    _expect(isinstance(n, int) and not isinstance(n, bool), "field 'n' must be an integer")
    matrices = {}
    for name in ("A", "B"):
        rows = document.get(name)
        _expect(isinstance(rows, list) and len(rows) == n, f"field '{name}' must be a list of {n} rows")
        parsed = []
        for r, row in enumerate(rows):
            _expect(isinstance(row, list) and len(row) == n,
                    f"field '{name}' row {r} must be a list of {n} entries")
            parsed.append(tuple(
                _fraction_from_document(x, f"{name}[{r + 1},{c + 1}]") for c, x in enumerate(row)
            ))
        matrices[name] = tuple(parsed)
    return BimatrixGame(n, matrices["A"], matrices["B"])


def game_to_text(game: BimatrixGame) -> str:
    return canonical_json(game_to_document(game))


def game_from_text(text: str) -> BimatrixGame:
    return game_from_document(parse_json(text))

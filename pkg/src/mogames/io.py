"""JSON (de)serialization for games, potentials, mixed profiles and vector sets.

Numbers are JSON integers or ``"p/q"`` strings; both load as exact rationals.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Union

from .equilibria import SolveResult
from .exceptions import MalformedGameError, MOGError
from .games import Game, GraphicalGame, NormalFormGame, PotentialAnnotation, SymmetricGame
from .mixed import MixedProfile
from .vectors import VectorSet, as_vector, format_rational, vector_set

PathLike = Union[str, Path]


def vec_to_json(v) -> list:
    return [format_rational(x) for x in v]


def vectors_to_json(vs: Iterable) -> list:
    return [vec_to_json(v) for v in vs]


def vectors_from_json(data) -> VectorSet:
    if not isinstance(data, list):
        raise MalformedGameError("expected a JSON array of vectors")
    try:
        return vector_set(as_vector(v) for v in data)
    except (TypeError, MOGError) as exc:
        raise MalformedGameError(f"bad vector list: {exc}") from exc


def game_to_dict(game: Union[Game, PotentialAnnotation]) -> dict:
    if isinstance(game, NormalFormGame):
        return {
            "kind": "normal",
            "n": game.n,
            "d": game.d,
            "actions": list(game.actions),
            "payoffs": [vectors_to_json(t) for t in game.payoffs],
        }
    if isinstance(game, SymmetricGame):
        table = [
            {"action": a, "config": list(c), "payoff": vec_to_json(v)}
            for (a, c), v in sorted(game.table.items())
        ]
        return {"kind": "symmetric", "n": game.n, "alpha": game.alpha, "d": game.d, "table": table}
    if isinstance(game, GraphicalGame):
        return {
            "kind": "graphical",
            "n": game.n,
            "d": game.d,
            "actions": list(game.actions),
            "scopes": [list(s) for s in game.scopes],
            "tables": [vectors_to_json(t) for t in game.tables],
        }
    if isinstance(game, PotentialAnnotation):
        return {"kind": "potential", "d": game.d, "actions": list(game.actions), "phi": vectors_to_json(game.phi)}
    raise MalformedGameError(f"cannot serialize {type(game).__name__}")


def game_from_dict(data: Any) -> Union[Game, PotentialAnnotation]:
    if not isinstance(data, dict) or "kind" not in data:
        raise MalformedGameError("game file must be a JSON object with a 'kind' field")
    kind = data["kind"]
    try:
        if kind == "normal":
            return NormalFormGame(
                int(data["n"]), int(data["d"]), data["actions"],
                [[as_vector(v) for v in t] for t in data["payoffs"]],
            )
        if kind == "symmetric":
            table = {(int(e["action"]), tuple(e["config"])): as_vector(e["payoff"]) for e in data["table"]}
            return SymmetricGame(int(data["n"]), int(data["alpha"]), int(data["d"]), table)
        if kind == "graphical":
            return GraphicalGame(
                int(data["n"]), int(data["d"]), data["actions"], data["scopes"],
                [[as_vector(v) for v in t] for t in data["tables"]],
            )
        if kind == "potential":
            return PotentialAnnotation(int(data["d"]), data["actions"], [as_vector(v) for v in data["phi"]])
    except MalformedGameError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedGameError(f"malformed {kind} game: {type(exc).__name__}: {exc}") from exc
    raise MalformedGameError(f"unknown game kind {kind!r}")


def _read_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedGameError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj: Any, path: PathLike = None) -> str:
    text = json.dumps(obj, indent=1, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def load_game(path: PathLike):
    return game_from_dict(_read_json(path))


def save_game(game, path: PathLike) -> None:
    dump_json(game_to_dict(game), path)


def load_vectors(path: PathLike) -> VectorSet:
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("vectors")
    return vectors_from_json(data)


def mixed_to_dict(profile: MixedProfile) -> dict:
    return {"profile": [vec_to_json(dist) for dist in profile.probs]}


def mixed_from_dict(data: Any) -> MixedProfile:
    if not isinstance(data, dict) or not isinstance(data.get("profile"), list):
        raise MalformedGameError("mixed profile must look like {\"profile\": [[...], ...]}")
    try:
        return MixedProfile(tuple(tuple(dist) for dist in data["profile"]))
    except (TypeError, MOGError) as exc:
        raise MalformedGameError(f"bad mixed profile: {exc}") from exc


def load_mixed(path: PathLike) -> MixedProfile:
    return mixed_from_dict(_read_json(path))


def solve_result_to_dict(result: SolveResult) -> dict:
    return {
        "pn": [list(p) for p in result.pn],
        "E": vectors_to_json(result.outcomes_E),
        "effE": vectors_to_json(result.eff_E),
        "wstE": vectors_to_json(result.wst_E),
        "F": vectors_to_json(result.frontier_F),
    }

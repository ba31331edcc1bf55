"""Experiment configuration: JSON schema, validation, and the default sweep.

The schema is strict: unknown keys anywhere are a hard error, reported with
their field path, because a silently ignored typo corrupts a sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import ConfigInvalid
from ..seeds import U64_MAX
from ..stats import CorePeripheryConfig

ER_CALIBRATION_MODES = ("fixed_p", "match_ggp_density")

# Alpha grids calibrated so mean realized node count lands on the size grid
# below at tau = 1 (see tools/calibrate_alpha.py).
DEFAULT_SIZE_GRID = (200, 400, 800, 1600)
DEFAULT_ALPHA_GRIDS = {
    0.0: (43.0, 77.0, 139.0, 252.0),
    0.5: (20.0, 31.0, 48.0, 75.0),
    0.8: (13.0, 19.5, 29.0, 43.5),
}
DEFAULT_GGP_EPSILON = {0.0: 1e-6, 0.5: 1e-6, 0.8: 1e-7}


@dataclass(frozen=True)
class GGPEntry:
    label: str
    sigma: float
    tau: float
    epsilon: float
    alpha_grid: tuple[float, ...]
    truncation_limit: float = 0.05
    kind: str = "ggp"


@dataclass(frozen=True)
class EREntry:
    label: str
    p: float | None = None  # fixed_p mode
    match_sigma: float | None = None  # match_ggp_density mode; None pools all GGP entries
    kind: str = "er"


@dataclass(frozen=True)
class BAEntry:
    label: str
    m: int
    m0: int | None = None
    kind: str = "ba"


ModelEntry = GGPEntry | EREntry | BAEntry


@dataclass(frozen=True)
class ExperimentConfig:
    models: tuple[ModelEntry, ...]
    size_grid: tuple[int, ...]
    replicates: int
    master_seed: int
    er_calibration: str
    output_dir: str
    ggp_bin_relative_halfwidth: float = 0.4
    core_periphery: CorePeripheryConfig = field(default_factory=CorePeripheryConfig)


def default_config_dict(output_dir: str = "out") -> dict[str, Any]:
    """The default experiment: GGP at three sparsity levels over four target
    sizes, density-matched ER per sparsity level, and BA with m=2."""
    models: list[dict[str, Any]] = []
    for sigma in (0.0, 0.5, 0.8):
        models.append(
            {
                "kind": "ggp",
                "label": "ggp",
                "sigma": sigma,
                "tau": 1.0,
                "epsilon": DEFAULT_GGP_EPSILON[sigma],
                "alpha_grid": list(DEFAULT_ALPHA_GRIDS[sigma]),
            }
        )
    for sigma in (0.0, 0.5, 0.8):
        models.append({"kind": "er", "label": f"er_s{sigma:g}", "match_sigma": sigma})
    models.append({"kind": "ba", "label": "ba", "m": 2})
    return {
        "size_grid": list(DEFAULT_SIZE_GRID),
        "replicates": 20,
        "master_seed": 20260810,
        "er_calibration": "match_ggp_density",
        "output_dir": output_dir,
        "models": models,
    }


def default_config(output_dir: str = "out") -> ExperimentConfig:
    return parse_config(default_config_dict(output_dir))


def _require(data: dict, key: str, path: str) -> Any:
    if key not in data:
        raise ConfigInvalid(f"{path}.{key}", "missing required key")
    return data[key]


def _check_unknown(data: dict, allowed: set[str], path: str) -> None:
    extra = set(data) - allowed
    if extra:
        raise ConfigInvalid(f"{path}.{sorted(extra)[0]}", "unknown key")


def _as_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigInvalid(path, f"expected a number, got {value!r}")
    return float(value)


def _as_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigInvalid(path, f"expected an integer, got {value!r}")
    return value


def _parse_model(entry: Any, path: str) -> ModelEntry:
    if not isinstance(entry, dict):
        raise ConfigInvalid(path, "model entry must be an object")
    kind = _require(entry, "kind", path)
    label = entry.get("label", kind)
    if not isinstance(label, str) or not label:
        raise ConfigInvalid(f"{path}.label", "label must be a non-empty string")
    if "," in label or "\n" in label:
        raise ConfigInvalid(f"{path}.label", "label may not contain commas or newlines")
    if kind == "ggp":
        _check_unknown(
            entry, {"kind", "label", "sigma", "tau", "epsilon", "alpha_grid", "truncation_limit"}, path
        )
        sigma = _as_number(_require(entry, "sigma", path), f"{path}.sigma")
        if not 0.0 <= sigma < 1.0:
            raise ConfigInvalid(f"{path}.sigma", f"sigma must lie in [0, 1), got {sigma}")
        tau = _as_number(entry.get("tau", 1.0), f"{path}.tau")
        epsilon = _as_number(entry.get("epsilon", 1e-6), f"{path}.epsilon")
        grid_raw = _require(entry, "alpha_grid", path)
        if not isinstance(grid_raw, list) or not grid_raw:
            raise ConfigInvalid(f"{path}.alpha_grid", "must be a non-empty list")
        grid = tuple(_as_number(a, f"{path}.alpha_grid[{i}]") for i, a in enumerate(grid_raw))
        if any(a <= 0 for a in grid):
            raise ConfigInvalid(f"{path}.alpha_grid", "alpha values must be positive")
        limit = _as_number(entry.get("truncation_limit", 0.05), f"{path}.truncation_limit")
        return GGPEntry(label, sigma, tau, epsilon, grid, limit)
    if kind == "er":
        _check_unknown(entry, {"kind", "label", "p", "match_sigma"}, path)
        p = entry.get("p")
        match_sigma = entry.get("match_sigma")
        if p is not None:
            p = _as_number(p, f"{path}.p")
            if not 0.0 <= p <= 1.0:
                raise ConfigInvalid(f"{path}.p", f"p must lie in [0, 1], got {p}")
        if match_sigma is not None:
            match_sigma = _as_number(match_sigma, f"{path}.match_sigma")
        return EREntry(label, p=p, match_sigma=match_sigma)
    if kind == "ba":
        _check_unknown(entry, {"kind", "label", "m", "m0"}, path)
        m = _as_int(_require(entry, "m", path), f"{path}.m")
        m0 = entry.get("m0")
        if m0 is not None:
            m0 = _as_int(m0, f"{path}.m0")
        if m < 1:
            raise ConfigInvalid(f"{path}.m", f"m must be >= 1, got {m}")
        return BAEntry(label, m=m, m0=m0)
    raise ConfigInvalid(f"{path}.kind", f"unknown model kind {kind!r}")


def parse_config(data: Any) -> ExperimentConfig:
    """Validate a JSON-shaped dict into an ExperimentConfig."""
    if not isinstance(data, dict):
        raise ConfigInvalid("$", "top-level config must be an object")
    allowed = {
        "models",
        "size_grid",
        "replicates",
        "master_seed",
        "er_calibration",
        "output_dir",
        "ggp_bin_relative_halfwidth",
        "core_periphery",
    }
    _check_unknown(data, allowed, "$")
    size_raw = _require(data, "size_grid", "$")
    if not isinstance(size_raw, list) or not size_raw:
        raise ConfigInvalid("$.size_grid", "must be a non-empty list")
    size_grid = tuple(_as_int(x, f"$.size_grid[{i}]") for i, x in enumerate(size_raw))
    if any(x <= 0 for x in size_grid):
        raise ConfigInvalid("$.size_grid", "sizes must be positive")
    if list(size_grid) != sorted(set(size_grid)):
        raise ConfigInvalid("$.size_grid", "sizes must be strictly ascending")
    replicates = _as_int(_require(data, "replicates", "$"), "$.replicates")
    if replicates < 1:
        raise ConfigInvalid("$.replicates", "replicates must be >= 1")
    master_seed = _as_int(_require(data, "master_seed", "$"), "$.master_seed")
    if not 0 <= master_seed <= U64_MAX:
        raise ConfigInvalid("$.master_seed", "must fit in unsigned 64 bits")
    calibration = _require(data, "er_calibration", "$")
    if calibration not in ER_CALIBRATION_MODES:
        raise ConfigInvalid("$.er_calibration", f"must be one of {ER_CALIBRATION_MODES}")
    output_dir = _require(data, "output_dir", "$")
    if not isinstance(output_dir, str) or not output_dir:
        raise ConfigInvalid("$.output_dir", "must be a non-empty string")
    halfwidth = _as_number(data.get("ggp_bin_relative_halfwidth", 0.4), "$.ggp_bin_relative_halfwidth")
    if not 0.0 < halfwidth < 1.0:
        raise ConfigInvalid("$.ggp_bin_relative_halfwidth", "must lie in (0, 1)")
    cp_raw = data.get("core_periphery", {})
    if not isinstance(cp_raw, dict):
        raise ConfigInvalid("$.core_periphery", "must be an object")
    cp_allowed = {
        "restarts",
        "seed",
        "move_budget_factor",
        "initial_temperature",
        "cooling",
        "frozen_temperature",
    }
    _check_unknown(cp_raw, cp_allowed, "$.core_periphery")
    cp_kwargs: dict[str, Any] = {}
    for key in ("restarts", "seed", "move_budget_factor"):
        if key in cp_raw:
            cp_kwargs[key] = _as_int(cp_raw[key], f"$.core_periphery.{key}")
    for key in ("initial_temperature", "cooling", "frozen_temperature"):
        if key in cp_raw:
            cp_kwargs[key] = _as_number(cp_raw[key], f"$.core_periphery.{key}")
    models_raw = _require(data, "models", "$")
    if not isinstance(models_raw, list) or not models_raw:
        raise ConfigInvalid("$.models", "must be a non-empty list")
    models = tuple(_parse_model(m, f"$.models[{i}]") for i, m in enumerate(models_raw))
    labels = [_entry_key(m) for m in models]
    if len(labels) != len(set(labels)):
        raise ConfigInvalid("$.models", "model label/sigma combinations must be unique")
    _validate_er_matching(models, calibration)
    return ExperimentConfig(
        models=models,
        size_grid=size_grid,
        replicates=replicates,
        master_seed=master_seed,
        er_calibration=calibration,
        output_dir=output_dir,
        ggp_bin_relative_halfwidth=halfwidth,
        core_periphery=CorePeripheryConfig(**cp_kwargs),
    )


def _entry_key(entry: ModelEntry) -> tuple:
    sigma = entry.sigma if isinstance(entry, GGPEntry) else None
    return (entry.label, sigma)


def _validate_er_matching(models: tuple[ModelEntry, ...], calibration: str) -> None:
    seen_ggp_sigmas: set[float] = set()
    for i, entry in enumerate(models):
        if isinstance(entry, GGPEntry):
            seen_ggp_sigmas.add(entry.sigma)
        elif isinstance(entry, EREntry):
            if calibration == "fixed_p":
                if entry.p is None:
                    raise ConfigInvalid(f"$.models[{i}].p", "fixed_p calibration requires p")
            else:
                if entry.p is not None:
                    raise ConfigInvalid(
                        f"$.models[{i}].p", "p not allowed under match_ggp_density calibration"
                    )
                if entry.match_sigma is None:
                    if not seen_ggp_sigmas:
                        raise ConfigInvalid(
                            f"$.models[{i}]",
                            "matched ER entry must come after the GGP entries it matches",
                        )
                elif entry.match_sigma not in seen_ggp_sigmas:
                    raise ConfigInvalid(
                        f"$.models[{i}].match_sigma",
                        f"no earlier GGP entry with sigma={entry.match_sigma:g}",
                    )

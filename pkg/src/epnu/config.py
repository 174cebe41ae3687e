"""Molecule config files and run settings.

A config is a flat ``key = value`` file; ``#`` starts a comment.  Numbers
are plain decimals.  Every key below is required and no others are allowed.
"""
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DomainError
from .potential import EPParams
from .spectrum import MoleculeSpec

REQUIRED_KEYS = ("name", "De_cm1", "re_angstrom", "mu_amu", "sigma", "delta",
                 "alpha_per_angstrom", "branch")
_NUMERIC = {"De_cm1", "re_angstrom", "mu_amu", "sigma", "delta", "alpha_per_angstrom"}
_DECIMAL = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)$")

TASKS = ("spectrum", "wavefunction", "validate", "tables")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    molecule: MoleculeSpec
    task: str = "spectrum"
    n_range: tuple = (0, 5)
    l_range: tuple = (0, 2)
    allow_unphysical: bool = False
    output_path: Path = None
    grid_points: int = None
    tolerance: float = None

    def __post_init__(self):
        if self.task not in TASKS:
            raise ConfigError(f"unknown task {self.task!r}; choose from {', '.join(TASKS)}")
        for label, (lo, hi) in (("n", self.n_range), ("l", self.l_range)):
            if lo < 0 or hi < lo:
                raise ConfigError(f"{label} range {lo}..{hi} is empty or negative")
        if self.output_path is not None:
            parent = Path(self.output_path).resolve().parent
            if not parent.is_dir():
                raise ConfigError(f"output directory {parent} does not exist")

    @property
    def n_values(self):
        return range(self.n_range[0], self.n_range[1] + 1)

    @property
    def l_values(self):
        return range(self.l_range[0], self.l_range[1] + 1)


def bundled_path(name):
    """Path of a file shipped in ``epnu/data``."""
    return resources.files("epnu.data").joinpath(name)


def resolve_config_path(path):
    p = Path(path)
    if p.exists():
        return p
    bundled = bundled_path(p.name)
    if bundled.is_file():
        return bundled
    raise ConfigError(f"config file {path} not found")


def parse_config_text(text, source="<config>"):
    values, lines = {}, {}
    errors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            errors.append(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in REQUIRED_KEYS:
            errors.append(f"{source}:{lineno}: unknown key {key!r}")
            continue
        if key in values:
            errors.append(f"{source}:{lineno}: duplicate key {key!r} (first on line {lines[key]})")
            continue
        if key in _NUMERIC:
            if not _DECIMAL.match(value):
                errors.append(f"{source}:{lineno}: {key} must be a decimal number, got {value!r}")
                continue
            value = float(value)
        values[key] = value
        lines[key] = lineno
    missing = [k for k in REQUIRED_KEYS if k not in values]
    if missing:
        errors.append(f"{source}: missing required keys: {', '.join(missing)}")
    if errors:
        raise ConfigError("\n".join(errors))
    try:
        ep = EPParams(De=values["De_cm1"], sigma=values["sigma"], delta=values["delta"],
                      alpha=values["alpha_per_angstrom"], re=values["re_angstrom"],
                      branch=values["branch"])
        return MoleculeSpec(values["name"], ep, values["mu_amu"])
    except (DomainError, ValueError) as exc:
        raise ConfigError(f"{source}: {exc}") from exc


def load_molecule(path):
    p = resolve_config_path(path)
    return parse_config_text(p.read_text(), source=str(path))


def load_config(path, **settings):
    """Read a molecule config and combine it with run settings."""
    return RunConfig(molecule=load_molecule(path), **settings)

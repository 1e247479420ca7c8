"""Seeded parameter sweeps over the identity catalog and the Omega check.

A campaign enumerates every integer tuple allowed by an identity's
parameter domains, keeps the ones satisfying its hypotheses, pairs each
with rational shifts ``k/D`` and evaluates the residual.  All randomness
comes from :class:`random.Random` seeded with strings built from the
campaign seed, so the point set depends on nothing but the config.
"""
from __future__ import annotations

import itertools
import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .identities import CATALOG, coprime, hypotheses_hold
from .polyfun import default_max_degree
from .rational import format_rational
from .series import RHS_MODES, OmegaParams, check_omega_reciprocity, iter_pairwise_coprime

OMEGA_ID = "omega"
RP_S12_COPRIME_ID = "rp-s12/pairwise-coprime"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CampaignConfig:
    identities: tuple[str, ...] | str = "all"
    modulus_max: int = 8
    order_max: int = 3
    shift_denominators: tuple[int, ...] = (1, 2, 3)
    samples_per_identity: int | str = "exhaustive"
    seed: int = 0
    series_degree: int = 6
    d_values: tuple[int, ...] = (2, 4)
    # not part of the minimal field set, all optional
    scale_max: int = 4
    series_modulus_max: int = 8
    series_rhs: str = "quarter"
    shift_samples: int | str = "exhaustive"

    def __post_init__(self):
        def bad(msg):
            raise ConfigError(msg)

        ids = self.identities
        if isinstance(ids, str):
            if ids != "all":
                bad('identities must be a list of ids or "all"')
        else:
            ids = tuple(ids)
            known = set(CATALOG) | {OMEGA_ID, RP_S12_COPRIME_ID}
            unknown = [i for i in ids if not isinstance(i, str) or i not in known]
            if unknown:
                bad(f"unknown identities: {unknown}")
            object.__setattr__(self, "identities", ids)
        for name in ("modulus_max", "order_max", "scale_max", "series_modulus_max", "series_degree"):
            value = getattr(self, name)
            if not _is_int(value) or value < (0 if name == "series_degree" else 1):
                bad(f"{name} must be a positive integer")
        for name in ("samples_per_identity", "shift_samples"):
            value = getattr(self, name)
            if value != "exhaustive" and not (_is_int(value) and value >= 1):
                bad(f'{name} must be a positive integer or "exhaustive"')
        if not _is_int(self.seed) or not -(2**63) <= self.seed < 2**64:
            bad("seed must be a 64-bit integer")
        dens = tuple(self.shift_denominators) if _is_seq(self.shift_denominators) else bad(
            "shift_denominators must be a list")
        if not dens or not all(_is_int(D) and D >= 1 for D in dens):
            bad("shift_denominators must be positive integers")
        object.__setattr__(self, "shift_denominators", dens)
        ds = tuple(self.d_values) if _is_seq(self.d_values) else bad("d_values must be a list")
        if not all(_is_int(d) and d >= 2 and d % 2 == 0 for d in ds):
            bad("d_values must be even positive integers")
        object.__setattr__(self, "d_values", ds)
        if self.series_rhs not in RHS_MODES:
            bad(f"series_rhs must be one of {RHS_MODES}")
        # every residual needs Bernoulli orders up to about 2 * order_max + 2
        cap = default_max_degree()
        if 2 * self.order_max + 2 > cap or self.series_degree + 1 > cap:
            bad(f"order_max / series_degree exceed the polynomial table degree {cap}")

    @classmethod
    def from_dict(cls, data: Any) -> "CampaignConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        names = {f.name for f in fields(cls)}
        extra = set(data) - names
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def load(cls, path: str | Path) -> "CampaignConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for k, v in out.items():
            if isinstance(v, tuple):
                out[k] = list(v)
        return out

    def selected_ids(self) -> list[str]:
        if self.identities == "all":
            return sorted(CATALOG) + [RP_S12_COPRIME_ID, OMEGA_ID]
        return list(self.identities)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _is_seq(v) -> bool:
    return isinstance(v, (list, tuple))


def default_config_path() -> Path:
    return Path(str(resources.files("hbsum") / "data" / "default_campaign.json"))


def report_schema() -> dict:
    return json.loads((resources.files("hbsum") / "data" / "report.schema.json").read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# grids

def shift_values(dens: Sequence[int]) -> list[Fraction]:
    return sorted({Fraction(k, D) for D in dens for k in range(D)})


def point_values(dens: Sequence[int]) -> list[Fraction]:
    return sorted({Fraction(k, D) for D in dens for k in range(-D, D + 1)})


def integer_range(domain: str, cfg: CampaignConfig) -> range:
    return {
        "modulus": range(1, cfg.modulus_max + 1),
        "order": range(1, cfg.order_max + 1),
        "order0": range(0, cfg.order_max + 1),
        "index": range(0, cfg.order_max),
        "scale": range(1, cfg.scale_max + 1),
    }[domain]


@dataclass
class Target:
    """One sweep line: an integer grid, rational choices and an evaluator."""

    id: str
    int_names: tuple[str, ...]
    int_tuples: list[tuple[int, ...]]
    grid_size: int
    rat_names: tuple[str, ...]
    rat_choices: tuple[list[Fraction], ...]
    evaluate: Callable[[dict], tuple[str, Any]] = field(repr=False)


def _identity_eval(id_: str):
    ident = CATALOG[id_]
    return lambda params: _residual_status(ident.residual(**params))


def _residual_status(res: Fraction) -> tuple[str, Any]:
    return ("pass" if res == 0 else "fail"), res


def identity_target(id_: str, cfg: CampaignConfig, where: Callable[..., bool] | None = None) -> Target:
    """Grid for one catalog entry; ``where`` optionally narrows the integer tuples further."""
    base_id = "rp-s12" if id_ == RP_S12_COPRIME_ID else id_
    ident = CATALOG[base_id]
    int_names = ident.integer_names
    domains = dict(ident.params)
    ranges = [integer_range(domains[n], cfg) for n in int_names]
    grid = list(itertools.product(*ranges))
    keep = [t for t in grid if hypotheses_hold(ident, dict(zip(int_names, t)))]
    if id_ == RP_S12_COPRIME_ID:
        keep = [t for t in keep if coprime(t[0], t[1], t[2])]
    if where is not None:
        keep = [t for t in keep if where(**dict(zip(int_names, t)))]
    rat_names = ident.rational_names
    dens = cfg.shift_denominators
    choices = tuple(shift_values(dens) if domains[n] == "shift" else point_values(dens) for n in rat_names)
    return Target(id_, int_names, keep, len(grid), rat_names, choices, _identity_eval(base_id))


def _omega_eval(degree: int, rhs: str):
    def run(params):
        p = OmegaParams(params["a"], params["b"], params["c"], params["d"],
                        params["x"], params["y"], params["z"])
        rep = check_omega_reciprocity(p, degree, rhs)
        detail = {f"{i} {j}": format_rational(v) for (i, j), v in sorted(rep.residual.coeffs.items())}
        return rep.status, detail
    return run


def omega_target(cfg: CampaignConfig) -> Target:
    triples = list(iter_pairwise_coprime(cfg.series_modulus_max))
    tuples = [t + (d,) for t in triples for d in cfg.d_values]
    shifts = shift_values(cfg.shift_denominators)
    return Target(OMEGA_ID, ("a", "b", "c", "d"), tuples,
                  cfg.series_modulus_max**3 * len(cfg.d_values),
                  ("x", "y", "z"), (shifts, shifts, shifts),
                  _omega_eval(cfg.series_degree, cfg.series_rhs))


def build_target(id_: str, cfg: CampaignConfig, where=None) -> Target:
    return omega_target(cfg) if id_ == OMEGA_ID else identity_target(id_, cfg, where)


def _decode(index: int, radices: Sequence[int]) -> list[int]:
    digits = []
    for r in reversed(radices):
        index, d = divmod(index, r)
        digits.append(d)
    return digits[::-1]


def select_points(target: Target, cfg: CampaignConfig) -> tuple[list[dict], int]:
    """Return the points to evaluate and the size of the applicable pool."""
    radices = [len(c) for c in target.rat_choices]
    n_rat = math.prod(radices)
    per_tuple = n_rat
    if cfg.shift_samples != "exhaustive":
        per_tuple = min(n_rat, cfg.shift_samples)
    pool = len(target.int_tuples) * per_tuple
    if cfg.samples_per_identity == "exhaustive" or pool <= cfg.samples_per_identity:
        chosen = range(pool)
    else:
        rng = random.Random(f"{cfg.seed}:{target.id}")
        chosen = sorted(rng.sample(range(pool), cfg.samples_per_identity))

    points = []
    shift_cache: dict[int, list[int]] = {}
    for flat in chosen:
        ti, slot = divmod(flat, per_tuple)
        t = target.int_tuples[ti]
        if per_tuple == n_rat:
            ridx = slot
        else:
            if ti not in shift_cache:
                rng = random.Random(f"{cfg.seed}:{target.id}:{t}")
                shift_cache[ti] = sorted(rng.sample(range(n_rat), per_tuple))
            ridx = shift_cache[ti][slot]
        params = dict(zip(target.int_names, t))
        for name, choices, d in zip(target.rat_names, target.rat_choices, _decode(ridx, radices)):
            params[name] = choices[d]
        points.append(params)
    return points, len(target.int_tuples) * n_rat


def _json_params(params: dict) -> dict[str, str | int]:
    return {k: (v if isinstance(v, int) else format_rational(v)) for k, v in params.items()}


def _json_residual(residual: Any) -> Any:
    if isinstance(residual, Fraction):
        return format_rational(residual)
    return residual


def _run_chunk(args):
    id_, cfg_dict, points = args
    target_eval = build_target(id_, CampaignConfig.from_dict(cfg_dict)).evaluate
    return [target_eval(p) for p in points]


def run_target(id_: str, cfg: CampaignConfig, jobs: int = 1, where=None) -> dict[str, Any]:
    target = build_target(id_, cfg, where)
    if where is not None:
        jobs = 1  # the filter may not be picklable
    points, applicable = select_points(target, cfg)
    if jobs > 1 and len(points) > 1:
        size = max(1, math.ceil(len(points) / (4 * jobs)))
        chunks = [points[i:i + size] for i in range(0, len(points), size)]
        cfg_dict = cfg.to_dict()
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = [o for part in pool.map(_run_chunk, [(id_, cfg_dict, c) for c in chunks]) for o in part]
    else:
        outcomes = [target.evaluate(p) for p in points]
    failures, indeterminate = [], 0
    for params, (status, residual) in zip(points, outcomes):
        if status == "indeterminate":
            indeterminate += 1
        elif status == "fail":
            failures.append({"params": _json_params(params), "residual": _json_residual(residual)})
    return {
        "id": id_,
        "points_tested": len(points),
        "points_applicable": applicable,
        "grid_points": target.grid_size * math.prod(len(c) for c in target.rat_choices),
        "indeterminate": indeterminate,
        "failures": failures,
    }


def run_campaign(cfg: CampaignConfig, jobs: int = 1, progress: Callable[[str], None] | None = None) -> dict[str, Any]:
    results = []
    for id_ in sorted(cfg.selected_ids()):
        if progress:
            progress(id_)
        results.append(run_target(id_, cfg, jobs))
    return {
        "version": __version__,
        "config": cfg.to_dict(),
        "results": results,
        "pass": all(not r["failures"] for r in results),
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_text(report: dict) -> str:
    lines = []
    for r in report["results"]:
        status = "FAIL" if r["failures"] else "ok"
        lines.append(
            f"{r['id']:<26} {status:<4} tested={r['points_tested']} applicable={r['points_applicable']} "
            f"indeterminate={r['indeterminate']} failures={len(r['failures'])}"
        )
    lines.append("PASS" if report["pass"] else "FAIL")
    return "\n".join(lines) + "\n"

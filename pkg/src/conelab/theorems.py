"""Mechanical checks of the classification results for permutation invariant cones.

For every proper cone in a per-dimension corpus (orthant, every Q_p^n,
random (a, b)-cones, random orbit cones) the suite computes the Lyapunov rank
and the direct-sum structure and records one verdict per applicable claim:

* ``bounds``      1 <= beta <= n and beta != n - 1
* ``dichotomy``   exactly one of (irreducible and beta = 1) or
                  (orthant form recognised and beta = n)
* ``orthant-form`` a reducible invariant cone is ((a-b)I + bE)(R^n_+)
* ``more-rays``   more than n extreme rays forces irreducible, beta = 1
* ``two-orbits``  extreme rays in two different orbits force irreducible, beta = 1
* ``ones-axis``   a pointed invariant cone contains 1 or -1
* ``spectral``    lambda^{-1}(Q) = L_(a,b)(PSD) by sampling, both algebras
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .catalog import ab_cone, orthant, qpn, random_ab, random_rational, random_seed_vector
from .cone import Cone
from .decompose import decompose, recognize_orthant_form
from .exact import rat_str
from .jordan import verify_prop5, verify_prop5_exact
from .lyapunov import lyapunov_rank
from .symmetry import OnesAxis, contains_ones_axis, is_permutation_invariant, orbit_cone, orbit_key


@dataclass
class Verdict:
    check: str
    subject: str
    n: int
    holds: bool
    detail: dict = field(default_factory=dict)


def corpus(n: int, seed: int = 0, orbit_seeds: int = 6, ab_pairs: int = 3) -> list[tuple[str, Cone]]:
    """Named test cones in R^n; deterministic in (n, seed)."""
    rng = random.Random(seed * 1009 + n)
    out: list[tuple[str, Cone]] = [(f"orthant({n})", orthant(n))]
    out += [(f"qpn({n},{p})", qpn(n, p)) for p in range(1, n + 1)]
    for _ in range(ab_pairs):
        a, b = random_ab(n, rng)
        out.append((f"ab({n},{rat_str(a)},{rat_str(b)})", ab_cone(n, a, b)))
    for i in range(orbit_seeds):
        if i % 3 == 2:
            # (a, b, ..., b) seeds give the reducible orbit cones
            a, b = random_rational(rng, -5, 5, 3), random_rational(rng, -5, 5, 3)
            s = (a,) + (b,) * (n - 1)
        else:
            s = random_seed_vector(n, rng)
        out.append((f"orbit[{','.join(rat_str(x) for x in s)}]", orbit_cone([s])))
    s1, s2 = random_seed_vector(n, rng), random_seed_vector(n, rng)
    out.append((f"orbit2[{','.join(rat_str(x) for x in s1)};{','.join(rat_str(x) for x in s2)}]",
                orbit_cone([s1, s2])))
    return out


def analyse(K: Cone) -> dict:
    """Everything the verdicts need, computed once."""
    n = K.dim
    info: dict = {"proper": K.is_proper()}
    if not info["proper"]:
        return info
    rays = K.extreme_rays()
    info["rays"] = rays
    info["beta"] = lyapunov_rank(K)
    info["components"] = len(decompose(K))
    info["irreducible"] = info["components"] == 1
    info["invariant"] = is_permutation_invariant(K)
    info["form"] = recognize_orthant_form(K) if info["invariant"] else None
    info["axis"] = contains_ones_axis(K)
    info["orbits"] = len({orbit_key(r) for r in rays})
    info["n"] = n
    return info


def check_cone(name: str, K: Cone, spectral_samples: int = 200, seed: int = 0) -> list[Verdict]:
    info = analyse(K)
    if not info["proper"]:
        return []
    n = K.dim
    beta = info["beta"]
    irr = info["irreducible"]
    form = info["form"]
    nrays = len(info["rays"])
    base = {"beta": beta, "rays": nrays, "components": info["components"]}
    out = [Verdict("bounds", name, n, 1 <= beta <= n and beta != n - 1, dict(base))]
    if not info["invariant"]:
        return out

    detail = dict(base, orthant_form=None if form is None else [rat_str(form.a), rat_str(form.b)])
    alt_irr = irr and beta == 1
    alt_red = form is not None and beta == n
    out.append(Verdict("dichotomy", name, n, alt_irr != alt_red, detail))
    if not irr:
        holds = form is not None and ab_cone(n, form.a, form.b).extreme_rays() == info["rays"]
        out.append(Verdict("orthant-form", name, n, holds, detail))
    if nrays > n:
        out.append(Verdict("more-rays", name, n, alt_irr, detail))
    if info["orbits"] > 1:
        out.append(Verdict("two-orbits", name, n, alt_irr, dict(detail, orbits=info["orbits"])))
    out.append(Verdict("ones-axis", name, n, info["axis"] is not OnesAxis.Neither, {"axis": info["axis"].value}))
    if form is not None and spectral_samples:
        exact = verify_prop5_exact(n, form.a, form.b, spectral_samples, seed)
        flt = verify_prop5(n, form.a, form.b, spectral_samples, seed)
        out.append(Verdict("spectral", name, n, exact.ok and flt.ok,
                           {"exact": exact.to_dict(), "float": flt.to_dict()}))
    return out


def _run_dimension(args) -> list[Verdict]:
    n, seed, orbit_seeds, spectral_samples = args
    verdicts = []
    for name, K in corpus(n, seed, orbit_seeds):
        verdicts.extend(check_cone(name, K, spectral_samples, seed))
    return verdicts


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("CONELAB_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(n_lo: int, n_hi: int, seed: int = 0, orbit_seeds: int = 6, spectral_samples: int = 200) -> dict:
    if n_lo < 2 or n_hi < n_lo:
        raise ValueError(f"n-range must satisfy 2 <= lo <= hi, got {n_lo}..{n_hi}")
    jobs = [(n, seed, orbit_seeds, spectral_samples) for n in range(n_lo, n_hi + 1)]
    workers = min(thread_cap(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_dimension, jobs))
    else:
        chunks = [_run_dimension(j) for j in jobs]
    verdicts = [v for chunk in chunks for v in chunk]
    failures = [v for v in verdicts if not v.holds]
    return {
        "n_range": [n_lo, n_hi],
        "seed": seed,
        "verdicts": [asdict(v) for v in verdicts],
        "checks": len(verdicts),
        "failures": len(failures),
        "ok": not failures,
    }

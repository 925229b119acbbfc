"""Persisted records for generated braids.

One record per line: tab-separated ``key=value`` pairs in fixed key order
(``n``, ``word``, ``floor``, ``periodic``, ``verdict``, ``exponent_sum``,
``cycle_count``, ``mode``, then ``k`` and ``seed_word`` for family records
or ``rng_seed`` for random ones).  Values are decimal integers, ``true`` /
``false`` booleans, or raw text; words never contain tabs, so nothing is
escaped.  The format is bit-exact: reading enforces the key order and
rejects anything it did not write.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable

from .classify import GeometryType, classify_closure, is_periodic, is_prime
from .floors import dehornoy_floor
from .ordering import DEFAULT_MAX_STEPS
from .words import closure_component_count, exponent_sum, parse_word

_KNOT_VERDICTS = (GeometryType.TORUS_KNOT.value, GeometryType.HYPERBOLIC_KNOT.value)


class CertificateError(ValueError):
    """Malformed, inconsistent, or unverifiable certificate data."""


@dataclass(frozen=True, slots=True)
class KnotCertificate:
    """A generated braid together with everything its verdict rests on.

    ``word`` is in the shared word syntax.  Family records carry the central
    power ``k`` that was applied and the seed word; random records carry the
    master seed of their run.
    """

    n: int
    word: str
    floor: int
    periodic: bool
    verdict: str
    exponent_sum: int
    cycle_count: int
    mode: str
    k: int | None = None
    seed_word: str | None = None
    rng_seed: int | None = None

    def braid(self):
        """Re-parse the stored word."""
        return parse_word(self.word, self.n)

    def validate(self) -> None:
        """Check structural invariants without recomputing anything heavy."""
        if self.mode == "family":
            if self.k is None or self.seed_word is None or self.rng_seed is not None:
                raise CertificateError("family record must carry k and seed_word only")
        elif self.mode == "random":
            if self.rng_seed is None or self.k is not None or self.seed_word is not None:
                raise CertificateError("random record must carry rng_seed only")
        else:
            raise CertificateError(f"unknown mode {self.mode!r}")
        if self.verdict not in _KNOT_VERDICTS:
            raise CertificateError(f"unknown verdict {self.verdict!r}")
        if self.floor < 0:
            raise CertificateError(f"floor must be non-negative, got {self.floor}")
        if self.verdict == GeometryType.HYPERBOLIC_KNOT.value:
            if self.floor < 3:
                raise CertificateError("hyperbolic verdict requires floor >= 3")
            if self.cycle_count != 1:
                raise CertificateError("hyperbolic verdict requires a knot closure")
            if self.periodic:
                raise CertificateError("hyperbolic verdict contradicts periodicity")
            if not is_prime(self.n):
                raise CertificateError("hyperbolic verdict requires a prime strand count")
        try:
            self.braid()
        except ValueError as exc:
            raise CertificateError(f"stored word does not parse: {exc}") from exc

    def to_line(self) -> str:
        pairs = [
            ("n", str(self.n)),
            ("word", self.word),
            ("floor", str(self.floor)),
            ("periodic", "true" if self.periodic else "false"),
            ("verdict", self.verdict),
            ("exponent_sum", str(self.exponent_sum)),
            ("cycle_count", str(self.cycle_count)),
            ("mode", self.mode),
        ]
        if self.mode == "family":
            pairs.append(("k", str(self.k)))
            pairs.append(("seed_word", self.seed_word or ""))
        else:
            pairs.append(("rng_seed", str(self.rng_seed)))
        return "\t".join(f"{key}={value}" for key, value in pairs)


_COMMON_KEYS = ("n", "word", "floor", "periodic", "verdict", "exponent_sum", "cycle_count", "mode")


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CertificateError(f"field {key} is not an integer: {value!r}") from None


def _parse_bool(key: str, value: str) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise CertificateError(f"field {key} must be true or false, got {value!r}")


def certificate_from_line(line: str) -> KnotCertificate:
    """Parse one certificate record, enforcing the fixed key order."""
    fields: dict[str, str] = {}
    keys: list[str] = []
    for part in line.split("\t"):
        key, sep, value = part.partition("=")
        if not sep or not key:
            raise CertificateError(f"malformed field {part!r}")
        if key in fields:
            raise CertificateError(f"duplicate field {key!r}")
        fields[key] = value
        keys.append(key)
    if keys[: len(_COMMON_KEYS)] != list(_COMMON_KEYS):
        raise CertificateError(f"fields out of order or missing: {keys}")
    mode = fields["mode"]
    if mode == "family":
        expected = list(_COMMON_KEYS) + ["k", "seed_word"]
    elif mode == "random":
        expected = list(_COMMON_KEYS) + ["rng_seed"]
    else:
        raise CertificateError(f"unknown mode {mode!r}")
    if keys != expected:
        raise CertificateError(f"expected fields {expected}, got {keys}")
    return KnotCertificate(
        n=_parse_int("n", fields["n"]),
        word=fields["word"],
        floor=_parse_int("floor", fields["floor"]),
        periodic=_parse_bool("periodic", fields["periodic"]),
        verdict=fields["verdict"],
        exponent_sum=_parse_int("exponent_sum", fields["exponent_sum"]),
        cycle_count=_parse_int("cycle_count", fields["cycle_count"]),
        mode=mode,
        k=_parse_int("k", fields["k"]) if mode == "family" else None,
        seed_word=fields.get("seed_word"),
        rng_seed=_parse_int("rng_seed", fields["rng_seed"]) if mode == "random" else None,
    )


def recheck_certificate(cert: KnotCertificate, max_steps: int = DEFAULT_MAX_STEPS) -> None:
    """Recompute every derived field from the stored word and compare.

    Raises :class:`CertificateError` on the first mismatch.
    """
    braid = cert.braid()
    checks = [
        ("exponent_sum", cert.exponent_sum, exponent_sum(braid)),
        ("cycle_count", cert.cycle_count, closure_component_count(braid)),
        ("floor", cert.floor, dehornoy_floor(braid, max_steps).value),
        ("periodic", cert.periodic, is_periodic(braid, max_steps).periodic),
        ("verdict", cert.verdict, classify_closure(braid, max_steps).kind.value),
    ]
    for name, recorded, recomputed in checks:
        if recorded != recomputed:
            raise CertificateError(
                f"{name} mismatch: record says {recorded}, word gives {recomputed}"
            )


def write_certificates(certificates: Iterable[KnotCertificate], stream: IO[str]) -> int:
    """Write one record per line; returns the number of records written."""
    written = 0
    for index, cert in enumerate(certificates):
        try:
            stream.write(cert.to_line() + "\n")
        except OSError as exc:
            raise CertificateError(f"writing record {index} failed: {exc}") from exc
        written += 1
    return written


def read_certificates(
    stream: IO[str], verify: bool = False, max_steps: int = DEFAULT_MAX_STEPS
) -> list[KnotCertificate]:
    """Parse and validate a certificate stream.

    Every record's structural invariants are rechecked; with ``verify`` the
    floor, periodicity, and verdict are recomputed from the word as well.
    Errors carry the 1-based line number.
    """
    certificates = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        try:
            if not line:
                raise CertificateError("blank line")
            cert = certificate_from_line(line)
            cert.validate()
            if verify:
                recheck_certificate(cert, max_steps)
        except CertificateError as exc:
            raise CertificateError(f"line {lineno}: {exc}") from None
        certificates.append(cert)
    return certificates

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Mapping

import yaml

from verbalizer.errors import ConfigError, TermError
from verbalizer.lexicon.features import Tense
from verbalizer.rdf.terms import DBO_NS, DBR_NS, DT_NS, OWL_NS, RDF_NS, RDFS_NS, XSD_NS, Iri

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = Path(__file__).resolve().parent / "data"
ENDPOINT_ENV = "VERBALIZER_ENDPOINT"

MODES = ("summary", "sentence", "baseline")
FORMATS = ("text", "json")

DEFAULT_PREFIXES = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
    "dbo": DBO_NS,
    "dbr": DBR_NS,
    "dt": DT_NS,
}

_SCALAR_TYPES: dict[str, tuple[type, ...]] = {
    "endpoint": (str, type(None)),
    "timeout": (int, float),
    "retries": (int,),
    "page_size": (int,),
    "label_language": (str,),
    "class_namespace": (str, type(None)),
    "top_k": (int,),
    "mode": (str,),
    "format": (str,),
    "max_per_sentence": (int,),
    "balance_remainder": (bool,),
    "copula_past": (str,),
    "similarity_threshold": (int, float),
    "damping": (int, float),
    "epsilon": (int, float),
    "max_iter": (int,),
    "parallelism": (int,),
}


@dataclass(frozen=True)
class LexiconPaths:
    entries: Path = DATA_DIR / "lexicon.tsv"
    masculine_names: Path = DATA_DIR / "names_masculine.txt"
    feminine_names: Path = DATA_DIR / "names_feminine.txt"
    datatypes: Path = DATA_DIR / "datatypes.tsv"


@dataclass(frozen=True)
class PipelineConfig:
    """Every knob of the pipeline.

    :meth:`load` reads ``settings.json`` from the project root (or any JSON or
    YAML file given), expands prefixed names and resolves relative paths
    against the file's directory.
    """

    endpoint: str | None = None
    input: Path | None = None
    timeout: float = 30.0
    retries: int = 3
    page_size: int = 10000
    label_language: str = "pt"
    class_namespace: str | None = None
    top_k: int = 7
    mode: str = "summary"
    format: str = "text"
    max_per_sentence: int = 3
    balance_remainder: bool = False
    connectives: tuple[str, ...] = ("Além disso",)
    copula_past: str = "preterite"
    tense_overrides: Mapping[Iri, Tense] = field(default_factory=lambda: {Iri(DBO_NS + "knownFor"): Tense.PRESENT})
    ending_predicates: frozenset[Iri] = frozenset(
        {Iri(DBO_NS + "deathDate"), Iri(DBO_NS + "deathPlace"), Iri(DBO_NS + "dissolutionDate")}
    )
    person_classes: frozenset[Iri] = frozenset({Iri(DBO_NS + "Person")})
    determiner_classes: frozenset[Iri] = frozenset(
        {Iri(DBO_NS + "PopulatedPlace"), Iri(DBO_NS + "University"), Iri(DBO_NS + "Award")}
    )
    excluded_predicates: frozenset[Iri] = frozenset(
        {Iri(RDFS_NS + "label"), Iri(RDFS_NS + "comment"), Iri(OWL_NS + "sameAs")}
    )
    similarity_threshold: float = 0.8
    damping: float = 0.85
    epsilon: float = 1e-8
    max_iter: int = 100
    parallelism: int = 4
    prefixes: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES))
    lexicon: LexiconPaths = field(default_factory=LexiconPaths)
    templates: Path = DATA_DIR / "templates.tsv"
    ranking_cache: Path | None = None

    # ------------------------------------------------------------------
    # Loading
    # ------------------------------------------------------------------
    @classmethod
    def load(cls, path: str | Path | None = None) -> "PipelineConfig":
        if path is None:
            path = PROJECT_ROOT / "settings.json"
            if not path.exists():
                logger.info("No settings.json found; using built-in defaults")
                return cls().with_env()
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"Configuration file '{path}' not found")
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except yaml.YAMLError as exc:
            raise ConfigError(f"Cannot parse configuration file '{path}': {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"Configuration file '{path}' must hold a mapping")
        config = cls.from_mapping(data, base_dir=path.resolve().parent).with_env()
        logger.info("Loaded configuration from %s", path)
        return config

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any], base_dir: Path | None = None) -> "PipelineConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(unknown)}")
        base_dir = base_dir or Path.cwd()
        prefixes = {**DEFAULT_PREFIXES, **_checked("prefixes", data.get("prefixes") or {}, dict)}

        def iri(value: str) -> Iri:
            return expand(_checked("IRI", value, str), prefixes)

        def path(key: str, value: str | None) -> Path | None:
            if value is None:
                return None
            p = Path(_checked(key, value, str)).expanduser()
            return p if p.is_absolute() else base_dir / p

        values: dict[str, Any] = {"prefixes": prefixes}
        for key, value in data.items():
            if key == "prefixes":
                continue
            if key in ("ending_predicates", "person_classes", "determiner_classes", "excluded_predicates"):
                values[key] = frozenset(iri(v) for v in _checked(key, value or [], list))
            elif key == "tense_overrides":
                try:
                    values[key] = {iri(k): Tense(v) for k, v in _checked(key, value or {}, dict).items()}
                except ValueError as exc:
                    raise ConfigError(f"Invalid tense override: {exc}") from exc
            elif key == "connectives":
                values[key] = tuple(_checked(key, v, str) for v in _checked(key, value or [], list))
            elif key in ("input", "templates", "ranking_cache"):
                values[key] = path(key, value)
            elif key == "lexicon":
                lexicon = _checked(key, value or {}, dict)
                stray = sorted(set(lexicon) - {f.name for f in fields(LexiconPaths)})
                if stray:
                    raise ConfigError(f"Unknown lexicon keys: {', '.join(stray)}")
                values[key] = replace(LexiconPaths(), **{k: path(f"lexicon.{k}", v) for k, v in lexicon.items()})
            elif key == "class_namespace" and isinstance(value, str) and ":" in value and not value.startswith("http"):
                values[key] = expand(_checked(key, value, str), prefixes).value
            else:
                values[key] = _checked(key, value, *_SCALAR_TYPES[key])
        try:
            return cls(**values)
        except TypeError as exc:
            raise ConfigError(f"Invalid configuration: {exc}") from exc

    def with_env(self) -> "PipelineConfig":
        endpoint = os.environ.get(ENDPOINT_ENV)
        if endpoint:
            logger.info("Endpoint overridden by %s", ENDPOINT_ENV)
            return replace(self, endpoint=endpoint)
        return self

    def override(self, **values: Any) -> "PipelineConfig":
        """Apply command-line values; ``None`` means "not given"."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------
    def validate(self, require_source: bool = False) -> "PipelineConfig":
        if self.top_k < 1:
            raise ConfigError(f"top_k must be at least 1, got {self.top_k}")
        if self.max_per_sentence < 1:
            raise ConfigError(f"max_per_sentence must be at least 1, got {self.max_per_sentence}")
        if not 0 < self.damping < 1:
            raise ConfigError(f"damping must lie in (0, 1), got {self.damping}")
        if self.epsilon <= 0:
            raise ConfigError(f"epsilon must be positive, got {self.epsilon}")
        if self.parallelism < 1:
            raise ConfigError(f"parallelism must be at least 1, got {self.parallelism}")
        if not self.label_language:
            raise ConfigError("label_language must not be empty")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.copula_past not in ("preterite", "imperfect"):
            raise ConfigError(f"copula_past must be 'preterite' or 'imperfect', got {self.copula_past!r}")
        for name in ("entries", "masculine_names", "feminine_names", "datatypes"):
            p = getattr(self.lexicon, name)
            if p is not None and not Path(p).exists():
                raise ConfigError(f"Lexicon file '{p}' not found")
        if not Path(self.templates).exists():
            raise ConfigError(f"Template file '{self.templates}' not found")
        if require_source:
            if bool(self.endpoint) == bool(self.input):
                raise ConfigError("Exactly one of endpoint and input must be configured")
            if self.input is not None and not Path(self.input).exists():
                raise ConfigError(f"Input file '{self.input}' not found")
        return self


def expand(value: str, prefixes: Mapping[str, str]) -> Iri:
    """``dbo:Person`` -> full IRI; absolute IRIs pass through."""
    value = value.strip()
    if value.startswith("<") and value.endswith(">"):
        value = value[1:-1]
    prefix, sep, local = value.partition(":")
    if sep and prefix in prefixes and not local.startswith("//"):
        value = prefixes[prefix] + local
    try:
        return Iri(value)
    except TermError as exc:
        raise ConfigError(f"Invalid IRI in configuration: {value!r}") from exc


def _checked(key: str, value: Any, *types: type) -> Any:
    # bool is an int subclass; only bool-typed keys take true/false
    if isinstance(value, bool) and bool not in types:
        ok = False
    else:
        ok = isinstance(value, types)
    if not ok:
        expected = " or ".join("null" if t is type(None) else t.__name__ for t in types)
        raise ConfigError(f"Configuration key '{key}' must be {expected}, got {type(value).__name__} {value!r}")
    return value

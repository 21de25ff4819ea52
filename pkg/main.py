import argparse
import asyncio
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from aiorun import run

from verbalizer.config import FORMATS, MODES, PipelineConfig, expand
from verbalizer.errors import ConfigError, EndpointUnreachableError, LexiconError, RdfSyntaxError
from verbalizer.pipeline import Verbalizer

EXIT_OK = 0
EXIT_PARTIAL = 2
EXIT_CONFIG = 3
EXIT_UNREACHABLE = 4

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verbalize", description="Verbalize RDF resources in Brazilian Portuguese")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--endpoint", help="SPARQL endpoint URL")
    source.add_argument("--input", "-i", help="Local N-Triples (.nt) or Turtle file")
    parser.add_argument("--resource", "-r", action="append", required=True, help="Resource IRI (repeatable)")
    parser.add_argument("--mode", "-m", choices=MODES, default=None)
    parser.add_argument("--top-k", "-k", type=int, default=None)
    parser.add_argument("--format", "-f", choices=FORMATS, default=None)
    parser.add_argument("--config", "-c", default=None, help="JSON or YAML settings file")
    parser.add_argument("--timeout", type=float, default=None, help="SPARQL request timeout in seconds")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    return parser


async def run_cli(args: argparse.Namespace) -> int:
    try:
        cfg = PipelineConfig.load(args.config).override(
            mode=args.mode,
            top_k=args.top_k,
            format=args.format,
            timeout=args.timeout,
        )
        # a source given on the command line replaces the configured one
        if args.input:
            cfg = replace(cfg, input=Path(args.input), endpoint=None)
        elif args.endpoint:
            cfg = replace(cfg, endpoint=args.endpoint, input=None)
        cfg.validate(require_source=True)
        resources = [expand(r, cfg.prefixes) for r in args.resource]
        verbalizer = Verbalizer(cfg)
    except (ConfigError, LexiconError, RdfSyntaxError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_CONFIG

    with verbalizer:
        results = await verbalizer.verbalize_batch(resources)

    for result in results:
        for message in result.diagnostics:
            logger.warning("%s: %s", result.resource, message)
        if cfg.format == "json":
            print(json.dumps(result.to_dict(), ensure_ascii=False))
        elif result.ok:
            print(result.text)

    failed = [r for r in results if not r.ok]
    if not failed:
        return EXIT_OK
    if all(isinstance(r.error, EndpointUnreachableError) for r in failed):
        return EXIT_UNREACHABLE
    return EXIT_PARTIAL


def main() -> None:
    args = build_parser().parse_args()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s | %(levelname)8s | %(name)s | %(message)s",
        stream=sys.stderr,
    )
    exit_code = 0

    async def runner() -> None:
        nonlocal exit_code
        exit_code = await run_cli(args)
        asyncio.get_running_loop().stop()

    run(runner(), stop_on_unhandled_errors=True)
    sys.exit(exit_code)


if __name__ == "__main__":
    main()

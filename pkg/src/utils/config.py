import os
import argparse
import logging
from dataclasses import dataclass

from dotenv import load_dotenv


@dataclass(frozen=True)
class OracleLimits:
    """Caps for the exhaustive oracles, passed explicitly into library calls"""
    max_side: int = 60
    chordal_cap: int = 16
    gamma_exhaustive_cap: int = 7


DEFAULT_LIMITS = OracleLimits()

CLASS_CHOICES = ["chain", "conv", "interval_containment", "sr", "gig", "prig", "chain3_brc"]


def _env_int(name, default):
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger("config").warning(f"Ignoring non-integer {name}={value!r}")
        return default


class Config:
    def __init__(self):
        # Load environment variables
        load_dotenv()

        # Default values
        self.oracle_max_side = DEFAULT_LIMITS.max_side
        self.chordal_cap = DEFAULT_LIMITS.chordal_cap
        self.gamma_exhaustive_cap = DEFAULT_LIMITS.gamma_exhaustive_cap
        self.jobs = 1
        self.debug = False
        self.log_level = "ERROR"
        self.log_file = None
        self.command = None
        self.args = None

        # Load from environment
        self._load_from_env()

    def _load_from_env(self):
        """Load configuration from environment variables"""
        self.oracle_max_side = _env_int("ZARANK_ORACLE_MAX_SIDE", self.oracle_max_side)
        self.chordal_cap = _env_int("ZARANK_CHORDAL_CAP", self.chordal_cap)
        self.gamma_exhaustive_cap = _env_int("ZARANK_GAMMA_EXHAUSTIVE_CAP", self.gamma_exhaustive_cap)
        self.jobs = max(1, _env_int("ZARANK_JOBS", self.jobs))

        if os.getenv("LOG_LEVEL"):
            self.log_level = os.getenv("LOG_LEVEL").upper()

        if os.getenv("DEBUG", "").lower() in ("true", "1", "yes"):
            self.debug = True
            self.log_level = "DEBUG"

    @staticmethod
    def build_parser():
        """Build the command line parser"""
        parser = argparse.ArgumentParser(
            prog="zarank",
            description="Zarankiewicz bounds for low Ferrers dimension bipartite graphs",
        )
        parser.add_argument("--debug", action="store_true", help="Enable debug logging")
        parser.add_argument("--log-file", type=str, help="Also write logs to this file")
        parser.add_argument("--oracle-max-side", type=int, help="Cap for exhaustive biclique search")
        sub = parser.add_subparsers(dest="command", required=True)

        gen = sub.add_parser("gen", help="Generate an instance")
        gen.add_argument("family", choices=["ugig", "chain-lb", "random", "grid"])
        gen.add_argument("--class", dest="klass", choices=CLASS_CHOICES, help="Class for random instances")
        gen.add_argument("--t", type=int, help="UGIG parameter")
        gen.add_argument("--m", type=int, help="Number of U vertices")
        gen.add_argument("--n", type=int, help="Number of V vertices")
        gen.add_argument("--k", type=int, help="Biclique size")
        gen.add_argument("--seed", type=int, default=0, help="Random seed")
        gen.add_argument("--duplicate", type=int, help="Duplicate every object for this k")
        gen.add_argument("--out", type=str, help="Output file (default: stdout)")

        certify = sub.add_parser("certify", help="Certify an edge bound or extract a biclique")
        certify.add_argument("instances", nargs="+", help="Instance files")
        certify.add_argument("--k", type=int, required=True)
        certify.add_argument("--out", type=str, help="Certificate file, or directory for several instances")
        certify.add_argument("--jobs", type=int, help="Concurrent workers")

        oracle = sub.add_parser("oracle", help="Run the brute-force oracles")
        oracle.add_argument("instance")
        oracle.add_argument("--k", type=int, required=True)
        oracle.add_argument("--certificate", type=str, help="Check this certificate against the instance")

        convert = sub.add_parser("convert", help="Convert between representation classes")
        convert.add_argument("instances", nargs="+", help="Instance file (two files for chain3/decompose)")
        convert.add_argument("--to", dest="target", required=True,
                             choices=["conv2", "projections", "chain3", "flip", "decompose", "dyadic"])
        convert.add_argument("--out", type=str, required=True, help="Output file; multi-file targets append .<part>.json")

        bounds = sub.add_parser("bounds", help="Print the class bound")
        bounds.add_argument("klass", choices=["chordal", "sr", "chain3", "gig", "chaind"])
        bounds.add_argument("--m", type=int, required=True)
        bounds.add_argument("--n", type=int, required=True)
        bounds.add_argument("--k", type=int, required=True)
        bounds.add_argument("--d", type=int, help="Ferrers dimension for chaind")

        bench = sub.add_parser("bench", help="Time the certifiers on a suite")
        bench.add_argument("suite", nargs="?", default="default", choices=["default", "acceptance"])
        bench.add_argument("--seed", type=int, default=0)
        bench.add_argument("--jobs", type=int, help="Concurrent workers")
        return parser

    def parse_args(self, args=None):
        """Parse command line arguments"""
        parsed_args = self.build_parser().parse_args(args)

        # Override config with command line args
        if parsed_args.debug:
            self.debug = True
            self.log_level = "DEBUG"

        if parsed_args.log_file:
            self.log_file = parsed_args.log_file

        if parsed_args.oracle_max_side:
            self.oracle_max_side = parsed_args.oracle_max_side

        if getattr(parsed_args, "jobs", None):
            self.jobs = max(1, parsed_args.jobs)

        self.command = parsed_args.command
        self.args = parsed_args
        return self

    def limits(self):
        return OracleLimits(
            max_side=self.oracle_max_side,
            chordal_cap=self.chordal_cap,
            gamma_exhaustive_cap=self.gamma_exhaustive_cap,
        )

    def setup_logging(self):
        """Configure logging based on settings"""
        log_level = getattr(logging, self.log_level, logging.ERROR)

        handlers = [logging.StreamHandler()]
        if self.log_file:
            handlers.append(logging.FileHandler(self.log_file))

        logging.basicConfig(
            level=log_level,
            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            handlers=handlers,
            force=True,
        )

        return logging.getLogger("zarank")

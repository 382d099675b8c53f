import os
import time
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .terminal import Colors, kind_color
from ..certify import Biclique, certify, check_certificate, class_bound
from ..construct import (
    chain_lower_bound, complete_grid, duplicate, random_representation, ugig_construction,
)
from ..convert import (
    ConvFactor, assemble_chain3, chain3_projections, conv2_decompose, dyadic_decompose,
    flip_chain_rep, gig_to_conv2, prig_to_conv2,
)
from ..geometry import ClassTag, build_graph
from ..network.protocol import Protocol
from ..oracle import find_biclique
from ..utils.errors import InternalCertificationError, InvalidInputError, ZarankError

logger = logging.getLogger("commands")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BICLIQUE = 2

CERTIFIABLE = [
    ClassTag.CHAIN, ClassTag.CONV, ClassTag.INTERVAL_CONTAINMENT,
    ClassTag.SR, ClassTag.GIG, ClassTag.CHAIN3_BRC,
]


@dataclass
class CertifyResult:
    name: str
    klass: Optional[str] = None
    k: Optional[int] = None
    edges: Optional[int] = None
    kind: str = "error"
    bound: Optional[int] = None
    stage: Optional[int] = None
    millis: Optional[float] = None
    error: Optional[str] = None

    @property
    def exit_code(self):
        if self.kind == "error":
            return EXIT_ERROR
        return EXIT_BICLIQUE if self.kind == "biclique" else EXIT_OK

    def row(self):
        millis = None if self.millis is None else f"{self.millis:.1f}"
        return [self.name, self.klass, self.k, self.edges, self.kind, self.bound, self.stage, millis]


RESULT_HEADERS = ["instance", "class", "k", "edges", "result", "bound", "stage", "ms"]


def _require(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise InvalidInputError(f"{args.command} needs {', '.join(missing)}")


def _combined_exit(results):
    codes = {r.exit_code for r in results}
    if EXIT_ERROR in codes:
        return EXIT_ERROR
    if EXIT_BICLIQUE in codes:
        return EXIT_BICLIQUE
    return EXIT_OK


def _default_labels(rep):
    return tuple(f"u{i}" for i in range(rep.u_count)), tuple(f"v{j}" for j in range(rep.v_count))


class CommandHandler:
    def __init__(self, config, terminal_ui):
        self.config = config
        self.ui = terminal_ui
        self.limits = config.limits()
        self.commands = {
            "gen": self.cmd_gen,
            "certify": self.cmd_certify,
            "oracle": self.cmd_oracle,
            "convert": self.cmd_convert,
            "bounds": self.cmd_bounds,
            "bench": self.cmd_bench,
        }

    def handle_command(self, command, args):
        """Run a subcommand and return its exit code"""
        if command not in self.commands:
            self.ui.print_error(f"Unknown command: {command}")
            return EXIT_ERROR
        try:
            return self.commands[command](args)
        except ZarankError as e:
            logger.error(f"{command} failed: {e}")
            self.ui.print_error(str(e))
            return EXIT_ERROR

    # -- gen --------------------------------------------------------------

    def _generate(self, args):
        family = args.family
        if family == "ugig":
            _require(args, "t")
            return ugig_construction(args.t)
        if family == "chain-lb":
            _require(args, "m", "n", "k")
            return chain_lower_bound(args.m, args.n, args.k)
        if family == "grid":
            _require(args, "m", "n")
            return complete_grid(args.m, args.n)
        _require(args, "klass", "m", "n")
        return random_representation(args.klass, args.m, args.n, args.seed)

    def cmd_gen(self, args):
        """Generate a construction or a seeded random instance"""
        rep = self._generate(args)
        if args.duplicate is not None:
            rep = duplicate(rep, args.duplicate)
        data = Protocol.encode_instance(rep)
        if not args.out:
            self.ui.print_plain(Protocol.canonical_json(data))
            return EXIT_OK
        Protocol.write_json(args.out, data)
        edges = build_graph(rep).edge_count
        self.ui.print_colored(
            f"Wrote {args.out}: {rep.class_tag.value}, {rep.u_count}+{rep.v_count} objects, {edges} edges",
            Colors.GREEN,
        )
        return EXIT_OK

    # -- certify ----------------------------------------------------------

    @staticmethod
    def _certificate_path(instance_path, out, batch):
        stem = os.path.splitext(os.path.basename(instance_path))[0] + ".cert.json"
        if out is None:
            return os.path.join(os.path.dirname(instance_path), stem)
        if batch:
            return os.path.join(out, stem)
        return out

    def _certify_file(self, instance_path, k, out_path):
        result = CertifyResult(os.path.basename(instance_path), k=k)
        try:
            data = Protocol.read_json(instance_path)
            rep = Protocol.decode_instance(data).rep
            g = build_graph(rep)
            result.klass = rep.class_tag.value
            result.edges = g.edge_count

            start = time.perf_counter()
            certificate = certify(rep, k, self.limits)
            result.millis = (time.perf_counter() - start) * 1000
            if not check_certificate(g, certificate):
                raise InternalCertificationError(f"{instance_path}: certificate failed its own check")

            Protocol.write_json(out_path, Protocol.encode_certificate(
                certificate,
                klass=rep.class_tag,
                k=k,
                edges=g.edge_count,
                instance_sha256=Protocol.digest(data),
            ))
            result.kind = certificate.kind
            result.bound = certificate.bound_value
            if isinstance(certificate, Biclique):
                result.stage = certificate.extraction_stage
            logger.info(f"{instance_path}: {certificate.kind}, certificate in {out_path}")
        except ZarankError as e:
            logger.error(f"{instance_path}: {e}")
            result.error = str(e)
        return result

    def cmd_certify(self, args):
        """Certify each instance file; exit 0 within bound, 2 biclique, 1 error"""
        if args.k < 1:
            raise InvalidInputError(f"k must be at least 1, got {args.k}")
        batch = len(args.instances) > 1
        jobs = self.config.jobs
        tasks = [
            (path, args.k, self._certificate_path(path, args.out, batch))
            for path in args.instances
        ]
        if jobs > 1 and batch:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(lambda task: self._certify_file(*task), tasks))
        else:
            results = [self._certify_file(*task) for task in tasks]

        for result in results:
            if result.error:
                self.ui.print_error(f"{result.name}: {result.error}")
        self.ui.print_table(RESULT_HEADERS, [r.row() for r in results], {"result": kind_color})
        return _combined_exit(results)

    # -- oracle -----------------------------------------------------------

    def _check_certificate_file(self, data, g, path):
        certificate, envelope = Protocol.decode_certificate(Protocol.read_json(path))
        problems = []
        if envelope.instance_sha256 and envelope.instance_sha256 != Protocol.digest(data):
            problems.append("instance digest does not match")
        if envelope.edges is not None and envelope.edges != g.edge_count:
            problems.append(f"edge count {envelope.edges} does not match {g.edge_count}")
        if isinstance(certificate, Biclique) and envelope.k is not None and certificate.w.k != envelope.k:
            problems.append(f"witness has size {certificate.w.k}, expected {envelope.k}")
        if not check_certificate(g, certificate):
            problems.append("witness is not a biclique" if isinstance(certificate, Biclique)
                            else "elimination steps do not replay within the bound")
        if problems:
            for problem in problems:
                self.ui.print_error(problem)
            self.ui.print_colored("invalid", Colors.RED)
            return EXIT_ERROR
        self.ui.print_colored(f"valid {certificate.kind}", Colors.GREEN)
        return EXIT_OK

    def cmd_oracle(self, args):
        """Exhaustive biclique search, or verification of a certificate file"""
        data = Protocol.read_json(args.instance)
        rep = Protocol.decode_instance(data).rep
        g = build_graph(rep)
        if args.certificate:
            return self._check_certificate_file(data, g, args.certificate)

        witness = find_biclique(g, args.k, max_side=self.limits.max_side)
        if witness is None:
            self.ui.print_plain("none\n")
            return EXIT_OK
        self.ui.print_plain(f"u={list(witness.u_vertices)} v={list(witness.v_vertices)}\n")
        return EXIT_BICLIQUE

    # -- convert ----------------------------------------------------------

    @staticmethod
    def _part_path(out, part):
        base = out[:-5] if out.endswith(".json") else out
        return f"{base}.{part}.json"

    def _load_factor(self, path):
        loaded = Protocol.load_instance(path)
        u_labels, v_labels = loaded.u_labels, loaded.v_labels
        if u_labels is None or v_labels is None:
            u_labels, v_labels = _default_labels(loaded.rep)
        return ConvFactor(loaded.rep, u_labels, v_labels)

    def _expect_inputs(self, args, count):
        if len(args.instances) != count:
            raise InvalidInputError(f"convert --to {args.target} takes {count} instance file(s)")

    def cmd_convert(self, args):
        """Translate between representation classes"""
        target = args.target
        written = []

        if target in ("conv2", "projections", "flip", "dyadic"):
            self._expect_inputs(args, 1)
            rep = Protocol.load_instance(args.instances[0]).rep

            if target == "conv2":
                if rep.class_tag is ClassTag.PRIG:
                    factors = prig_to_conv2(rep)
                elif rep.class_tag is ClassTag.GIG:
                    factors = gig_to_conv2(rep)
                else:
                    raise InvalidInputError(f"conv2 needs a prig or gig instance, got {rep.class_tag.value}")
                for part, factor in zip(("x", "y"), factors):
                    path = self._part_path(args.out, part)
                    Protocol.save_instance(path, factor.rep, factor.u_labels, factor.v_labels)
                    written.append(path)

            elif target == "projections":
                for part, factor in zip(("x", "y"), chain3_projections(rep)):
                    path = self._part_path(args.out, part)
                    Protocol.save_instance(path, factor)
                    written.append(path)

            elif target == "flip":
                Protocol.save_instance(args.out, flip_chain_rep(rep))
                written.append(args.out)

            else:
                pieces = dyadic_decompose(rep)
                Protocol.write_json(args.out, {
                    "pieces": [
                        {
                            "range": [p.range.lo, p.range.hi],
                            "rays": sorted(p.ray_members),
                            "points": sorted(p.point_members),
                            "edges": sorted([u, v] for u, v in p.graph.edges),
                        }
                        for p in pieces
                    ]
                })
                written.append(args.out)
                self.ui.print_table(
                    ["range", "rays", "points", "edges"],
                    [[str(p.range), len(p.ray_members), len(p.point_members), p.graph.edge_count] for p in pieces],
                )

        elif target == "chain3":
            self._expect_inputs(args, 2)
            x_rep = Protocol.load_instance(args.instances[0]).rep
            y_rep = Protocol.load_instance(args.instances[1]).rep
            Protocol.save_instance(args.out, assemble_chain3(x_rep, y_rep))
            written.append(args.out)

        else:
            self._expect_inputs(args, 2)
            split = conv2_decompose(self._load_factor(args.instances[0]), self._load_factor(args.instances[1]))
            path = self._part_path(args.out, "prig")
            Protocol.save_instance(path, split.prig, split.prig_u_labels, split.prig_v_labels)
            written.append(path)
            path = self._part_path(args.out, "gig")
            Protocol.save_instance(path, split.gig, split.gig_u_labels, split.gig_v_labels)
            written.append(path)

        for path in written:
            self.ui.print_colored(f"Wrote {path}", Colors.GREEN)
        return EXIT_OK

    # -- bounds -----------------------------------------------------------

    def cmd_bounds(self, args):
        """Print the edge bound of a class"""
        bound = class_bound(args.klass, args.m, args.n, args.k, args.d)
        self.ui.print_table(
            ["class", "m", "n", "k", "d", "bound"],
            [[args.klass, args.m, args.n, args.k, args.d, bound]],
        )
        return EXIT_OK

    # -- bench ------------------------------------------------------------

    @staticmethod
    def bench_suite(suite, seed):
        """(name, representation, k) triples of a benchmark suite"""
        cases = []
        if suite == "default":
            for tag in CERTIFIABLE:
                for k in (2, 3):
                    rep = random_representation(tag, 40, 40, seed)
                    cases.append((f"{tag.value}-40", rep, k))
            return cases
        for t in range(1, 9):
            cases.append((f"ugig-t{t}", ugig_construction(t), 2))
        for size in (5, 10, 20):
            for k in (2, 3, 4):
                cases.append((f"chain-lb-{size}-k{k}", chain_lower_bound(size, size, k), k))
        for t in (1, 2):
            for k in (3, 4):
                cases.append((f"ugig-t{t}-x{k - 1}", duplicate(ugig_construction(t), k), k))
        return cases

    def _bench_case(self, case):
        name, rep, k = case
        result = CertifyResult(name, klass=rep.class_tag.value, k=k)
        try:
            result.edges = build_graph(rep).edge_count
            start = time.perf_counter()
            certificate = certify(rep, k, self.limits)
            result.millis = (time.perf_counter() - start) * 1000
            result.kind = certificate.kind
            result.bound = certificate.bound_value
            if isinstance(certificate, Biclique):
                result.stage = certificate.extraction_stage
        except ZarankError as e:
            logger.error(f"bench {name}: {e}")
            result.error = str(e)
        return result

    def cmd_bench(self, args):
        """Time the certifiers over a suite and report extraction stages"""
        cases = self.bench_suite(args.suite, args.seed)
        jobs = self.config.jobs
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(self._bench_case, cases))
        else:
            results = [self._bench_case(case) for case in cases]
        self.ui.print_table(RESULT_HEADERS, [r.row() for r in results], {"result": kind_color})
        return EXIT_ERROR if any(r.kind == "error" for r in results) else EXIT_OK

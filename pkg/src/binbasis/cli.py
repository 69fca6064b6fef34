"""Command-line driver: construct bases, inspect trees, verify, count, bound.

Subcommands: construct (print a basis), trees (list or validate tree
strategies), verify (dense-oracle equivalence for every ell, small n),
counts (operation-count CSV over an ell range), bounds (compare counts
against the closed forms).  All failures exit nonzero with a single
ERROR: line on stderr.
"""

import argparse
import random
import sys
from dataclasses import dataclass

from binbasis.basisgen import (
    basis_from_string,
    construct_cantor,
    construct_gen_cantor,
    construct_tower_basis,
    is_independent,
    random_basis,
    subfield_basis_powers,
    tower_from_string,
)
from binbasis.field import Field, element_to_hex, get_field
from binbasis.oracle import bound, oracle_convert
from binbasis.precomp import build_tables, initial_phi_vector
from binbasis.redtree import (
    ReductionTree,
    build_balanced_tree,
    build_cantor_tree,
    build_max_tree,
    build_trivial,
    graft_cantor_tree,
    validate,
)
from binbasis.transforms import (
    BASIS_KINDS,
    CoeffBuffer,
    CountModel,
    convert,
    l2x,
    m2x,
    n2x,
    x2l,
    x2m,
    x2n,
)

TRANSFORMS = ("n2x", "x2n", "l2x", "x2l", "x2m", "m2x")

ADD_BOUNDS = {"n2x": "newton_add", "x2n": "newton_add", "l2x": "l2x_add",
              "x2l": "x2l_add", "x2m": "monomial_add", "m2x": "monomial_add"}
MUL_BOUNDS = {"n2x": "newton_mul", "x2n": "newton_mul", "l2x": "l2x_mul",
              "x2l": "x2l_mul", "x2m": "monomial_mul", "m2x": "monomial_mul"}

STRATEGY_FORMS = ("trivial", "cantor", "max:<tower>", "balanced:<tower>",
                  "graft:<t>", "explicit:<serialized>")


class CliError(Exception):
    """Any configuration or runtime failure; rendered as one ERROR line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


@dataclass(frozen=True)
class RunConfig:
    """One fully resolved invocation; round-trips through its string form."""

    field_spec: str
    basis: str
    tree: str
    n: int
    transform: str
    ell_lo: int
    ell_hi: int
    lam: str
    c: int
    b: int
    calc: bool
    out: str

    def to_string(self):
        dash = lambda v: "-" if v is None else v
        return " ".join((
            f"field={self.field_spec}",
            f"basis={self.basis}",
            f"tree={self.tree}",
            f"n={self.n}",
            f"transform={self.transform}",
            f"ell={self.ell_lo}:{self.ell_hi}",
            f"lam={self.lam}",
            f"c={dash(self.c)}",
            f"b={dash(self.b)}",
            f"calc={int(self.calc)}",
            f"out={dash(self.out)}",
        ))

    @classmethod
    def from_string(cls, text):
        vals = {}
        for token in text.split():
            key, sep, value = token.partition("=")
            if not sep:
                raise CliError(f"bad config token {token!r}")
            vals[key] = value
        try:
            lo, hi = vals["ell"].split(":")
            undash = lambda v: None if v == "-" else v
            return cls(
                field_spec=vals["field"],
                basis=vals["basis"],
                tree=vals["tree"],
                n=int(vals["n"]),
                transform=vals["transform"],
                ell_lo=int(lo),
                ell_hi=int(hi),
                lam=vals["lam"],
                c=None if vals["c"] == "-" else int(vals["c"]),
                b=None if vals["b"] == "-" else int(vals["b"]),
                calc=bool(int(vals["calc"])),
                out=undash(vals["out"]),
            )
        except (KeyError, ValueError) as exc:
            raise CliError(f"bad config string: {exc}")


def resolve_field(spec):
    try:
        if ":" in spec:
            return Field.from_spec(spec)
        return get_field(int(spec))
    except ValueError as exc:
        raise CliError(str(exc))


def build_basis(field, source, n):
    if source == "cantor":
        return construct_cantor(field, n)
    if source.startswith("gencantor:"):
        t = int(source.split(":", 1)[1])
        m_levels = max(((n - 1) // t).bit_length(), 1)
        theta = subfield_basis_powers(field, 1, t)
        return construct_gen_cantor(field, m_levels, t, theta)[:n]
    if source.startswith("tower:"):
        tower = tower_from_string(field, source.split(":", 1)[1])
        return construct_tower_basis(field, tower, n)
    if source.startswith("random:"):
        seed = int(source.split(":", 1)[1])
        return random_basis(field, n, random.Random(seed))
    if source.startswith("explicit:"):
        beta = basis_from_string(source.split(":", 1)[1])
        if len(beta) != n:
            raise CliError(f"explicit basis has {len(beta)} entries, expected {n}")
        if not is_independent(beta):
            raise CliError("explicit basis entries are dependent")
        return beta
    raise CliError(f"unknown basis source {source!r}")


def _strategy_degrees(text):
    return set(int(token.rstrip("!")) for token in text.split("-"))


def build_tree(strategy, n):
    if strategy == "trivial":
        return build_trivial(n)
    if strategy == "cantor":
        return build_cantor_tree(n)
    if strategy.startswith("max:"):
        return build_max_tree(n, _strategy_degrees(strategy.split(":", 1)[1]))
    if strategy.startswith("balanced:"):
        return build_balanced_tree(n, _strategy_degrees(strategy.split(":", 1)[1]))
    if strategy.startswith("graft:"):
        t = int(strategy.split(":", 1)[1])
        blocks = -(-n // t)
        base = [build_trivial(min(t, n - i * t)) for i in range(blocks)]
        return graft_cantor_tree(t, n, base)
    if strategy.startswith("explicit:"):
        return ReductionTree.parse(strategy.split(":", 1)[1])
    raise CliError(f"unknown tree strategy {strategy!r}")


def config_from_args(args):
    field = resolve_field(args.field)
    n = args.n
    if not 1 <= n <= field.degree:
        raise CliError(f"dimension {n} out of range for GF(2^{field.degree})")
    size = 1 << n
    ell_text = getattr(args, "ell", None) or f"1:{size}"
    try:
        lo, _, hi = ell_text.partition(":")
        ell_lo, ell_hi = int(lo), int(hi) if hi else int(lo)
    except ValueError:
        raise CliError(f"bad ell range {ell_text!r}; expected 'lo:hi'")
    if not 1 <= ell_lo <= ell_hi <= size:
        raise CliError(f"ell range {ell_lo}:{ell_hi} out of 1..{size}")
    try:
        lam = int(getattr(args, "lam", "0"), 16)
    except ValueError:
        raise CliError(f"bad lambda {args.lam!r}; expected hex")
    if not 0 <= lam < field.order:
        raise CliError("lambda outside the field")
    transform = getattr(args, "transform", "n2x")
    if transform not in TRANSFORMS and not _convert_kinds(transform):
        raise CliError(f"unknown transform {transform!r}")
    return RunConfig(
        field_spec=field.spec_string(),
        basis=args.basis,
        tree=getattr(args, "tree", "trivial"),
        n=n,
        transform=transform,
        ell_lo=ell_lo,
        ell_hi=ell_hi,
        lam=f"{lam:x}",
        c=getattr(args, "c", None),
        b=getattr(args, "b", None),
        calc=bool(getattr(args, "calc", False)),
        out=getattr(args, "out", None),
    )


def _convert_kinds(transform):
    if not transform.startswith("convert:"):
        return None
    pair = transform.split(":", 1)[1].split("-")
    if len(pair) == 2 and all(kind in BASIS_KINDS for kind in pair):
        return tuple(pair)
    return None


def materialize(cfg):
    field = resolve_field(cfg.field_spec)
    try:
        beta = build_basis(field, cfg.basis, cfg.n)
        tree = build_tree(cfg.tree, cfg.n)
        table = build_tables(field, tree, beta)
    except ValueError as exc:
        raise CliError(str(exc))
    return field, beta, tree, table


def emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _mixed_params(cfg, ell, size):
    c = cfg.c if cfg.c is not None else ell
    b = cfg.b if cfg.b is not None else 0
    if cfg.transform == "l2x":
        if not 0 <= c <= ell:
            raise CliError(f"l2x requires c <= ell; got c={c} at ell={ell}")
        if b not in (0, 1) or not 1 <= b + c <= size:
            raise CliError(f"l2x requires 1 <= b+c <= {size}; got b={b} c={c}")
    else:
        if not 1 <= c <= size:
            raise CliError(f"x2l requires 1 <= c <= {size}; got c={c}")
    return c, b


def measure(cfg, table, model, phi, rng, ell):
    """One (transform, ell) measurement: (adds, muls, twists)."""
    field = table.field
    size = 1 << cfg.n
    kinds = _convert_kinds(cfg.transform)
    if kinds:
        if model is not None:
            return model.convert(kinds[0], kinds[1], ell)
        coeffs = [rng.randrange(field.order) for _ in range(ell)]
        _, ctr = convert(field, kinds[0], kinds[1], table.beta, table.tree,
                         int(cfg.lam, 16), ell, coeffs, table)
        return ctr.totals()
    if cfg.transform in ("l2x", "x2l"):
        c, b = _mixed_params(cfg, ell, size)
        if model is not None:
            pair = model.l2x(0, c, ell, b) if cfg.transform == "l2x" \
                else model.x2l(0, c, ell)
            return pair + (0,)
        buf = CoeffBuffer([rng.randrange(field.order) for _ in range(ell)]
                          + [0] * (size - ell))
        if cfg.transform == "l2x":
            l2x(0, phi, c, ell, b, buf.view(), table)
        else:
            x2l(0, phi, c, ell, buf.view(), table)
        return buf.counter.totals()
    if model is not None:
        pair = model.nx(0, ell) if cfg.transform in ("n2x", "x2n") \
            else model.xm(0, ell)
        return pair + (0,)
    buf = CoeffBuffer([rng.randrange(field.order) for _ in range(ell)])
    fn = {"n2x": n2x, "x2n": x2n}.get(cfg.transform)
    if fn is not None:
        fn(0, phi, ell, buf.view(), table)
    else:
        (x2m if cfg.transform == "x2m" else m2x)(0, ell, buf.view(), table)
    return buf.counter.totals()


def cmd_construct(args):
    cfg = config_from_args(args)
    field = resolve_field(cfg.field_spec)
    try:
        beta = build_basis(field, cfg.basis, cfg.n)
    except ValueError as exc:
        raise CliError(str(exc))
    emit([element_to_hex(b) for b in beta], cfg.out)
    return 0


def cmd_trees(args):
    if args.strategy is None:
        emit(list(STRATEGY_FORMS), args.out)
        return 0
    if args.field is None or args.n is None:
        raise CliError("validating a strategy requires --field and --n")
    cfg = config_from_args(args)
    field = resolve_field(cfg.field_spec)
    try:
        beta = build_basis(field, cfg.basis, cfg.n)
        tree = build_tree(args.strategy, cfg.n)
        ok = validate(field, tree, beta)
    except ValueError as exc:
        raise CliError(str(exc))
    degrees = ",".join(str(d) for d in sorted(tree.degree_image()))
    emit([tree.serialize(), f"degrees: {degrees}", "valid" if ok else "invalid"],
         cfg.out)
    return 0 if ok else 1


def cmd_verify(args):
    cfg = config_from_args(args)
    if cfg.n > 6:
        raise CliError("verify is capped at n = 6 (dense oracle cost)")
    field = resolve_field(cfg.field_spec)
    try:
        beta = build_basis(field, cfg.basis, cfg.n)
        tree = build_tree(cfg.tree, cfg.n)
    except ValueError as exc:
        raise CliError(str(exc))
    lines = [f"# config: {cfg.to_string()}"]
    if not validate(field, tree, beta):
        lines.append("FAIL validate tree incompatible with basis")
        emit(lines, cfg.out)
        return 1
    table = build_tables(field, tree, beta)
    size = 1 << cfg.n
    lam_values = [0]
    lam_cfg = int(cfg.lam, 16)
    lam_values.append(lam_cfg if lam_cfg
                      else random.Random(1).randrange(1, field.order))
    rng = random.Random(2)
    failures = 0
    checks = (
        ("n2x", "newton", "lch"),
        ("x2n", "lch", "newton"),
        ("l2x", "lagrange", "lch"),
        ("x2l", "lch", "lagrange"),
        ("x2m", "lch_twisted", "monomial"),
        ("m2x", "monomial", "lch_twisted"),
    )
    for lam in lam_values:
        phi = initial_phi_vector(field, tree, table.bases, lam)
        for ell in range(1, size + 1):
            for name, kind_from, kind_to in checks:
                data = [rng.randrange(field.order) for _ in range(ell)]
                if name in ("l2x", "x2l"):
                    buf = CoeffBuffer(data + [0] * (size - ell))
                    if name == "l2x":
                        l2x(0, phi, ell, ell, 0, buf.view(), table)
                    else:
                        x2l(0, phi, ell, ell, buf.view(), table)
                    got = buf.data[:ell]
                else:
                    buf = CoeffBuffer(data)
                    if name in ("n2x", "x2n"):
                        (n2x if name == "n2x" else x2n)(
                            0, phi, ell, buf.view(), table)
                    else:
                        (x2m if name == "x2m" else m2x)(
                            0, ell, buf.view(), table)
                    got = buf.data
                want = oracle_convert(field, kind_from, kind_to, beta,
                                      lam, ell, data)
                ok = got == want
                failures += not ok
                lines.append(
                    f"{'PASS' if ok else 'FAIL'} {name} ell={ell} lam={lam:x}")
    lines.append(f"verify: {len(lines) - 1} checks, {failures} failures")
    emit(lines, cfg.out)
    return 0 if failures == 0 else 1


def cmd_counts(args):
    cfg = config_from_args(args)
    _, _, tree, table = materialize(cfg)
    model = CountModel(table) if cfg.calc else None
    rng = random.Random(0)
    phi = None
    if not cfg.calc:
        phi = initial_phi_vector(table.field, tree, table.bases,
                                 int(cfg.lam, 16))
    header = "ell,additions,multiplications"
    if _convert_kinds(cfg.transform):
        header += ",twist_multiplications"
    lines = [f"# config: {cfg.to_string()}", header]
    for ell in range(cfg.ell_lo, cfg.ell_hi + 1):
        adds, muls, twists = measure(cfg, table, model, phi, rng, ell)
        row = f"{ell},{adds},{muls}"
        if _convert_kinds(cfg.transform):
            row += f",{twists}"
        lines.append(row)
    emit(lines, cfg.out)
    return 0


def cmd_bounds(args):
    cfg = config_from_args(args)
    if _convert_kinds(cfg.transform):
        raise CliError("bounds supports the raw transforms only")
    _, _, tree, table = materialize(cfg)
    model = CountModel(table) if cfg.calc else None
    rng = random.Random(0)
    phi = None
    if not cfg.calc:
        phi = initial_phi_vector(table.field, tree, table.bases,
                                 int(cfg.lam, 16))
    add_id = args.bound_add or ADD_BOUNDS[cfg.transform]
    mul_id = args.bound_mul or MUL_BOUNDS[cfg.transform]
    size = 1 << cfg.n
    worst = None
    for ell in range(cfg.ell_lo, cfg.ell_hi + 1):
        adds, muls, _ = measure(cfg, table, model, phi, rng, ell)
        if cfg.transform in ("l2x", "x2l"):
            c, b = _mixed_params(cfg, ell, size)
        else:
            c, b = ell, 0
        for column, count, formula_id in (("additions", adds, add_id),
                                          ("multiplications", muls, mul_id)):
            params = {"ell": ell}
            if formula_id.startswith("l2x"):
                params.update(c=c, b=b, n=cfg.n)
            elif formula_id.startswith("x2l"):
                params.update(c=c, n=cfg.n)
            try:
                limit = bound(formula_id, **params)
            except ValueError as exc:
                raise CliError(str(exc))
            if count > limit:
                raise CliError(
                    f"{cfg.transform} {column} exceed {formula_id} at "
                    f"ell={ell}: {count} > {limit}")
            slack = limit - count
            if worst is None or slack < worst[0]:
                worst = (slack, column, ell)
    emit([f"# config: {cfg.to_string()}",
          f"worst slack {worst[0]} for {worst[1]} at ell={worst[2]}"],
         cfg.out)
    return 0


def build_parser():
    parser = _Parser(prog="binbasis",
                     description="Polynomial basis conversions over GF(2^m) "
                                 "with exact operation counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, tree=True):
        sp.add_argument("--field", required=True,
                        help="field degree m, or spec m:0x<modulus-hex>")
        sp.add_argument("--basis", default="cantor",
                        help="cantor | gencantor:<t> | tower:<spec> | "
                             "random:<seed> | explicit:<hex,...>")
        sp.add_argument("--n", type=int, required=True, help="basis dimension")
        if tree:
            sp.add_argument("--tree", default="trivial",
                            help="trivial | cantor | max:<tower> | "
                                 "balanced:<tower> | graft:<t> | "
                                 "explicit:<serialized>")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("construct", help="print the configured basis")
    common(sp, tree=False)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("trees", help="list strategies, or validate one")
    sp.add_argument("--strategy", default=None)
    sp.add_argument("--field", default=None)
    sp.add_argument("--basis", default="cantor")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_trees)

    sp = sub.add_parser("verify", help="dense-oracle equivalence, n <= 6")
    common(sp)
    sp.add_argument("--lam", default="0", help="shift, lowercase hex")
    sp.set_defaults(func=cmd_verify)

    for name, func in (("counts", cmd_counts), ("bounds", cmd_bounds)):
        sp = sub.add_parser(name, help=f"operation-count {name} over an ell range")
        common(sp)
        sp.add_argument("--transform", default="n2x",
                        help="n2x | x2n | l2x | x2l | x2m | m2x | "
                             "convert:<from>-<to>")
        sp.add_argument("--ell", default=None, help="range lo:hi (default full)")
        sp.add_argument("--lam", default="0", help="shift, lowercase hex")
        sp.add_argument("--c", type=int, default=None,
                        help="fixed value count for l2x/x2l")
        sp.add_argument("--b", type=int, default=None,
                        help="extra-evaluation flag for l2x")
        sp.add_argument("--calc", action="store_true",
                        help="replay counts from the model instead of executing")
        if name == "bounds":
            sp.add_argument("--bound-add", default=None, dest="bound_add",
                            help="override the additions bound id")
            sp.add_argument("--bound-mul", default=None, dest="bound_mul",
                            help="override the multiplications bound id")
        sp.set_defaults(func=func)

    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

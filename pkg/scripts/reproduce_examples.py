"""Print the worked examples: BR minima, d_lambda, correctable profiles and decoding."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from subfield_codes import CodeFile
from subfield_codes.codes import br_distribution, restriction_to_subfield, trace_symplectic_dual
from subfield_codes.decoding import correctable_br_profiles, decode_nearest
from subfield_codes.enumerator import enumerator_from_code, macwilliams_transform
from subfield_codes.gf import format_vector, parse_vector

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@dataclass
class Config:
    fixtures: Path = FIXTURES
    lambdas: tuple = (Fraction(1), Fraction(2), Fraction(3))
    received: str = "0 1 1"


def show_minima(name: str, code, lambdas) -> None:
    ds = br_distribution(code)
    print(f"{name}: n={code.n}, |C|={code.size}, minima={sorted(map(tuple, ds.minima))}")
    for lam in lambdas:
        print(f"  lambda={lam}: d={ds.min_lambda(lam)}, "
              f"profiles={correctable_br_profiles(ds, lam, code.n)}")


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixtures", type=Path, default=Config.fixtures)
    cfg = Config(fixtures=ap.parse_args(argv).fixtures)

    ex1 = CodeFile.read(cfg.fixtures / "example1.code").code()
    show_minima("example1", ex1, cfg.lambdas)

    ex2 = CodeFile.read(cfg.fixtures / "example2.code").code()
    show_minima("example2", ex2, cfg.lambdas)
    word = parse_vector(cfg.received, ex2.spec)
    for lam in (Fraction(2), Fraction(1)):
        r = decode_nearest(ex2, word, lam)
        print(f"  decode {cfg.received!r} at lambda={lam}: "
              f"{format_vector(r.codeword, ex2.spec)} (distance {r.distance}, ties {r.ties})")

    cyc = CodeFile.read(cfg.fixtures / "gf2_17.code").code()
    show_minima("gf2_17", cyc, cfg.lambdas)
    res = restriction_to_subfield(cyc)
    print(f"  subfield restriction: dim {res.dimension}, min distance {res.min_hamming}")

    mds = CodeFile.read(cfg.fixtures / "mds16.code").code()
    dual = trace_symplectic_dual(mds)
    w = macwilliams_transform(enumerator_from_code(dual), dual.size, mds.spec.q)
    print(f"mds16 via its dual: minima={sorted(map(tuple, w.minimal_br()))}")


if __name__ == "__main__":
    main()

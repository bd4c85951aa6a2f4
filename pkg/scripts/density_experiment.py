"""Monte Carlo runs: random codes against the GV guarantee, MlambdaD density, channel decoding."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from subfield_codes import CodeFile
from subfield_codes.bounds import field_for, gv_random_experiment
from subfield_codes.codes import mrd_density_experiment
from subfield_codes.decoding import ChannelSpec, simulate_channel

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@dataclass
class Config:
    seed: int = 20240601
    gv_trials: int = 2000
    density_trials: int = 500
    channel_trials: int = 20000
    p_base: float = 0.05
    p_roof: float = 0.01


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, val in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = Config(**vars(ap.parse_args(argv)))

    gv = gv_random_experiment(2, 2, 2, 6, 3, eps=0.35, trials=cfg.gv_trials, seed=cfg.seed)
    print(f"GV: k={gv.k}, observed {gv.observed_fraction:.4f} "
          f"[{gv.ci_low:.4f}, {gv.ci_high:.4f}] vs lower bound {gv.lower_bound:.4f}")

    spec = field_for(2, 4)
    for k in (1, 2, 3):
        for lam in (Fraction(1), Fraction(2)):
            res = mrd_density_experiment(spec, 4, k, lam, cfg.density_trials, cfg.seed)
            print(f"MlambdaD density n=4 k={k} lambda={lam}: {res.fraction:.4f}")

    code = CodeFile.read(FIXTURES / "example2.code").code()
    channel = ChannelSpec(cfg.p_base, cfg.p_roof, cfg.seed)
    for lam in (Fraction(1), Fraction(2)):
        r = simulate_channel(code, lam, channel, cfg.channel_trials)
        print(f"channel lambda={lam}: WER {r.word_error_rate:.4f} "
              f"[{r.ci_low:.4f}, {r.ci_high:.4f}], ties {r.ties}")


if __name__ == "__main__":
    main()

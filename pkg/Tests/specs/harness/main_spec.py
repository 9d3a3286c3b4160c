import os
import argparse
import tempfile

import pandas as pd
from mamba import description, context, it, before, after
from expects import expect, equal, raise_error, have_length

from main import main, resolveOptions, loadConfig, buildParser
from Tools.Exceptions import ConfigurationError

SMALL_SCENARIO = """
logLevel: 0
architecture: DisjointRan
ue:
  count: 1
  jobRate: 20.0
  backgroundRate: 0.0
uplink:
  mode: ExponentialJob
compute:
  service: ExponentialJob
simulation:
  horizon: 10.0
  replications: 2
"""

with description('main') as self:
    with before.each:
        self.directory = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.directory.name, "out.csv")

    with after.each:
        self.directory.cleanup()

    def write(self, text, name="scenario.yaml"):
        path = os.path.join(self.directory.name, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    with context('options'):
        with it('lets a flag win over its environment variable'):
            args = argparse.Namespace(config=None, seed=11, out=None, alpha=None, replications=None, workers=None, logLevel=None)
            options = resolveOptions(args, {"ICCSIM_SEED": "5", "ICCSIM_ALPHA": "0.9"})
            expect(options["seed"]).to(equal(11))
            expect(options["alpha"]).to(equal(0.9))

        with it('rejects an environment variable of the wrong type'):
            args = argparse.Namespace(config=None, seed=None, out=None, alpha=None, replications=None, workers=None, logLevel=None)
            expect(lambda: resolveOptions(args, {"ICCSIM_SEED": "seven"})).to(raise_error(ConfigurationError))

        with it('applies the options over the scenario file'):
            args = buildParser().parse_args(["sim", "--config", self.write(SMALL_SCENARIO), "--replications", "3"])
            config = loadConfig(resolveOptions(args, {"ICCSIM_SEED": "99"}))
            expect(config.replications).to(equal(3))
            expect(config.seed).to(equal(99))
            expect(config.architecture).to(equal("DisjointRan"))

    with context('commands'):
        with it('writes one analytic row per preset'):
            code = main(["theory", "--out", self.out, "--log-level", "0"], environ={})
            expect(code).to(equal(0))
            frame = pd.read_csv(self.out)
            expect(list(frame["architecture"])).to(equal(["IccRan", "DisjointRan", "DisjointMec"]))
            expect(set(frame["mode"])).to(equal({"theory"}))

        with it('simulates the configured architecture'):
            code = main(["sim", "--config", self.write(SMALL_SCENARIO), "--out", self.out], environ={})
            expect(code).to(equal(0))
            frame = pd.read_csv(self.out)
            expect(frame).to(have_length(1))
            expect(int(frame["replications"][0])).to(equal(2))

        with it('writes the same file twice for the same seed'):
            config = self.write(SMALL_SCENARIO)
            other = os.path.join(self.directory.name, "again.csv")
            main(["sim", "--config", config, "--out", self.out, "--seed", "3"], environ={})
            main(["sim", "--config", config, "--out", other], environ={"ICCSIM_SEED": "3"})
            with open(self.out, "rb") as first, open(other, "rb") as second:
                expect(first.read()).to(equal(second.read()))

    with context('exit codes'):
        with it('returns 1 for a missing scenario file'):
            code = main(["sim", "--config", os.path.join(self.directory.name, "missing.yaml"), "--out", self.out], environ={})
            expect(code).to(equal(1))

        with it('returns 1 for an unknown key'):
            code = main(["sim", "--config", self.write("ue:\n  speed: 2\n"), "--out", self.out], environ={})
            expect(code).to(equal(1))

        with it('returns 2 for an unstable validation point'):
            scenario = self.write("logLevel: 0\nmode: validate\nue:\n  count: 1\n  jobRate: 150.0\n")
            code = main(["validate", "--config", scenario, "--out", self.out], environ={})
            expect(code).to(equal(2))

        with it('exits with the configuration error status on usage errors'):
            for argv in (["replay"], ["sim", "--seed", "abc"], ["theory", "--architecture", "Cloud"]):
                code = None
                try:
                    main(argv, environ={})
                except SystemExit as error:
                    code = error.code
                expect(code).to(equal(1))

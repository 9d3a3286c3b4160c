import os
import tempfile

from mamba import description, context, it, before, after
from expects import expect, equal, raise_error

from Workload.HardwareCatalog import HardwareCatalog
from Tools.Exceptions import ConfigurationError
from Tests.factories import Factory

with description('HardwareCatalog') as self:
    with before.each:
        self.catalog = Factory.create_catalog()
        self.tmp = tempfile.TemporaryDirectory()

    with after.each:
        self.tmp.cleanup()

    def write(self, text):
        path = os.path.join(self.tmp.name, "hardware.yaml")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    with context('the shipped catalog'):
        with it('holds the A100 and the GH200 NVL2'):
            a100 = self.catalog.gpu("a100")
            expect(a100.compBw).to(equal(3.12e14))
            expect(a100.memBw).to(equal(2.039e12))
            expect(self.catalog.gpu("gh200-nvl2", count=2).count).to(equal(2))

        with it('holds Llama-2-7B in FP16'):
            model = self.catalog.model("llama-2-7b-fp16")
            expect(model.paramCount).to(equal(7_000_000_000))
            expect(model.cLlm).to(equal(1.4e10))
            expect(model.mLlm).to(equal(1.4e10))

    with context('errors'):
        with it('rejects unknown names'):
            expect(lambda: self.catalog.gpu("h100")).to(raise_error(ConfigurationError))
            expect(lambda: self.catalog.model("gpt-4")).to(raise_error(ConfigurationError))

        with it('rejects a missing file'):
            expect(lambda: HardwareCatalog.load(os.path.join(self.tmp.name, "missing.yaml"))).to(
                raise_error(ConfigurationError)
            )

        with it('rejects malformed YAML'):
            path = self.write("gpus: [a100\n")
            expect(lambda: HardwareCatalog.load(path)).to(raise_error(ConfigurationError))

        with it('rejects unknown sections and keys'):
            path = self.write("tpus: {}\n")
            expect(lambda: HardwareCatalog.load(path)).to(raise_error(ConfigurationError))
            path = self.write("gpus:\n  x: {compBw: 1.0e+12, memBw: 1.0e+12, tdp: 400}\n")
            expect(lambda: HardwareCatalog.load(path).gpu("x")).to(raise_error(ConfigurationError))

        with it('honours explicit per-token work'):
            path = self.write("models:\n  tiny: {paramCount: 1000, cLlm: 5.0e+3, mLlm: 4.0e+3}\n")
            model = HardwareCatalog.load(path).model("tiny")
            expect(model.cLlm).to(equal(5000.0))
            expect(model.mLlm).to(equal(4000.0))

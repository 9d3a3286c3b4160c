from unittest.mock import MagicMock

from mamba import description, context, it, before
from expects import expect, equal, be_within, be_empty, raise_error, have_length, contain

from Engine.Event import EventKind
from RadioAccess.Packet import Packet, PriorityClass
from RadioAccess.PacketSharedUplink import PacketSharedUplink, UplinkDiscipline
from RadioAccess.ExponentialUplink import ExponentialUplink
from Tools.Exceptions import ConfigurationError, SimulationError
from Tests.factories import Factory

with description('PacketSharedUplink') as self:
    with before.each:
        self.simulator = Factory.create_simulator()
        self.served = []

    def build(self, discipline):
        uplink = PacketSharedUplink(
            self.simulator,
            lambda job, time: self.served.append((job.jobId, time)),
            capacity=1000.0,
            discipline=discipline,
            maxPacketBits=100,
            traceServiceStarts=True,
        )
        self.simulator.on(EventKind.PacketUplinkDone, uplink.onPacketDone)
        return uplink

    def background(self):
        return Packet(size=100, priorityClass=PriorityClass.Background, enqueueTime=self.simulator.clock)

    with context('JobPriority'):
        with it('serves waiting job packets before background packets'):
            uplink = self.build(UplinkDiscipline.JobPriority)
            uplink.submitBackground(self.background())
            uplink.submitBackground(self.background())
            uplink.submitJob(Factory.create_job(jobId=1, nInput=15))
            self.simulator.runUntil()

            classes = [entry[1] for entry in uplink.serviceLog]
            expect(classes).to(equal([PriorityClass.Background] + [PriorityClass.JobHigh] * 5 + [PriorityClass.Background]))
            expect(self.served).to(have_length(1))
            expect(self.served[0][1]).to(be_within(0.5799999, 0.5800001))

        with it('never preempts a background packet in service'):
            uplink = self.build("JobPriority")
            uplink.submitBackground(self.background())
            uplink.submitJob(Factory.create_job(jobId=1, nInput=15))
            expect(uplink.serviceLog[0][1]).to(equal(PriorityClass.Background))
            expect(uplink.jobPacketsWaiting).to(equal(5))

        with it('traces how long each packet waited'):
            self.simulator = Factory.create_simulator(logLevel=4)
            self.simulator.Log = MagicMock()
            uplink = self.build(UplinkDiscipline.JobPriority)
            uplink.submitBackground(self.background())
            uplink.submitJob(Factory.create_job(jobId=1, nInput=15))
            self.simulator.runUntil()

            lines = [entry.args[0] for entry in self.simulator.Log.call_args_list]
            expect(lines).to(contain(" TRACE -> Simulator.serve: Background packet waited 0.000000s, 0 packets queued"))
            expect(lines).to(contain(" TRACE -> Simulator.serve: JobHigh packet waited 0.100000s, 4 packets queued"))

    with context('Fifo'):
        with it('serves the packets in arrival order'):
            uplink = self.build(UplinkDiscipline.Fifo)
            uplink.submitBackground(self.background())
            uplink.submitBackground(self.background())
            uplink.submitJob(Factory.create_job(jobId=1, nInput=15))
            self.simulator.runUntil()

            classes = [entry[1] for entry in uplink.serviceLog]
            expect(classes).to(equal([PriorityClass.Background] * 2 + [PriorityClass.JobHigh] * 5))
            expect(self.served[0][1]).to(be_within(0.6799999, 0.6800001))

    with context('whole cell traffic'):
        with it('never starts a background packet while a job packet waits'):
            config = Factory.create_config({
                "logLevel": 0,
                "architecture": "IccRan",
                "simulation.horizon": 2.0,
                "simulation.replications": 1,
            })
            simulator = Factory.create_wired_simulator(config, traceServiceStarts=True)
            simulator.traffic.start()
            simulator.runUntil()
            violations = [
                entry for entry in simulator.uplink.serviceLog
                if entry[1] is PriorityClass.Background and entry[2] > 0
            ]
            expect(simulator.uplink.serviceLog).not_to(be_empty)
            expect(violations).to(be_empty)

    with context('errors'):
        with it('rejects unknown parameters'):
            expect(lambda: PacketSharedUplink(self.simulator, None, bandwidth=1.0)).to(raise_error(ConfigurationError))

        with it('rejects a non-positive capacity'):
            expect(lambda: PacketSharedUplink(self.simulator, None, capacity=0.0)).to(raise_error(ValueError))

        with it('refuses background traffic in the exponential mode'):
            uplink = ExponentialUplink(self.simulator, None)
            expect(lambda: uplink.submitBackground(self.background())).to(raise_error(SimulationError))

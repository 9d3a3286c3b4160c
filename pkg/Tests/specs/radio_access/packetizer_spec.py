from mamba import description, context, it, before
from expects import expect, equal, be_true, raise_error, have_length

from RadioAccess.Packet import Packet, PriorityClass
from RadioAccess.Packetizer import packetize
from Tests.factories import Factory

with description('Packetizer') as self:
    with before.each:
        self.job = Factory.create_job(jobId=9, genTime=0.5, nInput=15)

    with context('packetize'):
        with it('fits a short prompt in one packet'):
            packets = packetize(self.job, bytesPerToken=4, maxPacketBits=12000)
            expect(packets).to(have_length(1))
            expect(packets[0].size).to(equal(480))
            expect(packets[0].enqueueTime).to(equal(0.5))

        with it('only shortens the last packet'):
            packets = packetize(self.job, bytesPerToken=4, maxPacketBits=100, now=0.7)
            expect([packet.size for packet in packets]).to(equal([100, 100, 100, 100, 80]))
            expect(all(packet.enqueueTime == 0.7 for packet in packets)).to(be_true)

        with it('tags every packet with its owner job'):
            packets = packetize(self.job, bytesPerToken=4, maxPacketBits=100)
            expect(all(packet.ownerJob == 9 and packet.job is self.job for packet in packets)).to(be_true)
            expect(all(packet.priorityClass is PriorityClass.JobHigh for packet in packets)).to(be_true)

        with it('rejects invalid sizes'):
            expect(lambda: packetize(self.job, bytesPerToken=0, maxPacketBits=100)).to(raise_error(ValueError))
            expect(lambda: packetize(self.job, bytesPerToken=4, maxPacketBits=0)).to(raise_error(ValueError))

    with context('Packet'):
        with it('requires an owner for job packets only'):
            expect(lambda: Packet(size=10, priorityClass=PriorityClass.JobHigh, enqueueTime=0.0)).to(raise_error(ValueError))
            expect(lambda: Packet(size=10, priorityClass=PriorityClass.Background, enqueueTime=0.0, ownerJob=1)).to(
                raise_error(ValueError)
            )
            expect(lambda: Packet(size=0, priorityClass=PriorityClass.Background, enqueueTime=0.0)).to(raise_error(ValueError))

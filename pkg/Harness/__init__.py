from .ScenarioConfig import ScenarioConfig, ScenarioMode, SweepAxis
from .RunMetrics import RunMetrics
from .ResultsStore import ResultsStore, emitCsv, loadCsv
from .Scenario import runScenario, runReplication, runValidation
from .Sweep import SweepSpec, SweepResult, runSweep, extractCapacity, sweepRows

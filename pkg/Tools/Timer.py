import sys
import math
import time as timer
from datetime import timedelta


class Timer:
    """
    Wall-clock profiler for the experiment. Each label (defaults to the calling method name) accumulates the number
    of calls and the min/mean/max/total elapsed seconds.
    """

    performanceTemplate = {
        "calls": 0,
        "elapsedMin": float('Inf'),
        "elapsedMean": None,
        "elapsedMax": float('-Inf'),
        "elapsedTotal": 0.0,
        "elapsedLast": None,
        "startTime": None,
    }

    def __init__(self, context):
        self.context = context
        self.performance = {}

    def start(self, methodName=None):
        methodName = methodName or sys._getframe(1).f_code.co_name
        performance = self.performance.get(methodName, Timer.performanceTemplate.copy())
        performance["startTime"] = timer.perf_counter()
        self.performance[methodName] = performance

    def stop(self, methodName=None):
        methodName = methodName or sys._getframe(1).f_code.co_name
        performance = self.performance.get(methodName)
        # stop() without a matching start() is ignored
        if performance is None or performance["startTime"] is None:
            return None

        elapsed = timer.perf_counter() - performance["startTime"]
        performance["startTime"] = None
        performance["calls"] += 1
        performance["elapsedLast"] = elapsed
        performance["elapsedMin"] = min(performance["elapsedMin"], elapsed)
        performance["elapsedMax"] = max(performance["elapsedMax"], elapsed)
        performance["elapsedTotal"] += elapsed
        performance["elapsedMean"] = performance["elapsedTotal"] / performance["calls"]
        return elapsed

    def elapsedTotal(self, methodName):
        return self.performance.get(methodName, {}).get("elapsedTotal", 0.0)

    def merge(self, performance):
        """
        Folds the stats of another Timer (its `performance` dict, e.g. the one of a finished simulation run shipped
        back from a worker process) into this one.
        """
        for methodName, theirs in performance.items():
            if theirs["calls"] == 0:
                continue
            ours = self.performance.setdefault(methodName, Timer.performanceTemplate.copy())
            ours["calls"] += theirs["calls"]
            ours["elapsedLast"] = theirs["elapsedLast"]
            ours["elapsedMin"] = min(ours["elapsedMin"], theirs["elapsedMin"])
            ours["elapsedMax"] = max(ours["elapsedMax"], theirs["elapsedMax"])
            ours["elapsedTotal"] += theirs["elapsedTotal"]
            ours["elapsedMean"] = ours["elapsedTotal"] / ours["calls"]

    def showStats(self, methodName=None):
        methods = [methodName] if methodName else list(self.performance.keys())
        total_elapsed = 0.0
        for method in methods:
            performance = self.performance.get(method)
            if performance:
                self.context.Log(f"Execution Stats ({method}):")
                for key in performance:
                    if key == "startTime":
                        continue
                    if key == "calls" or performance[key] is None:
                        value = performance[key]
                    elif math.isinf(performance[key]):
                        value = None
                    else:
                        value = timedelta(seconds=performance[key])
                    self.context.Log(f"  --> {key}:{value}")
                total_elapsed += performance.get("elapsedTotal", 0)
            else:
                self.context.Log(f"There are no execution stats available for {method}!")
        self.context.Log("Summary:")
        self.context.Log(f"  --> elapsedTotal: {timedelta(seconds=total_elapsed)}")

import sys
import pandas as pd


class Logger:
    """
    Level based logger shared by every component.

    Levels:
        0 = ERROR, 1 = WARNING, 2 = INFO, 3 = DEBUG, 4 = TRACE

    The messages are routed to `context.Log(message)` when the context provides it (the CLI experiment writes to
    stderr, the simulator prefixes the simulated clock) and straight to stderr otherwise.
    """
    PREFIXES = {0: "ERROR", 1: "WARNING", 2: "INFO", 3: "DEBUG"}

    def __init__(self, context=None, className=None, logLevel=0):
        if logLevel is None:
            logLevel = 0

        self.context = context
        self.className = className
        self.logLevel = logLevel

    def isEnabled(self, trsh):
        return self.logLevel >= trsh

    def Log(self, msg, trsh=0):
        if not self.isEnabled(trsh):
            return

        className = f"{self.className}." if self.className is not None else ""
        prefix = "ERROR" if trsh is None or trsh <= 0 else self.PREFIXES.get(trsh, "TRACE")
        line = f" {prefix} -> {className}{sys._getframe(2).f_code.co_name}: {msg}"

        if self.context is not None and hasattr(self.context, "Log"):
            self.context.Log(line)
        else:
            print(line, file=sys.stderr)

    def error(self, msg):
        self.Log(msg, trsh=0)

    def warning(self, msg):
        self.Log(msg, trsh=1)

    def info(self, msg):
        self.Log(msg, trsh=2)

    def debug(self, msg):
        self.Log(msg, trsh=3)

    def trace(self, msg):
        self.Log(msg, trsh=4)

    def dataframe(self, data):
        """
        Should be used to print out to the log as an info the data sent as a dictionary or a list of dictionaries.
        """
        if not data:
            return

        if not isinstance(data, list):
            data = [data]
        columns = list(data[0].keys())

        df = pd.DataFrame(data, columns=columns)

        if df.shape[0] > 0:
            self.info(f"\n{df.to_string(index=False)}")

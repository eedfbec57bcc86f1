import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float = None
    detail: object = None
    runtime: float = 0.0

    def to_json(self, timings=True):
        data = {
            'name': self.name,
            'passed': self.passed,
            'residual': self.residual,
            'detail': self.detail,
        }
        if timings:
            data['runtime'] = round(self.runtime, 6)
        return data


@dataclass
class SuiteReport:
    suite: str
    parameters: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def max_residual(self):
        return max((check.residual for check in self.checks if check.residual is not None), default=0.0)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def to_json(self, timings=True):
        data = {
            'suite': self.suite,
            'parameters': self.parameters,
            'passed': self.passed,
            'max_residual': self.max_residual,
        }
        if timings:
            data['runtime'] = round(self.runtime, 6)
        data['checks'] = [check.to_json(timings) for check in self.checks]
        return data

    def dumps(self, timings=True):
        return json.dumps(self.to_json(timings), indent=2, default=str)


def timed(function, *args):
    start = time.perf_counter()
    result = function(*args)
    return result, time.perf_counter() - start

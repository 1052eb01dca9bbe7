"""Verification outcomes and the machine-readable report."""
import json
from dataclasses import dataclass, field
from typing import Any, Optional

PASSED = 'passed'
FAILED = 'failed'


@dataclass
class RelationReport(object):
    """Residual of one relation instance; passed exactly when the residual operator is zero."""

    relation_id: str
    context: tuple
    side: str
    residual: Any

    @property
    def passed(self):
        return self.residual.is_zero()

    def counterexample(self):
        hit = self.residual.first_nonzero()
        if hit is None:
            return None
        x, image = hit
        return {'column': x.to_json(), 'residual': image.to_json()}

    def to_result(self, name='presentation'):
        return CheckResult('{}:{}:{}'.format(name, self.side, self.relation_id), self.context, self.passed,
                           self.counterexample())


@dataclass
class CheckResult(object):
    check_id: str
    context: tuple
    passed: bool
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)
    elapsed: Optional[float] = None

    @property
    def status(self):
        return PASSED if self.passed else FAILED

    def to_json(self, timing=False):
        data = {'id': self.check_id, 'context': list(self.context), 'status': self.status,
                'counterexample': self.counterexample}
        if self.details:
            data['details'] = self.details
        if timing and self.elapsed is not None:
            data['wall_time'] = round(self.elapsed, 6)
        return data


class VerificationReport(object):
    """Ordered collection of CheckResults, merged by check id."""

    def __init__(self, results=None):
        self.results = list(results or [])

    def add(self, result):
        self.results.append(result)

    def extend(self, results):
        self.results.extend(results)

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def failures(self):
        return [result for result in self.results if not result.passed]

    def to_json(self, timing=False):
        results = sorted(self.results, key=lambda r: (r.check_id, tuple(r.context)))
        return {'status': PASSED if self.passed else FAILED,
                'checks': len(results),
                'failed': len(self.failures()),
                'results': [result.to_json(timing) for result in results]}

    def dumps(self, timing=False):
        return canonical_json(self.to_json(timing))


def _key_order(key):
    """Integer keys (Laurent exponents, field sizes) numerically, then the rest lexically."""
    try:
        return 0, int(key), ''
    except (TypeError, ValueError):
        return 1, 0, str(key)


def canonical_order(data):
    """Copy of a JSON value with every object's keys in canonical order."""
    if isinstance(data, dict):
        return {key: canonical_order(data[key]) for key in sorted(data, key=_key_order)}
    if isinstance(data, (list, tuple)):
        return [canonical_order(item) for item in data]
    return data


def canonical_json(data):
    return json.dumps(canonical_order(data), indent=2, separators=(',', ': '))

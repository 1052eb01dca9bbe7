"""Runs a verification profile and collects every outcome into one report."""
import logging
import time

from mirabolic_howe.algebra.decorated import Convention
from mirabolic_howe.algebra.module import Side
from mirabolic_howe.errors import AmbiguousConvention, NoConsistentConvention, SampleDegenerate
from mirabolic_howe.optimize.config import get_profile
from mirabolic_howe.verify.agreement import calibrate_normalization, calibration_result, verify_oracle_agreement
from mirabolic_howe.verify.bimodule import verify_bimodule
from mirabolic_howe.verify.centralizer import centralizer_report
from mirabolic_howe.verify.dimensions import verify_dimensions
from mirabolic_howe.verify.duality import verify_duality
from mirabolic_howe.verify.presentation import verify_presentation
from mirabolic_howe.verify.report import CheckResult, VerificationReport
from mirabolic_howe.visualize.logger import Logger

logger = logging.getLogger(__name__)


def _timed(function, *args, **kwargs):
    start = time.time()
    outcome = function(*args, **kwargs)
    return outcome, time.time() - start


def _relation_summary(name, context, reports, elapsed):
    """Folds relation reports into one CheckResult per context; the first failure is the counterexample."""
    failures = [report for report in reports if not report.passed]
    counterexample = None
    if failures:
        counterexample = dict(relation=failures[0].relation_id, **failures[0].counterexample())
    details = {'instances': len(reports), 'failed': sorted(report.relation_id for report in failures)}
    return CheckResult(name, context, not failures, counterexample, details, elapsed)


def run_profile(name, budget=None, workers=1, sink=None):
    """All checks of the named profile, in profile order.

    :param name (str)       : 'desk' or 'smoke'
    :param budget (int)     : triple-count work budget for the oracle
    :param workers (int)    : processes for oracle agreement
    :param sink (Logger)    : event sink, a fresh in-memory Logger by default
    :return                 : VerificationReport
    """

    profile = get_profile(name)
    sink = sink or Logger()
    report = VerificationReport()

    def record(result):
        sink.check_summary(result)
        report.add(result)

    for n, m, d in profile.dimension_grid:
        result, elapsed = _timed(verify_dimensions, n, m, d)
        result.check_id, result.elapsed = 'dimensions:formula', elapsed
        record(result)
    for n, m, d, q in profile.orbit_grid:
        result, elapsed = _timed(verify_dimensions, n, m, d, [q], budget)
        result.check_id, result.elapsed = 'dimensions:orbits:q={}'.format(q), elapsed
        record(result)

    for n, m, d in profile.presentation:
        reports, elapsed = _timed(verify_presentation, n, m, d, Side.LEFT)
        record(_relation_summary('presentation:left', (n, m, d), reports, elapsed))
        reports, elapsed = _timed(verify_presentation, m, n, d, Side.RIGHT)
        record(_relation_summary('presentation:right', (m, n, d), reports, elapsed))

    for n, m, d in profile.duality:
        result, elapsed = _timed(verify_duality, n, m, d)
        result.elapsed = elapsed
        record(result)

    for n, m, d, q in profile.agreement_grid:
        result, elapsed = _timed(verify_oracle_agreement, n, m, d, q, budget=budget, workers=workers)
        result.elapsed = elapsed
        record(result)

    for n, m, d in profile.bimodule:
        reports, elapsed = _timed(verify_bimodule, n, m, d)
        record(_relation_summary('bimodule', (n, m, d), reports, elapsed))

    for n, m, d in profile.centralizer:
        try:
            result, elapsed = _timed(centralizer_report, n, m, d)
            result.elapsed = elapsed
        except SampleDegenerate as error:
            result = CheckResult('centralizer', (n, m, d), False, {'error': str(error)})
        record(result)

    for n, m, d, q in profile.negative_control:
        try:
            calibration, elapsed = _timed(calibrate_normalization, n, m, d, [q], budget=budget, workers=workers,
                                          sink=sink)
            result = calibration_result(n, m, d, [q], calibration, expect_rejected=[Convention.BLM_FLIPPED])
            result.elapsed = elapsed
        except (NoConsistentConvention, AmbiguousConvention) as error:
            result = CheckResult('calibration', (n, m, d), False, {'error': str(error)})
        record(result)

    logger.info('profile %s: %d checks, %d failed', name, len(report.results), len(report.failures()))
    return report

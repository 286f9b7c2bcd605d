import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from hermitian import CLASSES
from verification_service import VerificationReport, VerificationService


class VerificationRunner:
    """
    Runs every family and claim verification on a thread pool.
    Reports come back ordered by (family id, class) whatever the completion order.
    """

    def __init__(self, service: VerificationService, max_workers: Optional[int] = None):
        """
        :param service: the configured VerificationService
        :param max_workers: pool size; LIEALG_WORKERS or min(8, cpu count) when omitted
        """
        self.service = service
        if max_workers is None:
            max_workers = int(os.getenv("LIEALG_WORKERS", str(min(8, os.cpu_count() or 1))))
        self.max_workers = max(1, max_workers)

    def _jobs(self, family_ids: Sequence[int]) -> List[Tuple[int, Optional[str]]]:
        jobs: List[Tuple[int, Optional[str]]] = [(family_id, None) for family_id in family_ids]
        for family_id in family_ids:
            declared = {claim.cls for claim in self.service.catalog.claims_for(family_id)}
            jobs.extend((family_id, cls) for cls in CLASSES if cls in declared)
        return jobs

    def _run_job(self, job: Tuple[int, Optional[str]]) -> VerificationReport:
        family_id, cls = job
        if cls is None:
            return self.service.verify_family_symbolic(family_id)
        return self.service.verify_subfamily(family_id, cls)

    def run(self, family_ids: Optional[Sequence[int]] = None
            ) -> Tuple[List[VerificationReport], List[VerificationReport]]:
        """
        Returns:
            (family reports, claim reports)
        """
        family_ids = list(family_ids or self.service.catalog.ids())
        jobs = self._jobs(family_ids)
        logging.info(f"[VerificationRunner] Running {len(jobs)} verification jobs "
                     f"on {self.max_workers} worker(s)")
        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            reports = list(pool.map(self._run_job, jobs))

        family_reports = [report for report in reports if report.cls is None]
        claim_reports = [report for report in reports if report.cls is not None]
        failed = [report for report in reports if not report.ok]
        if failed:
            logging.warning(f"[VerificationRunner] {len(failed)} of {len(reports)} reports failed")
        else:
            logging.info(f"[VerificationRunner] All {len(reports)} reports clean")
        return family_reports, claim_reports

"""
Running the theorem checks
==========================

Each check either passes, is skipped because a hypothesis fails, fails with
a replayable witness, or stops at a size guard.
"""

from liefp.corpus import FamilySpec
from liefp.harness import SuiteConfig, verify_suite

corpus = [FamilySpec("affine2", 1, 5), FamilySpec("borel", 2, 5), FamilySpec("sl2", 3, 5),
          FamilySpec("random_soluble", 3, 7, seed=2)]
report = verify_suite(corpus)
for line in report.lines():
    print(line)
print(report.counts(), "exit status", report.exit_status)

# A tiny guard makes the enumeration-heavy checks give up instead of hanging.
small = verify_suite(corpus[:1], SuiteConfig(subspace_guard=2), checks=["T1", "T4"])
print([o.verdict.value for o in small.outcomes()], "exit status", small.exit_status)

"""Classify the chiral polytopes of the Frobenius group C5:C4 (order 20).

The group is read from the generator file shipped with the tests.  It is the
rotation group of the chiral torus map {4,4}_(1,2) and its mirror image.
"""

from pathlib import Path

from chiralatlas import SearchConfig, classify, classify_hhl
from chiralatlas.atlas import run_classify

here = Path(__file__).resolve().parent
path = here.parent / "tests" / "data" / "c5_c4.txt"
print(path.read_text())

report = run_classify(str(path))
print(report.to_text())
print()

# enantiomorphic pairs collapse to one record
merged = run_classify(str(path), SearchConfig(merge_enantiomorphs=True))
print("with merge_enantiomorphs:", len(merged.records), "record(s)")

# the exhaustive baseline agrees
G = report.records[0].alpha_tuple.group
blt, blt_stats = classify(G)
hhl, hhl_stats = classify_hhl(G)
print("BLT tested", blt_stats.tuples_tested, "tuples; HHL tested", hhl_stats.tuples_tested)
print("same types:", sorted(map(str, (r.schlafli for r in blt))) == sorted(map(str, (r.schlafli for r in hhl))))

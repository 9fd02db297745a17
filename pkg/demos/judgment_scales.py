"""
From qualitative judgments to a cardinal scale
==============================================

A decision maker compares options pairwise on one criterion using the
categorical ladder A0 (no difference) through A6 (extreme difference).
The engine checks whether those judgments admit a numerical scale at all,
pinpoints the contradictions when they do not, and derives the scale once
they do.
"""

from packfit.macbeth import (
    AttractivenessJudgment,
    JudgmentMatrix,
    check_consistency,
    derive_scale,
    locate_conflicts,
)

A = AttractivenessJudgment

# "good" and "bad" are fictitious reference options that pin the scale
# to 1 and 0. Pairs are (better, worse); missing pairs are simply unjudged.
judgments = {
    ("good", "p1"): A(2, 2),
    ("good", "p2"): A(4, 4),
    ("good", "bad"): A(6, 6),
    ("p1", "p2"): A(2, 3),   # between weak and moderate: a union is fine
    ("p1", "bad"): A(5, 5),
    ("p2", "bad"): A(1, 6),  # "don't know yet": any positive difference
}
matrix = JudgmentMatrix(
    context="usability",
    elements=("good", "p1", "p2", "bad"),
    judgments=judgments,
    good="good",
    bad="bad",
)

report = check_consistency(matrix)
print(f"consistent: {report.consistent}")
scale = derive_scale(matrix)
for element in matrix.elements:
    bar = "#" * round(scale.value[element] * 40)
    print(f"  {element:5s} {scale.value[element]:5.2f} {bar}")

# Now contradict ourselves: declare p1 and p2 equal even though a positive
# difference between them is already on record.
broken = dict(judgments)
broken[("p1", "p2")] = A(0, 0)
matrix2 = JudgmentMatrix(
    context="usability", elements=matrix.elements, judgments=broken,
    good="good", bad="bad",
)
report2 = check_consistency(matrix2)
print(f"\nafter the edit, consistent: {report2.consistent}")
witness = locate_conflicts(matrix2)
for x, y in witness:
    print(f"  conflicting judgment: {x} vs {y}")

# Dropping the judgments the locator names is always enough to recover.
repaired = {p: j for p, j in broken.items() if p not in set(witness)}
matrix3 = JudgmentMatrix(
    context="usability", elements=matrix.elements, judgments=repaired,
    good="good", bad="bad",
)
print(f"after removing them, consistent: {check_consistency(matrix3).consistent}")

#!/usr/bin/env python3
"""Weight elicitation and the final weighted-sum ranking.

Weights come from the same judgment machinery as scales: the decision maker
compares fictitious reference profiles ("perfect on criterion i, minimal
elsewhere"), and the normalized scale over those profiles is the weight
vector. No numbers are ever asked for directly.
"""

from packfit.macbeth import (
    AttractivenessJudgment,
    JudgmentMatrix,
    derive_scale,
    derive_weights,
)
from packfit.model import LeafKind
from packfit.scoring import PerformanceVector, rank

A = AttractivenessJudgment

# Ranking the reference profiles: cost < quality < support < fit here.
weighting = JudgmentMatrix(
    context="weighting",
    elements=("fit", "support", "quality", "cost", "bad"),
    judgments={
        ("fit", "support"): A(2, 2),
        ("fit", "quality"): A(3, 3),
        ("fit", "cost"): A(4, 4),
        ("fit", "bad"): A(6, 6),
        ("support", "quality"): A(1, 1),
        ("support", "cost"): A(3, 3),
        ("support", "bad"): A(5, 5),
        ("quality", "cost"): A(2, 2),
        ("quality", "bad"): A(4, 4),
        ("cost", "bad"): A(3, 3),
    },
    bad="bad",
)
weights = derive_weights(weighting)
print("weights:")
for cid, w in weights.values.items():
    print(f"  {cid:8s} {w:.4f}")
print(f"  sum      {sum(weights.values.values()):.4f}")


def criterion_matrix(context, spread):
    # Three packages between the anchors; spread controls how far apart.
    return JudgmentMatrix(
        context=context,
        elements=("good", "x", "y", "z", "bad"),
        judgments={
            ("good", "x"): A(spread, spread),
            ("good", "y"): A(spread + 1, spread + 1),
            ("good", "z"): A(spread + 2, spread + 2),
            ("x", "y"): A(1, 2),
            ("x", "z"): A(2, 3),
            ("y", "z"): A(1, 1),
            ("good", "bad"): A(6, 6),
            ("x", "bad"): A(4, 4),
            ("y", "bad"): A(3, 3),
            ("z", "bad"): A(2, 2),
        },
        good="good",
        bad="bad",
    )


# One judged scale per criterion; a real project would elicit each from the
# decision maker, here we just vary the spread.
scales = {
    cid: derive_scale(criterion_matrix(cid, spread))
    for cid, spread in (("fit", 1), ("support", 2), ("quality", 1), ("cost", 3))
}

vectors = []
for package in ("x", "y", "z"):
    values = {cid: scales[cid].value[package] for cid in scales}
    vectors.append(PerformanceVector(
        candidate_id=package,
        values=values,
        provenance={cid: LeafKind.MACBETH_JUDGED for cid in values},
    ))

result = rank(vectors, weights)
print("\nranking:")
for entry in result.entries:
    parts = "  ".join(f"{cid}={entry.vector.values[cid]:.2f}" for cid in scales)
    print(f"  {entry.candidate_id}: overall {entry.overall:.4f}  ({parts})")

"""
Screening and gap analysis
==========================

Walk a candidate list through the two early funnel stages: hard screening
criteria first, then requirement-by-requirement matching patterns for the
survivors.
"""

from packfit.model import (
    Candidate,
    MatchThresholds,
    Requirement,
    RequirementSet,
    SatisfactionAssessment,
    ScreeningAttribute,
    ScreeningCriterion,
    classify_match,
    screen_candidates,
)

requirements = RequirementSet((
    Requirement("fin", "Financial accounting", 0.35),
    Requirement("mrp", "Material planning", 0.40),
    Requirement("edi", "EDI interfaces", 0.25),
))

candidates = [
    Candidate("alpha", "Alpha Suite", industry_types=frozenset({"manufacturing"}),
              organization_sizes=frozenset({"medium"}), platforms=frozenset({"linux"}),
              tco_estimate=520.0),
    Candidate("beta", "Beta One", industry_types=frozenset({"manufacturing", "retail"}),
              organization_sizes=frozenset({"medium", "large"}),
              platforms=frozenset({"linux", "windows"}), tco_estimate=910.0),
    Candidate("gamma", "Gamma ERP", industry_types=frozenset({"finance"}),
              organization_sizes=frozenset({"medium"}), platforms=frozenset({"linux"}),
              tco_estimate=450.0),
]

# Must-pass criteria: wrong industry or a blown budget knocks a package out
# before anyone scores anything.
criteria = [
    ScreeningCriterion(ScreeningAttribute.INDUSTRY_TYPE, required=frozenset({"manufacturing"})),
    ScreeningCriterion(ScreeningAttribute.TCO_CEILING, ceiling=800.0),
]

result = screen_candidates(candidates, criteria)
print("screening:")
for c in candidates:
    if c in result.survivors:
        print(f"  {c.id:6s} kept")
    else:
        reasons = ", ".join(sc.attribute.value for sc in result.exclusions[c.id])
        print(f"  {c.id:6s} dropped ({reasons})")

# Satisfaction levels for the survivor, as assessed in a fit workshop.
table = SatisfactionAssessment({"alpha": {"fin": 1.0, "mrp": 0.6, "edi": 0.2}})

# Per-requirement tolerance: edi is nice-to-have, so anything above 0.1
# counts as a partial match rather than a failure.
thresholds = {
    "fin": MatchThresholds(target_level=1.0, worst_acceptable=0.8),
    "mrp": MatchThresholds(target_level=1.0, worst_acceptable=0.5),
    "edi": MatchThresholds(target_level=0.8, worst_acceptable=0.1),
}

print("\ngap analysis for alpha:")
for r in requirements:
    a = table.level("alpha", r.id)
    pattern = classify_match(a, thresholds[r.id])
    print(f"  {r.id}: satisfaction {a:.1f} -> {pattern.value}")

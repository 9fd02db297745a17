"""Ready-made demonstration projects.

``demo_project`` is a complete three-way ERP selection: five requirements,
screening that drops a fourth vendor, adaptation strategy menus with
budgets, four judged criteria (functional coverage, adaptation risk, total
cost of ownership, technical performance) and the weighting judgments over
their reference profiles.

``quantitative_demo_project`` swaps the judged criteria for quantitative
ones bound to the four adaptation outcome measures, which makes the ranking
respond to budget what-if queries.
"""

from .adaptation import AdaptationStrategy
from .macbeth import AttractivenessJudgment, JudgmentMatrix
from .model import (
    Candidate,
    CriterionNode,
    ExtensionImpact,
    ExtensionNote,
    LeafKind,
    MatchThresholds,
    Requirement,
    RequirementSet,
    SatisfactionAssessment,
    ScreeningAttribute,
    ScreeningCriterion,
    TailoringType,
)
from .project import (
    SCHEMA_VERSION,
    WEIGHTING_MATRIX_ID,
    Project,
    ProjectCache,
    QuantitativeBinding,
    Stage,
)
from .scoring import ValueFunction


def _matrix(
    mid: str,
    elements: tuple[str, ...],
    judged: dict[tuple[str, str], int | tuple[int, int]],
    good: str | None,
    bad: str | None,
) -> JudgmentMatrix:
    judgments = {}
    for pair, cats in judged.items():
        lo, hi = (cats, cats) if isinstance(cats, int) else cats
        judgments[pair] = AttractivenessJudgment(lo, hi)
    return JudgmentMatrix(
        context=mid, elements=elements, judgments=judgments, good=good, bad=bad
    )


def _strategy(sid, tailoring, b, r, c):
    return AdaptationStrategy(
        id=sid,
        tailoring_type=tailoring,
        anticipated_satisfaction=b,
        risk=r,
        cost=c,
    )


def _base_project() -> Project:
    """Everything shared by both demos: the selection data minus criteria."""
    requirements = RequirementSet(
        (
            Requirement("fin", "Financial accounting", 0.30, functional_area="finance"),
            Requirement("inv", "Inventory management", 0.25, functional_area="logistics"),
            Requirement("crm", "Customer relationship management", 0.20, functional_area="sales"),
            Requirement("rpt", "Regulatory reporting", 0.15, functional_area="finance"),
            Requirement("hr", "Payroll and HR", 0.10, functional_area="hr"),
        )
    )
    thresholds = {
        "fin": MatchThresholds(target_level=0.9, worst_acceptable=0.6),
        "inv": MatchThresholds(target_level=0.8, worst_acceptable=0.5),
        "crm": MatchThresholds(target_level=0.7, worst_acceptable=0.4),
        "rpt": MatchThresholds(target_level=0.8, worst_acceptable=0.3),
        "hr": MatchThresholds(target_level=0.6, worst_acceptable=0.3),
    }
    candidates = (
        Candidate(
            id="sap",
            name="SAP",
            vendor="SAP SE",
            industry_types=frozenset({"manufacturing", "retail"}),
            organization_sizes=frozenset({"medium", "large"}),
            platforms=frozenset({"linux", "windows"}),
            tco_estimate=850.0,
        ),
        Candidate(
            id="oracle",
            name="ORACLE",
            vendor="Oracle Corporation",
            industry_types=frozenset({"manufacturing", "services"}),
            organization_sizes=frozenset({"large"}),
            platforms=frozenset({"linux", "solaris"}),
            tco_estimate=780.0,
        ),
        Candidate(
            id="microsoft",
            name="MICROSOFT",
            vendor="Microsoft",
            industry_types=frozenset({"manufacturing", "services"}),
            organization_sizes=frozenset({"medium", "large"}),
            platforms=frozenset({"windows"}),
            tco_estimate=640.0,
        ),
        Candidate(
            id="local-suite",
            name="Local Suite",
            vendor="Local Software House",
            industry_types=frozenset({"retail"}),
            organization_sizes=frozenset({"small", "medium"}),
            platforms=frozenset({"windows"}),
            tco_estimate=950.0,
        ),
    )
    screening = (
        ScreeningCriterion(
            attribute=ScreeningAttribute.INDUSTRY_TYPE,
            required=frozenset({"manufacturing"}),
        ),
        ScreeningCriterion(attribute=ScreeningAttribute.TCO_CEILING, ceiling=900.0),
    )
    satisfaction = SatisfactionAssessment(
        {
            "sap": {"fin": 1.0, "inv": 0.8, "crm": 0.7, "rpt": 0.5, "hr": 1.0},
            "oracle": {"fin": 0.9, "inv": 1.0, "crm": 0.6, "rpt": 0.4, "hr": 0.8},
            "microsoft": {"fin": 0.8, "inv": 0.7, "crm": 1.0, "rpt": 0.2, "hr": 0.9},
        }
    )
    extensions = (
        ExtensionNote("sap", "built-in analytics dashboards", ExtensionImpact.HELPFUL),
        ExtensionNote("microsoft", "bundled e-commerce portal", ExtensionImpact.NEUTRAL),
    )
    budgets = {"sap": 80.0, "oracle": 70.0, "microsoft": 60.0}
    strategies = {
        "sap": {
            "inv": (
                _strategy("sap-inv-cfg", TailoringType.CONFIGURATION, 0.95, 0.10, 20.0),
                _strategy("sap-inv-ue", TailoringType.USER_EXITS, 1.0, 0.30, 35.0),
            ),
            "crm": (
                _strategy("sap-crm-bolt", TailoringType.BOLT_ONS, 0.90, 0.20, 30.0),
            ),
            "rpt": (
                _strategy("sap-rpt-rep", TailoringType.EXTENDED_REPORTING, 0.85, 0.15, 25.0),
                _strategy("sap-rpt-mod", TailoringType.PACKAGE_CODE_MODIFICATION, 1.0, 0.50, 60.0),
            ),
        },
        "oracle": {
            "fin": (
                _strategy("ora-fin-cfg", TailoringType.CONFIGURATION, 1.0, 0.05, 10.0),
            ),
            "crm": (
                _strategy("ora-crm-bolt", TailoringType.BOLT_ONS, 0.85, 0.25, 30.0),
            ),
            "rpt": (
                _strategy("ora-rpt-rep", TailoringType.EXTENDED_REPORTING, 0.80, 0.20, 25.0),
                _strategy("ora-rpt-if", TailoringType.INTERFACE_DEVELOPMENT, 0.95, 0.40, 45.0),
            ),
            "hr": (
                _strategy("ora-hr-cfg", TailoringType.CONFIGURATION, 0.95, 0.10, 15.0),
            ),
        },
        "microsoft": {
            "fin": (
                _strategy("ms-fin-prg", TailoringType.ERP_PROGRAMMING, 0.95, 0.30, 40.0),
            ),
            "inv": (
                _strategy("ms-inv-cfg", TailoringType.CONFIGURATION, 0.90, 0.10, 15.0),
            ),
            "rpt": (
                _strategy("ms-rpt-rep", TailoringType.EXTENDED_REPORTING, 0.70, 0.20, 20.0),
                _strategy("ms-rpt-mod", TailoringType.PACKAGE_CODE_MODIFICATION, 0.95, 0.45, 55.0),
            ),
            "hr": (
                _strategy("ms-hr-cfg", TailoringType.CONFIGURATION, 1.0, 0.05, 10.0),
            ),
        },
    }
    return Project(
        schema_version=SCHEMA_VERSION,
        stage=Stage.GLOBAL_EVALUATION,
        requirements=requirements,
        thresholds=thresholds,
        candidates=candidates,
        screening_criteria=screening,
        satisfaction=satisfaction,
        extensions=extensions,
        budgets=budgets,
        strategies=strategies,
        criteria_tree=None,
        matrices={},
        value_functions={},
        cache=ProjectCache(),
    )


def demo_project() -> Project:
    """Three-way selection judged on four criteria, ready to rank."""
    project = _base_project()
    project.criteria_tree = CriterionNode(
        id="criteria",
        label="Selection criteria",
        children=(
            CriterionNode("fc", "Functional Coverage", kind=LeafKind.MACBETH_JUDGED),
            CriterionNode("ra", "Adaptation Risk", kind=LeafKind.MACBETH_JUDGED),
            CriterionNode("tco", "Total Cost of Ownership", kind=LeafKind.MACBETH_JUDGED),
            CriterionNode("tp", "Technical Performance", kind=LeafKind.MACBETH_JUDGED),
        ),
    )
    project.matrices = {
        "fc": _matrix(
            "fc",
            ("good", "sap", "oracle", "microsoft", "bad"),
            {
                ("good", "sap"): 2,
                ("good", "oracle"): 3,
                ("good", "microsoft"): 4,
                ("good", "bad"): 6,
                ("sap", "oracle"): 3,
                ("sap", "microsoft"): 4,
                ("sap", "bad"): 6,
                ("oracle", "microsoft"): 3,
                ("oracle", "bad"): 4,
                ("microsoft", "bad"): 3,
            },
            good="good",
            bad="bad",
        ),
        "ra": _matrix(
            "ra",
            ("good", "sap", "microsoft", "oracle", "bad"),
            {
                ("good", "sap"): 4,
                ("good", "microsoft"): 4,
                ("good", "oracle"): 5,
                ("good", "bad"): 6,
                ("sap", "microsoft"): 3,
                ("sap", "oracle"): (4, 5),
                ("sap", "bad"): 6,
                ("microsoft", "oracle"): (3, 4),
                ("microsoft", "bad"): 4,
                ("oracle", "bad"): 4,
            },
            good="good",
            bad="bad",
        ),
        "tco": _matrix(
            "tco",
            ("good", "microsoft", "oracle", "sap", "bad"),
            {
                ("good", "microsoft"): 2,
                ("good", "oracle"): 3,
                ("good", "sap"): 4,
                ("good", "bad"): 5,
                ("microsoft", "oracle"): 3,
                ("microsoft", "sap"): 4,
                ("microsoft", "bad"): 5,
                ("oracle", "sap"): 4,
                ("oracle", "bad"): 5,
                ("sap", "bad"): 4,
            },
            good="good",
            bad="bad",
        ),
        "tp": _matrix(
            "tp",
            ("good", "sap", "oracle", "microsoft", "bad"),
            {
                ("good", "sap"): 1,
                ("good", "oracle"): 2,
                ("good", "microsoft"): 2,
                ("good", "bad"): 6,
                ("sap", "oracle"): 2,
                ("sap", "microsoft"): 2,
                ("sap", "bad"): 5,
                ("oracle", "microsoft"): 2,
                ("oracle", "bad"): 4,
                ("microsoft", "bad"): 4,
            },
            good="good",
            bad="bad",
        ),
        WEIGHTING_MATRIX_ID: _matrix(
            WEIGHTING_MATRIX_ID,
            ("fc", "ra", "tp", "tco", "bad"),
            {
                ("fc", "ra"): 3,
                ("fc", "tp"): 4,
                ("fc", "tco"): 4,
                ("fc", "bad"): 6,
                ("ra", "tp"): 3,
                ("ra", "tco"): 4,
                ("ra", "bad"): 6,
                ("tp", "tco"): 4,
                ("tp", "bad"): 5,
                ("tco", "bad"): 5,
            },
            good=None,
            bad="bad",
        ),
    }
    return project


def quantitative_demo_project() -> Project:
    """Same selection data, but criteria measured from adaptation outcomes."""
    project = _base_project()
    project.criteria_tree = CriterionNode(
        id="criteria",
        label="Selection criteria",
        children=(
            CriterionNode("coverage", "Functional coverage", kind=LeafKind.QUANTITATIVE),
            CriterionNode("risk", "Adaptation risk", kind=LeafKind.QUANTITATIVE),
            CriterionNode("cost", "Adaptation cost", kind=LeafKind.QUANTITATIVE),
            CriterionNode("degree", "Adaptation degree", kind=LeafKind.QUANTITATIVE),
        ),
    )
    project.value_functions = {
        "coverage": QuantitativeBinding(
            measure="functional_coverage",
            value_function=ValueFunction("increasing", good_level=1.0, bad_level=0.4),
        ),
        "risk": QuantitativeBinding(
            measure="adaptation_risk",
            value_function=ValueFunction("decreasing", good_level=0.0, bad_level=0.6),
        ),
        "cost": QuantitativeBinding(
            measure="adaptation_cost",
            value_function=ValueFunction("decreasing", good_level=0.0, bad_level=100.0),
        ),
        "degree": QuantitativeBinding(
            measure="adaptation_degree",
            value_function=ValueFunction("decreasing", good_level=0.0, bad_level=0.4),
        ),
    }
    project.matrices = {
        WEIGHTING_MATRIX_ID: _matrix(
            WEIGHTING_MATRIX_ID,
            ("coverage", "risk", "cost", "degree", "bad"),
            {
                ("coverage", "risk"): 3,
                ("coverage", "cost"): 4,
                ("coverage", "degree"): 5,
                ("coverage", "bad"): 6,
                ("risk", "cost"): 2,
                ("risk", "degree"): 4,
                ("risk", "bad"): 6,
                ("cost", "degree"): 3,
                ("cost", "bad"): 5,
                ("degree", "bad"): 4,
            },
            good=None,
            bad="bad",
        ),
    }
    return project

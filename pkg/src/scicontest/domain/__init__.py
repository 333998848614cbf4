"""Pure contest domain: configuration, eligibility, categories, topics.

Everything here is a pure function over immutable values; safe to share
across threads.
"""

from .categories import Category, assign_category, category_index, enumerate_categories
from .config import (
    AgeGroupDef,
    ContestConfig,
    MediaTypeDef,
    ScoreWeights,
    config_from_document,
    default_config,
    load_config,
    parse_weight,
)
from .eligibility import (
    AGE_OUT_OF_RANGE,
    COUNTRY_NOT_ELIGIBLE,
    WINDOW_CLOSED,
    EligibilityResult,
    completed_age,
    derive_age_group,
    validate_eligibility,
)
from .topics import (
    OPEN_TOPIC_ID,
    TopicSheet,
    default_topic_catalog,
    load_topic_catalog,
    parse_topic_catalog,
)

__all__ = [
    "AgeGroupDef",
    "AGE_OUT_OF_RANGE",
    "Category",
    "ContestConfig",
    "COUNTRY_NOT_ELIGIBLE",
    "EligibilityResult",
    "MediaTypeDef",
    "OPEN_TOPIC_ID",
    "ScoreWeights",
    "TopicSheet",
    "WINDOW_CLOSED",
    "assign_category",
    "category_index",
    "completed_age",
    "config_from_document",
    "default_config",
    "default_topic_catalog",
    "derive_age_group",
    "enumerate_categories",
    "load_config",
    "load_topic_catalog",
    "parse_topic_catalog",
    "parse_weight",
    "validate_eligibility",
]

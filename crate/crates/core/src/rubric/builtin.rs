//! The bundled rubric: five assessment areas, 57 criteria.
//!
//! Names, descriptions and option labels are kept verbatim. Criterion and
//! option keys are stable snake_case handles derived from them.

use super::{Applicability, AreaSpec, CriterionSpec, OptionSpec, RubricCatalog, SpecialRole};

pub const BUILTIN_CATALOG_ID: &str = "dataset-development-rubric";
pub const BUILTIN_VERSION: &str = "paper-v1";

use Applicability::{Always, Conditional};

struct Row {
    slug: &'static str,
    name: &'static str,
    description: &'static str,
    group: Option<&'static str>,
    applicability: Applicability,
    role: SpecialRole,
    options: &'static [(&'static str, &'static str, i8)],
}

const fn row(
    slug: &'static str,
    name: &'static str,
    description: &'static str,
    options: &'static [(&'static str, &'static str, i8)],
) -> Row {
    Row {
        slug,
        name,
        description,
        group: None,
        applicability: Always,
        role: SpecialRole::None,
        options,
    }
}

const fn grouped(group: &'static str, r: Row) -> Row {
    Row {
        group: Some(group),
        ..r
    }
}

const fn conditional(r: Row) -> Row {
    Row {
        applicability: Conditional,
        ..r
    }
}

const INFO: &str = "Dataset Information";
const FILES: &str = "Dataset Files";
const ATTRS: &str = "Dataset Attributes";

const DATA_DICTIONARY: &[Row] = &[
    grouped(
        INFO,
        row(
            "dataset_name",
            "Dataset Name",
            "Indicates whether the official dataset name is provided in the data dictionary",
            &[("provided", "Provided", 1), ("not_provided", "Not provided", -1)],
        ),
    ),
    grouped(
        INFO,
        row(
            "description",
            "Description",
            "Describes whether a detailed dataset description is included in the data dictionary",
            &[
                ("detailed", "Detailed description provided", 1),
                ("limited", "Limited description provided", 0),
                ("none", "No description provided", -1),
            ],
        ),
    ),
    grouped(
        INFO,
        row(
            "dataset_provider",
            "Dataset Provider",
            "Availability of dataset provider's contact information (e.g., email)",
            &[
                ("provided", "Contact information provided", 1),
                ("not_provided", "Not provided", -1),
            ],
        ),
    ),
    grouped(
        INFO,
        row(
            "doi",
            "DOI",
            "Indicates the dataset's availability of a Digital Object Identifier (DOI)",
            &[
                ("provided", "DOI provided", 1),
                ("not_provided", "DOI not provided", -1),
            ],
        ),
    ),
    grouped(
        INFO,
        row(
            "created_date",
            "Created Date",
            "Indicates if the dataset creation date is provided in the data dictionary",
            &[
                ("provided", "Creation date provided", 1),
                ("unknown", "Creation date unknown", -1),
            ],
        ),
    ),
    grouped(
        INFO,
        row(
            "version",
            "Version",
            "Indicates if the version information of the dataset is provided",
            &[("provided", "Version provided", 1), ("unknown", "Version unknown", -1)],
        ),
    ),
    grouped(
        FILES,
        row(
            "file_name",
            "File Name",
            "Lists all file names in the data dictionary, particularly for datasets with multiple files",
            &[
                ("all", "All files listed", 1),
                ("some", "Some files listed", 0),
                ("none", "No files listed", -1),
            ],
        ),
    ),
    grouped(
        FILES,
        row(
            "file_description",
            "Description",
            "Indicates if a detailed description is provided for each file",
            &[
                ("detailed", "Detailed description provided", 1),
                ("none", "No description provided", -1),
            ],
        ),
    ),
    grouped(
        FILES,
        row(
            "file_source",
            "Source",
            "Indicates if information about the source of the files is provided",
            &[
                ("all", "Source provided for all files", 1),
                ("some", "Source provided for some files", 0),
                ("none", "No source provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "attribute_name",
            "Attribute Name",
            "Indicates if all attribute names in each file are provided in the data dictionary",
            &[
                ("all", "All attribute names provided", 1),
                ("some_missing", "Some attribute names missing", 0),
                ("none", "No attribute names provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "parent_file_name",
            "Parent File Name",
            "Indicates if the file containing the attributes is specified in the dataset",
            &[
                ("all", "Provided for all attributes", 1),
                ("some", "Provided for some attributes", 0),
                ("none", "Parent file not provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "attribute_description",
            "Description",
            "Indicates if a description is provided for each attribute in the data dictionary",
            &[
                ("all", "Provided for all attributes", 1),
                ("some", "Provided for some attributes", 0),
                ("none", "No description provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "data_type",
            "Data Type",
            "Indicates if data types for each attribute are listed in the data dictionary",
            &[
                ("all", "Provided for all attributes", 1),
                ("some", "Provided for some attributes", 0),
                ("none", "No data type provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "allowed_value",
            "Allowed Value",
            "Indicates if allowed values for each attribute are listed in the data dictionary",
            &[
                ("all", "Provided for all attributes", 1),
                ("some", "Provided for some attributes", 0),
                ("none", "No allowed values provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "missing_value",
            "Missing Value",
            "Indicates if the mechanism for handling missing values is described",
            &[
                ("provided", "Handling mechanism provided", 1),
                ("not_provided", "Not provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "example_value",
            "Example Value",
            "Indicates if example values are provided for each attribute",
            &[
                ("all", "Provided for all attributes", 1),
                ("some", "Provided for some attributes", 0),
                ("none", "No example values provided", -1),
            ],
        ),
    ),
    grouped(
        ATTRS,
        row(
            "format",
            "Format",
            "Indicates if the recorded data format for each attribute is provided",
            &[
                ("all", "Provided for all attributes", 1),
                ("some", "Provided for some attributes", 0),
                ("none", "No format provided", -1),
            ],
        ),
    ),
];

const COLLECTION: &[Row] = &[
    row(
        "dataset_source",
        "Dataset Source",
        "Evaluates the diversity and reliability of the data sources used in dataset development",
        &[
            ("diverse_reliable", "Diverse and reliable sources, well-documented", 1),
            ("limited", "Limited diversity and moderate documentation", 0),
            ("poor", "Not sure and poorly documented", -1),
        ],
    ),
    row(
        "collection_techniques",
        "Collection Techniques",
        "Assesses the appropriateness, consistency, and documentation of data collection methods used",
        &[
            ("appropriate", "Appropriate, well-documented, consistent techniques", 1),
            ("adequate", "Adequate techniques with partial documentation", 0),
            ("poor", "Inappropriate or poorly documented techniques", -1),
        ],
    ),
    conditional(row(
        "sampling_strategy",
        "Sampling Strategy",
        "Evaluates the suitability and documentation of the dataset's sampling strategy, if applicable",
        &[
            ("well_suited", "Well-suited to the dataset's goals and documented", 1),
            ("partial", "Partially suitable with documentation", 0),
            ("poor", "Poorly documented sampling strategy", -1),
        ],
    )),
    row(
        "involvement",
        "Involvement",
        "Participants in data collection and details on compensation",
        &[
            ("documented", "Well-documented involvement and compensation", 1),
            ("partial", "Partial documentation", 0),
            ("limited", "Limited documentation", -1),
        ],
    ),
    row(
        "time",
        "Time",
        "Documents and assesses the timeframe during which data was collected",
        &[
            ("known", "The time frame is documented and known", 1),
            ("vague", "Timeframe is vaguely documented", 0),
            ("unknown", "The time frame is undocumented and unknown", -1),
        ],
    ),
    row(
        "notification",
        "Notification",
        "Whether individuals were informed about data collection",
        &[
            ("notified", "Individuals notified", 1),
            ("not_notified", "Individuals not notified", -1),
        ],
    ),
    row(
        "informed_consent",
        "Informed Consent",
        "Whether individuals consented to use the data",
        &[
            ("obtained", "Consent obtained", 1),
            ("not_obtained", "Consent not obtained", -1),
        ],
    ),
    row(
        "consent_revocation",
        "Consent Revocation",
        "Whether there is a way to revoke consent after data collection",
        &[
            ("accessible", "Clear and accessible mechanism available", 1),
            ("hard_to_access", "Mechanism available but not easily accessible", 0),
            ("none", "No mechanism to revoke consent", -1),
        ],
    ),
    row(
        "ethical_review",
        "Ethical Review",
        "Whether the data collection process underwent ethical review",
        &[
            ("comprehensive", "Comprehensive ethical guidelines followed", 1),
            ("some", "Some ethical guidelines followed", 0),
            ("none", "No ethical guidelines followed", -1),
        ],
    ),
    row(
        "limitations",
        "Limitations",
        "Documented constraints or biases during data collection",
        &[
            ("documented", "Identified and comprehensively documented", 1),
            ("limited", "Identified but documentation limited", 0),
            ("none", "No limitation identification method", -1),
        ],
    ),
    row(
        "feedback",
        "Feedback",
        "Mechanisms for gathering feedback from data users or participants",
        &[
            ("active", "Active mechanism for regular feedback", 1),
            ("occasional", "Occasional feedback incorporation", 0),
            ("none", "No mechanism for feedback incorporation", -1),
        ],
    ),
];

const COMPOSITION: &[Row] = &[
    row(
        "number_of_instances",
        "Number of Instances",
        "Total number of instances within the dataset, whether known or unknown",
        &[
            ("exact", "Exact instance count known", 1),
            ("approximate", "Approximate count known", 0),
            ("unknown", "Instance count unknown", -1),
        ],
    ),
    row(
        "relationship",
        "Relationship",
        "Articulation of relationships between instances (e.g., user movie ratings, social network links)",
        &[
            ("fully_defined", "Relationships fully defined", 1),
            ("partial", "Partially defined relationships", 0),
            ("undefined", "Relationships not defined", -1),
        ],
    ),
    row(
        "type",
        "Type",
        "Assesses diversity and complexity of instances in the dataset",
        &[
            ("single", "Single-type instances (e.g., documents, photos, people)", 1),
            (
                "multiple",
                "Multiple types of instances (e.g., movies and ratings, people and interactions, nodes and edges)",
                0,
            ),
            ("unclear", "Unclear or unspecified instance types", -1),
        ],
    ),
    row(
        "presence_of_label",
        "Presence of Label",
        "Evaluates whether instances in the dataset have labels",
        &[
            ("all", "All instances labeled", 1),
            ("some", "Some instances labeled", 0),
            ("none", "No instances labeled", -1),
        ],
    ),
    row(
        "dataset_structure",
        "Dataset Structure",
        "Describes how the dataset is divided into subsets (e.g., training, validation, testing)",
        &[
            ("train_validation_test", "Training, validation, and testing data", 1),
            ("train_test", "Training and testing data", 1),
            ("no_partition", "No specified partition", 0),
        ],
    ),
    row(
        "dependencies",
        "Dependencies",
        "Reliance on external sources and the quality of these dependencies",
        &[
            ("self_contained", "The dataset is self-contained", 1),
            ("external_links", "Dataset links to external resources", 1),
            ("unclear", "External resource dependencies unclear", -1),
        ],
    ),
    row(
        "missing_information",
        "Missing Information",
        "Presence and clarity of missing data within instances",
        &[
            ("complete", "All instances are complete", 1),
            ("some_missing", "Present in some instances", -1),
            ("unclear", "Unclear if any information is missing", 0),
        ],
    ),
    row(
        "data_quality",
        "Data Quality",
        "Presence of quality issues like errors, noise, or redundancies",
        &[
            ("no_known_issues", "No known errors, noise, or redundancies", 1),
            ("limited_issues", "Limited errors, noise, or redundancies", 0),
            ("high_issues", "High errors, noise, or redundancies", -1),
        ],
    ),
    row(
        "subpopulation",
        "Subpopulation",
        "Evaluates the identification and de-identification of subpopulations within the dataset",
        &[
            ("none_identifiable", "No identifiable subpopulations", 1),
            ("anonymized", "Subpopulations are fully anonymized", 1),
            ("identified", "Subpopulations are identified", -1),
        ],
    ),
    row(
        "individual_identification",
        "Individual Identification",
        "Potential for identifying individuals and the level of anonymization applied",
        &[
            ("none_identifiable", "No identifiable information present", 1),
            ("anonymized", "Anonymized and protected", 1),
            ("identifiable", "Individuals can be identified and unprotected", -1),
        ],
    ),
    row(
        "sensitivity",
        "Sensitivity",
        "Sensitivity of the dataset content and its impact, including masking",
        &[
            ("none", "No potentially sensitive content", 1),
            ("masked", "Sensitive content is present and masked", 1),
            ("unmasked", "Sensitive content is present and unmasked", -1),
        ],
    ),
    row(
        "confidentiality",
        "Confidentiality",
        "Presence and protection of confidential data within the dataset",
        &[
            ("none", "No confidential data", 1),
            ("protected", "Confidential data is present and protected", 1),
            ("unprotected", "Confidential data is present and unprotected", -1),
        ],
    ),
];

const MOTIVATION: &[Row] = &[
    row(
        "purpose_statement",
        "Purpose Statement",
        "Clear articulation of the dataset's intended purpose",
        &[
            ("clear", "Clearly stated purpose", 1),
            ("vague", "Vaguely stated purpose", 0),
            ("none", "No stated purpose", -1),
        ],
    ),
    row(
        "research_gap_addressed",
        "Research Gap Addressed",
        "Identification of the specific research gap or problem the dataset aims to address",
        &[
            ("identified", "Identified research gap", 1),
            ("vague", "Vaguely identified research gap", 0),
            ("none", "No mention of research gap", -1),
        ],
    ),
    row(
        "intended_use_cases",
        "Intended Use Cases",
        "Description of specific use cases or applications for the dataset",
        &[
            ("comprehensive", "Comprehensive list of use cases", 1),
            ("limited", "Limited use cases mentioned", 0),
            ("none", "No use cases specified", -1),
        ],
    ),
    row(
        "development_team",
        "Development Team",
        "Information about the team or individuals responsible for dataset creation",
        &[
            ("detailed", "Detailed team information provided", 1),
            ("limited", "Limited team information", 0),
            ("none", "No team information", -1),
        ],
    ),
    row(
        "backing_organization",
        "Backing Organization",
        "Identification of the organization(s) supporting the dataset development",
        &[
            ("clear", "Clearly stated backing organization", 1),
            ("vague", "Vague mention of organization", 0),
            ("none", "No organization mentioned", -1),
        ],
    ),
    row(
        "funding_sources",
        "Funding Sources",
        "Disclosure of funding sources, including specific grants if applicable",
        &[
            ("detailed", "Detailed funding information", 1),
            ("partial", "Partial funding information", 0),
            ("none", "No funding information", -1),
        ],
    ),
    row(
        "potential_impact",
        "Potential Impact",
        "Discussion of the potential impact or benefits of the dataset",
        &[
            ("comprehensive", "Comprehensive impact analysis", 1),
            ("limited", "Limited impact discussion", 0),
            ("none", "No mention of potential impact", -1),
        ],
    ),
];

const PREPROCESSING: &[Row] = &[
    Row {
        role: SpecialRole::PreprocessingStatus,
        ..row(
            "preprocessing_status",
            "Preprocessing Status",
            "Indicates whether the dataset has undergone preprocessing or remains in its original form",
            &[
                ("applied", "preprocessing has been applied", 1),
                ("raw", "The data remains in its original, unprocessed form", -1),
            ],
        )
    },
    conditional(row(
        "steps_applied",
        "Steps Applied",
        "Describes the specific preprocessing techniques used and their thoroughness",
        &[
            ("extensive", "Extensive, well-documented preprocessing", 1),
            ("limited", "Limited documentation and techniques", 0),
            ("minimal", "Minimal or poorly documented preprocessing", -1),
        ],
    )),
    conditional(row(
        "software_availability",
        "Software Availability",
        "Specifies whether the software used for preprocessing is publicly available or restricted",
        &[
            ("public", "The software is publicly available", 1),
            ("restricted", "The software is available under restricted conditions", 0),
            ("unavailable", "The software is not available", -1),
        ],
    )),
    conditional(row(
        "consistency",
        "Consistency",
        "Assesses whether preprocessing is consistently applied across all data instances",
        &[
            ("uniform", "Uniformly applied across all data instances", 1),
            ("varies", "Varies across different segments of the dataset", -1),
        ],
    )),
    conditional(row(
        "alignment",
        "Alignment",
        "Evaluates how well preprocessing aligns with the goals of data analysis",
        &[
            ("full", "preprocessing fully aligns with analysis goals", 1),
            ("partial", "Partially aligned, with room for improvement", 0),
        ],
    )),
    conditional(row(
        "impact_on_data_quality",
        "Impact on Data Quality",
        "Measures the effect of preprocessing on the quality of the dataset",
        &[
            ("significant", "Improved data quality significantly", 1),
            ("slight", "Slight improvement in data quality", 0),
            ("degraded", "Change or degradation in data quality", -1),
        ],
    )),
    conditional(row(
        "impact_on_data_size",
        "Impact on Data Size",
        "Assesses the extent of data loss or reduction during preprocessing",
        &[
            ("no_loss", "No significant data loss", 1),
            ("acceptable_loss", "Some loss, but within acceptable limits", 0),
            ("significant_reduction", "Significant data reduction", -1),
        ],
    )),
    conditional(row(
        "verification",
        "Verification",
        "Describes the processes in place to verify the preprocessing steps",
        &[
            ("comprehensive", "Comprehensive verification processes", 1),
            (
                "limited",
                "Limited verification; limited preprocessing steps verified",
                0,
            ),
            ("none", "No verification mechanism is provided", -1),
        ],
    )),
    conditional(row(
        "retention",
        "Retention",
        "Indicates whether raw data is retained alongside preprocessed versions",
        &[
            ("raw_and_processed", "Raw and preprocessed data retained", 1),
            ("processed_only", "Only preprocessed data retained", -1),
        ],
    )),
    conditional(row(
        "documentation_clarity",
        "Documentation Clarity",
        "Evaluates the clarity and comprehensiveness of documentation for preprocessing techniques",
        &[
            ("well_documented", "Well-documented preprocessing techniques", 1),
            ("partial", "Partial documentation, covering limited techniques", 0),
            ("none", "No preprocessing documentation", -1),
        ],
    )),
];

const AREAS: &[(&str, &str, &[Row])] = &[
    ("C111", "Data Dictionary", DATA_DICTIONARY),
    ("C112", "Collection Process", COLLECTION),
    ("C113", "Composition", COMPOSITION),
    ("C114", "Motivation", MOTIVATION),
    ("C115", "Preprocessing", PREPROCESSING),
];

/// Builds the bundled rubric. Every call returns an equal catalog.
pub fn builtin_catalog() -> RubricCatalog {
    let areas = AREAS
        .iter()
        .map(|(area_id, title, rows)| AreaSpec {
            area_id: (*area_id).to_string(),
            title: (*title).to_string(),
            criteria: rows.iter().map(|r| criterion(area_id, r)).collect(),
        })
        .collect();
    RubricCatalog {
        catalog_id: BUILTIN_CATALOG_ID.to_string(),
        version: BUILTIN_VERSION.to_string(),
        areas,
    }
}

fn criterion(area_id: &str, row: &Row) -> CriterionSpec {
    let criterion_id = format!("{area_id}.{}", row.slug);
    let options = row
        .options
        .iter()
        .map(|&(key, label, score)| OptionSpec {
            key: key.to_string(),
            label: label.to_string(),
            score,
            recommendation_key: (score < 1).then(|| criterion_id.clone()),
        })
        .collect();
    CriterionSpec {
        criterion_id,
        name: row.name.to_string(),
        description: row.description.to_string(),
        group: row.group.map(str::to_string),
        applicability: row.applicability,
        special_role: row.role,
        options,
    }
}

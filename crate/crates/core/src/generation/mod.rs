//! Generator counts and infinite-generation criteria for invariants of
//! `F_d(𝔏)`.

pub mod criteria;
pub mod report;

pub use criteria::{
    check_finite_group, check_metabelian, check_weitzenbock, remark_generation_check,
    CriterionVerdict, RemarkRow, Rule, Verdict, Witness, WitnessKind,
};
pub use report::{
    algebra_generator_report, module_generator_report, DegreeRow, ModGenReport, ReportJson,
};

//! Differentials: the d_1 rule set, rule application and higher-differential rule files.

pub mod higher;
pub mod rules;
pub mod template;

pub use higher::{higher_ruleset, HigherRules, HigherStatus};
pub use rules::{apply_rules, check_dd_zero, d1_ruleset, kq_d1, matrix_by_names, GeneratorRule, RuleBody, RuleError, RuleSet};
pub use template::parse_rule_file;

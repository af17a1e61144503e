//! Matrices over ℚ(α, …), free-group words, and relation residuals.

pub mod matrix;
pub mod relations;
pub mod word;

pub use matrix::SymMat2;
pub use relations::{
    assignment, eval_word, relation, relation_difference, relation_residual, relation_set, verify_diag_homomorphism,
    verify_trace_zero, Assignment, LemmaReport, Relation, RelationId,
};
pub use word::{free_reduce, twist_word_recurrence, twist_words, FreeWord};

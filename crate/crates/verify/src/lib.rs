//! Holds the `acceptance` test target. The criteria themselves live in
//! `schubert_git::verify`; this crate sorts after the others so the gate runs last.

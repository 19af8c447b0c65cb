//! Verification harness and IO companion to `smg-core`: theorem audits of
//! the zero-union and direct-product constructions, corpus sweeps over
//! enumerated small semigroups, and the `smg` command-line front end.

#![forbid(unsafe_code)]

pub mod verify;

pub use verify::{
    check_construction, run_corpus_suite, CheckConfig, CheckReport, Outcome, SuiteConfig,
    SuiteFailure, SuiteReport, Verdict, VerifyError,
};

//! Library side of the command-line harness: pipelines, bundled
//! manifests, reproduction runner, persistent records and the parameter
//! search.

pub mod config;
pub mod pipeline;
pub mod record;
pub mod reproduce;
pub mod search;
pub mod tables;

//! File formats, verification reports and the command-line front end for
//! [`dstfrft_core`].

pub mod cli;
pub mod config;
pub mod container;
pub mod heatmap;
pub mod report;
pub mod verify;

pub use dstfrft_core as core;

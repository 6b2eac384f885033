//! Library half of the survey CLI: manifest parsing, record computation and
//! deterministic table rendering, kept separate so the acceptance suite can
//! drive it in-process.

pub mod survey;

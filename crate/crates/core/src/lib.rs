pub mod classes;
pub mod cli;
pub mod problems;
pub mod rootfind;
pub mod series;
pub mod verification;

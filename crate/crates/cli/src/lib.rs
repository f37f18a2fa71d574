pub mod config;
pub mod presets;
pub mod registry;
pub mod run;

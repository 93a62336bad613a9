pub mod app;
pub mod io;

pub use app::run;
